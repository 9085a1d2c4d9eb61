"""Time-to-target benchmarking math.

Given repeated independent solver trials, the expected number of
repetitions needed to reach a target cut at least once with confidence
c is

    r = ln(1 - c) / ln(1 - P_s),    floored at 1,

where P_s = successes / trials is the per-trial success probability.
r is real-valued on purpose (it is an expectation, not a schedule) and
is not rounded up. Sweeps-to-target multiplies r by the per-trial
sweep budget; time-to-target multiplies by the per-trial wall time.
A sweeps-to-target figure is projected onto special-purpose hardware
by multiplying with a per-sweep time (default 2 ns per full sweep).
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

DEFAULT_CONFIDENCE = 0.99
DEFAULT_HW_SWEEP_TIME_S = 2e-9


class UnreachableTargetError(ValueError):
    """The target was never reached, so no finite repetition count exists."""


@dataclass(frozen=True)
class TargetSpec:
    """A named target cut with the confidence used for r."""

    label: str
    cut: int
    confidence: float = DEFAULT_CONFIDENCE

    def __post_init__(self) -> None:
        if not (0.0 < self.confidence < 1.0):
            raise ValueError(
                f"confidence must be in (0, 1), got {self.confidence}"
            )


@dataclass(frozen=True)
class CampaignStats:
    """Success counts of one campaign against one target.

    Success counts are kept as integers; the probability is derived on
    demand so no rounding is baked in.
    """

    successes: int
    trials: int
    sweeps_per_trial: int
    trial_time_s: float | None = None

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValueError(f"trials must be positive, got {self.trials}")
        if not (0 <= self.successes <= self.trials):
            raise ValueError(
                f"successes must be in 0..{self.trials}, got {self.successes}"
            )
        if self.sweeps_per_trial < 1:
            raise ValueError(
                f"sweeps_per_trial must be positive, got {self.sweeps_per_trial}"
            )

    @property
    def p_s(self) -> float:
        return self.successes / self.trials


def success_probability(successes: int, trials: int) -> float:
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")
    if not (0 <= successes <= trials):
        raise ValueError(f"successes must be in 0..{trials}, got {successes}")
    return successes / trials


def repetitions_to_target(p_s: float, confidence: float = DEFAULT_CONFIDENCE) -> float:
    """Expected repetitions to hit the target once with the given confidence."""
    if not (0.0 < confidence < 1.0):
        raise ValueError(f"confidence must be in (0, 1), got {confidence}")
    if not (0.0 <= p_s <= 1.0):
        raise ValueError(f"success probability must be in [0, 1], got {p_s}")
    if p_s == 0.0:
        raise UnreachableTargetError(
            "target was never reached; repetitions to target are undefined"
        )
    if p_s == 1.0:
        return 1.0
    return max(1.0, math.log(1.0 - confidence) / math.log(1.0 - p_s))


def sweeps_to_target(
    sweeps_per_trial: int, p_s: float, confidence: float = DEFAULT_CONFIDENCE
) -> float:
    if sweeps_per_trial < 1:
        raise ValueError(f"sweeps_per_trial must be positive, got {sweeps_per_trial}")
    return sweeps_per_trial * repetitions_to_target(p_s, confidence)


def time_to_target(
    trial_time_s: float, p_s: float, confidence: float = DEFAULT_CONFIDENCE
) -> float:
    if trial_time_s <= 0:
        raise ValueError(f"trial time must be positive, got {trial_time_s}")
    return trial_time_s * repetitions_to_target(p_s, confidence)


def project_hw_ttt(
    stt_sweeps: float, sweep_time_s: float = DEFAULT_HW_SWEEP_TIME_S
) -> float:
    """Wall time implied by a sweeps-to-target figure at a fixed sweep time."""
    if stt_sweeps <= 0:
        raise ValueError(f"sweeps to target must be positive, got {stt_sweeps}")
    if sweep_time_s <= 0:
        raise ValueError(f"sweep time must be positive, got {sweep_time_s}")
    return stt_sweeps * sweep_time_s


def speedup(reference_ttt_s: float, measured_ttt_s: float) -> float:
    if reference_ttt_s <= 0 or measured_ttt_s <= 0:
        raise ValueError("times must be positive")
    return reference_ttt_s / measured_ttt_s


@dataclass(frozen=True)
class MetricsRow:
    """One line of a results table: instance x target."""

    instance: str
    n: int
    m: int
    target: TargetSpec
    stats: CampaignStats
    reference_ttt_s: float | None = None

    def repetitions(self) -> float | None:
        try:
            return repetitions_to_target(self.stats.p_s, self.target.confidence)
        except UnreachableTargetError:
            return None

    def stt_sweeps(self) -> float | None:
        r = self.repetitions()
        return None if r is None else self.stats.sweeps_per_trial * r

    def ttt_s(self) -> float | None:
        r = self.repetitions()
        if r is None or self.stats.trial_time_s is None:
            return None
        return self.stats.trial_time_s * r

    def hw_ttt_s(self, sweep_time_s: float = DEFAULT_HW_SWEEP_TIME_S) -> float | None:
        stt = self.stt_sweeps()
        return None if stt is None else project_hw_ttt(stt, sweep_time_s)

    def speedup(self) -> float | None:
        ttt = self.ttt_s()
        if ttt is None or self.reference_ttt_s is None:
            return None
        return self.reference_ttt_s / ttt


METRICS_CSV_COLUMNS = (
    "instance",
    "n",
    "m",
    "target",
    "target_cut",
    "confidence",
    "sweeps_per_trial",
    "successes",
    "trials",
    "p_s",
    "r",
    "stt_sweeps",
    "ttt_s",
    "hw_ttt_s",
    "reference_ttt_s",
    "speedup",
)


def _cell(value: float | None, unreachable: bool = False) -> str:
    if value is None:
        return "unreachable" if unreachable else ""
    return f"{value:.10g}"


def write_metrics_csv(rows, stream) -> None:
    """Write MetricsRow records as CSV. Unreachable targets are labelled."""
    writer = csv.writer(stream)
    writer.writerow(METRICS_CSV_COLUMNS)
    for row in rows:
        unreachable = row.stats.successes == 0
        writer.writerow(
            [
                row.instance,
                row.n,
                row.m,
                row.target.label,
                row.target.cut,
                f"{row.target.confidence:.10g}",
                row.stats.sweeps_per_trial,
                row.stats.successes,
                row.stats.trials,
                f"{row.stats.p_s:.10g}",
                _cell(row.repetitions(), unreachable),
                _cell(row.stt_sweeps(), unreachable),
                _cell(row.ttt_s(), unreachable),
                _cell(row.hw_ttt_s(), unreachable),
                _cell(row.reference_ttt_s),
                _cell(row.speedup(), unreachable),
            ]
        )
