"""Command line front end.

Subcommands:

* ``validate``  decode a solution file and check it against expectations
* ``evaluate``  decode and score a solution file
* ``oracle``    exact optimum of a small instance
* ``gen-torus`` write a random toroidal grid instance
* ``solve``     run a single solver trial
* ``campaign``  run a multi-trial campaign from a config file
* ``report``    recompute a summary from an existing campaign log
* ``project``   hardware time implied by a sweeps-to-target figure

Instances are named by file path, by ``torus:ROWSxCOLS:SEED``, or by a
registry name such as G81 (searched in --instance-dir or $GSET_DIR).
All failures exit nonzero with a one-line diagnostic on stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from gsetbench import campaign as campaign_mod
from gsetbench.codec import (
    HexDecodeError,
    decode_hex,
    encode_hex,
    read_solution_header,
    strip_solution_text,
)
from gsetbench.evaluate import evaluate_solution
from gsetbench.instances import (
    GsetFormatError,
    ProblemInstance,
    generate_torus,
    load_gset,
    parse_torus_name,
    write_gset,
)
from gsetbench.metrics import (
    DEFAULT_CONFIDENCE,
    DEFAULT_HW_SWEEP_TIME_S,
    TargetSpec,
    project_hw_ttt,
)
from gsetbench.oracle import exact_max_cut
from gsetbench.registry import load_registry, locate_instance_file
from gsetbench.solvers import ANNEALING, GREEDY, SolverConfig, run_trial


class CliError(Exception):
    """Fatal command error; message goes to stderr, exit code 1."""


def human_time(seconds: float) -> str:
    """Scale a duration to a readable unit, 3 significant digits.

    A unit is kept down to a tenth of it (0.468 ms rather than 468 us),
    matching how sub-millisecond projections are usually quoted.
    """
    if seconds < 0:
        raise ValueError("duration must be non-negative")
    for unit, scale in (("s", 1.0), ("ms", 1e-3), ("us", 1e-6)):
        if seconds >= 0.1 * scale:
            return f"{seconds / scale:.3g} {unit}"
    return f"{seconds / 1e-9:.3g} ns"


def resolve_instance(spec: str, search_dir=None) -> ProblemInstance:
    """Instance from a path, a torus:RxC:SEED label, or a registry name."""
    path = Path(spec)
    if path.exists():
        try:
            return load_gset(path)
        except GsetFormatError as exc:
            raise CliError(f"{path}: {exc}") from exc
    if spec.startswith("torus:"):
        try:
            return generate_torus(parse_torus_name(spec))
        except ValueError as exc:
            raise CliError(str(exc)) from exc
    registry = load_registry()
    if spec in registry:
        entry = registry[spec]
        try:
            found = locate_instance_file(spec, search_dir)
        except FileNotFoundError as exc:
            raise CliError(str(exc)) from exc
        try:
            instance = load_gset(found)
        except GsetFormatError as exc:
            raise CliError(f"{found}: {exc}") from exc
        if instance.n != entry.n or instance.m != entry.m:
            raise CliError(
                f"{found}: expected n={entry.n} m={entry.m} for {spec}, "
                f"file has n={instance.n} m={instance.m}"
            )
        return instance
    raise CliError(
        f"cannot resolve instance {spec!r}: not a file, not torus:RxC:SEED, "
        "not a registered name"
    )


def _read_text(path_arg: str) -> str:
    if path_arg == "-":
        return sys.stdin.read()
    return Path(path_arg).read_text()


def _best_known_for(args, instance, header) -> int | None:
    if getattr(args, "best_known", None) is not None:
        return args.best_known
    registry = load_registry()
    for candidate in (getattr(args, "name", None), header.get("instance"), instance.name):
        if candidate and candidate in registry:
            return registry[candidate].best_cut
    return None


def _decode_solution(args, instance) -> tuple[tuple[int, ...], dict[str, str], list[str]]:
    """Shared by validate/evaluate: read file, apply substitutions, decode."""
    text = _read_text(args.solution)
    header = read_solution_header(text)
    if "n" in header:
        try:
            declared = int(header["n"])
        except ValueError:
            raise CliError(f"solution header has non-integer n={header['n']!r}")
        if declared != instance.n:
            raise CliError(
                f"solution header says n={declared}, instance has n={instance.n}"
            )
    payload = "".join(strip_solution_text(text).split())
    notes: list[str] = []
    for sub in getattr(args, "substitute", None) or ():
        if len(sub) != 3 or sub[1] != "=" :
            raise CliError(f"--substitute expects CHAR=CHAR, got {sub!r}")
        old, new = sub[0], sub[2]
        positions = [i for i, c in enumerate(payload) if c == old]
        payload = payload.replace(old, new)
        if positions:
            notes.append(
                f"substitute {old}={new}: {len(positions)} replacement(s), "
                f"first at position {positions[0]}"
            )
        else:
            notes.append(f"substitute {old}={new}: no occurrences")
    try:
        spins = decode_hex(payload, instance.n)
    except HexDecodeError as exc:
        raise CliError(f"{args.solution}: {exc}") from exc
    return spins, header, notes


def _print_report(report, fmt: str) -> None:
    if fmt == "csv":
        quality = "" if report.quality is None else f"{report.quality:.10g}"
        print("instance,n,cut,energy,quality")
        print(f"{report.instance},{report.n},{report.cut},{report.energy},{quality}")
    else:
        print(report.to_kv())


def cmd_validate(args) -> int:
    instance = resolve_instance(args.instance, args.instance_dir)
    spins, header, notes = _decode_solution(args, instance)
    for note in notes:
        print(note)
    best_known = _best_known_for(args, instance, header)
    report = evaluate_solution(instance, spins, best_known=best_known)
    _print_report(report, args.format)
    if args.expect_cut is not None:
        if report.cut == args.expect_cut:
            print(f"PASS cut matches expected {args.expect_cut}")
            return 0
        print(f"FAIL cut {report.cut} != expected {args.expect_cut}")
        return 1
    return 0


def cmd_evaluate(args) -> int:
    instance = resolve_instance(args.instance, args.instance_dir)
    spins, header, _ = _decode_solution(args, instance)
    best_known = _best_known_for(args, instance, header)
    report = evaluate_solution(instance, spins, best_known=best_known)
    _print_report(report, args.format)
    return 0


def cmd_oracle(args) -> int:
    instance = resolve_instance(args.instance, args.instance_dir)
    try:
        cut, config = exact_max_cut(instance)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    hexstr = encode_hex(config)
    if args.format == "csv":
        print("cut,config")
        print(f"{cut},{hexstr}")
    else:
        print(f"cut={cut} config={hexstr}")
    return 0


def cmd_gen_torus(args) -> int:
    from gsetbench.instances import TorusSpec

    try:
        spec = TorusSpec(rows=args.rows, cols=args.cols, seed=args.seed)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    text = write_gset(generate_torus(spec))
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _solver_config(kind, sweeps, seed, temp_start, temp_end) -> SolverConfig:
    if kind == ANNEALING:
        from gsetbench.solvers import DEFAULT_TEMP_END, DEFAULT_TEMP_START

        temp_start = DEFAULT_TEMP_START if temp_start is None else temp_start
        temp_end = DEFAULT_TEMP_END if temp_end is None else temp_end
    try:
        return SolverConfig(
            kind=kind, sweeps=sweeps, seed=seed,
            temp_start=temp_start, temp_end=temp_end,
        )
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def cmd_solve(args) -> int:
    instance = resolve_instance(args.instance, args.instance_dir)
    config = _solver_config(args.kind, args.sweeps, args.seed,
                            args.temp_start, args.temp_end)
    result = run_trial(instance, config)
    record = campaign_mod.TrialRecord(
        index=0,
        instance=instance.name or args.instance,
        kind=config.kind,
        sweeps=config.sweeps,
        seed=config.seed,
        best_cut=result.best_cut,
        sweeps_executed=result.sweeps_executed,
        wall_time_s=result.wall_time_s,
        temp_start=config.temp_start,
        temp_end=config.temp_end,
        spins_hex=encode_hex(result.best_spins) if args.include_spins else None,
    )
    print(campaign_mod.format_record(record))
    return 0


def _parse_campaign_config(path: str, default_confidence: float):
    """Read the key = value campaign description.

    Keys: instance, kind, sweeps, temp_start, temp_end, num_trials,
    master_seed, sweep_scan (comma separated), include_spins, and one
    ``target = LABEL CUT [CONFIDENCE]`` line per target.
    """
    values: dict[str, str] = {}
    targets: list[TargetSpec] = []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise CliError(f"{path}:{lineno}: expected key = value, got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key == "target":
            fields = value.split()
            if len(fields) not in (2, 3):
                raise CliError(
                    f"{path}:{lineno}: target wants LABEL CUT [CONFIDENCE]"
                )
            try:
                cut = int(fields[1])
                conf = float(fields[2]) if len(fields) == 3 else default_confidence
                targets.append(TargetSpec(label=fields[0], cut=cut, confidence=conf))
            except ValueError as exc:
                raise CliError(f"{path}:{lineno}: {exc}") from exc
        elif key in values:
            raise CliError(f"{path}:{lineno}: duplicate key {key!r}")
        else:
            values[key] = value

    def need(key: str) -> str:
        if key not in values:
            raise CliError(f"{path}: missing required key {key!r}")
        return values[key]

    try:
        kind = need("kind")
        if kind not in (GREEDY, ANNEALING):
            raise CliError(f"{path}: unknown solver kind {kind!r}")
        sweeps = int(need("sweeps"))
        temp_start = float(values["temp_start"]) if "temp_start" in values else None
        temp_end = float(values["temp_end"]) if "temp_end" in values else None
        solver = _solver_config(kind, sweeps, 0, temp_start, temp_end)
        scan = None
        if "sweep_scan" in values:
            scan = tuple(int(tok) for tok in values["sweep_scan"].replace(",", " ").split())
        config = campaign_mod.CampaignConfig(
            instance_name=need("instance"),
            solver=solver,
            num_trials=int(need("num_trials")),
            master_seed=int(need("master_seed")),
            targets=tuple(targets),
            sweep_scan=scan,
        )
    except ValueError as exc:
        raise CliError(f"{path}: {exc}") from exc
    include_spins = values.get("include_spins", "false").lower() in ("1", "true", "yes")
    return config, include_spins


def _print_summary(summary, fmt: str) -> None:
    if fmt == "csv":
        campaign_mod.write_summary_csv(summary, sys.stdout)
        return
    print(
        f"instance={summary.instance} kind={summary.kind} "
        f"sweeps_per_trial={summary.sweeps_per_trial} num_trials={summary.num_trials} "
        f"highest_cut={summary.highest_cut} min_cut={summary.min_cut} "
        f"average_cut={summary.average_cut:.10g} "
        f"avg_trial_time_s={summary.avg_trial_time_s:.6e}"
    )
    for t in summary.targets:
        if t.repetitions is None:
            tail = "r=unreachable stt_sweeps=unreachable ttt_s=unreachable"
        else:
            tail = (
                f"r={t.repetitions:.10g} stt_sweeps={t.stt_sweeps:.10g} "
                f"ttt_s={t.ttt_s:.10g} hw_ttt_s={project_hw_ttt(t.stt_sweeps):.10g}"
            )
        print(
            f"target={t.label} cut={t.cut} confidence={t.confidence:.10g} "
            f"successes={t.successes} trials={t.trials} p_s={t.p_s:.10g} {tail}"
        )


def cmd_campaign(args) -> int:
    config, include_spins = _parse_campaign_config(args.config, args.confidence)
    if args.include_spins:
        include_spins = True
    instance = resolve_instance(config.instance_name, args.instance_dir)
    if config.sweep_scan:
        rows = campaign_mod.sweep_scan(instance, config, workers=args.workers)
        if args.scan_csv:
            with open(args.scan_csv, "w", newline="") as fh:
                campaign_mod.write_scan_csv(rows, fh)
        else:
            campaign_mod.write_scan_csv(rows, sys.stdout)
        return 0
    summary = campaign_mod.run_campaign(
        instance,
        config,
        log_path=args.log,
        workers=args.workers,
        resume=args.resume,
        include_spins=include_spins,
    )
    _print_summary(summary, args.format)
    if args.summary_csv:
        with open(args.summary_csv, "w", newline="") as fh:
            campaign_mod.write_summary_csv(summary, fh)
    return 0


def _parse_target_flag(raw: str, default_confidence: float) -> TargetSpec:
    parts = raw.split(":")
    if len(parts) not in (2, 3):
        raise CliError(f"--target wants LABEL:CUT[:CONFIDENCE], got {raw!r}")
    try:
        cut = int(parts[1])
        conf = float(parts[2]) if len(parts) == 3 else default_confidence
        return TargetSpec(label=parts[0], cut=cut, confidence=conf)
    except ValueError as exc:
        raise CliError(f"bad --target {raw!r}: {exc}") from exc


def cmd_report(args) -> int:
    try:
        records = campaign_mod.read_log(args.log)
    except (OSError, ValueError) as exc:
        raise CliError(f"{args.log}: {exc}") from exc
    targets = tuple(_parse_target_flag(t, args.confidence) for t in args.target or ())
    try:
        summary = campaign_mod.summarize(records, targets)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    _print_summary(summary, args.format)
    if args.summary_csv:
        with open(args.summary_csv, "w", newline="") as fh:
            campaign_mod.write_summary_csv(summary, fh)
    return 0


def cmd_project(args) -> int:
    try:
        seconds = project_hw_ttt(args.stt, args.sweep_time)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    print(human_time(seconds))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gsetbench",
        description="Max-Cut / Ising benchmark toolkit for Gset-family instances",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, fmt=True):
        p.add_argument("--instance-dir", default=None,
                       help="directory with instance files (default $GSET_DIR)")
        if fmt:
            p.add_argument("--format", choices=("kv", "csv"), default="kv")

    p = sub.add_parser("validate", help="check a solution file against expectations")
    p.add_argument("instance")
    p.add_argument("solution", help="solution file path, or - for stdin")
    p.add_argument("--expect-cut", type=int, default=None)
    p.add_argument("--best-known", type=int, default=None)
    p.add_argument("--name", default=None,
                   help="registry name to score quality against")
    p.add_argument("--substitute", action="append", metavar="CHAR=CHAR",
                   help="repair a character before decoding (reported loudly)")
    add_common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("evaluate", help="decode and score a solution file")
    p.add_argument("instance")
    p.add_argument("solution")
    p.add_argument("--best-known", type=int, default=None)
    p.add_argument("--name", default=None)
    add_common(p)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("oracle", help="exact optimum of a small instance")
    p.add_argument("instance")
    add_common(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen-torus", help="write a random toroidal grid instance")
    p.add_argument("rows", type=int)
    p.add_argument("cols", type=int)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_gen_torus)

    p = sub.add_parser("solve", help="run a single solver trial")
    p.add_argument("instance")
    p.add_argument("--kind", choices=(GREEDY, ANNEALING), default=GREEDY)
    p.add_argument("--sweeps", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--temp-start", type=float, default=None)
    p.add_argument("--temp-end", type=float, default=None)
    p.add_argument("--include-spins", action="store_true")
    add_common(p, fmt=False)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("campaign", help="run a campaign from a config file")
    p.add_argument("config")
    p.add_argument("--log", default=None)
    p.add_argument("--summary-csv", default=None)
    p.add_argument("--scan-csv", default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--resume", action="store_true")
    p.add_argument("--include-spins", action="store_true")
    p.add_argument("--confidence", type=float, default=DEFAULT_CONFIDENCE)
    add_common(p)
    p.set_defaults(func=cmd_campaign)

    p = sub.add_parser("report", help="recompute a summary from a campaign log")
    p.add_argument("log")
    p.add_argument("--target", action="append", metavar="LABEL:CUT[:CONFIDENCE]")
    p.add_argument("--summary-csv", default=None)
    p.add_argument("--confidence", type=float, default=DEFAULT_CONFIDENCE)
    p.add_argument("--format", choices=("kv", "csv"), default="kv")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("project", help="hardware time for a sweeps-to-target figure")
    p.add_argument("stt", type=float)
    p.add_argument("--sweep-time", type=float, default=DEFAULT_HW_SWEEP_TIME_S,
                   help="seconds per sweep (default 2e-9)")
    p.set_defaults(func=cmd_project)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CliError, ValueError, OSError) as exc:
        # ValueError covers library-level rejections (malformed files,
        # foreign campaign logs); genuine bugs raise RuntimeError and
        # keep their tracebacks
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
