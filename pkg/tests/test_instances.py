import numpy as np
import pytest

from conftest import random_instance
from gsetbench.instances import (
    GsetFormatError,
    ProblemInstance,
    TorusSpec,
    generate_torus,
    load_gset,
    parse_gset,
    parse_torus_name,
    write_gset,
)


def test_from_edges_normalises_endpoint_order():
    inst = ProblemInstance.from_edges(3, [(2, 1, 5), (3, 2, -1)])
    assert inst.edges == ((1, 2, 5), (2, 3, -1))


def test_from_edges_rejects_self_loop():
    with pytest.raises(GsetFormatError, match="self-loop"):
        ProblemInstance.from_edges(3, [(2, 2, 1)])


def test_from_edges_rejects_out_of_range():
    with pytest.raises(GsetFormatError, match="out of range"):
        ProblemInstance.from_edges(3, [(1, 4, 1)])
    with pytest.raises(GsetFormatError, match="out of range"):
        ProblemInstance.from_edges(3, [(0, 2, 1)])


def test_from_edges_rejects_duplicates_in_either_orientation():
    with pytest.raises(GsetFormatError, match="duplicate"):
        ProblemInstance.from_edges(3, [(1, 2, 1), (1, 2, 4)])
    with pytest.raises(GsetFormatError, match="duplicate"):
        ProblemInstance.from_edges(3, [(1, 2, 1), (2, 1, 4)])


def test_equality_ignores_name():
    a = ProblemInstance.from_edges(2, [(1, 2, 3)], name="a")
    b = ProblemInstance.from_edges(2, [(1, 2, 3)], name="b")
    assert a == b


def test_adjacency_lists_both_directions():
    inst = ProblemInstance.from_edges(3, [(1, 2, 5), (2, 3, -1)])
    assert inst.adjacency[1] == ((2, 5),)
    assert inst.adjacency[2] == ((1, 5), (3, -1))
    assert inst.adjacency[3] == ((2, -1),)


def test_total_weight():
    inst = ProblemInstance.from_edges(3, [(1, 2, 5), (2, 3, -1)])
    assert inst.total_weight() == 4


def test_parse_gset_basic_and_roundtrip():
    text = "3 2\n1 2 5\n2 3 -1\n"
    inst = parse_gset(text)
    assert inst.n == 3 and inst.m == 2
    assert parse_gset(write_gset(inst)) == inst


def test_parse_gset_is_whitespace_tolerant():
    ragged = "  3\n2   1 2\n5\n\n2 3 -1  "
    assert parse_gset(ragged) == parse_gset("3 2\n1 2 5\n2 3 -1\n")


def test_parse_gset_ignores_comments():
    text = "# header\n3 2 # counts\n1 2 5\n2 3 -1\n"
    assert parse_gset(text).m == 2


def test_parse_gset_rejects_garbage_token():
    with pytest.raises(GsetFormatError, match="expected integer"):
        parse_gset("3 1\n1 x 5\n")


def test_parse_gset_rejects_truncation():
    with pytest.raises(GsetFormatError, match="end of input"):
        parse_gset("3 2\n1 2 5\n")


def test_parse_gset_rejects_trailing_tokens():
    with pytest.raises(GsetFormatError, match="trailing"):
        parse_gset("3 1\n1 2 5\n9 9 9\n")


def test_parse_gset_rejects_bad_counts():
    with pytest.raises(GsetFormatError):
        parse_gset("0 0\n")
    with pytest.raises(GsetFormatError):
        parse_gset("3 -1\n")


def test_roundtrip_random_instances():
    rng = np.random.default_rng(11)
    for _ in range(10):
        inst = random_instance(rng, int(rng.integers(2, 15)))
        assert parse_gset(write_gset(inst)) == inst


def test_total_weight_invariant_under_relabeling():
    rng = np.random.default_rng(12)
    inst = random_instance(rng, 10)
    perm = rng.permutation(10) + 1
    relabeled = ProblemInstance.from_edges(
        10, [(int(perm[u - 1]), int(perm[v - 1]), w) for u, v, w in inst.edges]
    )
    assert relabeled.total_weight() == inst.total_weight()


def test_load_gset_names_instance_after_file(tmp_path):
    path = tmp_path / "tiny.txt"
    path.write_text("2 1\n1 2 7\n")
    inst = load_gset(path)
    assert inst.name == "tiny"
    assert inst.edges == ((1, 2, 7),)


def test_torus_spec_validation():
    with pytest.raises(ValueError, match="3x3"):
        TorusSpec(2, 5, seed=0)
    with pytest.raises(ValueError, match="3x3"):
        TorusSpec(5, 2, seed=0)
    with pytest.raises(ValueError, match="64 bits"):
        TorusSpec(3, 3, seed=-1)
    with pytest.raises(ValueError, match="64 bits"):
        TorusSpec(3, 3, seed=2**64)


def test_torus_structure():
    rng = np.random.default_rng(13)
    for _ in range(10):
        rows = int(rng.integers(3, 8))
        cols = int(rng.integers(3, 8))
        inst = generate_torus(TorusSpec(rows, cols, seed=int(rng.integers(2**32))))
        assert inst.n == rows * cols
        assert inst.m == 2 * rows * cols
        degrees = [len(inst.adjacency[v]) for v in range(1, inst.n + 1)]
        assert degrees == [4] * inst.n
        assert all(w in (-1, 1) for _, _, w in inst.edges)


def test_torus_vertex_numbering():
    # 3x3: cell (r, c) is vertex (r-1)*3 + c; vertex 1 wraps to 3 and 7
    inst = generate_torus(TorusSpec(3, 3, seed=0))
    neighbours = {v for v, _ in inst.adjacency[1]}
    assert neighbours == {2, 4, 3, 7}


def test_torus_deterministic_and_seed_sensitive():
    a = generate_torus(TorusSpec(4, 5, seed=9))
    b = generate_torus(TorusSpec(4, 5, seed=9))
    c = generate_torus(TorusSpec(4, 5, seed=10))
    assert a == b
    assert a != c
    assert a.name == "torus:4x5:9"


def test_torus_roundtrips_through_gset_text():
    inst = generate_torus(TorusSpec(3, 4, seed=2))
    assert parse_gset(write_gset(inst)) == inst


def test_parse_torus_name():
    spec = parse_torus_name("torus:4x7:123")
    assert spec == TorusSpec(4, 7, seed=123)
    for bad in ("torus:4x7", "grid:4x7:1", "torus:4:1", "torus:axb:1"):
        with pytest.raises(ValueError):
            parse_torus_name(bad)
