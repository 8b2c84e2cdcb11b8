import pytest

from penner_entropy import (BadGrading, DimensionTooSmall, NotATree, UnknownVertex,
                            build_plumbing)
from penner_entropy.plumbing import geometric_path
from penner_entropy.shift import ShiftExpr


def test_a3_defaults(spec3):
    assert spec3.vertices == ("1", "2", "3")
    assert spec3.neighbors("2") == ("1", "3")
    assert spec3.s("1", "2") == 1 and spec3.s("2", "1") == 2
    assert spec3.bipartition.plus == {"1", "3"}
    assert spec3.sigma("2") == -1


def test_grading_sums_to_n():
    spec = build_plumbing("abcd", [("a", "b"), ("b", "c"), ("b", "d")], 5,
                          [(("c", "b"), 3)])
    for a, b in spec.tree.sorted_edges():
        assert spec.s(a, b) + spec.s(b, a) == 5
    assert spec.s("b", "c") == 2
    # anchored orientation carries the constant, the other one depends on n
    assert spec.s_expr("c", "b") == ShiftExpr(3)
    assert spec.s_expr("b", "c") == ShiftExpr(-3, 1)


def test_with_n_keeps_anchored_degrees():
    spec = build_plumbing("abc", [("a", "b"), ("b", "c")], 5, [(("b", "a"), 2)])
    bigger = spec.with_n(8)
    assert bigger.s("b", "a") == 2 and bigger.s("a", "b") == 6
    assert bigger.s_expr("a", "b") == spec.s_expr("a", "b")


@pytest.mark.parametrize("vertices,edges", [
    ([], []),
    (["1", "1"], [("1", "1")]),
    (["1", "2"], [("1", "1")]),
    (["1", "2", "3"], [("1", "2")]),
    (["1", "2", "3"], [("1", "2"), ("1", "2")]),
    (["1", "2", "3", "4"], [("1", "2"), ("2", "3"), ("3", "1")]),
])
def test_not_a_tree(vertices, edges):
    with pytest.raises(NotATree):
        build_plumbing(vertices, edges, 3)


def test_unknown_endpoint():
    with pytest.raises(UnknownVertex):
        build_plumbing(["1", "2"], [("1", "9")], 3)


@pytest.mark.parametrize("n", [2, 0, -1, 3.0, True])
def test_dimension_too_small(n):
    with pytest.raises(DimensionTooSmall):
        build_plumbing(["1"], [], n)


@pytest.mark.parametrize("overrides", [
    [(("1", "3"), 1)],
    [(("1", "2"), 0)],
    [(("1", "2"), 3)],
    [(("1", "2"), 1), (("2", "1"), 1)],
])
def test_bad_grading(overrides):
    with pytest.raises(BadGrading):
        build_plumbing(["1", "2", "3"], [("1", "2"), ("2", "3")], 3, overrides)


def test_single_vertex():
    spec = build_plumbing(["x"], [], 3)
    assert spec.neighbors("x") == ()
    assert spec.sigma("x") == 1


def test_geometric_path():
    spec = build_plumbing("abcde", [("a", "b"), ("b", "c"), ("c", "d"), ("b", "e")], 4)
    assert geometric_path(spec, "d", "e") == ["d", "c", "b", "e"]
    assert geometric_path(spec, "a", "a") == ["a"]
