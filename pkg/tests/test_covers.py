import pytest

from corpus import atlas, random_corpus
from rigidkit.connectivity import OracleLimit
from rigidkit.covers import (
    Cover,
    cover_value,
    deficient_cover_witness,
    min_cover_value_bruteforce,
    min_cover_value_general,
    validate_cover,
    verify_lovasz_yemini,
)
from rigidkit.generators import standard_graph
from rigidkit.graph import delete_edge, from_edge_list
from rigidkit.rigidity import rigidity_rank

K3 = standard_graph("complete", 3)
K4 = standard_graph("complete", 4)
C4 = standard_graph("cycle", 4)
C5 = standard_graph("cycle", 5)
K33 = standard_graph("complete-bipartite", 3, 3)


def test_validate_cover():
    assert validate_cover(K3, Cover.of([{0, 1, 2}])) is None
    v = validate_cover(C4, Cover.of([{0, 1}, {1, 2}, {2, 3}]))
    assert v.kind == "uncovered-edge" and v.edge == (0, 3)
    v = validate_cover(K3, Cover.of([{0}]))
    assert v.kind == "part-too-small"


def test_cover_value():
    assert cover_value(Cover.of([range(4)])) == 5
    assert cover_value(Cover.of([{0, 1}, {1, 2}, {2, 3}, {0, 3}])) == 4
    assert cover_value(Cover.of([range(6)])) == 9


@pytest.mark.parametrize("g, value", [(K33, 9), (C4, 4), (K4, 5), (C5, 5)])
def test_min_cover_examples(g, value):
    v, cover = min_cover_value_bruteforce(g)
    assert v == value
    assert validate_cover(g, cover) is None and cover_value(cover) == v


def test_deficient_witness():
    w = deficient_cover_witness(C4)
    assert w is not None and cover_value(w) == 4 < 5 and validate_cover(C4, w) is None
    assert deficient_cover_witness(standard_graph("complete-bipartite", 3, 3)) is None
    w5 = deficient_cover_witness(C5)
    assert cover_value(w5) == 5 and len(w5.parts) == 5


def test_verify_examples():
    assert verify_lovasz_yemini(K4)
    assert verify_lovasz_yemini(C4)
    k33e = delete_edge(K33, (0, 3))
    assert k33e.m == 8 and verify_lovasz_yemini(k33e)


def test_guard():
    k7 = standard_graph("complete", 7)
    with pytest.raises(OracleLimit, match="oracle limit"):
        min_cover_value_bruteforce(from_edge_list(7, k7.edges[:13]))
    with pytest.raises(OracleLimit):
        deficient_cover_witness(standard_graph("complete", 6))
    # exactly at the guard
    assert min_cover_value_bruteforce(standard_graph("wheel", 7))[0] == 11


@pytest.mark.parametrize("g", atlas(5, min_n=1))
def test_edge_disjoint_minimum_equals_general(g):
    # overlapping covers never beat edge-disjoint ones
    assert min_cover_value_general(g) == min_cover_value_bruteforce(g)[0]


@pytest.mark.parametrize("g", [h for h in atlas(6, min_n=2) if h.m <= 12][::3] + random_corpus(100, 8, seed=31, max_m=12))
def test_cover_dominates_rank(g):
    value, cover = min_cover_value_bruteforce(g)
    assert value >= rigidity_rank(g)
    assert validate_cover(g, cover) is None and cover_value(cover) == value
    assert verify_lovasz_yemini(g)
    w = deficient_cover_witness(g)
    if w is not None:
        assert validate_cover(g, w) is None and cover_value(w) < 2 * g.n - 3
