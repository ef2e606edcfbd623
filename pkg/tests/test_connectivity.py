from itertools import combinations

import networkx as nx
import pytest

from corpus import atlas, random_corpus, to_nx, two_k5_blocks
from rigidkit.connectivity import (
    UNBOUNDED,
    OracleLimit,
    check_essential_witness,
    essential_connectivity,
    essential_connectivity_bruteforce,
    is_essentially_k_connected,
    is_k_connected,
    min_cut_separating_edges,
    vertex_connectivity,
    vertex_connectivity_bruteforce,
)
from rigidkit.generators import EssTFamilySpec, build_ess_t_instance, standard_graph
from rigidkit.graph import GraphError, components, from_edge_list

K4 = standard_graph("complete", 4)
K5 = standard_graph("complete", 5)
C5 = standard_graph("cycle", 5)
C6 = standard_graph("cycle", 6)
PETERSEN = standard_graph("petersen")


def separating_oracle(g, e1, e2):
    """Smallest vertex set avoiding both edges that separates them, by enumeration."""
    others = [v for v in range(g.n) if v not in e1 and v not in e2]
    for size in range(len(others) + 1):
        for xs in combinations(others, size):
            dec = components(g, xs)
            where = {v: i for i, p in enumerate(dec.parts) for v in p}
            if where[e1[0]] != where[e2[0]]:
                return size
    return None


def test_vertex_connectivity_examples():
    k5 = vertex_connectivity(K5)
    assert k5.value == 4 and k5.complete and k5.cut is None
    c6 = vertex_connectivity(C6)
    assert c6.value == 2 and len(components(C6, c6.cut).parts) == 2
    assert vertex_connectivity_bruteforce(PETERSEN) == 3
    assert vertex_connectivity(PETERSEN).value == 3


def test_is_k_connected_examples():
    assert is_k_connected(K4, 3)
    assert not is_k_connected(C5, 3)
    assert not is_k_connected(K4, 4)


@pytest.mark.parametrize("g", atlas(6, min_n=1) + random_corpus(150, 10, seed=11))
def test_vertex_connectivity_against_oracles(g):
    res = vertex_connectivity(g)
    assert res.value == vertex_connectivity_bruteforce(g)
    if g.n >= 2:
        assert res.value == nx.node_connectivity(to_nx(g))
    if g.n:
        assert res.value <= min(g.degree(v) for v in range(g.n))
    assert (res.value == g.n - 1) == g.is_complete()
    if not res.complete:
        assert len(res.cut) == res.value
        assert len(components(g, res.cut).parts) >= 2


def test_min_cut_separating_edges_examples():
    assert min_cut_separating_edges(C6, (0, 1), (3, 4)) == (2, frozenset({2, 5}))
    assert min_cut_separating_edges(K5, (0, 1), (2, 3)) is None
    g = two_k5_blocks()
    size, cut = min_cut_separating_edges(g, (3, 4), (8, 9))
    assert size == separating_oracle(g, (3, 4), (8, 9)) == 3
    assert len(components(g, cut).parts) == 2
    with pytest.raises(GraphError, match="not disjoint"):
        min_cut_separating_edges(K5, (0, 1), (1, 2))


@pytest.mark.parametrize("g", random_corpus(60, 8, seed=5))
def test_min_cut_separating_edges_oracle(g):
    for e1, e2 in combinations(g.edges, 2):
        if set(e1) & set(e2):
            continue
        res = min_cut_separating_edges(g, e1, e2)
        if res is None:
            assert separating_oracle(g, e1, e2) is None
        else:
            assert res[0] == separating_oracle(g, e1, e2)


def test_essential_connectivity_examples():
    assert essential_connectivity(K5).value is UNBOUNDED
    assert essential_connectivity_bruteforce(K5).value is UNBOUNDED
    g = two_k5_blocks()
    fast, slow = essential_connectivity(g), essential_connectivity_bruteforce(g)
    assert fast.value == slow.value == 3
    assert check_essential_witness(g, fast) and check_essential_witness(g, slow)


def test_path_p4_has_no_essential_cut():
    # deleting either inner vertex leaves one edge and one isolated vertex
    p4 = standard_graph("path", 4)
    assert essential_connectivity_bruteforce(p4).value is UNBOUNDED
    assert essential_connectivity(p4).value is UNBOUNDED


def test_disconnected_input_gives_zero():
    g = from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    for res in (essential_connectivity(g), essential_connectivity_bruteforce(g)):
        assert res.value == 0 and res.cut == frozenset()
        assert check_essential_witness(g, res)


def test_bruteforce_guard():
    with pytest.raises(OracleLimit):
        essential_connectivity_bruteforce(standard_graph("cycle", 17))


def test_is_essentially_k_connected_examples():
    k37 = standard_graph("complete-bipartite", 3, 7)
    assert essential_connectivity_bruteforce(k37).value is UNBOUNDED
    assert is_essentially_k_connected(k37, 9)
    assert not is_essentially_k_connected(K4, 9)


def test_clique_family_is_exactly_t():
    inst = build_ess_t_instance(EssTFamilySpec(6, 30, 1))
    g = inst.graph
    assert is_essentially_k_connected(g, 6)
    assert not is_essentially_k_connected(g, 7)
    res = essential_connectivity(g)
    assert res.value == 6 and check_essential_witness(g, res)


def test_small_clique_family_against_oracle():
    g = build_ess_t_instance(EssTFamilySpec(3, 3, 0), unchecked=True).graph
    assert g.n == 12
    assert essential_connectivity(g).value == essential_connectivity_bruteforce(g).value == 3


@pytest.mark.parametrize("g", atlas(7, min_n=2)[::3] + random_corpus(120, 10, seed=7))
def test_essential_connectivity_matches_bruteforce(g):
    fast, slow = essential_connectivity(g), essential_connectivity_bruteforce(g)
    assert fast.value == slow.value
    assert check_essential_witness(g, fast)
    if not fast.unbounded:
        dec = components(g, fast.cut)
        assert dec.nontrivial_count >= 2
    # the flag is monotone in k and agrees with the value
    for k in range(0, g.n):
        flag = is_essentially_k_connected(g, k)
        assert flag == (g.n >= k + 1 and fast.at_least(k))
        if flag:
            assert all(is_essentially_k_connected(g, j) for j in range(k))
