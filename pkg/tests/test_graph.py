import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import random_corpus, to_nx
from rigidkit.graph import (
    GraphError,
    GraphFormatError,
    add_edges,
    components,
    delete_edge,
    delete_vertices,
    from_edge_list,
    induced_edge_count,
    iter_edge_list_blocks,
    parse_graph6,
    to_edge_list_text,
    to_graph6,
)
from rigidkit.generators import standard_graph

K4 = standard_graph("complete", 4)
C4 = standard_graph("cycle", 4)


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_edge_list(n, chosen)


def test_from_edge_list_cycle():
    g = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.m == 4 and g == C4
    assert g.adj[0] == {1, 3}


def test_duplicates_collapse():
    g = from_edge_list(3, [(0, 1), (0, 1), (1, 2), (2, 1)])
    assert g.edges == ((0, 1), (1, 2))


def test_loop_rejected():
    with pytest.raises(GraphError, match="loop"):
        from_edge_list(2, [(0, 0)])


def test_range_rejected():
    with pytest.raises(GraphError, match="vertex range"):
        from_edge_list(2, [(0, 2)])


@pytest.mark.parametrize("g, text", [(K4, "C~"), (C4, "Cl"), (from_edge_list(1, []), "@")])
def test_graph6_known(g, text):
    # reference bytes from networkx's independent encoder
    assert nx.to_graph6_bytes(to_nx(g), header=False).decode().strip() == text
    assert to_graph6(g) == text
    assert parse_graph6(text) == g


def test_graph6_header_and_edges():
    assert parse_graph6(">>graph6<<Cl").edges == ((0, 1), (0, 3), (1, 2), (2, 3))


@pytest.mark.parametrize("n", [62, 63, 64, 100])
def test_graph6_long_form(n):
    g = standard_graph("cycle", n)
    text = to_graph6(g)
    assert text == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert (text[0] == "~") == (n >= 63)
    assert parse_graph6(text) == g


@pytest.mark.parametrize("bad", ["", "C", "C~~", "C\x01", "~??"])
def test_graph6_malformed(bad):
    with pytest.raises(GraphFormatError, match="format"):
        parse_graph6(bad)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=62))
def test_graph6_roundtrip(g):
    assert parse_graph6(to_graph6(g)) == g


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_graph6_matches_networkx(g):
    assert to_graph6(g) == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


def test_induced_edge_count_examples():
    assert induced_edge_count(K4, {0, 1, 2}) == 3
    assert induced_edge_count(C4, {0, 1, 2}) == 2
    assert induced_edge_count(K4, set()) == 0


@settings(max_examples=100, deadline=None)
@given(graphs(), st.data())
def test_induced_edge_count_properties(g, data):
    assert induced_edge_count(g, range(g.n)) == g.m
    xs = data.draw(st.sets(st.integers(0, max(g.n - 1, 0)))) if g.n else set()
    ys = data.draw(st.sets(st.sampled_from(sorted(xs)))) if xs else set()
    assert induced_edge_count(g, ys) <= induced_edge_count(g, xs)


def test_delete_edge():
    assert delete_edge(K4, (1, 0)).m == 5
    with pytest.raises(GraphError, match="no such edge"):
        delete_edge(C4, (0, 2))


def test_delete_vertices():
    h, kept = delete_vertices(C4, {0})
    assert kept == (1, 2, 3)
    assert h.edges == ((0, 1), (1, 2))
    same, kept = delete_vertices(K4, set())
    assert same == K4 and kept == (0, 1, 2, 3)


@settings(max_examples=100, deadline=None)
@given(graphs(), st.data())
def test_delete_vertices_edge_count(g, data):
    xs = data.draw(st.sets(st.integers(0, g.n - 1))) if g.n else set()
    h, kept = delete_vertices(g, xs)
    incident = sum(1 for u, v in g.edges if u in xs or v in xs)
    assert h.m == g.m - incident
    for u, v in h.edges:
        assert g.has_edge(kept[u], kept[v])


def test_components_examples():
    two = components(from_edge_list(4, [(0, 1), (2, 3)]))
    assert two.parts == ((0, 1), (2, 3)) and two.nontrivial == (True, True)
    mixed = components(from_edge_list(3, [(0, 1)]))
    assert mixed.parts == ((0, 1), (2,)) and mixed.nontrivial == (True, False)
    c5 = components(standard_graph("cycle", 5))
    assert len(c5.parts) == 1 and c5.nontrivial == (True,)


@settings(max_examples=100, deadline=None)
@given(graphs(), st.integers(0, 11), st.integers(0, 11))
def test_components_monotone_under_edge_addition(g, u, v):
    if g.n < 2:
        return
    u, v = u % g.n, v % g.n
    if u == v:
        return
    assert len(components(add_edges(g, [(u, v)])).parts) <= len(components(g).parts)


def test_edge_list_roundtrip_and_errors():
    graphs_in = random_corpus(5, 8, seed=3)
    text = "# corpus\n" + "".join(to_edge_list_text(g) for g in graphs_in)
    text += "3 1\n0 0\n"  # loop
    text += "2 2\n0 1\n"  # truncated
    out = list(iter_edge_list_blocks(text.splitlines()))
    assert [g for _, g in out[:5]] == graphs_in
    assert isinstance(out[5][1], GraphError) and "loop" in str(out[5][1])
    assert isinstance(out[6][1], GraphFormatError)
