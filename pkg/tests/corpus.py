"""Shared graph corpora and independent oracles for the test-suite."""
from __future__ import annotations

from itertools import combinations

import networkx as nx
import numpy as np

from rigidkit.graph import Graph, from_edge_list
from rigidkit.generators import random_graph


def from_nx(h: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return from_edge_list(len(idx), [(idx[u], idx[v]) for u, v in h.edges()])


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def atlas(max_n: int, min_n: int = 1) -> list[Graph]:
    """All graphs up to isomorphism with ``min_n <= n <= max_n`` (max 7)."""
    return [from_nx(h) for h in nx.graph_atlas_g() if min_n <= h.number_of_nodes() <= max_n]


def random_corpus(count: int, max_n: int, seed: int, max_m: int | None = None, min_n: int = 2) -> list[Graph]:
    rng = np.random.default_rng(seed)
    out = []
    for i in range(count):
        n = int(rng.integers(min_n, max_n + 1))
        cap = n * (n - 1) // 2 if max_m is None else min(max_m, n * (n - 1) // 2)
        m = int(rng.integers(0, cap + 1))
        out.append(random_graph(n, m, int(rng.integers(2**31))))
    return out


def is_sparse_bruteforce(n: int, edges) -> bool:
    """Every vertex subset X with |X| >= 2 spans at most 2|X| - 3 of the edges."""
    es = [tuple(e) for e in edges]
    for size in range(2, n + 1):
        for xs in combinations(range(n), size):
            s = set(xs)
            if sum(1 for u, v in es if u in s and v in s) > 2 * size - 3:
                return False
    return True


def two_k5_blocks() -> Graph:
    """Two disjoint K5's joined by the matching 0-5, 1-6, 2-7."""
    pairs = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    pairs += [(5 + i, 5 + j) for i in range(5) for j in range(i + 1, 5)]
    pairs += [(0, 5), (1, 6), (2, 7)]
    return from_edge_list(10, pairs)
