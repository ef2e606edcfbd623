"""Generic rigidity in the plane via the (2,3)-pebble game.

Every vertex starts with two pebbles. An edge is accepted when four
pebbles can be gathered on its endpoints; one of them is then spent to
orient the edge away from its tail. Accepted edges form a maximum
(2,3)-sparse subgraph, so their count is the rank of the generic
rigidity matroid.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .connectivity import VertexCut, vertex_connectivity
from .graph import Edge, Graph, GraphError, norm_edge

# Mersenne prime 2^61 - 1
PRIME = (1 << 61) - 1


class RankDisagreement(RuntimeError):
    pass


class LamanAssemblyStuck(GraphError):
    def __init__(self, vertex: int):
        super().__init__(f"stuck at vertex {vertex}")
        self.vertex = vertex


class PebbleGame:
    """Mutable (2,3)-pebble game state.

    ``out[v]`` lists the heads of accepted edges oriented away from ``v``;
    it never holds more than two entries because ``pebbles[v] + len(out[v])``
    stays equal to 2.
    """

    __slots__ = ("n", "pebbles", "out", "accepted")

    def __init__(self, n: int):
        self.n = n
        self.pebbles = [2] * n
        self.out: list[list[int]] = [[] for _ in range(n)]
        self.accepted: set[Edge] = set()

    def copy(self) -> PebbleGame:
        other = PebbleGame.__new__(PebbleGame)
        other.n = self.n
        other.pebbles = self.pebbles[:]
        other.out = [lst[:] for lst in self.out]
        other.accepted = set(self.accepted)
        return other

    def _orient(self, tail: int, head: int) -> None:
        lst = self.out[tail]
        lst.append(head)
        lst.sort()

    def _fetch(self, root: int, keep: int) -> bool:
        """Move one pebble to ``root`` along a directed path (DFS, ascending heads).

        Pebbles on ``root`` and ``keep`` are never taken.
        """
        parent = {root: root}
        stack = [root]
        pebbles, out = self.pebbles, self.out
        while stack:
            x = stack.pop()
            if x != root and x != keep and pebbles[x] > 0:
                # reverse the path root -> ... -> x
                pebbles[x] -= 1
                y = x
                while y != root:
                    p = parent[y]
                    out[p].remove(y)
                    self._orient(y, p)
                    y = p
                pebbles[root] += 1
                return True
            for y in reversed(out[x]):
                if y not in parent:
                    parent[y] = x
                    stack.append(y)
        return False

    def insert(self, u: int, v: int) -> bool:
        """Try to accept edge ``uv``; rejected attempts may still move pebbles."""
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        e = norm_edge(u, v)
        if e in self.accepted:
            raise GraphError(f"edge {e} already accepted")
        while self.pebbles[u] < 2:
            if not self._fetch(u, v):
                return False
        while self.pebbles[v] < 2:
            if not self._fetch(v, u):
                return False
        self.pebbles[u] -= 1
        self._orient(u, v)
        self.accepted.add(e)
        return True

    def remove(self, u: int, v: int) -> None:
        """Drop an accepted edge, returning its pebble to the tail."""
        e = norm_edge(u, v)
        self.accepted.remove(e)
        if v in self.out[u]:
            self.out[u].remove(v)
            self.pebbles[u] += 1
        else:
            self.out[v].remove(u)
            self.pebbles[v] += 1

    def check_invariants(self) -> None:
        for v in range(self.n):
            if self.pebbles[v] + len(self.out[v]) != 2 or self.pebbles[v] < 0:
                raise AssertionError(f"pebble count broken at vertex {v}")
        if sum(self.pebbles) + len(self.accepted) != 2 * self.n:
            raise AssertionError("pebble total broken")
        if self.n >= 2 and sum(self.pebbles) < 3:
            raise AssertionError("fewer than 3 free pebbles")
        oriented = {norm_edge(t, h) for t in range(self.n) for h in self.out[t]}
        if oriented != self.accepted or sum(len(o) for o in self.out) != len(self.accepted):
            raise AssertionError("orientation does not match accepted edges")


def pebble_attempt_insert(state: PebbleGame, e: Sequence[int]) -> bool:
    return state.insert(e[0], e[1])


def run_pebble_game(n: int, edges: Iterable[Sequence[int]], stop_at_full: bool = True) -> PebbleGame:
    game = PebbleGame(n)
    full = 2 * n - 3
    for u, v in edges:
        if stop_at_full and n >= 2 and len(game.accepted) >= full:
            break
        game.insert(u, v)
    return game


def rigidity_rank(g: Graph) -> int:
    return len(run_pebble_game(g.n, g.edges).accepted)


def is_sparse_edge_set(n: int, edges: Iterable[Sequence[int]]) -> bool:
    """Pebble replay: every edge of the set must be accepted."""
    lst = [norm_edge(*e) for e in edges]
    game = run_pebble_game(n, lst, stop_at_full=False)
    return len(game.accepted) == len(lst)


def is_rigid(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return rigidity_rank(g) == 2 * g.n - 3


def is_minimally_rigid(g: Graph) -> bool:
    if g.n <= 1:
        return g.m == 0
    return g.m == 2 * g.n - 3 and is_rigid(g)


def spanning_minimally_rigid_subgraph(g: Graph) -> tuple[Edge, ...] | None:
    if g.n < 2:
        return None
    game = run_pebble_game(g.n, g.edges)
    if len(game.accepted) != 2 * g.n - 3:
        return None
    return tuple(sorted(game.accepted))


@dataclass(frozen=True)
class RigidityReport:
    rank: int
    is_rigid: bool
    is_minimally_rigid: bool
    is_sparse: bool
    spanning_laman: tuple[Edge, ...] | None


def rigidity_report(g: Graph) -> RigidityReport:
    game = run_pebble_game(g.n, g.edges)
    rank = len(game.accepted)
    rigid = g.n <= 1 or rank == 2 * g.n - 3
    laman = tuple(sorted(game.accepted)) if rigid and g.n >= 2 else None
    return RigidityReport(
        rank=rank,
        is_rigid=rigid,
        is_minimally_rigid=rigid and g.m == max(2 * g.n - 3, 0),
        is_sparse=rank == g.m,
        spanning_laman=laman,
    )


@dataclass(frozen=True)
class Redundancy:
    redundant: bool
    witness: Edge | None = None

    def __bool__(self) -> bool:
        return self.redundant


def is_redundantly_rigid(g: Graph) -> Redundancy:
    """Check that ``G - e`` is rigid for every edge ``e``.

    Only edges of the accepted basis ``B`` can fail. For ``e`` in ``B`` the
    final state with ``e`` removed is a valid game on ``B - e``, and ``G - e``
    is rigid iff some edge outside ``B`` is then accepted.
    """
    if g.n <= 1:
        return Redundancy(True)
    game = run_pebble_game(g.n, g.edges)
    if len(game.accepted) != 2 * g.n - 3:
        return Redundancy(False, g.edges[0] if g.edges else None)
    basis = game.accepted
    others = [e for e in g.edges if e not in basis]
    for e in g.edges:
        if e not in basis:
            continue
        trial = game.copy()
        trial.remove(*e)
        if not any(trial.insert(*f) for f in others):
            return Redundancy(False, e)
    return Redundancy(True)


SMALL_COMPLETE = "small-complete"
THREE_CONNECTED_AND_REDUNDANT = "three-connected-and-redundant"
FAILS_CONNECTIVITY = "fails-connectivity"
FAILS_REDUNDANCY = "fails-redundancy"


@dataclass(frozen=True)
class GlobalRigidityReport:
    is_globally_rigid: bool
    reason: str
    cut: VertexCut | None = None
    edge: Edge | None = None


def is_globally_rigid(g: Graph) -> GlobalRigidityReport:
    """3-connected and redundantly rigid, or complete on at most three vertices."""
    if g.n <= 3 and g.is_complete():
        return GlobalRigidityReport(True, SMALL_COMPLETE)
    kappa = vertex_connectivity(g)
    if g.n < 4 or kappa.value < 3:
        return GlobalRigidityReport(False, FAILS_CONNECTIVITY, cut=kappa)
    red = is_redundantly_rigid(g)
    if not red:
        return GlobalRigidityReport(False, FAILS_REDUNDANCY, edge=red.witness)
    return GlobalRigidityReport(True, THREE_CONNECTED_AND_REDUNDANT)


def assemble_spanning_laman(
    g: Graph, base: Iterable[Sequence[int]], forbidden: Sequence[int] | None = None
) -> tuple[Edge, ...]:
    """Grow a spanning Laman subgraph from a Laman ``base`` by 0-extensions.

    Repeatedly takes the smallest vertex outside the support that has two
    usable edges into it and adds its two lexicographically smallest such
    edges. Raises :class:`LamanAssemblyStuck` naming the smallest vertex left
    when no vertex can be attached.
    """
    base_edges = sorted({norm_edge(*e) for e in base})
    bad = norm_edge(*forbidden) if forbidden is not None else None
    if not base_edges:
        raise GraphError("base must contain at least one edge")
    support = {v for e in base_edges for v in e}
    for e in base_edges:
        if not g.has_edge(*e):
            raise GraphError(f"base edge {e} not in graph")
        if e == bad:
            raise GraphError(f"base uses the forbidden edge {e}")
    if len(base_edges) != 2 * len(support) - 3 or not is_sparse_edge_set(g.n, base_edges):
        raise GraphError("base is not a Laman graph on its support")
    chosen = list(base_edges)
    remaining = sorted(set(range(g.n)) - support)
    while remaining:
        for v in remaining:
            usable = [w for w in sorted(g.adj[v]) if w in support and norm_edge(v, w) != bad]
            if len(usable) >= 2:
                chosen.extend(norm_edge(v, w) for w in usable[:2])
                support.add(v)
                remaining.remove(v)
                break
        else:
            raise LamanAssemblyStuck(remaining[0])
    result = tuple(sorted(chosen))
    if len(result) != 2 * g.n - 3 or not is_sparse_edge_set(g.n, result):
        raise AssertionError("assembled edge set failed the sparsity replay")
    return result


# numeric cross-check ---------------------------------------------------------


def _rank_mod_p(rows: list[list[int]], p: int = PRIME) -> int:
    rank = 0
    if not rows:
        return 0
    ncols = len(rows[0])
    rows = [r[:] for r in rows]
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        inv = pow(prow[col], p - 2, p)
        for j in range(col, ncols):
            prow[j] = prow[j] * inv % p
        for i in range(rank + 1, len(rows)):
            f = rows[i][col] % p
            if f:
                r = rows[i]
                for j in range(col, ncols):
                    if prow[j]:
                        r[j] = (r[j] - f * prow[j]) % p
        rank += 1
        if rank == len(rows):
            break
    return rank


def rigidity_matrix_mod_p(g: Graph, coords: Sequence[Sequence[int]], p: int = PRIME) -> list[list[int]]:
    """Rows ``(p(u) - p(v), p(v) - p(u))`` per edge, columns ``2v, 2v + 1``."""
    rows = []
    for u, v in g.edges:
        row = [0] * (2 * g.n)
        for k in range(2):
            d = (coords[u][k] - coords[v][k]) % p
            row[2 * u + k] = d
            row[2 * v + k] = (-d) % p
        rows.append(row)
    return rows


def random_coords(n: int, seed: int | np.random.SeedSequence) -> list[tuple[int, int]]:
    rng = np.random.default_rng(seed)
    vals = rng.integers(0, PRIME, size=(n, 2), dtype=np.int64)
    return [(int(a), int(b)) for a, b in vals]


def numeric_rank(g: Graph, seed: int | np.random.SeedSequence) -> int:
    """Rank of the rigidity matrix at pseudo-random points over GF(2^61 - 1)."""
    return _rank_mod_p(rigidity_matrix_mod_p(g, random_coords(g.n, seed)))


def rigidity_matrix_rank_probabilistic(g: Graph, seed: int, attempts: int = 3) -> int:
    """Numeric rank, retried on fresh seeds until it matches the pebble rank.

    A random specialisation can only lose rank, so a shortfall is retried.
    Raises :class:`RankDisagreement` if every attempt disagrees.
    """
    target = rigidity_rank(g)
    seen = []
    for child in np.random.SeedSequence(seed).spawn(attempts):
        r = numeric_rank(g, child)
        if r == target:
            return r
        seen.append(r)
    raise RankDisagreement(f"rank disagreement: pebble {target}, numeric {seen}")
