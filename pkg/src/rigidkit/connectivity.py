"""Vertex connectivity and essential connectivity.

Essential connectivity follows the nontrivial-component notion: a vertex
set ``X`` is an *essential cut* when ``G - X`` has at least two components
that each contain an edge. ``X`` may be empty, so a graph that already has
two nontrivial components has essential connectivity 0.

Both quantities come from a unit-capacity max-flow on the vertex-split
graph. Exhaustive oracles are provided for small graphs.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .graph import Edge, Graph, GraphError, components, norm_edge

_INF = 1 << 30
ORACLE_MAX_VERTICES = 16


class Unbounded(enum.Enum):
    """Marker for graphs without any essential cut."""

    UNBOUNDED = "unbounded"

    def __repr__(self) -> str:
        return "UNBOUNDED"


UNBOUNDED = Unbounded.UNBOUNDED


class OracleLimit(GraphError):
    """Raised when an exhaustive oracle is asked to run past its guard."""


@dataclass(frozen=True)
class VertexCut:
    value: int
    cut: frozenset[int] | None  # None only for complete graphs
    complete: bool = False


@dataclass(frozen=True)
class EssentialCut:
    value: int | Unbounded
    cut: frozenset[int] | None = None
    e1: Edge | None = None
    e2: Edge | None = None

    @property
    def unbounded(self) -> bool:
        return self.value is UNBOUNDED

    def at_least(self, k: int) -> bool:
        return self.unbounded or self.value >= k


@dataclass(frozen=True)
class ConnectivityReport:
    kappa: VertexCut
    essential: EssentialCut


class FlowNetwork:
    """Vertex-split residual network for vertex-disjoint path counting.

    Vertex ``v`` becomes ``in = 2v`` and ``out = 2v + 1`` joined by a unit
    arc; each graph edge becomes two uncapacitated arcs ``out -> in``.
    Arcs are laid out in ascending head order so BFS ties break toward
    small vertex indices.
    """

    def __init__(self, g: Graph):
        self.g = g
        size = 2 * g.n
        head: list[int] = []
        cap: list[int] = []
        arcs: list[list[int]] = [[] for _ in range(size)]

        def add(a: int, b: int, c: int) -> None:
            arcs[a].append(len(head))
            head.append(b)
            cap.append(c)
            arcs[b].append(len(head))
            head.append(a)
            cap.append(0)

        for v in range(g.n):
            add(2 * v, 2 * v + 1, 1)
        for u in range(g.n):
            for w in sorted(g.adj[u]):
                add(2 * u + 1, 2 * w, _INF)
        for lst in arcs:
            lst.sort(key=lambda a: head[a])
        self.head = head
        self.cap0 = cap
        self.arcs = arcs

    def max_flow(
        self, sources: Iterable[int], sinks: Iterable[int], limit: int | None = None
    ) -> tuple[int, frozenset[int] | None]:
        """Maximum number of internally vertex-disjoint source-sink paths.

        Terminals are not deletable. Returns ``(value, cut)`` where ``cut``
        is a minimum separating vertex set, or ``(limit, None)`` as soon as
        the flow reaches ``limit``. Callers must reject adjacent terminals
        first; the flow is unbounded in that case.
        """
        head, arcs = self.head, self.arcs
        cap = self.cap0[:]
        size = 2 * self.g.n
        src = [False] * size
        snk = [False] * size
        srcs = sorted(set(sources))
        snks = set(sinks)
        for s in srcs:
            src[2 * s] = src[2 * s + 1] = True
        for t in snks:
            snk[2 * t] = True
        starts = [2 * s + 1 for s in srcs]
        flow = 0
        while True:
            parent = [-1] * size
            queue = list(starts)
            found = -1
            qi = 0
            while qi < len(queue) and found < 0:
                x = queue[qi]
                qi += 1
                for a in arcs[x]:
                    if cap[a] <= 0:
                        continue
                    y = head[a]
                    if parent[y] != -1 or src[y]:
                        continue
                    parent[y] = a
                    if snk[y]:
                        found = y
                        break
                    queue.append(y)
            if found < 0:
                break
            y = found
            while not src[y]:
                a = parent[y]
                cap[a] -= 1
                cap[a ^ 1] += 1
                y = head[a ^ 1]
            flow += 1
            if limit is not None and flow >= limit:
                return flow, None
        reached = [p != -1 for p in parent]
        for s in srcs:
            reached[2 * s] = reached[2 * s + 1] = True
        terminals = set(srcs) | snks
        cut = frozenset(
            v for v in range(self.g.n) if v not in terminals and reached[2 * v] and not reached[2 * v + 1]
        )
        return flow, cut


def vertex_connectivity(g: Graph, net: FlowNetwork | None = None) -> VertexCut:
    """Minimum vertex cut via flows from a minimum-degree vertex ``v``.

    A minimum cut either misses ``v`` (then it separates ``v`` from some
    non-neighbour) or contains it (then, being minimal, it separates two
    non-adjacent neighbours of ``v``).
    """
    if g.is_complete():
        return VertexCut(max(g.n - 1, 0), None, complete=True)
    net = net or FlowNetwork(g)
    v = min(range(g.n), key=lambda u: (g.degree(u), u))
    best, witness = g.degree(v), frozenset(g.adj[v])
    for w in range(g.n):
        if w == v or w in g.adj[v]:
            continue
        val, cut = net.max_flow([v], [w], limit=best)
        if cut is not None and val < best:
            best, witness = val, cut
            if best == 0:
                return VertexCut(0, witness)
    nbrs = sorted(g.adj[v])
    for x, y in combinations(nbrs, 2):
        if y in g.adj[x]:
            continue
        val, cut = net.max_flow([x], [y], limit=best)
        if cut is not None and val < best:
            best, witness = val, cut
    return VertexCut(best, witness)


def is_k_connected(g: Graph, k: int) -> bool:
    if g.n < k + 1:
        return False
    if k <= 0:
        return True
    return vertex_connectivity(g).value >= k


def vertex_connectivity_bruteforce(g: Graph) -> int:
    if g.n > ORACLE_MAX_VERTICES:
        raise OracleLimit(f"oracle limit: n={g.n} > {ORACLE_MAX_VERTICES}")
    if g.is_complete():
        return g.n - 1
    for size in range(g.n - 1):
        for x in combinations(range(g.n), size):
            if len(components(g, x).parts) > 1:
                return size
    return g.n - 1


def _separable(g: Graph, e1: Edge, e2: Edge) -> bool:
    a, b = e1
    c, d = e2
    na, nb = g.adj[a], g.adj[b]
    return not (c in na or c in nb or d in na or d in nb)


def min_cut_separating_edges(g: Graph, e1: Sequence[int], e2: Sequence[int]) -> tuple[int, frozenset[int]] | None:
    """Smallest ``X`` avoiding both edges that puts them in different components.

    Returns ``None`` when the edges are inseparable, i.e. some edge joins
    an endpoint of ``e1`` to an endpoint of ``e2``.
    """
    f1, f2 = norm_edge(*e1), norm_edge(*e2)
    for f in (f1, f2):
        if not g.has_edge(*f):
            raise GraphError(f"no such edge {f}")
    if set(f1) & set(f2):
        raise GraphError(f"not disjoint: {f1} and {f2}")
    if not _separable(g, f1, f2):
        return None
    val, cut = FlowNetwork(g).max_flow(f1, f2)
    assert cut is not None
    return val, cut


def _greedy_matching(edges: Sequence[Edge]) -> list[Edge]:
    used: set[int] = set()
    out = []
    for u, v in edges:
        if u not in used and v not in used:
            used.update((u, v))
            out.append((u, v))
    return out


def _essential_scan(g: Graph, cap: int | None) -> EssentialCut | None:
    """Smallest essential cut of size below ``cap`` (or overall if ``cap`` is None).

    Any essential cut ``X`` of size ``k`` misses at least one edge of a
    matching with ``k + 1`` edges, and that edge lies in a nontrivial
    component of ``G - X`` facing another one. So once ``best + 1``
    matching edges have been tried as the first terminal, no smaller cut
    remains. Without a large enough matching every edge is tried.
    """
    net = FlowNetwork(g)
    best = _INF if cap is None else cap
    found: EssentialCut | None = None
    matching = _greedy_matching(g.edges)
    mset = set(matching)
    order = matching + [e for e in g.edges if e not in mset]
    done: set[Edge] = set()
    for idx, e1 in enumerate(order):
        if idx <= len(matching) and idx >= best + 1:
            break
        a, b = e1
        for e2 in g.edges:
            c, d = e2
            if c == a or c == b or d == a or d == b or e2 in done:
                continue
            if not _separable(g, e1, e2):
                continue
            val, cut = net.max_flow(e1, e2, limit=best)
            if cut is not None and val < best:
                best = val
                found = EssentialCut(val, cut, e1, e2)
                if best == 0:
                    return found
        done.add(e1)
    return found


def essential_connectivity(g: Graph) -> EssentialCut:
    res = _essential_scan(g, None)
    return res if res is not None else EssentialCut(UNBOUNDED)


def is_essentially_k_connected(g: Graph, k: int) -> bool:
    """True iff ``n >= k + 1`` and no essential cut has fewer than ``k`` vertices."""
    if g.n < k + 1:
        return False
    if k <= 0:
        return True
    return _essential_scan(g, k) is None


def _essential_witness(g: Graph, x: Sequence[int]) -> EssentialCut | None:
    dec = components(g, x)
    if dec.nontrivial_count < 2:
        return None
    picks = []
    xs = set(x)
    for part, nt in zip(dec.parts, dec.nontrivial):
        if nt:
            ps = set(part)
            picks.append(min(e for e in g.edges if e[0] in ps and e[1] in ps and e[0] not in xs))
            if len(picks) == 2:
                break
    return EssentialCut(len(x), frozenset(x), picks[0], picks[1])


def essential_connectivity_bruteforce(g: Graph) -> EssentialCut:
    """Exhaustive minimum essential cut, smallest size first, lexicographic within a size."""
    if g.n > ORACLE_MAX_VERTICES:
        raise OracleLimit(f"oracle limit: n={g.n} > {ORACLE_MAX_VERTICES}")
    for size in range(g.n + 1):
        for x in combinations(range(g.n), size):
            w = _essential_witness(g, x)
            if w is not None:
                return w
    return EssentialCut(UNBOUNDED)


def check_essential_witness(g: Graph, res: EssentialCut) -> bool:
    """Re-check a finite witness: ``e1`` and ``e2`` end in distinct components of ``G - X``."""
    if res.unbounded:
        return res.cut is None
    assert res.cut is not None and res.e1 is not None and res.e2 is not None
    if len(res.cut) != res.value or set(res.e1) & res.cut or set(res.e2) & res.cut:
        return False
    if not (g.has_edge(*res.e1) and g.has_edge(*res.e2)):
        return False
    dec = components(g, res.cut)
    where = {v: i for i, part in enumerate(dec.parts) for v in part}
    return where[res.e1[0]] != where[res.e2[0]]


def connectivity_report(g: Graph) -> ConnectivityReport:
    return ConnectivityReport(vertex_connectivity(g), essential_connectivity(g))
