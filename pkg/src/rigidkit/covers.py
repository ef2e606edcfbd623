"""Brute-force cover oracle for rigidity.

A cover is a family of vertex sets, each of size at least two, whose
induced edge sets together contain every edge. Its value is the sum of
``2|X| - 3`` over its parts. A graph on ``n`` vertices is rigid exactly
when no cover has value below ``2n - 3``, and a minimum cover can always
be taken edge-disjoint. The oracle therefore enumerates partitions of the
edge set and maps each block to the vertices it touches.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .connectivity import OracleLimit
from .graph import Edge, Graph, norm_edge
from .rigidity import is_rigid

MAX_EDGES = 12
MAX_VERTICES = 12
GENERAL_MAX_VERTICES = 6


@dataclass(frozen=True)
class Cover:
    parts: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, parts: Iterable[Iterable[int]]) -> Cover:
        return cls(tuple(frozenset(p) for p in parts))

    def to_json(self) -> list[list[int]]:
        return [sorted(p) for p in self.parts]


@dataclass(frozen=True)
class CoverViolation:
    kind: str  # "uncovered-edge" or "part-too-small"
    edge: Edge | None = None
    part: int | None = None

    def __str__(self) -> str:
        if self.kind == "uncovered-edge":
            return f"edge {self.edge} uncovered"
        return f"part {self.part} too small"


def validate_cover(g: Graph, c: Cover) -> CoverViolation | None:
    for i, part in enumerate(c.parts):
        if len(part) < 2:
            return CoverViolation("part-too-small", part=i)
    for u, v in g.edges:
        if not any(u in p and v in p for p in c.parts):
            return CoverViolation("uncovered-edge", edge=(u, v))
    return None


def cover_value(c: Cover) -> int:
    return sum(2 * len(p) - 3 for p in c.parts)


def _check_guard(g: Graph, max_edges: int, max_vertices: int) -> None:
    if g.m > max_edges or g.n > max_vertices:
        raise OracleLimit(f"oracle limit: n={g.n}, m={g.m} exceeds n<={max_vertices}, m<={max_edges}")


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def min_cover_value_bruteforce(
    g: Graph, max_edges: int = MAX_EDGES, max_vertices: int = MAX_VERTICES
) -> tuple[int, Cover]:
    """Exact minimum cover value over all partitions of ``E``.

    Partitions are generated as restricted-growth strings: edge ``i`` joins
    one of the blocks opened so far or opens the next one. A branch is cut
    when its value plus a lower bound for the rest cannot beat the best
    cover found. The bound charges half a unit for every vertex that a
    remaining edge still has to bring into some block: a block containing
    ``j`` such vertices costs at least ``j / 2`` more.
    """
    _check_guard(g, max_edges, max_vertices)
    edges = list(g.edges)
    m = len(edges)
    if m == 0:
        return 0, Cover(())
    emask = [(1 << u) | (1 << v) for u, v in edges]
    suffix = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        suffix[i] = suffix[i + 1] | emask[i]
    all_mask = suffix[0]

    # seed bounds: one block with every edge, or one block per edge
    whole = 2 * bin(all_mask).count("1") - 3
    if whole <= m:
        best = [whole, [all_mask]]
    else:
        best = [m, list(emask)]

    supports: list[int] = []

    def descend(i: int, value: int, union: int) -> None:
        if i == m:
            if value < best[0]:
                best[0] = value
                best[1] = list(supports)
            return
        fresh = bin(suffix[i] & ~union).count("1")
        if value + (fresh + 1) // 2 >= best[0]:
            return
        em = emask[i]
        for k in range(len(supports)):
            old = supports[k]
            new = old | em
            grow = bin(new).count("1") - bin(old).count("1")
            supports[k] = new
            descend(i + 1, value + 2 * grow, union | em)
            supports[k] = old
        supports.append(em)
        descend(i + 1, value + 1, union | em)
        supports.pop()

    descend(0, 0, 0)
    return best[0], Cover(tuple(frozenset(_bits(s)) for s in best[1]))


def min_cover_value_general(g: Graph, max_vertices: int = GENERAL_MAX_VERTICES) -> int:
    """Minimum cover value over arbitrary (possibly overlapping) vertex sets.

    Dynamic programme over the set of already covered edges; each step
    picks a vertex set containing the first uncovered edge. Independent of
    the edge-partition search and meant only for tiny graphs.
    """
    if g.n > max_vertices:
        raise OracleLimit(f"oracle limit: n={g.n} > {max_vertices}")
    edges = list(g.edges)
    m = len(edges)
    full = (1 << m) - 1
    candidates: list[list[tuple[int, int]]] = [[] for _ in range(m)]
    for size in range(2, g.n + 1):
        for xs in combinations(range(g.n), size):
            s = set(xs)
            covered = 0
            for i, (u, v) in enumerate(edges):
                if u in s and v in s:
                    covered |= 1 << i
            for i in range(m):
                if covered >> i & 1:
                    candidates[i].append((2 * size - 3, covered))

    @lru_cache(maxsize=None)
    def solve(mask: int) -> int:
        if mask == full:
            return 0
        first = (~mask & full & -(~mask & full)).bit_length() - 1
        return min(cost + solve(mask | cov) for cost, cov in candidates[first])

    return solve(0)


def deficient_cover_witness(g: Graph) -> Cover | None:
    """A cover of value below ``2n - 3`` (a certificate of non-rigidity), if any."""
    value, cover = min_cover_value_bruteforce(g)
    return cover if value < 2 * g.n - 3 else None


def verify_lovasz_yemini(g: Graph) -> bool:
    """Pebble-game rigidity agrees with the cover criterion on ``g``."""
    value, _ = min_cover_value_bruteforce(g)
    return is_rigid(g) == (value >= 2 * g.n - 3)


def cover_from_edge_blocks(blocks: Sequence[Iterable[Sequence[int]]]) -> Cover:
    """Cover whose parts are the vertex supports of the given edge blocks."""
    return Cover(tuple(frozenset(v for e in blk for v in norm_edge(*e)) for blk in blocks))
