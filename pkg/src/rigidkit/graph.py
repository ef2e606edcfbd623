"""Simple undirected graphs on vertices ``0..n-1`` plus graph6 / edge-list I/O."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for inputs that cannot form a simple graph."""


class GraphFormatError(GraphError):
    """Raised when a graph6 or edge-list payload is malformed."""


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``edges`` is sorted lexicographically and ``adj`` holds the neighbour
    set of every vertex. Build instances through :func:`from_edge_list`
    so that loops and out-of-range endpoints are rejected.
    """

    n: int
    edges: tuple[Edge, ...]
    adj: tuple[frozenset[int], ...] = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a graph, collapsing parallel edges and rejecting loops."""
    if n < 0:
        raise GraphError("vertex range: negative vertex count")
    edges: set[Edge] = set()
    for pair in pairs:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"vertex range: edge ({u}, {v}) with n={n}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        edges.add(norm_edge(u, v))
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(sorted(edges)), tuple(frozenset(s) for s in nbrs))


def induced_edge_count(g: Graph, x: Iterable[int]) -> int:
    xs = set(x)
    if len(xs) < 2:
        return 0
    # iterate the smaller side
    if 2 * len(xs) < g.n:
        return sum(1 for u in xs for v in g.adj[u] if v in xs) // 2
    return sum(1 for u, v in g.edges if u in xs and v in xs)


def delete_edge(g: Graph, e: Sequence[int]) -> Graph:
    key = norm_edge(e[0], e[1])
    if key not in g.edge_set():
        raise GraphError(f"no such edge {key}")
    return from_edge_list(g.n, (f for f in g.edges if f != key))


def delete_vertices(g: Graph, x: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Remove ``x`` and relabel survivors compactly.

    Returns the new graph and ``kept`` where ``kept[i]`` is the original
    index of new vertex ``i``.
    """
    gone = set(x)
    for v in gone:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex range: {v}")
    kept = tuple(v for v in range(g.n) if v not in gone)
    new_id = {v: i for i, v in enumerate(kept)}
    pairs = [(new_id[u], new_id[v]) for u, v in g.edges if u in new_id and v in new_id]
    return from_edge_list(len(kept), pairs), kept


def add_edges(g: Graph, pairs: Iterable[Sequence[int]]) -> Graph:
    return from_edge_list(g.n, list(g.edges) + [tuple(p) for p in pairs])


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Rename vertex ``v`` to ``perm[v]``."""
    return from_edge_list(g.n, ((perm[u], perm[v]) for u, v in g.edges))


@dataclass(frozen=True)
class ComponentDecomposition:
    parts: tuple[tuple[int, ...], ...]
    nontrivial: tuple[bool, ...]

    @property
    def nontrivial_count(self) -> int:
        return sum(self.nontrivial)


def components(g: Graph, removed: Iterable[int] = ()) -> ComponentDecomposition:
    """Connected components of ``g`` minus ``removed``.

    A part is nontrivial when it carries at least one edge, which for a
    connected part is the same as having two or more vertices.
    """
    dead = set(removed)
    seen = [False] * g.n
    for v in dead:
        seen[v] = True
    parts = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack = [s]
        part = []
        while stack:
            u = stack.pop()
            part.append(u)
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        parts.append(tuple(sorted(part)))
    return ComponentDecomposition(tuple(parts), tuple(len(p) > 1 for p in parts))


def is_connected(g: Graph, removed: Iterable[int] = ()) -> bool:
    return len(components(g, removed).parts) <= 1


# graph6 ---------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 68719476736:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError("vertex range: too many vertices for graph6")


def to_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        aj = g.adj[j]
        bits.extend(1 if i in aj else 0 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        chunk = bits[k : k + 6]
        val = 0
        for b in chunk:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return _encode_n(g.n) + "".join(body)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER) :]
    if not s:
        raise GraphFormatError("format: empty graph6 string")
    data = []
    for ch in s:
        c = ord(ch)
        if not 63 <= c <= 126:
            raise GraphFormatError(f"format: byte {c} outside graph6 range")
        data.append(c - 63)
    if data[0] < 63:
        n, pos = data[0], 1
    elif len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise GraphFormatError("format: truncated length field")
        n, pos = 0, 8
        for d in data[2:8]:
            n = (n << 6) | d
    else:
        if len(data) < 4:
            raise GraphFormatError("format: truncated length field")
        n, pos = 0, 4
        for d in data[1:4]:
            n = (n << 6) | d
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - pos != need:
        raise GraphFormatError(f"format: expected {need} data bytes for n={n}, got {len(data) - pos}")
    pairs = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            d = data[pos + k // 6]
            if (d >> (5 - k % 6)) & 1:
                pairs.append((i, j))
            k += 1
    return from_edge_list(n, pairs)


# edge-list text ---------------------------------------------------------------


def to_edge_list_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def iter_edge_list_blocks(lines: Iterable[str]) -> Iterator[tuple[int, Graph | GraphError]]:
    """Read concatenated ``n m`` blocks.

    Yields ``(line_number, graph_or_error)`` with the 1-based line of the
    block header. A malformed block is reported and reading resumes at the
    next line that could be a header.
    """
    payload = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            payload.append((lineno, line))
    i = 0
    while i < len(payload):
        lineno, line = payload[i]
        head = line.split()
        try:
            if len(head) != 2:
                raise GraphFormatError(f"format: header must be 'n m', got {line!r}")
            n, m = int(head[0]), int(head[1])
            if n < 0 or m < 0:
                raise GraphFormatError("format: negative counts in header")
        except ValueError as exc:
            yield lineno, exc if isinstance(exc, GraphError) else GraphFormatError(f"format: {exc}")
            i += 1
            continue
        body = payload[i + 1 : i + 1 + m]
        i += 1 + m
        if len(body) < m:
            yield lineno, GraphFormatError(f"format: block declares {m} edges, found {len(body)}")
            continue
        try:
            pairs = []
            for bl, text in body:
                parts = text.split()
                if len(parts) != 2:
                    raise GraphFormatError(f"format: line {bl}: expected 'u v', got {text!r}")
                pairs.append((int(parts[0]), int(parts[1])))
            yield lineno, from_edge_list(n, pairs)
        except GraphError as exc:
            yield lineno, exc
        except ValueError as exc:
            yield lineno, GraphFormatError(f"format: {exc}")


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, Graph | GraphError]]:
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            yield lineno, parse_graph6(line)
        except GraphError as exc:
            yield lineno, exc
