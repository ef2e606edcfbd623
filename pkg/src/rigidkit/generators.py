"""Graph families: the clique-expansion sharpness family, standard graphs,
Henneberg-grown Laman graphs and certified samplers for the rigidity
theorems on essentially connected graphs.

All randomness goes through ``numpy.random.Generator`` seeded from an
integer, so every output is a deterministic function of its arguments.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .connectivity import essential_connectivity, is_essentially_k_connected, vertex_connectivity
from .graph import Graph, GraphError, from_edge_list, relabel
from .rigidity import is_minimally_rigid, rigidity_rank


class GeneratorError(GraphError):
    pass


class CertificationError(RuntimeError):
    """A generated instance failed its own certificate (a generator bug)."""

    def __init__(self, message: str, certificate: dict[str, Any]):
        super().__init__(message)
        self.certificate = certificate


def child_seed(seed: int, *path: int) -> int:
    """Independent integer seed for stream ``path`` under ``seed``."""
    ss = np.random.SeedSequence(seed, spawn_key=tuple(path))
    return int(ss.generate_state(1, dtype=np.uint64)[0] >> 1)


# sharpness family -------------------------------------------------------------


@dataclass(frozen=True)
class EssTFamilySpec:
    """Parameters of the clique-expansion family.

    The base is bipartite with ``n3`` vertices of degree 3 on one side and
    ``n_t = 3 * n3 / t`` vertices of degree ``t`` on the other; expanding
    every degree-``t`` vertex into ``K_t`` gives ``4 * n3`` vertices.
    """

    t: int
    n3: int
    seed: int = 0

    def __post_init__(self) -> None:
        if self.t < 3:
            raise GeneratorError(f"infeasible spec: t={self.t} < 3")
        if self.n3 < 1 or (3 * self.n3) % self.t:
            raise GeneratorError(f"infeasible spec: t={self.t} must divide 3*n3={3 * self.n3}")

    @property
    def nt(self) -> int:
        return 3 * self.n3 // self.t

    @property
    def order(self) -> int:
        return self.n3 + self.t * self.nt

    @property
    def rank_bound(self) -> int:
        return 3 * self.n3 + self.nt * (2 * self.t - 3)


def _stub_matching(spec: EssTFamilySpec, rng: np.random.Generator) -> list[tuple[int, int]] | None:
    """Random bipartite configuration, then degree-preserving swaps to remove parallels."""
    n3, nt, t = spec.n3, spec.nt, spec.t
    ystubs = rng.permutation(np.repeat(np.arange(nt), t)).tolist()
    xstubs = [x for x in range(n3) for _ in range(3)]
    pairs = list(zip(xstubs, ystubs))
    count: dict[tuple[int, int], int] = {}
    for p in pairs:
        count[p] = count.get(p, 0) + 1
    for _ in range(50 * len(pairs)):
        bad = [i for i, p in enumerate(pairs) if count[p] > 1]
        if not bad:
            return pairs
        i = bad[int(rng.integers(len(bad)))]
        j = int(rng.integers(len(pairs)))
        (x1, y1), (x2, y2) = pairs[i], pairs[j]
        a, b = (x1, y2), (x2, y1)
        if y1 == y2 or count.get(a, 0) or count.get(b, 0):
            continue
        for old in (pairs[i], pairs[j]):
            count[old] -= 1
        pairs[i], pairs[j] = a, b
        count[a] = count.get(a, 0) + 1
        count[b] = count.get(b, 0) + 1
    return None


def generate_biregular_bipartite(spec: EssTFamilySpec, max_attempts: int = 50) -> Graph:
    """3-connected bipartite base: vertices ``0..n3-1`` have degree 3, the rest degree ``t``."""
    if spec.n3 < spec.t:
        raise GeneratorError(f"infeasible spec: need n3 >= t distinct neighbours, got n3={spec.n3}, t={spec.t}")
    n = spec.n3 + spec.nt
    for attempt in range(max_attempts):
        rng = np.random.default_rng(child_seed(spec.seed, 0, attempt))
        pairs = _stub_matching(spec, rng)
        if pairs is None:
            continue
        g = from_edge_list(n, [(x, spec.n3 + y) for x, y in pairs])
        if g.m == 3 * spec.n3 and vertex_connectivity(g).value >= 3:
            return g
    raise GeneratorError("no 3-connected base found")


def _bipartition(g: Graph) -> tuple[list[int], list[int]] | None:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    return None
    return [v for v in range(g.n) if side[v] == 0], [v for v in range(g.n) if side[v] == 1]


def expand_to_clique_family(base: Graph, t: int) -> Graph:
    """Replace every degree-``t`` vertex by ``K_t``, one former edge per clique vertex.

    The degree-3 side must be ``0..n3-1`` (the side holding vertex 0 when
    ``t == 3``) and keeps its labels; the ``j``-th vertex of the other side
    becomes ``n3 + j*t + i`` for ``i < t``, where clique vertex ``i`` takes
    the ``i``-th smallest former neighbour.
    """
    sides = _bipartition(base)
    if sides is None or base.n == 0:
        raise GeneratorError("not biregular: base is not bipartite")
    xs, ys = sides
    if any(base.degree(x) != 3 for x in xs) or any(base.degree(y) != t for y in ys):
        raise GeneratorError("not biregular")
    if xs != list(range(len(xs))):
        raise GeneratorError("not biregular: degree-3 side must be 0..n3-1")
    k = len(xs)
    pairs = []
    for j, y in enumerate(ys):
        nbrs = sorted(base.adj[y])
        first = k + j * t
        for i in range(t):
            for i2 in range(i + 1, t):
                pairs.append((first + i, first + i2))
            pairs.append((nbrs[i], first + i))
    return from_edge_list(k + t * len(ys), pairs)


@dataclass
class EssTInstance:
    spec: EssTFamilySpec
    base: Graph
    graph: Graph
    certificate: dict[str, Any] = field(default_factory=dict)


def certify_ess_t(g: Graph, spec: EssTFamilySpec, exact: bool = False) -> dict[str, Any]:
    """Certificates for a clique-expansion instance.

    ``exact`` also computes the essential connectivity value itself, which
    is slower than only checking ``>= t``.
    """
    kappa = vertex_connectivity(g)
    rank = rigidity_rank(g)
    degs = sorted(g.degree(v) for v in range(g.n))
    cert: dict[str, Any] = {
        "t": spec.t,
        "n3": spec.n3,
        "nt": spec.nt,
        "seed": spec.seed,
        "n": g.n,
        "m": g.m,
        "kappa": kappa.value,
        "three_connected": g.n >= 4 and kappa.value >= 3,
        "essentially_t_connected": is_essentially_k_connected(g, spec.t),
        "rank": rank,
        "rank_bound": spec.rank_bound,
        "target": 2 * g.n - 3,
        "non_rigid": rank < 2 * g.n - 3,
        "degree_law": degs == sorted([3] * spec.n3 + [spec.t] * (spec.t * spec.nt)),
    }
    if exact:
        ess = essential_connectivity(g)
        cert["essential_kappa"] = "unbounded" if ess.unbounded else ess.value
    return cert


def build_ess_t_instance(spec: EssTFamilySpec, unchecked: bool = False, exact: bool = False) -> EssTInstance:
    """Generate and certify a 3-connected, essentially ``t``-connected non-rigid graph.

    Non-rigidity is only guaranteed for ``t <= 8`` and ``n > 96``; smaller
    orders need ``unchecked=True`` and then skip that certificate.
    """
    if spec.t > 8:
        raise GeneratorError(f"precondition: t={spec.t} > 8 (no 3-connected essentially 9-connected non-rigid graph)")
    if spec.order <= 96 and not unchecked:
        raise GeneratorError(f"precondition: n={spec.order} must exceed 96 (or pass unchecked)")
    base = generate_biregular_bipartite(spec)
    g = expand_to_clique_family(base, spec.t)
    cert = certify_ess_t(g, spec, exact=exact)
    required = ["three_connected", "essentially_t_connected", "degree_law"]
    if not unchecked:
        required.append("non_rigid")
        cert["bound_below_target"] = spec.rank_bound < 2 * g.n - 3
        required.append("bound_below_target")
    failed = [k for k in required if not cert[k]]
    if cert["rank"] > spec.rank_bound:
        failed.append("rank_bound")
    if failed:
        raise CertificationError(f"certification failed: {', '.join(failed)}", cert)
    return EssTInstance(spec, base, g, cert)


def ess_t_nonrigid(spec: EssTFamilySpec, unchecked: bool = False) -> Graph:
    return build_ess_t_instance(spec, unchecked).graph


# standard graphs -----------------------------------------------------------------

STANDARD_KINDS = ("complete", "complete-bipartite", "cycle", "path", "wheel", "petersen", "empty")


def standard_graph(kind: str, *params: int) -> Graph:
    """Named graphs with canonical numbering.

    ``wheel`` takes the total order (hub ``0`` plus a rim cycle), so
    ``wheel 6`` is a hub on ``C5``.
    """
    def need(k: int, lo: int) -> list[int]:
        if len(params) != k or any(p < lo for p in params):
            raise GeneratorError(f"invalid params for {kind}: {params}")
        return list(params)

    if kind == "complete":
        (n,) = need(1, 1)
        return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if kind == "complete-bipartite":
        a, b = need(2, 1)
        return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    if kind == "cycle":
        (n,) = need(1, 3)
        return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "path":
        (n,) = need(1, 1)
        return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "wheel":
        (n,) = need(1, 4)
        rim = n - 1
        return from_edge_list(n, [(0, i) for i in range(1, n)] + [(1 + i, 1 + (i + 1) % rim) for i in range(rim)])
    if kind == "petersen":
        need(0, 0)
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return from_edge_list(10, outer + spokes + inner)
    if kind == "empty":
        (n,) = need(1, 0)
        return from_edge_list(n, [])
    raise GeneratorError(f"unknown standard graph kind {kind!r}")


# random families ------------------------------------------------------------------


def random_laman(n: int, seed: int) -> Graph:
    """Henneberg 0-extensions from a single edge, then a random relabelling."""
    if n < 2:
        raise GeneratorError("precondition: n >= 2")
    rng = np.random.default_rng(seed)
    pairs = [(0, 1)]
    for v in range(2, n):
        a, b = rng.choice(v, size=2, replace=False).tolist()
        pairs += [(a, v), (b, v)]
    g = relabel(from_edge_list(n, pairs), rng.permutation(n).tolist())
    if not is_minimally_rigid(g):
        raise AssertionError("0-extension produced a non-Laman graph")
    return g


def random_graph(n: int, m: int, seed: int) -> Graph:
    """Uniform simple graph with ``n`` vertices and ``min(m, C(n,2))`` edges."""
    rng = np.random.default_rng(seed)
    allp = [(i, j) for i in range(n) for j in range(i + 1, n)]
    m = min(m, len(allp))
    idx = rng.choice(len(allp), size=m, replace=False) if m else []
    return from_edge_list(n, [allp[i] for i in idx])


def _core_and_satellites(n: int, attach: int, rng: np.random.Generator) -> Graph:
    """Dense random core plus an independent set of low-degree satellites.

    Each satellite joins ``attach`` (occasionally ``attach + 1``) distinct
    core vertices; a few random extra edges are sprinkled in afterwards.
    """
    lo = attach if rng.random() < 0.3 else max(attach, n // 4)
    core = int(rng.integers(lo, n + 1))
    p = float(rng.uniform(0.3, 1.0))
    pairs = [(i, j) for i in range(core) for j in range(i + 1, core) if rng.random() < p]
    for s in range(core, n):
        k = attach + (1 if rng.random() < 0.25 else 0)
        k = min(k, core)
        for c in rng.choice(core, size=k, replace=False).tolist():
            pairs.append((c, s))
    for _ in range(int(rng.integers(0, 5))):
        a, b = rng.choice(n, size=2, replace=False).tolist()
        pairs.append((a, b))
    return relabel(from_edge_list(n, pairs), rng.permutation(n).tolist())


def is_certified(g: Graph, kappa: int, ess: int) -> bool:
    """``kappa``-connected and essentially ``ess``-connected."""
    return g.n >= kappa + 1 and vertex_connectivity(g).value >= kappa and is_essentially_k_connected(g, ess)


def random_certified(n: int, seed: int, kappa: int, ess: int, max_tries: int = 20) -> Graph | None:
    """A ``kappa``-connected, essentially ``ess``-connected graph on ``n`` vertices, or None."""
    if n < max(kappa, ess) + 1:
        raise GeneratorError(f"precondition: n={n} < {max(kappa, ess) + 1}")
    for attempt in range(max_tries):
        rng = np.random.default_rng(child_seed(seed, attempt))
        g = _core_and_satellites(n, kappa, rng)
        if is_certified(g, kappa, ess):
            return g
    return None


def random_3conn_ess9(n: int, seed: int, max_tries: int = 20) -> Graph | None:
    return random_certified(n, seed, 3, 9, max_tries)


def random_4conn_ess6(n: int, seed: int, max_tries: int = 20) -> Graph | None:
    return random_certified(n, seed, 4, 6, max_tries)
