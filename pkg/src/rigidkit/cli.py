"""Command-line entry point.

Every subcommand writes JSON objects one per line on stdout (``generate``
writes graph6 lines) and diagnostics on stderr.

Exit codes: 0 success, 1 counterexample found, 2 input error,
3 campaign without any certified sample.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from contextlib import contextmanager
from typing import Any, Iterator, Sequence, TextIO

import numpy as np

from . import covers
from .connectivity import OracleLimit, essential_connectivity, is_essentially_k_connected, vertex_connectivity
from .generators import (
    CertificationError,
    EssTFamilySpec,
    GeneratorError,
    STANDARD_KINDS,
    build_ess_t_instance,
    child_seed,
    random_certified,
    random_laman,
    standard_graph,
)
from .graph import Graph, GraphError, iter_edge_list_blocks, iter_graph6_lines, to_graph6
from .rigidity import is_globally_rigid, is_redundantly_rigid, rigidity_report

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_INPUT = 2
EXIT_EMPTY = 3

# theorem id -> (vertex connectivity, essential connectivity)
THEOREMS = {"th3ess9": (3, 9), "th4ess6": (4, 6)}


class _Timer:
    def __init__(self) -> None:
        self.ms: dict[str, float] = {}

    @contextmanager
    def stage(self, name: str) -> Iterator[None]:
        t0 = time.perf_counter()
        yield
        self.ms[name] = round((time.perf_counter() - t0) * 1000.0, 3)


def _dump(obj: dict[str, Any], out: TextIO) -> None:
    out.write(json.dumps(obj, separators=(",", ":")) + "\n")
    out.flush()


def _edge(e: Sequence[int] | None) -> list[int] | None:
    return None if e is None else [int(e[0]), int(e[1])]


def verdict_report(g: Graph, timings: bool = True) -> dict[str, Any]:
    """Full rigidity/connectivity verdict for one graph as a JSON-ready dict."""
    tm = _Timer()
    with tm.stage("connectivity"):
        kappa = vertex_connectivity(g)
    with tm.stage("essential"):
        ess = essential_connectivity(g)
    with tm.stage("rank"):
        rep = rigidity_report(g)
    with tm.stage("redundancy"):
        red = is_redundantly_rigid(g)
    with tm.stage("global"):
        glob = is_globally_rigid(g)

    small_complete = g.n <= 3 and g.is_complete()
    expected_global = small_complete or (g.n >= 4 and kappa.value >= 3 and red.redundant)
    if glob.is_globally_rigid != expected_global:
        raise AssertionError("global rigidity flag disagrees with the 3-connected + redundant rule")
    if red.redundant and not rep.is_rigid:
        raise AssertionError("redundantly rigid but not rigid")
    if rep.is_minimally_rigid and not rep.is_rigid:
        raise AssertionError("minimally rigid but not rigid")
    if g.n >= 2 and rep.is_rigid != (rep.rank == 2 * g.n - 3):
        raise AssertionError("rigid flag disagrees with rank")

    out: dict[str, Any] = {
        "n": g.n,
        "m": g.m,
        "graph6": to_graph6(g),
        "kappa": {
            "value": kappa.value,
            "witness": "complete" if kappa.complete else sorted(kappa.cut or ()),
        },
        "essential_kappa": {
            "value": "unbounded" if ess.unbounded else ess.value,
            "witness": None
            if ess.unbounded
            else {"cut": sorted(ess.cut or ()), "e1": _edge(ess.e1), "e2": _edge(ess.e2)},
        },
        "rank": rep.rank,
        "is_rigid": rep.is_rigid,
        "is_minimally_rigid": rep.is_minimally_rigid,
        "is_redundantly_rigid": red.redundant,
        "is_globally_rigid": glob.is_globally_rigid,
        "global_reason": glob.reason,
        "redundancy_witness": _edge(red.witness),
        "spanning_laman": None if rep.spanning_laman is None else [list(e) for e in rep.spanning_laman],
    }
    if timings:
        out["timings"] = tm.ms
    return out


def _read_graphs(path: str, edgelist: bool):
    fh = sys.stdin if path == "-" else open(path, encoding="utf-8")
    try:
        lines = fh.read().splitlines()
    finally:
        if fh is not sys.stdin:
            fh.close()
    return iter_edge_list_blocks(lines) if edgelist else iter_graph6_lines(lines)


def cmd_check(args: argparse.Namespace, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    status = EXIT_OK
    for index, (lineno, item) in enumerate(_read_graphs(args.file, args.edgelist)):
        if isinstance(item, GraphError):
            err.write(f"{args.file}:{lineno}: {item}\n")
            status = EXIT_INPUT
            continue
        rep = verdict_report(item, timings=not args.no_timings)
        _dump({"index": index, "line": lineno, **rep}, out)
    return status


def oracle_report(g: Graph) -> dict[str, Any]:
    value, cover = covers.min_cover_value_bruteforce(g)
    target = 2 * g.n - 3
    rigid = rigidity_report(g).is_rigid
    return {
        "n": g.n,
        "m": g.m,
        "min_cover_value": value,
        "cover": cover.to_json(),
        "target": target,
        "deficiency": target - value,
        "deficient": value < target,
        "is_rigid": rigid,
        "consistent": rigid == (value >= target),
    }


def cmd_oracle(args: argparse.Namespace, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    status = EXIT_OK
    for index, (lineno, item) in enumerate(_read_graphs(args.file, args.edgelist)):
        if isinstance(item, GraphError):
            err.write(f"{args.file}:{lineno}: {item}\n")
            status = EXIT_INPUT
            continue
        try:
            rep = oracle_report(item)
        except OracleLimit as exc:
            rep = {"n": item.n, "m": item.m, "oracle_limit": True, "error": str(exc)}
        _dump({"index": index, "line": lineno, **rep}, out)
    return status


GENERATE_FAMILIES = ("ess-nonrigid", "standard", "laman", "th3ess9", "th4ess6")
GENERATE_KINDS = STANDARD_KINDS + ("ess-nonrigid", "laman", "th3ess9", "th4ess6")


def _standard_params(kind: str, args: argparse.Namespace) -> list[int]:
    if kind == "complete-bipartite":
        return [args.a, args.b]
    if kind == "petersen":
        return []
    return [args.n]


def cmd_generate(args: argparse.Namespace, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    kind = args.kind
    if args.family not in (None, "standard"):
        if kind is not None and kind != args.family:
            err.write(f"error: family {args.family!r} conflicts with --kind {kind!r}\n")
            return EXIT_INPUT
        kind = args.family
    if kind is None:
        err.write("error: --kind is required\n")
        return EXIT_INPUT
    if args.family == "standard" and kind not in STANDARD_KINDS:
        err.write(f"error: {kind!r} is not a standard kind\n")
        return EXIT_INPUT

    graphs: list[Graph] = []
    sidecar: dict[str, Any] | None = None
    try:
        if kind == "ess-nonrigid":
            if args.t is None or args.n3 is None:
                raise GeneratorError("ess-nonrigid needs --t and --n3")
            spec = EssTFamilySpec(args.t, args.n3, args.seed)
            inst = build_ess_t_instance(spec, unchecked=args.unchecked)
            graphs.append(inst.graph)
            sidecar = {"kind": kind, "unchecked": args.unchecked, "graph6": to_graph6(inst.graph), **inst.certificate}
        elif kind in STANDARD_KINDS:
            params = _standard_params(kind, args)
            if any(p is None for p in params):
                raise GeneratorError(f"{kind} needs {'--a and --b' if kind == 'complete-bipartite' else '--n'}")
            graphs.append(standard_graph(kind, *params))
        elif kind == "laman":
            if args.n is None:
                raise GeneratorError("laman needs --n")
            graphs.extend(random_laman(args.n, child_seed(args.seed, i)) for i in range(args.count))
        else:
            if args.n is None:
                raise GeneratorError(f"{kind} needs --n")
            kappa, ess = THEOREMS[kind]
            for i in range(args.count):
                g = random_certified(args.n, child_seed(args.seed, i), kappa, ess)
                if g is None:
                    err.write(f"warning: no certified {kind} sample for draw {i}\n")
                else:
                    graphs.append(g)
    except (GraphError, CertificationError) as exc:
        err.write(f"error: {exc}\n")
        if isinstance(exc, CertificationError):
            err.write(json.dumps(exc.certificate, sort_keys=True) + "\n")
        return EXIT_INPUT

    text = "".join(to_graph6(g) + "\n" for g in graphs)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        if sidecar is not None:
            with open(args.output + ".cert.json", "w", encoding="utf-8") as fh:
                json.dump(sidecar, fh, indent=2, sort_keys=True)
                fh.write("\n")
    else:
        out.write(text)
        if sidecar is not None:
            err.write(json.dumps(sidecar, sort_keys=True) + "\n")
    return EXIT_OK


def _instance_certificate(g: Graph, kappa_req: int, ess_req: int) -> dict[str, Any]:
    """Everything needed to re-check a campaign instance by hand."""
    kappa = vertex_connectivity(g)
    ess = essential_connectivity(g)
    red = is_redundantly_rigid(g)
    glob = is_globally_rigid(g)
    rep = rigidity_report(g)
    return {
        "graph6": to_graph6(g),
        "n": g.n,
        "m": g.m,
        "kappa": kappa.value,
        "kappa_witness": "complete" if kappa.complete else sorted(kappa.cut or ()),
        "essential_kappa": "unbounded" if ess.unbounded else ess.value,
        "essential_witness": None
        if ess.unbounded
        else {"cut": sorted(ess.cut or ()), "e1": _edge(ess.e1), "e2": _edge(ess.e2)},
        "hypothesis": {"kappa": kappa_req, "essential": ess_req},
        "rank": rep.rank,
        "is_redundantly_rigid": red.redundant,
        "redundancy_witness": _edge(red.witness),
        "is_globally_rigid": glob.is_globally_rigid,
        "global_reason": glob.reason,
    }


def run_campaign(
    theorem: str, samples: int, max_n: int, seed: int, max_attempts: int | None = None, err: TextIO | None = None
) -> dict[str, Any]:
    """Draw certified hypothesis instances and test the theorem's conclusion on each.

    Draw ``i`` picks its order and graph from independent child streams of
    ``seed``; drawing stops after ``samples`` certified instances or
    ``max_attempts`` draws.
    """
    err = err or sys.stderr
    kappa_req, ess_req = THEOREMS[theorem]
    min_n = max(kappa_req, ess_req) + 1
    if max_n < min_n:
        raise GeneratorError(f"--max-n must be at least {min_n} for {theorem}")
    budget = max_attempts if max_attempts is not None else 10 * samples
    digest = hashlib.sha256()
    counterexamples = []
    attempted = certified = 0
    orders = []
    t0 = time.perf_counter()
    while certified < samples and attempted < budget:
        i = attempted
        attempted += 1
        n = int(np.random.default_rng(child_seed(seed, 1, i)).integers(min_n, max_n + 1))
        g = random_certified(n, child_seed(seed, 2, i), kappa_req, ess_req, max_tries=1)
        if g is None:
            continue
        certified += 1
        orders.append(g.n)
        red = is_redundantly_rigid(g)
        glob = is_globally_rigid(g)
        digest.update(f"{to_graph6(g)} {int(red.redundant)} {int(glob.is_globally_rigid)}\n".encode())
        if not (red.redundant and glob.is_globally_rigid):
            cert = _instance_certificate(g, kappa_req, ess_req)
            # re-derive the hypothesis so the entry carries both sides
            cert["hypothesis_holds"] = cert["kappa"] >= kappa_req and is_essentially_k_connected(g, ess_req)
            counterexamples.append(cert)
    if certified < samples:
        err.write(f"warning: only {certified} of {samples} samples certified in {attempted} draws\n")
    return {
        "theorem": theorem,
        "seed": seed,
        "samples_requested": samples,
        "max_n": max_n,
        "attempted": attempted,
        "certified": certified,
        "counterexamples": counterexamples,
        "verdicts_digest": digest.hexdigest(),
        "orders": {"min": min(orders), "max": max(orders)} if orders else None,
        "elapsed_ms": round((time.perf_counter() - t0) * 1000.0, 3),
    }


def cmd_verify_theorem(args: argparse.Namespace, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    try:
        rep = run_campaign(args.theorem, args.samples, args.max_n, args.seed, args.max_attempts, err=err)
    except GraphError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    if args.no_timings:
        rep.pop("elapsed_ms")
    _dump(rep, out)
    if rep["counterexamples"]:
        return EXIT_COUNTEREXAMPLE
    if rep["certified"] == 0:
        err.write("warning: campaign produced no certified samples\n")
        return EXIT_EMPTY
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--no-timings", action="store_true", default=argparse.SUPPRESS,
                        help="omit timing fields for byte-stable output")

    parser = argparse.ArgumentParser(prog="rigidkit", description="Generic 2D rigidity toolkit")
    parser.add_argument("--no-timings", action="store_true", help="omit timing fields for byte-stable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="rigidity and connectivity verdict per graph")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--graph6", dest="edgelist", action="store_false", help="graph6 lines (default)")
    fmt.add_argument("--edgelist", dest="edgelist", action="store_true", help="'n m' blocks of 'u v' lines")
    p.add_argument("file", help="input path, '-' for stdin")
    p.set_defaults(func=cmd_check, edgelist=False)

    p = sub.add_parser("oracle", parents=[common], help="brute-force minimum cover per graph")
    p.add_argument("--edgelist", action="store_true")
    p.add_argument("file")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("generate", parents=[common], help="write graph6 lines for a family")
    p.add_argument("family", nargs="?", choices=GENERATE_FAMILIES)
    p.add_argument("--kind", choices=GENERATE_KINDS)
    p.add_argument("--n", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--n3", type=int)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--unchecked", action="store_true", help="allow n <= 96 without the non-rigidity guarantee")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify-theorem", parents=[common], help="sampling campaign for a redundancy theorem")
    p.add_argument("--theorem", required=True, choices=sorted(THEOREMS))
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--max-n", type=int, default=40)
    p.add_argument("--max-attempts", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify_theorem)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
