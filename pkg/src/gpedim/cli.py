"""Command-line front-end.

Subcommands: dist, repr, check, dim, verify, witness, export, bench.
Every subcommand accepts --json (machine output on stdout) and --csv PATH
(tabular dump of the same result).  Exit codes: 0 = success / claim holds,
1 = claim fails or an internal disagreement was detected, 2 = usage error,
out-of-domain parameters, or an exceeded search budget.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Optional, Sequence

from . import __version__
from .bench import run_bench
from .distance import context, distance, undeviating_counterexample
from .errors import GPEdimError, VerificationError
from .graph import GPGraph, Layer, parse_edge, parse_vertex
from .resolving import (
    edge_representation,
    equal_pair_set_brute,
    equal_pair_set_closed,
    is_edge_resolving,
    resolving_tetrad,
)
from .theorem import (
    SHAPES,
    CanonicalPair,
    canonical_pairs,
    certified_edge_dimension,
    common_equal_index,
    confusable_witness,
    edge_dimension_exact,
    shape_landmarks,
    sporadic_pairs,
    verify_no_resolving_triad,
)

WORKERS_ENV = "GPEDIM_WORKERS"

CLAIMS = (
    "no-triad",
    "tetrad",
    "equal-sets",
    "witness-cover",
    "sporadic-confusable",
    "undeviating",
)

#: Claims whose machinery is only defined from this n on.
_CLAIM_MIN_N = {
    "no-triad": 7,
    "tetrad": 11,
    "equal-sets": 100,
    "witness-cover": 100,
    "sporadic-confusable": 100,
    "undeviating": 7,
}

#: Per-claim upper budget; ranges beyond this are refused up front.
_CLAIM_MAX_N = {
    "no-triad": 400,
}


def _workers_from_env() -> int:
    try:
        return int(os.environ.get(WORKERS_ENV, "0"))
    except ValueError:
        return 0


def _emit(args, doc: dict | list, human: str, csv_rows: Optional[list[list]] = None) -> None:
    if getattr(args, "json", False):
        print(json.dumps(doc))
    else:
        print(human)
    path = getattr(args, "csv", None)
    if path and csv_rows:
        with open(path, "w", newline="") as fh:
            csv.writer(fh).writerows(csv_rows)


def _graph(args) -> GPGraph:
    return GPGraph(args.n, getattr(args, "k", 3) or 3)


def _landmarks(g: GPGraph, text: str):
    names = [s for s in text.split(",") if s]
    return [g.vertex(*parse_vertex(name)) for name in names]


# -- dist -------------------------------------------------------------------


def _cmd_dist(args) -> int:
    g = _graph(args)
    anchor = g.vertex(*parse_vertex(args.anchor))
    edge = g.edge(*parse_edge(args.edge))
    d = distance(g, anchor, edge)
    _emit(
        args,
        {"distance": d},
        f"d({anchor.name}, {edge.name}) = {d} in P({g.n},{g.k})",
        [["n", "k", "anchor", "edge", "distance"], [g.n, g.k, anchor.name, edge.name, d]],
    )
    return 0


# -- repr -------------------------------------------------------------------


def _repr_table(g: GPGraph, landmarks, edges) -> str:
    head = "edge" + "".join(f"  d({w.name},.)" for w in landmarks)
    lines = [head]
    for e in edges:
        rep = edge_representation(g, landmarks, e)
        lines.append(f"{e.name:<6}" + "".join(f"  {d:>8}" for d in rep))
    return "\n".join(lines)


def _cmd_repr(args) -> int:
    g = _graph(args)
    landmarks = _landmarks(g, args.set)
    edge = g.edge(*parse_edge(args.edge))
    rep = edge_representation(g, landmarks, edge)
    _emit(
        args,
        {"representation": list(rep)},
        _repr_table(g, landmarks, [edge]),
        [["edge"] + [w.name for w in landmarks], [edge.name] + list(rep)],
    )
    return 0


# -- check ------------------------------------------------------------------


def _cmd_check(args) -> int:
    g = _graph(args)
    landmarks = _landmarks(g, args.set)
    verdict = is_edge_resolving(g, landmarks)
    if verdict.resolving:
        human = f"resolving: {{{', '.join(w.name for w in landmarks)}}} resolves P({g.n},{g.k})"
        rows = [["resolving"], ["true"]]
    else:
        e1, e2 = verdict.witness
        human = (
            f"not resolving: {e1.name} and {e2.name} share a representation\n"
            + _repr_table(g, landmarks, [e1, e2])
        )
        rows = [["resolving", "e1", "e2"], ["false", e1.name, e2.name]]
    _emit(args, verdict.to_json_dict(), human, rows)
    return 0 if verdict.resolving else 1


# -- dim --------------------------------------------------------------------


def _cmd_dim(args) -> int:
    g = _graph(args)
    if args.exact:
        dim = edge_dimension_exact(g, args.max_k)
        if dim is None:
            _emit(
                args,
                {"edge_dimension": None, "max_k": args.max_k},
                f"edge dimension of P({g.n},{g.k}) exceeds max-k = {args.max_k}",
                [["n", "k", "edge_dimension"], [g.n, g.k, ""]],
            )
            return 1
        _emit(
            args,
            {"edge_dimension": dim},
            f"edge dimension of P({g.n},{g.k}) = {dim}",
            [["n", "k", "edge_dimension"], [g.n, g.k, dim]],
        )
        return 0
    if g.k != 3:
        raise GPEdimError("certified dimension is only available for k = 3; use --exact")
    transcript = None
    try:
        if args.transcript:
            transcript = open(args.transcript, "w", newline="")
        cert = certified_edge_dimension(g.n, sweep=args.sweep, transcript=transcript)
    finally:
        if transcript is not None:
            transcript.close()
    text = cert.to_json()
    if args.cert:
        with open(args.cert, "w") as fh:
            fh.write(text)
    sweep_note = (
        f"triad sweep: {cert.triads_checked} triads, none resolve"
        if cert.sweep_done
        else "triad sweep: skipped (non-existence cited)"
    )
    _emit(
        args,
        json.loads(text),
        f"edge dimension of P({g.n},3) = {cert.dimension}\n"
        f"tetrad: {{{', '.join(w.name for w in cert.tetrad)}}} (verified)\n" + sweep_note,
        [["n", "dimension", "tetrad", "triads_checked"],
         [cert.n, cert.dimension, " ".join(w.name for w in cert.tetrad),
          cert.triads_checked if cert.sweep_done else ""]],
    )
    return 0


# -- verify -----------------------------------------------------------------


def _check_equal_sets(n: int) -> tuple[bool, str]:
    g = GPGraph(n, 3)
    ctx = context(n)
    for t in (0, 1, 7):
        for layer in Layer:
            closed = equal_pair_set_closed(ctx, layer, t)
            brute = equal_pair_set_brute(g, layer, t)
            if closed.indices != brute.indices:
                diff = sorted(closed.indices ^ brute.indices)[:5]
                return False, f"layer={layer.symbol} t={t} differs at {diff}"
    if not equal_pair_set_brute(g, Layer.OUTER, 0).indices <= equal_pair_set_brute(
        g, Layer.INNER, 0
    ).indices:
        return False, "u-anchor set not contained in v-anchor set"
    return True, "closed == brute for t in {0,1,7}, containment holds"


def _check_witness_cover(n: int) -> tuple[bool, str]:
    sp = sporadic_pairs(n).pairs
    covered = 0
    for pair in canonical_pairs(n):
        if pair in sp:
            continue
        if common_equal_index(n, pair) is None:
            return False, f"no common index for non-sporadic pair {tuple(pair)}"
        covered += 1
    return True, f"{covered} pairs covered, {len(sp)} sporadic"


def _check_sporadic(n: int) -> tuple[bool, str]:
    count = 0
    for pair in sorted(sporadic_pairs(n).pairs):
        for shape in SHAPES:
            confusable_witness(n, pair, shape)  # raises on failure
            count += 1
    return True, f"{count} (pair, shape) witnesses verified"


def _check_no_triad(n: int) -> tuple[bool, str]:
    sweep = verify_no_resolving_triad(n)
    if sweep.none_resolves:
        return True, f"{sweep.triads_checked} triads checked"
    triad = ", ".join(w.name for w in sweep.resolving_triad)
    return False, f"resolving triad found: {{{triad}}}"


def _check_tetrad(n: int) -> tuple[bool, str]:
    tetrad = resolving_tetrad(n)
    return True, "{" + ", ".join(w.name for w in tetrad) + "}"


def _check_undeviating(n: int) -> tuple[bool, str]:
    bad = undeviating_counterexample(GPGraph(n, 3))
    if bad is None:
        return True, "all pairs realize BFS distance undeviatingly with <= 2 spokes"
    return False, f"counterexample pair ({bad[0].name}, {bad[1].name})"


_CLAIM_FN: dict[str, Callable[[int], tuple[bool, str]]] = {
    "no-triad": _check_no_triad,
    "tetrad": _check_tetrad,
    "equal-sets": _check_equal_sets,
    "witness-cover": _check_witness_cover,
    "sporadic-confusable": _check_sporadic,
    "undeviating": _check_undeviating,
}


def _claim_worker(task: tuple[str, int]) -> tuple[int, bool, str]:
    claim, n = task
    try:
        ok, detail = _CLAIM_FN[claim](n)
    except GPEdimError as exc:
        return n, False, f"error: {exc}"
    return n, ok, detail


def _cmd_verify(args) -> int:
    claim = args.claim
    lo, hi = args.lo, args.hi
    if lo > hi:
        raise GPEdimError(f"empty range {lo}..{hi}")
    if lo < _CLAIM_MIN_N[claim]:
        raise GPEdimError(
            f"claim {claim!r} is defined for n >= {_CLAIM_MIN_N[claim]}, range starts at {lo}"
        )
    if claim in _CLAIM_MAX_N and hi > _CLAIM_MAX_N[claim]:
        raise GPEdimError(
            f"claim {claim!r} refuses n > {_CLAIM_MAX_N[claim]} (search budget); "
            f"range ends at {hi}"
        )
    workers = args.workers or _workers_from_env() or (os.cpu_count() or 1)
    tasks = [(claim, n) for n in range(lo, hi + 1)]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_claim_worker, tasks))
    else:
        results = [_claim_worker(t) for t in tasks]
    all_pass = all(ok for _, ok, _ in results)
    doc = {
        "claim": claim,
        "results": [{"n": n, "pass": ok, "detail": detail} for n, ok, detail in results],
        "all_pass": all_pass,
    }
    human = "\n".join(
        f"n={n}: {'pass' if ok else 'FAIL'} ({detail})" for n, ok, detail in results
    )
    rows = [["claim", "n", "pass", "detail"]] + [
        [claim, n, ok, detail] for n, ok, detail in results
    ]
    _emit(args, doc, human, rows)
    return 0 if all_pass else 1


# -- witness ----------------------------------------------------------------


def _cmd_witness(args) -> int:
    n = args.n
    pair = CanonicalPair(args.a, args.b)
    if pair in sporadic_pairs(n).pairs:
        shapes = [args.shape] if args.shape else list(SHAPES)
        g = GPGraph(n, 3)
        found = []
        for shape in shapes:
            e1, e2 = confusable_witness(n, pair, shape)
            rep = edge_representation(g, shape_landmarks(g, shape, pair.a, pair.b), e1)
            found.append({"shape": shape, "e1": e1.name, "e2": e2.name,
                          "representation": list(rep)})
        doc = {"n": n, "pair": [pair.a, pair.b], "sporadic": True, "witnesses": found}
        human = "\n".join(
            f"shape {w['shape']}: {w['e1']} ~ {w['e2']} both map to {tuple(w['representation'])}"
            for w in found
        )
        rows = [["shape", "e1", "e2", "representation"]] + [
            [w["shape"], w["e1"], w["e2"], " ".join(map(str, w["representation"]))]
            for w in found
        ]
        _emit(args, doc, f"({pair.a}, {pair.b}) is sporadic for n={n}\n" + human, rows)
        return 0
    idx = common_equal_index(n, pair)
    doc = {"n": n, "pair": [pair.a, pair.b], "sporadic": False, "common_index": idx}
    human = (
        f"index {idx} is equidistant-pair position for anchors u_0, u_{pair.a}, u_{pair.b} "
        f"(verified against BFS)"
    )
    _emit(args, doc, human, [["n", "a", "b", "common_index"], [n, pair.a, pair.b, idx]])
    return 0


# -- export -----------------------------------------------------------------


def _cmd_export(args) -> int:
    g = _graph(args)
    payload = g.to_dot() if args.format == "dot" else g.to_json()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(payload)
        print(f"wrote {args.format} for P({g.n},{g.k}) to {args.output}")
    else:
        sys.stdout.write(payload)
    path = getattr(args, "csv", None)
    if path:
        rows = [["kind", "index", "endpoint1", "endpoint2"]]
        for e in g.edges():
            a, b = g.incident_vertices(e)
            rows.append([e.kind.json_name, e.index, a.name, b.name])
        with open(path, "w", newline="") as fh:
            csv.writer(fh).writerows(rows)
    return 0


# -- bench ------------------------------------------------------------------


def _cmd_bench(args) -> int:
    ns = [int(s) for s in args.n.split(",") if s]
    csv_fh = open(args.csv, "w", newline="") if getattr(args, "csv", None) else None
    try:
        reports = run_bench(ns, args.queries, args.seed, csv_out=csv_fh)
    finally:
        if csv_fh is not None:
            csv_fh.close()
    doc = [r.to_json_dict() for r in reports]
    human = "\n".join(
        f"n={r.n}: formula {r.mean_ns_formula / 1e3:.2f} us/query, "
        f"bfs {r.mean_ns_bfs / 1e3:.2f} us/query, speedup {r.speedup:.1f}x"
        for r in reports
    )
    if getattr(args, "json", False):
        print(json.dumps(doc))
    else:
        print(human)
    return 0


# -- parser -----------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="machine-readable JSON on stdout")
    p.add_argument("--csv", metavar="PATH", help="also write results as CSV")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gpedim",
        description="Distances, edge resolving sets, and certified edge dimension "
        "for generalized Petersen graphs.",
    )
    parser.add_argument("--version", action="version", version=f"gpedim {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", help="vertex-to-edge distance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--anchor", required=True, help="vertex, e.g. u0 or v12")
    p.add_argument("--edge", required=True, help="edge, e.g. u:5, s:0, v:-7")
    _add_common(p)
    p.set_defaults(func=_cmd_dist)

    p = sub.add_parser("repr", help="edge metric representation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--set", required=True, help="comma-separated vertices, e.g. u0,u1,u2,v3")
    p.add_argument("--edge", required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_repr)

    p = sub.add_parser("check", help="test whether a vertex set resolves all edges")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--set", required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("dim", help="edge dimension (exact search or certificate)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--exact", action="store_true", help="exhaustive subset search")
    p.add_argument("--max-k", type=int, default=4, dest="max_k")
    p.add_argument("--sweep", action="store_true", help="run the exhaustive triad sweep")
    p.add_argument("--cert", metavar="PATH", help="write the certificate JSON here")
    p.add_argument("--transcript", metavar="PATH", help="write the sweep transcript CSV here")
    _add_common(p)
    p.set_defaults(func=_cmd_dim)

    p = sub.add_parser("verify", help="verify a structural claim over a range of n")
    p.add_argument("--claim", choices=CLAIMS, required=True)
    p.add_argument("--from", dest="lo", type=int, required=True)
    p.add_argument("--to", dest="hi", type=int, required=True)
    p.add_argument("--workers", type=int, default=0,
                   help=f"parallel workers (default: ${WORKERS_ENV} or CPU count)")
    _add_common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("witness", help="common equal-pair index or confusable edge pair")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--shape", choices=SHAPES, help="triad layer shape (sporadic pairs only)")
    _add_common(p)
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("export", help="emit the graph as DOT or JSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--format", choices=("dot", "json"), required=True)
    p.add_argument("--output", "-o", metavar="PATH")
    _add_common(p)
    p.set_defaults(func=_cmd_export)

    p = sub.add_parser("bench", help="formula vs BFS microbenchmark")
    p.add_argument("--n", required=True, help="comma-separated sizes, e.g. 1000,100000")
    p.add_argument("--queries", type=int, default=10000)
    p.add_argument("--seed", type=int, default=42)
    _add_common(p)
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    except GPEdimError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
