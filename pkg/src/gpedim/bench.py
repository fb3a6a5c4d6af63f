"""Microbenchmark: closed-form distance queries versus per-query BFS.

Both branches are evaluated on an identical seeded stream of random
(anchor, edge) queries; any disagreement aborts the run, so the benchmark
doubles as a correctness gate.  Raw per-query samples can be retained as
CSV.
"""

from __future__ import annotations

import csv
import random
import time
from dataclasses import dataclass
from typing import Optional, TextIO

from .distance import (
    FORMULA_MIN_N,
    bfs_vertex_edge_distance,
    closed_vertex_edge_distance,
    context,
)
from .errors import UnsupportedRangeError, VerificationError
from .graph import Edge, EdgeKind, GPGraph, Layer, Vertex


@dataclass(frozen=True)
class BenchReport:
    """Aggregate timings for one graph size."""

    n: int
    queries: int
    mean_ns_formula: float
    mean_ns_bfs: float

    @property
    def speedup(self) -> float:
        return self.mean_ns_bfs / self.mean_ns_formula

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "queries": self.queries,
            "mean_ns_formula": self.mean_ns_formula,
            "mean_ns_bfs": self.mean_ns_bfs,
            "speedup": self.speedup,
        }


def generate_queries(n: int, count: int, seed: int) -> list[tuple[Vertex, Edge]]:
    """Deterministic uniform (anchor, edge) query stream for P(n, ·)."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        anchor = Vertex(Layer(rng.randrange(2)), rng.randrange(n))
        edge = Edge(EdgeKind(rng.randrange(3)), rng.randrange(n))
        out.append((anchor, edge))
    return out


def run_bench(
    ns: list[int],
    queries: int,
    seed: int,
    csv_out: Optional[TextIO] = None,
) -> list[BenchReport]:
    """Time both branches on identical query streams, one report per n.

    Raises UnsupportedRangeError if any n is below the formula domain and
    VerificationError if the branches ever disagree.
    """
    for n in ns:
        if n < FORMULA_MIN_N:
            raise UnsupportedRangeError(
                f"bench requires the formula branch, i.e. n >= {FORMULA_MIN_N}; got {n}"
            )
    writer = csv.writer(csv_out) if csv_out is not None else None
    if writer is not None:
        writer.writerow(
            ["n", "query", "anchor", "edge", "value_formula", "value_bfs",
             "ns_formula", "ns_bfs"]
        )
    reports = []
    for n in ns:
        g = GPGraph(n, 3)
        ctx = context(n)
        stream = generate_queries(n, queries, seed)
        # warm both branches (jit compilation, caches) outside the timed region
        closed_vertex_edge_distance(ctx, g.u(0), g.outer_arc(1))
        bfs_vertex_edge_distance(g, g.u(0), g.outer_arc(1))
        total_f = 0
        total_b = 0
        for idx, (anchor, edge) in enumerate(stream):
            t0 = time.perf_counter_ns()
            val_f = closed_vertex_edge_distance(ctx, anchor, edge)
            t1 = time.perf_counter_ns()
            val_b = bfs_vertex_edge_distance(g, anchor, edge)
            t2 = time.perf_counter_ns()
            if val_f != val_b:
                raise VerificationError(
                    f"branch disagreement at n={n}, query {idx}: "
                    f"d({anchor.name}, {edge.name}) formula={val_f} bfs={val_b}"
                )
            total_f += t1 - t0
            total_b += t2 - t1
            if writer is not None:
                writer.writerow(
                    [n, idx, anchor.name, edge.name, val_f, val_b, t1 - t0, t2 - t1]
                )
        reports.append(
            BenchReport(
                n=n,
                queries=queries,
                mean_ns_formula=total_f / queries,
                mean_ns_bfs=total_b / queries,
            )
        )
    return reports
