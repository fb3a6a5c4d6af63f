"""Distances in P(n, k): BFS ground truth and closed forms for k = 3.

Two routes to every distance:

* BFS over the arithmetic adjacency (works for every P(n, k), O(n) per
  query) — the ground-truth oracle.
* Closed forms for P(n, 3) with n >= 13 (O(1) per query), derived from the
  structure of shortest paths, which never change rotational direction and
  use at most two spokes.

:func:`distance` dispatches between the two; the choice is observable only
through timing.  Anchors other than u_0 / v_0 are always handled by the
rotation symmetry d(w_t, e_j) = d(w_0, e_{j-t}), never by separate
formulas.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import ceil
from typing import NamedTuple, Optional, Sequence

from .errors import GraphParameterError, UnsupportedRangeError
from .graph import Edge, EdgeKind, GPGraph, Layer, Vertex

#: Smallest n for which the closed forms are valid for P(n, 3).
FORMULA_MIN_N = 13

#: Smallest n at which BFS queries switch to the compiled kernel.
FAST_BFS_MIN_N = 3000


class Orientation(Enum):
    """Rotational direction of cycle arcs; spokes are direction-neutral.

    Clockwise arcs are exactly u_j -> u_{j+1} and v_j -> v_{j+k}.
    """

    CLOCKWISE = "clockwise"
    COUNTERCLOCKWISE = "counterclockwise"


class ResidueDecomp(NamedTuple):
    """m = 3q + r with r in {0, 1, 2}."""

    q: int
    r: int


def decomp3(m: int) -> ResidueDecomp:
    """Quotient/residue of m under division by 3; m must be >= 0."""
    if m < 0:
        raise GraphParameterError(f"decomp3 requires m >= 0, got {m}")
    return ResidueDecomp(*divmod(m, 3))


@dataclass(frozen=True)
class ResidueContext:
    """Modular bookkeeping for n used by all closed forms.

    Attributes:
        n: cycle length.
        qn, rn: n = 3*qn + rn.
        rn6: n mod 6.
        h: n = 6*h + rn6.
        mn: largest index below floor(n/2) with the same residue mod 3 as n.
    """

    n: int
    qn: int
    rn: int
    rn6: int
    h: int
    mn: int

    @classmethod
    def for_n(cls, n: int) -> "ResidueContext":
        if n < 3:
            raise GraphParameterError(f"n must be >= 3, got {n}")
        qn, rn = divmod(n, 3)
        h, rn6 = divmod(n, 6)
        # an admissible index exists for every n >= 6 (and n in {3, 4});
        # nothing below the n >= 13 formula gate ever reads mn
        mn = n // 2 - 1
        while mn % 3 != rn:
            mn -= 1
        return cls(n=n, qn=qn, rn=rn, rn6=rn6, h=h, mn=mn)


@lru_cache(maxsize=256)
def context(n: int) -> ResidueContext:
    return ResidueContext.for_n(n)


# ---------------------------------------------------------------------------
# BFS oracles
# ---------------------------------------------------------------------------
# Vertices are encoded as integers: u_i -> i, v_i -> n + i.


def _vid(g: GPGraph, w: Vertex) -> int:
    i = w.index % g.n
    return i if w.layer is Layer.OUTER else g.n + i


def _edge_vids(g: GPGraph, e: Edge) -> tuple[int, int]:
    n, i = g.n, e.index % g.n
    if e.kind is EdgeKind.OUTER_ARC:
        return i, (i + 1) % n
    if e.kind is EdgeKind.INNER_ARC:
        return n + i, n + (i + g.k) % n
    return i, n + i


def bfs_all_vertex_distances(g: GPGraph, x: Vertex) -> list[int]:
    """Distances from x to every vertex, indexed u_0..u_{n-1}, v_0..v_{n-1}."""
    n, k = g.n, g.k
    dist = [-1] * (2 * n)
    src = _vid(g, x)
    dist[src] = 0
    frontier = deque((src,))
    while frontier:
        a = frontier.popleft()
        d = dist[a] + 1
        if a < n:
            nbrs = ((a + 1) % n, (a - 1) % n, n + a)
        else:
            i = a - n
            nbrs = (n + (i + k) % n, n + (i - k) % n, i)
        for b in nbrs:
            if dist[b] < 0:
                dist[b] = d
                frontier.append(b)
    return dist


def _bfs_to_targets(g: GPGraph, src: int, targets: frozenset[int]) -> int:
    """Length of a shortest path from src to the nearest of `targets`."""
    if src in targets:
        return 0
    n, k = g.n, g.k
    dist = [-1] * (2 * n)
    dist[src] = 0
    frontier = deque((src,))
    while frontier:
        a = frontier.popleft()
        d = dist[a] + 1
        if a < n:
            nbrs = ((a + 1) % n, (a - 1) % n, n + a)
        else:
            i = a - n
            nbrs = (n + (i + k) % n, n + (i - k) % n, i)
        for b in nbrs:
            if dist[b] < 0:
                if b in targets:
                    return d
                dist[b] = d
                frontier.append(b)
    raise AssertionError("P(n, k) is connected; target must be reachable")


def bfs_vertex_distance(g: GPGraph, x: Vertex, y: Vertex) -> int:
    """Shortest-path length between two vertices (BFS with early exit)."""
    return _bfs_to_targets(g, _vid(g, x), frozenset((_vid(g, y),)))


def bfs_vertex_edge_distance(g: GPGraph, x: Vertex, e: Edge) -> int:
    """min over the endpoints of e of the BFS distance from x.

    BFS reaches the nearer endpoint first, so the search stops at the
    first endpoint it touches.  Large graphs use a compiled kernel with
    the identical frontier algorithm.
    """
    a, b = _edge_vids(g, e)
    if g.n >= FAST_BFS_MIN_N:
        from . import _fastbfs

        if _fastbfs.available():
            return _fastbfs.edge_distance(g.n, g.k, _vid(g, x), a, b)
    return _bfs_to_targets(g, _vid(g, x), frozenset((a, b)))


# ---------------------------------------------------------------------------
# Orientation-restricted search
# ---------------------------------------------------------------------------


def directional_distances(
    g: GPGraph,
    x: Vertex,
    orientation: Orientation,
    max_spokes: Optional[int] = None,
) -> list[Optional[int]]:
    """Shortest lengths from x to every vertex using arcs of one orientation.

    Cycle steps must all follow `orientation`; spokes may be used freely
    unless `max_spokes` caps how many.  Entries are None where the
    restricted search exhausts without reaching the vertex.
    """
    n, k = g.n, g.k
    cap = 2 * n if max_spokes is None else max_spokes
    if cap < 0:
        raise GraphParameterError("max_spokes must be >= 0")
    cw = orientation is Orientation.CLOCKWISE
    size = 2 * n
    # state = vertex id + size * spokes_used
    dist = [-1] * (size * (cap + 1))
    best: list[Optional[int]] = [None] * size
    src = _vid(g, x)
    dist[src] = 0
    frontier = deque((src,))
    while frontier:
        s = frontier.popleft()
        a, used = s % size, s // size
        if best[a] is None:
            best[a] = dist[s]
        d = dist[s] + 1
        if a < n:
            steps = (((a + 1) % n if cw else (a - 1) % n, used), (n + a, used + 1))
        else:
            i = a - n
            steps = ((n + ((i + k) % n if cw else (i - k) % n), used), (i, used + 1))
        for b, used2 in steps:
            if used2 > cap:
                continue
            s2 = b + size * used2
            if dist[s2] < 0:
                dist[s2] = d
                frontier.append(s2)
    return best


def directional_distance(
    g: GPGraph,
    x: Vertex,
    y: Vertex,
    orientation: Orientation,
    max_spokes: Optional[int] = None,
) -> Optional[int]:
    """Shortest length among paths whose cycle steps all follow `orientation`.

    Returns None only if the restricted search exhausts (possible only
    under a `max_spokes` cap).
    """
    return directional_distances(g, x, orientation, max_spokes)[_vid(g, y)]


# ---------------------------------------------------------------------------
# Closed forms for P(n, 3), n >= 13
# ---------------------------------------------------------------------------


def _require_formula_domain(ctx: ResidueContext) -> None:
    if ctx.n < FORMULA_MIN_N:
        raise UnsupportedRangeError(
            f"closed forms require n >= {FORMULA_MIN_N}, got n={ctx.n}; "
            "use the BFS oracle (or the distance() dispatcher) below that"
        )


def _d_u0_u(ctx: ResidueContext, i: int) -> int:
    # d(u_0, u_i) for 0 <= i <= n/2
    q, r = divmod(i, 3)
    if i <= 2:
        return q + r
    if ctx.rn6 == 5 and i == ctx.n // 2:
        return q + r + 1
    return q + r + 2


def _d_u0_v(ctx: ResidueContext, i: int) -> int:
    # d(u_0, v_i) for 0 <= i <= n/2; also equals d(v_0, u_i)
    q, r = divmod(i, 3)
    if ctx.rn6 == 5 and i == ctx.n // 2:
        return q + r
    return q + r + 1


def _d_v0_v(ctx: ResidueContext, i: int) -> int:
    # d(v_0, v_i) for 0 <= i <= n/2
    q, r = divmod(i, 3)
    if ctx.rn6 == 5 and i == ctx.n // 2:
        return q + r - 1
    if r == 0 or (ctx.rn6 in (2, 4) and i == ctx.mn):
        return q + r
    if ctx.rn6 in (1, 5) and i == ctx.mn:
        return q + r + 1
    return q + r + 2


def closed_vertex_distance(ctx: ResidueContext, anchor: Layer, target: Vertex) -> int:
    """Closed-form d(anchor_0, target) in P(n, 3), n >= 13.

    `anchor` selects u_0 (OUTER) or v_0 (INNER).  The case formulas cover
    0 <= i <= floor(n/2); larger indices reduce through the reflection
    d(w_0, p_i) = d(w_0, p_{-i}), and the inner-to-outer case through the
    swap d(v_0, u_i) = d(u_0, v_i).
    """
    _require_formula_domain(ctx)
    n = ctx.n
    i = target.index % n
    i = min(i, n - i)
    if anchor is Layer.OUTER:
        return _d_u0_u(ctx, i) if target.layer is Layer.OUTER else _d_u0_v(ctx, i)
    if target.layer is Layer.OUTER:
        return _d_u0_v(ctx, i)
    return _d_v0_v(ctx, i)


def _u0_edge(ctx: ResidueContext, kind: EdgeKind, i: int) -> int:
    # d(u_0, e_i^kind) for 0 <= i <= n-1
    n, qn, rn = ctx.n, ctx.qn, ctx.rn
    qi, ri = divmod(i, 3)
    r = 0 if (rn, ri) == (0, 2) else abs(rn - ri)
    if kind is EdgeKind.OUTER_ARC:
        if i <= 2 or i >= n - 3:
            return min(i, n - 1 - i)
        return min(ceil(i / 3) + 2, ceil((n - i - 1) / 3) + 2)
    if kind is EdgeKind.SPOKE:
        if i <= 2 or i >= n - 2:
            return min(i, n - i)
        return min(qi + ri + 1, qn - qi + r + 1)
    if i <= 1 or i == n - 1:
        return min(i + 1, n - i + 1)
    return min(qi + ri + 1, qn - qi + r)


def _v0_edge(ctx: ResidueContext, kind: EdgeKind, i: int) -> int:
    # d(v_0, e_i^kind) for 0 <= i <= n-1.  The outer-arc row is a direct
    # two-case formula; spokes and inner arcs are evaluated as the minimum
    # of the two endpoint distances, which keeps every branch exact over
    # the full index range (a direct case table for these two rows drifts
    # by 1 near the reflection midpoint).
    n, qn, rn = ctx.n, ctx.qn, ctx.rn
    if kind is EdgeKind.OUTER_ARC:
        qi, ri = divmod(i, 3)
        if ri == 0 or (rn, ri) == (0, 2):
            return min(qi + ri // 2 + 1, qn - qi + rn // 2 - ri // 2 + 1)
        return min(qi + 2, qn - qi + 1)
    if kind is EdgeKind.SPOKE:
        j = min(i, n - i)
        return min(_d_u0_v(ctx, j), _d_v0_v(ctx, j))
    j1 = min(i, n - i)
    j2 = (i + 3) % n
    j2 = min(j2, n - j2)
    return min(_d_v0_v(ctx, j1), _d_v0_v(ctx, j2))


def closed_vertex_edge_distance(ctx: ResidueContext, anchor: Vertex, e: Edge) -> int:
    """Closed-form d(anchor, e) in P(n, 3), n >= 13.

    The anchor is first translated to index 0 by the rotation symmetry
    d(w_t, e_j) = d(w_0, e_{j-t}); the six per-(layer, kind) formulas are
    then evaluated at the shifted index.
    """
    _require_formula_domain(ctx)
    j = (e.index - anchor.index) % ctx.n
    if anchor.layer is Layer.OUTER:
        return _u0_edge(ctx, e.kind, j)
    return _v0_edge(ctx, e.kind, j)


def distance(g: GPGraph, x: Vertex, e: Edge) -> int:
    """Vertex-to-edge distance; closed form when k = 3 and n >= 13, else BFS."""
    if g.k == 3 and g.n >= FORMULA_MIN_N:
        return closed_vertex_edge_distance(context(g.n), x, e)
    return bfs_vertex_edge_distance(g, x, e)


def undeviating_counterexample(g: GPGraph) -> Optional[tuple[Vertex, Vertex]]:
    """First vertex pair (if any) violating the undeviating-path structure.

    For every ordered pair (x, y) this checks that the BFS distance equals
    the better of the two orientation-restricted distances, and that it is
    already achieved by an undeviating path using at most two spokes.
    Returns None when every pair passes.
    """
    all_vertices = list(g.vertices())
    for x in all_vertices:
        plain = bfs_all_vertex_distances(g, x)
        restricted = [
            (
                directional_distances(g, x, o),
                directional_distances(g, x, o, max_spokes=2),
            )
            for o in Orientation
        ]
        for vid, y in enumerate(all_vertices):
            want = plain[vid]
            free = min(d[0][vid] for d in restricted if d[0][vid] is not None)
            capped = min(
                (d[1][vid] for d in restricted if d[1][vid] is not None), default=None
            )
            if free != want or capped != want:
                return x, y
    return None


# ---------------------------------------------------------------------------
# Per-graph distance rows (internal)
# ---------------------------------------------------------------------------
# rows[layer][kind][i] = d(w_0, e_i^kind) with w = u for layer 0, v for
# layer 1.  Together with the rotation symmetry these answer every
# (anchor, edge) query with two array lookups; the resolving and sweep
# machinery is built on them.

Rows = tuple[tuple[Sequence[int], ...], ...]


def _rows_from_vectors(g: GPGraph, du: list[int], dv: list[int]) -> Rows:
    out = []
    for vec in (du, dv):
        per_kind = []
        for kind in EdgeKind:
            row = []
            for i in range(g.n):
                a, b = _edge_vids(g, Edge(kind, i))
                row.append(min(vec[a], vec[b]))
            per_kind.append(tuple(row))
        out.append(tuple(per_kind))
    return tuple(out)


@lru_cache(maxsize=32)
def oracle_edge_rows(n: int, k: int) -> Rows:
    """BFS-backed distance rows (pure oracle, no closed forms)."""
    g = GPGraph(n, k)
    du = bfs_all_vertex_distances(g, g.u(0))
    dv = bfs_all_vertex_distances(g, g.v(0))
    return _rows_from_vectors(g, du, dv)


@lru_cache(maxsize=32)
def dispatch_edge_rows(n: int, k: int) -> Rows:
    """Distance rows via the dispatcher: closed forms when applicable."""
    if k != 3 or n < FORMULA_MIN_N:
        return oracle_edge_rows(n, k)
    ctx = context(n)
    return tuple(
        tuple(
            tuple(fn(ctx, kind, i) for i in range(n))
            for kind in EdgeKind
        )
        for fn in (_u0_edge, _v0_edge)
    )
