"""Distances: BFS oracle, closed forms, dispatcher, directional structure.

The exhaustive formula-vs-oracle sweeps over 13 <= n <= 300 live in
test_acceptance.py; here the same equivalences are exercised on sampled
sizes together with the pinned example values.
"""

import pytest
from hypothesis import given, settings, strategies as st

from gpedim import (
    FORMULA_MIN_N,
    GPGraph,
    GraphParameterError,
    Layer,
    Orientation,
    UnsupportedRangeError,
    bfs_all_vertex_distances,
    bfs_vertex_distance,
    bfs_vertex_edge_distance,
    closed_vertex_distance,
    closed_vertex_edge_distance,
    context,
    decomp3,
    directional_distance,
    directional_distances,
    distance,
    undeviating_counterexample,
)
from gpedim.distance import dispatch_edge_rows, oracle_edge_rows

SAMPLE_NS = (13, 14, 15, 16, 17, 18, 19, 20, 24, 29, 60, 61, 100, 101)


def vid(g, w):
    return w.index if w.layer is Layer.OUTER else g.n + w.index


def oracle_edge_distance(g, vec, e):
    a, b = g.incident_vertices(e)
    return min(vec[vid(g, a)], vec[vid(g, b)])


# -- residue bookkeeping ------------------------------------------------------


def test_decomp3_examples():
    assert decomp3(20) == (6, 2)
    assert decomp3(0) == (0, 0)
    assert decomp3(100) == (33, 1)
    with pytest.raises(GraphParameterError):
        decomp3(-1)


@pytest.mark.parametrize("n", SAMPLE_NS)
def test_residue_context_invariants(n):
    ctx = context(n)
    assert 3 * ctx.qn + ctx.rn == n and 0 <= ctx.rn <= 2
    assert 6 * ctx.h + ctx.rn6 == n and 0 <= ctx.rn6 <= 5
    assert ctx.mn < n // 2 and ctx.mn % 3 == n % 3
    assert ctx.mn == max(j for j in range(n // 2) if j % 3 == n % 3)


# -- BFS oracle ---------------------------------------------------------------


def test_bfs_vertex_distance_examples():
    assert bfs_vertex_distance(GPGraph(8, 3), GPGraph(8, 3).u(0), GPGraph(8, 3).v(0)) == 1
    g = GPGraph(20, 3)
    assert bfs_vertex_distance(g, g.u(0), g.u(6)) == 4
    g17 = GPGraph(17, 3)
    assert bfs_vertex_distance(g17, g17.u(0), g17.u(8)) == 5


def test_bfs_vertex_edge_distance_examples():
    g8 = GPGraph(8, 3)
    assert bfs_vertex_edge_distance(g8, g8.u(0), g8.outer_arc(0)) == 0
    g20 = GPGraph(20, 3)
    assert bfs_vertex_edge_distance(g20, g20.u(0), g20.outer_arc(5)) == 4
    g13 = GPGraph(13, 3)
    assert bfs_vertex_edge_distance(g13, g13.v(0), g13.spoke(3)) == 1


def test_bfs_distance_zero_iff_equal():
    g = GPGraph(9, 3)
    for w in g.vertices():
        assert bfs_vertex_distance(g, w, w) == 0
    assert bfs_vertex_distance(g, g.u(0), g.u(1)) > 0


@pytest.mark.parametrize("n", (13, 20, 37, 60))
def test_bfs_symmetry(n):
    # reflection d(p_0, w_i) = d(p_0, w_{-i}) and swap d(u_0, v_i) = d(v_0, u_i)
    g = GPGraph(n, 3)
    du = bfs_all_vertex_distances(g, g.u(0))
    dv = bfs_all_vertex_distances(g, g.v(0))
    for i in range(n):
        j = (-i) % n
        assert du[i] == du[j] and du[n + i] == du[n + j]
        assert dv[i] == dv[j] and dv[n + i] == dv[n + j]
        assert du[n + i] == dv[i]


@given(st.integers(7, 80), st.data())
@settings(max_examples=40, deadline=None)
def test_bfs_translation_identity(n, data):
    # rotation symmetry: d(w_t, e_j) = d(w_0, e_{j-t})
    g = GPGraph(n, 3)
    t = data.draw(st.integers(0, n - 1))
    layer = data.draw(st.sampled_from(list(Layer)))
    kind = data.draw(st.sampled_from(["outer_arc", "spoke", "inner_arc"]))
    j = data.draw(st.integers(0, n - 1))
    e = getattr(g, kind)(j)
    e0 = getattr(g, kind)(j - t)
    w_t = g.vertex(layer, t)
    w_0 = g.vertex(layer, 0)
    assert bfs_vertex_edge_distance(g, w_t, e) == bfs_vertex_edge_distance(g, w_0, e0)


# -- closed forms -------------------------------------------------------------


def test_closed_vertex_distance_examples():
    assert closed_vertex_distance(context(20), Layer.OUTER, GPGraph(20, 3).u(2)) == 2
    assert closed_vertex_distance(context(17), Layer.OUTER, GPGraph(17, 3).u(8)) == 5
    assert closed_vertex_distance(context(20), Layer.INNER, GPGraph(20, 3).v(6)) == 2


def test_closed_vertex_edge_distance_examples():
    g20 = GPGraph(20, 3)
    assert closed_vertex_edge_distance(context(20), g20.u(0), g20.outer_arc(0)) == 0
    assert closed_vertex_edge_distance(context(20), g20.u(0), g20.outer_arc(5)) == 4
    g13 = GPGraph(13, 3)
    assert closed_vertex_edge_distance(context(13), g13.v(0), g13.spoke(3)) == 1


@pytest.mark.parametrize("n", SAMPLE_NS)
def test_closed_vertex_distance_matches_bfs(n):
    g = GPGraph(n, 3)
    du = bfs_all_vertex_distances(g, g.u(0))
    dv = bfs_all_vertex_distances(g, g.v(0))
    ctx = context(n)
    for i in range(n):
        assert closed_vertex_distance(ctx, Layer.OUTER, g.u(i)) == du[i]
        assert closed_vertex_distance(ctx, Layer.OUTER, g.v(i)) == du[n + i]
        assert closed_vertex_distance(ctx, Layer.INNER, g.u(i)) == dv[i]
        assert closed_vertex_distance(ctx, Layer.INNER, g.v(i)) == dv[n + i]


@pytest.mark.parametrize("n", SAMPLE_NS)
def test_closed_vertex_edge_distance_matches_bfs(n):
    g = GPGraph(n, 3)
    ctx = context(n)
    for t in (0, 1, n // 3):
        for layer in Layer:
            anchor = g.vertex(layer, t)
            vec = bfs_all_vertex_distances(g, anchor)
            for e in g.edges():
                assert closed_vertex_edge_distance(ctx, anchor, e) == oracle_edge_distance(
                    g, vec, e
                ), (n, anchor.name, e.name)


def test_closed_forms_refuse_small_n():
    g = GPGraph(12, 3)
    with pytest.raises(UnsupportedRangeError):
        closed_vertex_distance(context(12), Layer.OUTER, g.u(3))
    with pytest.raises(UnsupportedRangeError):
        closed_vertex_edge_distance(context(12), g.u(0), g.outer_arc(3))


# -- dispatcher ---------------------------------------------------------------


@pytest.mark.parametrize("n,k", [(8, 3), (12, 3), (13, 3), (20, 3), (20, 7)])
def test_dispatcher_equals_bfs(n, k):
    g = GPGraph(n, k)
    for t in (0, n // 2):
        for layer in Layer:
            anchor = g.vertex(layer, t)
            vec = bfs_all_vertex_distances(g, anchor)
            for e in g.edges():
                assert distance(g, anchor, e) == oracle_edge_distance(g, vec, e)


def test_dispatcher_huge_n_formula_branch():
    g = GPGraph(10**5, 3)
    assert distance(g, g.u(0), g.outer_arc(1)) == 1
    assert distance(g, g.u(0), g.spoke(0)) == 0


@given(st.integers(FORMULA_MIN_N, 400), st.data())
@settings(max_examples=60, deadline=None)
def test_consecutive_outer_edges_lipschitz(n, data):
    # consecutive outer arcs share a vertex, so distances differ by <= 1
    g = GPGraph(n, 3)
    t = data.draw(st.integers(0, n - 1))
    layer = data.draw(st.sampled_from(list(Layer)))
    i = data.draw(st.integers(0, n - 1))
    x = g.vertex(layer, t)
    d1 = distance(g, x, g.outer_arc(i))
    d2 = distance(g, x, g.outer_arc(i + 1))
    assert abs(d1 - d2) <= 1


# -- directional structure ------------------------------------------------------


def test_directional_distance_examples():
    g = GPGraph(20, 3)
    assert directional_distance(g, g.u(0), g.v(7), Orientation.CLOCKWISE) == 4
    assert directional_distance(g, g.u(0), g.u(6), Orientation.CLOCKWISE) == 4
    assert directional_distance(g, g.v(0), g.v(6), Orientation.CLOCKWISE) == 2


def _one_sided_length(n, endpoint, i, clockwise):
    # reference one-sided lengths on the domain 3 <= i <= n-3
    qn, rn = divmod(n, 3)
    qi, ri = divmod(i, 3)
    r = 0 if (rn, ri) == (0, 2) else abs(rn - ri)
    if endpoint == "uu":
        return qi + ri + 2 if clockwise else qn - qi + r + 2
    if endpoint == "uv":
        return qi + ri + 1 if clockwise else qn - qi + r + 1
    if clockwise:
        return qi if ri == 0 else qi + ri + 2
    qm, rm = divmod(n - i, 3)
    return qm if rn == ri else qm + rm + 2


@pytest.mark.parametrize("n", (14, 20, 33, 47))
def test_directional_distance_matches_one_sided_lengths(n):
    g = GPGraph(n, 3)
    cw_u = directional_distances(g, g.u(0), Orientation.CLOCKWISE)
    ccw_u = directional_distances(g, g.u(0), Orientation.COUNTERCLOCKWISE)
    cw_v = directional_distances(g, g.v(0), Orientation.CLOCKWISE)
    ccw_v = directional_distances(g, g.v(0), Orientation.COUNTERCLOCKWISE)
    for i in range(3, n - 2):
        assert cw_u[i] == _one_sided_length(n, "uu", i, True)
        assert ccw_u[i] == _one_sided_length(n, "uu", i, False)
        assert cw_u[n + i] == _one_sided_length(n, "uv", i, True)
        assert ccw_u[n + i] == _one_sided_length(n, "uv", i, False)
        assert cw_v[n + i] == _one_sided_length(n, "vv", i, True)
        assert ccw_v[n + i] == _one_sided_length(n, "vv", i, False)


def test_restricted_search_can_exhaust_under_spoke_cap():
    g = GPGraph(20, 3)
    assert directional_distance(g, g.u(0), g.v(1), Orientation.CLOCKWISE, max_spokes=0) is None


@pytest.mark.parametrize("n", (13, 18, 25))
def test_undeviating_structure_sampled(n):
    assert undeviating_counterexample(GPGraph(n, 3)) is None


# -- rows and the compiled kernel ----------------------------------------------


@pytest.mark.parametrize("n,k", [(11, 3), (13, 3), (20, 3), (40, 5)])
def test_dispatch_rows_equal_oracle_rows(n, k):
    assert dispatch_edge_rows(n, k) == oracle_edge_rows(n, k)


def test_fast_bfs_kernel_matches_pure_python():
    from gpedim import _fastbfs
    from gpedim.distance import _bfs_to_targets, _edge_vids, _vid
    from gpedim import EdgeKind

    if not _fastbfs.available():
        pytest.skip("numba unavailable")
    import random

    n = 4000
    g = GPGraph(n, 3)
    rng = random.Random(7)
    for _ in range(40):
        anchor = g.vertex(Layer(rng.randrange(2)), rng.randrange(n))
        e = g.edge(EdgeKind(rng.randrange(3)), rng.randrange(n))
        a, b = _edge_vids(g, e)
        pure = _bfs_to_targets(g, _vid(g, anchor), frozenset((a, b)))
        assert _fastbfs.edge_distance(n, 3, _vid(g, anchor), a, b) == pure
