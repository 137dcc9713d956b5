import itertools

import pytest

from planarcut.graph import build_dual
from planarcut.mtc import (
    InfeasibleStructure,
    MTCInstance,
    build_cluster_gadget,
    gap_distances,
    solve_mtc_outer,
    split_outer_dual,
)
from planarcut.oracle import brute_force

from suites import square, triangle


def _gap_degrees(gg):
    deg = [0] * gg.gap_count
    for a, b in gg.endpoints.values():
        for x in (a, b):
            if x < gg.gap_count:
                deg[x] += 1
    return deg


def test_split_c4_two_terminals():
    gg = split_outer_dual(square(), [0, 2])
    assert gg.gap_count == 2
    assert _gap_degrees(gg) == [2, 2]


def test_split_one_terminal_merges_back():
    g = square()
    d = build_dual(g)
    gg = split_outer_dual(g, [0], d)
    assert gg.gap_count == 1
    assert gg.merge().endpoints == d.endpoints


def test_split_triangle_three_terminals():
    g = triangle()
    gg = split_outer_dual(g, g.boundary_vertices)
    assert gg.gap_count == 3
    assert _gap_degrees(gg) == [1, 1, 1]


def test_gap_distance_unit_c4():
    d = gap_distances(split_outer_dual(square(), [0, 2])).dist
    assert d[0][1] == d[1][0] == 2
    assert d[0][0] == 0


def test_gap_distance_single_gap():
    assert gap_distances(split_outer_dual(square(), [1])).dist == [[0]]


@pytest.mark.parametrize("weights", [(1, 5, 1, 5), (1, 1, 5, 5), (5, 1, 1, 5)])
def test_gap_distance_equals_min_cut(weights):
    # a gap-to-gap dual path crosses one edge on each side of v0 ... v2
    g = square(weights)
    d = gap_distances(split_outer_dual(g, [0, 2])).dist
    assert d[0][1] == brute_force(MTCInstance(g, (0, 2))).total_weight
    assert d[0][1] == min(weights[0], weights[1]) + min(weights[2], weights[3])


def test_mtc_single_terminal():
    sol = solve_mtc_outer(MTCInstance(triangle(), (0,)))
    assert sol.total_weight == 0 and not sol.cut_edges


def test_mtc_weighted_triangle():
    sol = solve_mtc_outer(MTCInstance(triangle((1, 2, 3)), (0, 1, 2)))
    assert sol.total_weight == 6
    assert sol.cut_edges == {0, 1, 2}


def test_mtc_c4_opposite_terminals():
    inst = MTCInstance(square(), (0, 2))
    sol = solve_mtc_outer(inst)
    assert sol.total_weight == 2
    assert sol.components.component_of[0] != sol.components.component_of[2]


def test_mtc_c4_exhaustive_weightings():
    for ws in itertools.product((1, 3), repeat=4):
        for terms in ((0, 2), (0, 1), (0, 1, 2), (0, 1, 2, 3)):
            inst = MTCInstance(square(ws, chord=True), terms)
            assert solve_mtc_outer(inst).total_weight == brute_force(inst).total_weight


def test_gadget_singletons_leave_graph_unchanged():
    g = square()
    gad = build_cluster_gadget(g, [(0,), (2,)])
    assert gad.graph.edges == g.edges
    assert gad.terminals == (0, 2)
    assert not gad.heavy


def test_gadget_two_pair_clusters_on_c4():
    g = square()
    gad = build_cluster_gadget(g, [(0, 1), (2, 3)])
    assert gad.graph.vertex_count == g.vertex_count + 2
    assert len(gad.heavy) == 4
    assert all(gad.graph.edge[e].w == gad.heavy_weight for e in gad.heavy)
    gad.graph.faces  # noqa: B018 - planarity through the Euler check
    boundary = set(gad.graph.boundary_vertices)
    assert set(gad.terminals) <= boundary
    assert all(t >= g.vertex_count for t in gad.terminals)


def test_gadget_rejects_interleaved_clusters():
    with pytest.raises(InfeasibleStructure):
        build_cluster_gadget(square(), [(0, 2), (1, 3)])


def test_gadget_cut_never_uses_heavy_edges():
    from planarcut.mtc import mtc_cut_biconnected

    g = square((2, 1, 2, 1), chord=True)
    gad = build_cluster_gadget(g, [(0, 1), (2, 3)])
    cut = mtc_cut_biconnected(gad.graph, list(gad.terminals))
    assert not cut & gad.heavy


def test_mtc_adding_terminal_never_lowers_weight():
    g = square((1, 2, 3, 4), chord=True)
    prev = 0
    for terms in ((0,), (0, 1), (0, 1, 2), (0, 1, 2, 3)):
        w = solve_mtc_outer(MTCInstance(g, terms)).total_weight
        assert w >= prev
        prev = w
