import random

import pytest

from planarcut.generators import gen_chain, gen_grid, gen_mcc, grid_graph
from planarcut.graph import PlanarGraph
from planarcut.instances import MCCInstance, MinMCInstance
from planarcut.oracle import (
    OracleCapExceeded,
    brute_force,
    brute_force_mcc,
    check_structure,
    max_cluster_optimum,
    max_flow_value,
)

from suites import square, triangle


def relabel(graph: PlanarGraph, perm: list[int]) -> PlanarGraph:
    """Same embedding with vertex ``v`` renamed ``perm[v]``."""
    edges = [(e.id, perm[e.u], perm[e.v], e.w) for e in graph.edges]
    rotation = [()] * graph.vertex_count
    for v, r in enumerate(graph.rotation):
        rotation[perm[v]] = r
    eid, tail = graph.outer
    return PlanarGraph.build(graph.vertex_count, edges, rotation, (eid, perm[tail]))


def test_mcc_triangle_singletons():
    sol = brute_force_mcc(MCCInstance(triangle((1, 2, 3)), ((0,), (1,), (2,))))
    assert sol.total_weight == 6 and sol.cut_edges == {0, 1, 2}


def test_mcc_c4_and_single_cluster():
    assert brute_force_mcc(MCCInstance(square(), ((0,), (2,)))).total_weight == 2
    sol = brute_force_mcc(MCCInstance(square(), ((0, 1, 2),)))
    assert sol.total_weight == 0 and not sol.cut_edges


def test_two_clusters_match_max_flow():
    g = grid_graph(3, 3, [3, 1, 4, 1, 5, 2, 6, 5, 3, 5, 2, 1])
    for seed in range(10):
        inst = gen_mcc(g, [1 + seed % 2, 2], seed)
        assert brute_force_mcc(inst).total_weight == max_flow_value(inst)


def test_cap_exceeded():
    with pytest.raises(OracleCapExceeded):
        brute_force(gen_grid(5, 5, 1, seed=0))


def test_max_cluster_examples():
    sol = max_cluster_optimum(gen_chain(2))
    assert sol.total_weight == 2 and sol.components.component_count == 3
    sol = max_cluster_optimum(MinMCInstance(square(), ((0, 2),)))
    assert sol.total_weight == 2 and sol.components.component_count == 2
    sol = max_cluster_optimum(MinMCInstance(square(), ()))
    assert sol.components.component_count == 1


def test_relabeling_keeps_the_optimum():
    rng = random.Random(3)
    for seed in range(8):
        inst = gen_grid(3, 3, 2, seed=seed, weight_range=(1, 5))
        perm = list(range(9))
        rng.shuffle(perm)
        moved = MinMCInstance(relabel(inst.graph, perm), tuple((perm[s], perm[t]) for s, t in inst.pairs))
        assert brute_force(moved).total_weight == brute_force(inst).total_weight


def test_structure_of_chain_is_consistent():
    inst = gen_chain(3)
    rep = check_structure(inst, brute_force(inst))
    assert rep.outer_cycles_ok and rep.nesting_ok
    assert not rep.violations


def test_structure_of_c4_optimum():
    inst = MinMCInstance(square(), ((0, 2),))
    rep = check_structure(inst, brute_force(inst))
    assert rep.outer_cycles_ok
    outer = rep.outer_dual_vertex
    for comp in rep.components:
        assert len(comp.cycles) == 1
        assert outer in comp.cycle_vertices[0]


def test_interior_cycle_is_flagged():
    g = grid_graph(3, 3)
    inst = MinMCInstance(g, ((0, 8),))
    around_centre = [e.id for e in g.edges if 4 in (e.u, e.v)]
    rep = check_structure(inst, around_centre)
    assert not rep.through_outer
    assert not rep.outer_cycles_ok
    assert any("avoids the outer dual vertex" in v for v in rep.violations)
