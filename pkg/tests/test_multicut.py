import pytest

from planarcut.generators import gen_chain, gen_grid, gen_mcc, gen_star, grid_graph
from planarcut.instances import MCCInstance, MinMCInstance
from planarcut.multicut import (
    BudgetExceeded,
    SolverOptions,
    SolveStats,
    restrict_clusters,
    solve_mcc,
    solve_mcc_exact,
    solve_minmc,
    solve_partial_minmc,
    verify,
)
from planarcut.oracle import brute_force, brute_force_partial
from planarcut.pipeline import solve_raw

from suites import minmc_suite, square


def test_chain_k3():
    sol = solve_minmc(gen_chain(3))
    assert sol.total_weight == 3
    assert sol.components.component_count == 4
    assert sol.sorted_edges == (0, 2, 4)


def test_star_two_pairs():
    assert solve_minmc(gen_star(2)).total_weight == 2


def test_c4_single_pair():
    assert solve_minmc(MinMCInstance(square(), ((0, 2),))).total_weight == 2


def test_no_pairs_gives_empty_cut():
    sol = solve_minmc(MinMCInstance(square(), ()))
    assert sol.total_weight == 0 and not sol.cut_edges


def test_chain_with_heavier_pair_edges():
    inst = gen_chain(2, [5, 1, 5])
    assert solve_minmc(inst).total_weight == brute_force(inst).total_weight == 10


def test_mcc_examples():
    assert solve_mcc(MCCInstance(square(), ((0,), (2,)))).total_weight == 2
    one = solve_mcc(MCCInstance(square(), ((0, 2),)))
    assert one.total_weight == 0 and not one.cut_edges
    chain = gen_chain(2).graph
    sol = solve_mcc(MCCInstance(chain, ((0,), (1, 2), (3,))))
    assert sol.total_weight == 2


def test_mcc_exact_matches_oracle():
    g = grid_graph(3, 3, [1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3])
    for seed in range(12):
        inst = gen_mcc(g, [2, 1, 2] if seed % 2 else [1, 2], seed)
        assert solve_mcc_exact(inst).total_weight == brute_force(inst).total_weight


def test_restrict_clusters():
    clusters = ((0, 1), (2,), (3, 4))
    assert restrict_clusters(clusters, range(5)) == clusters
    assert restrict_clusters(clusters, [0, 1, 3, 4]) == ((0, 1), (3, 4))
    assert restrict_clusters(clusters, [0, 2, 3]) == ((0,), (2,), (3,))
    assert restrict_clusters(clusters, [1, 4]) == ((1,), (4,))


def test_verify_examples():
    inst = gen_chain(1)
    assert verify(inst, [0]).feasible
    bad = verify(inst, [])
    assert not bad.feasible and "pair 1" in bad.violations[0]
    star = gen_star(2)
    res = verify(star, [0])
    assert not res.feasible
    assert len(res.violations) == 1 and res.violations[0].startswith("pair 2")


def test_partial_examples():
    chain = gen_chain(2)
    assert solve_partial_minmc(chain, 0).total_weight == 0
    assert solve_partial_minmc(chain, 1).total_weight == 1
    assert solve_partial_minmc(chain, 2).key() == solve_minmc(chain).key()
    with pytest.raises(ValueError):
        solve_partial_minmc(chain, 3)


def test_partial_matches_oracle_on_grid():
    inst = gen_grid(3, 3, 3, seed=4, weight_range=(1, 5))
    assert solve_partial_minmc(inst, 2).total_weight == brute_force_partial(inst, 2).total_weight


@pytest.mark.parametrize("options", [SolverOptions(noncrossing_prune=False), SolverOptions(memoize=True),
                                     SolverOptions(workers=2)])
def test_options_agree_with_default(options):
    for inst in minmc_suite(15, seed=11):
        assert solve_minmc(inst, options).key() == solve_minmc(inst).key()


def test_tie_break_is_smallest_sorted_ids():
    # every weight-2 pair of opposite edges is optimal; the oracle's tie-break picks the smallest ids
    inst = MinMCInstance(square(), ((0, 2),))
    assert solve_minmc(inst).key() == brute_force(inst).key()


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        solve_minmc(gen_chain(3), SolverOptions(budget=10))
    assert solve_minmc(gen_chain(3), SolverOptions(budget=10_000)).total_weight == 3


def test_zero_weights_are_handled():
    g = grid_graph(2, 3, [0, 1, 0, 2, 1, 0, 3])
    inst = MinMCInstance(g, ((0, 5), (2, 3)))
    sol = solve_minmc(inst)
    assert sol.total_weight == brute_force(inst).total_weight
    assert verify(inst, sol.cut_edges).feasible


def test_stats_count_work_and_no_heavy_edges():
    stats = SolveStats()
    solve_minmc(gen_grid(3, 3, 2, seed=3), stats=stats)
    assert stats.clusterings > 0 and stats.mtc_calls > 0
    assert stats.heavy_edges_cut == 0


def test_raw_pipeline_on_parallel_edges():
    from planarcut.graph import PlanarGraph

    # triangle 0,1,2 with a second copy of edge 0-1
    g = PlanarGraph.build(3, [(0, 0, 1, 1), (1, 1, 2, 1), (2, 2, 0, 1), (3, 0, 1, 2)],
                          [(0, 3, 2), (1, 3, 0), (2, 1)], (0, 0))
    res = solve_raw(MinMCInstance(g, ((0, 1),)))
    assert res.verification.feasible
    assert res.solution.total_weight == 4
    assert res.solution.cut_edges == {0, 3, 1} or res.solution.cut_edges == {0, 3, 2}
