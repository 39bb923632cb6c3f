from __future__ import annotations

import random

import pytest

from conftest import path, random_instance, singleton
from tempord.errors import BudgetExceeded
from tempord.instances import gen_family
from tempord.model import EdgeClassSystem, Instance, Objective, Ordering, TimeLists
from tempord.reach import decide, reachability_report
from tempord.solvers import Mode, solve, solve_brute_force
from tempord.solvers.brute import candidate_bound


@pytest.mark.parametrize("n", [5, 6, 7])
def test_path_optimum_is_four(n):
    result = solve_brute_force(singleton(path(n)), Mode.OPTIMISE)
    assert result.optimal_value == 4
    assert reachability_report(singleton(path(n)), result.witness).max_value == 4


@pytest.mark.slow
@pytest.mark.parametrize("n", [8, 9])
def test_path_optimum_is_four_long(n):
    assert solve_brute_force(singleton(path(n)), Mode.OPTIMISE).optimal_value == 4


def test_decision_on_p5():
    assert solve_brute_force(singleton(path(5), k=4)).decision
    result = solve_brute_force(singleton(path(5), k=3))
    assert not result.decision
    assert result.witness is None


def test_short_circuit_below_degree_bound():
    result = solve_brute_force(singleton(path(5), k=2))
    assert not result.decision
    assert result.stats.extra["short_circuit"] == "degree"
    assert result.stats.explored == 0


def test_optimum_stops_at_lower_bound(p3):
    result = solve_brute_force(p3, Mode.OPTIMISE)
    assert result.optimal_value == 3
    assert result.witness == Ordering((1, 2))
    assert result.stats.explored == 1


def test_lexicographically_smallest_witness():
    # P4 的最优值 3 要求中间边排在最后；字典序最小的是 (1,3,2)
    result = solve_brute_force(singleton(path(4)), Mode.OPTIMISE)
    assert result.optimal_value == 3
    assert result.witness == Ordering((1, 3, 2))


def test_maxmin_optimum(maxmin_p3):
    result = solve_brute_force(maxmin_p3, Mode.OPTIMISE)
    assert result.optimal_value == 2
    assert not result.decision
    assert solve_brute_force(maxmin_p3.with_k(2)).decision


def test_time_lists_restrict_candidates():
    inst = Instance(
        graph=path(3),
        classes=EdgeClassSystem.singletons(2),
        time_lists=TimeLists(((1,), (1, 2))),
        k=3,
    )
    assert candidate_bound(inst) == 2
    result = solve_brute_force(inst, Mode.OPTIMISE)
    assert result.optimal_value == 3
    assert result.witness == Ordering((1, 2))


def test_infeasible_time_lists():
    inst = Instance(
        graph=path(3),
        classes=EdgeClassSystem.singletons(2),
        time_lists=TimeLists(((1,), (1,))),
        k=3,
    )
    result = solve_brute_force(inst, Mode.OPTIMISE)
    assert not result.decision
    assert result.witness is None
    assert result.stats.extra["infeasible"]


def test_budget_exceeded_carries_partial_best():
    inst = singleton(path(6))
    with pytest.raises(BudgetExceeded) as err:
        solve_brute_force(inst, Mode.OPTIMISE, budget=10)
    assert err.value.bound == 120
    assert err.value.explored == 10
    best = err.value.best
    assert best is not None
    assert reachability_report(inst, best.witness).max_value == best.optimal_value


def test_parallel_matches_serial(p5):
    serial = solve_brute_force(p5, Mode.OPTIMISE)
    parallel = solve_brute_force(p5, Mode.OPTIMISE, workers=2)
    assert parallel == serial
    assert parallel.stats.extra["partitions"] == 4


def test_parallel_decision_matches_serial():
    inst = singleton(path(6), k=4)
    serial = solve_brute_force(inst)
    parallel = solve_brute_force(inst, workers=3)
    assert parallel.decision and serial.decision
    assert parallel.witness == serial.witness


@pytest.mark.slow
def test_parallel_matches_serial_on_random_instances():
    rng = random.Random(13)
    for _ in range(100):
        inst = random_instance(rng, max_n=5)
        mode = Mode.OPTIMISE if rng.random() < 0.5 else Mode.DECISION
        inst = inst.with_k(rng.randint(1, inst.graph.n))
        assert solve_brute_force(inst, mode, workers=2) == solve_brute_force(inst, mode)


def test_general_classes_witness_verifies(rng):
    for _ in range(40):
        inst = random_instance(rng, general=True, max_n=5)
        result = solve_brute_force(inst, Mode.OPTIMISE)
        assert result.witness is not None
        assert reachability_report(inst, result.witness).extreme_value == result.optimal_value
        decision = solve_brute_force(inst.with_k(result.optimal_value))
        assert decision.decision
        assert decide(inst.with_k(result.optimal_value), decision.witness)


def test_clique_with_pendants_orderings():
    inst = gen_family("clique_with_pendants", r=3, s=2)
    clique_first = Ordering.identity(inst.h)
    assert reachability_report(inst, clique_first).max_value == 9
    leaves_first = Ordering.from_sequence([3, 4, 5, 6, 7, 8, 0, 1, 2])
    assert reachability_report(inst, leaves_first).max_value == 5


@pytest.mark.slow
def test_clique_with_pendants_optimum():
    inst = gen_family("clique_with_pendants", r=3, s=2)
    assert solve_brute_force(inst, Mode.OPTIMISE).optimal_value <= 5


def test_auto_dispatch_falls_back_to_brute_for_general_classes():
    inst = Instance(graph=path(3), classes=EdgeClassSystem(((0, 1),)), k=3)
    result = solve(inst, Mode.OPTIMISE)
    assert result.stats.algo == "brute"
    assert result.optimal_value == 3


def test_minmax_objective_default():
    assert singleton(path(3)).objective == Objective.MINMAX
