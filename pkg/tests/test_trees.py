from __future__ import annotations

import random

import networkx as nx
import pytest

from conftest import path, singleton
from tempord.errors import BudgetExceeded, PreconditionError
from tempord.instances import gen_family
from tempord.model import EdgeClassSystem, Graph, Instance, Objective
from tempord.reach import decide, reachability_report
from tempord.solvers import Mode, choose_algorithm, solve_brute_force, solve_tree_dp, solve_tree_vc


def _trees(max_n: int):
    for n in range(2, max_n + 1):
        for t in nx.nonisomorphic_trees(n):
            edges = sorted((min(u, v), max(u, v)) for u, v in t.edges)
            yield singleton(Graph(False, n, tuple(edges)))


def test_p5_tree_dp_decision():
    assert solve_tree_dp(singleton(path(5), k=4)).decision
    result = solve_tree_dp(singleton(path(5), k=3))
    assert not result.decision
    assert result.witness is None


def test_p5_tree_vc_optimum(p5):
    result = solve_tree_vc(p5)
    assert result.optimal_value == 4
    assert result.stats.extra["non_leaf_edges"] == 2
    assert reachability_report(p5, result.witness).max_value == 4


def test_tree_dp_optimise_matches_tree_vc():
    inst = gen_family("complete_binary_tree", depth=2)
    dp = solve_tree_dp(inst, Mode.OPTIMISE)
    vc = solve_tree_vc(inst)
    assert dp.optimal_value == vc.optimal_value
    assert decide(inst.with_k(dp.optimal_value), dp.witness)


def test_tree_dp_short_circuit():
    star = singleton(Graph(False, 4, ((0, 1), (0, 2), (0, 3))), k=3)
    result = solve_tree_dp(star)
    assert not result.decision
    assert result.stats.extra["short_circuit"] == "degree"


def test_star_optimum_is_degree_bound():
    star = singleton(Graph(False, 5, ((0, 1), (0, 2), (0, 3), (0, 4))))
    assert solve_tree_vc(star).optimal_value == 5
    assert solve_tree_dp(star.with_k(5)).decision


def test_rejects_non_tree():
    cycle = singleton(Graph(False, 3, ((0, 1), (1, 2), (0, 2))))
    for solver in (solve_tree_vc, solve_tree_dp):
        with pytest.raises(PreconditionError) as err:
            solver(cycle)
        assert err.value.code == "not-a-tree"


def test_rejects_maxmin(maxmin_p3):
    with pytest.raises(PreconditionError):
        solve_tree_vc(maxmin_p3)


def test_tree_vc_budget():
    with pytest.raises(BudgetExceeded) as err:
        solve_tree_vc(singleton(path(6)), budget=2)
    assert err.value.bound == 6
    assert err.value.explored == 0


def test_auto_picks_tree_solvers(p5):
    assert choose_algorithm(p5, Mode.DECISION) == "tree-dp"
    assert choose_algorithm(p5, Mode.OPTIMISE) == "tree-vc"
    general = Instance(graph=path(3), classes=EdgeClassSystem(((0, 1),)), k=3)
    assert choose_algorithm(general, Mode.DECISION) == "brute"
    maxmin = singleton(path(3), objective=Objective.MAXMIN)
    assert choose_algorithm(maxmin, Mode.DECISION) == "brute"


def test_leaves_first_keeps_optimum():
    # 叶边前置后只枚举非叶边，得到的最优值与全排列一致
    for inst in _trees(6):
        brute = solve_brute_force(inst, Mode.OPTIMISE)
        assert solve_tree_vc(inst).optimal_value == brute.optimal_value


def test_tree_solvers_match_brute_force_on_random_trees():
    rng = random.Random(5)
    for _ in range(25):
        inst = gen_family("random_tree", n=rng.randint(2, 7), seed=rng.randrange(10**6))
        optimum = solve_brute_force(inst, Mode.OPTIMISE).optimal_value
        assert solve_tree_vc(inst).optimal_value == optimum
        for k in range(1, inst.graph.vertex_count + 1):
            assert solve_tree_dp(inst.with_k(k)).decision == (k >= optimum)


@pytest.mark.slow
def test_tree_solvers_match_brute_force_full_scale():
    for inst in _trees(8):
        optimum = solve_brute_force(inst, Mode.OPTIMISE).optimal_value
        assert solve_tree_vc(inst).optimal_value == optimum
        assert solve_tree_dp(inst, Mode.OPTIMISE).optimal_value == optimum
