"""求解器统一调度模块"""

from __future__ import annotations

from ..model import Instance, Objective, Semantics, validate_instance
from .base import BaseSolver, Mode, SearchStats, SolveResult, verify_result
from .brute import BruteForceSolver, solve_brute_force
from .dag import (
    DagMaxMinSolver,
    DagMinMaxSolver,
    solve_dag_singleton_maxmin,
    solve_dag_singleton_minmax,
)
from .tree_dp import TreeDPSolver, solve_tree_dp
from .tree_vc import TreeVertexCoverSolver, solve_tree_vc

ALGORITHMS = ["auto", "brute", "dag", "tree-vc", "tree-dp"]


def choose_algorithm(instance: Instance, mode: Mode) -> str:
    """auto 调度（顺序固定）：

    1. 有向 + DAG + 单边类（允许重复）+ 严格 + 极小极大 → dag
    2. 无向树 + 单边类 + 严格 + 极小极大 → 判定模式 tree-dp，优化模式 tree-vc
    3. 其余 → brute
    """
    g = instance.graph
    simple = (
        instance.time_lists is None
        and instance.semantics == Semantics.STRICT
        and instance.objective == Objective.MINMAX
        and instance.classes.is_singleton_up_to_duplicates(g.m)
    )
    if simple and g.directed and g.is_dag():
        return "dag"
    if simple and not g.directed and g.is_tree():
        return "tree-dp" if Mode(mode) == Mode.DECISION else "tree-vc"
    return "brute"


def build_solver(
    algo: str,
    instance: Instance,
    *,
    budget: int | None = None,
    workers: int | None = None,
    verify: bool = True,
    verbose: bool = False,
) -> BaseSolver:
    """按名字创建求解器；dag 按实例目标选极小极大或极大极小版本"""
    if algo == "brute":
        return BruteForceSolver(budget=budget, workers=workers, verify=verify, verbose=verbose)
    if algo == "dag":
        cls = DagMaxMinSolver if instance.objective == Objective.MAXMIN else DagMinMaxSolver
        return cls(verify=verify, verbose=verbose)
    if algo == "tree-vc":
        return TreeVertexCoverSolver(budget=budget, verify=verify, verbose=verbose)
    if algo == "tree-dp":
        return TreeDPSolver(verify=verify, verbose=verbose)
    raise ValueError(f"未知算法: {algo}（可选 {', '.join(ALGORITHMS)}）")


def solve(
    instance: Instance,
    mode: Mode = Mode.DECISION,
    *,
    algo: str = "auto",
    budget: int | None = None,
    workers: int | None = None,
    verify: bool = True,
    verbose: bool = False,
) -> SolveResult:
    """统一入口；auto 时实际选用的算法记录在 result.stats.algo"""
    validate_instance(instance)
    if algo == "auto":
        algo = choose_algorithm(instance, mode)
    solver = build_solver(
        algo, instance, budget=budget, workers=workers, verify=verify, verbose=verbose
    )
    return solver.solve(instance, mode)


__all__ = [
    "ALGORITHMS",
    "BaseSolver",
    "BruteForceSolver",
    "DagMaxMinSolver",
    "DagMinMaxSolver",
    "Mode",
    "SearchStats",
    "SolveResult",
    "TreeDPSolver",
    "TreeVertexCoverSolver",
    "build_solver",
    "choose_algorithm",
    "solve",
    "solve_brute_force",
    "solve_dag_singleton_maxmin",
    "solve_dag_singleton_minmax",
    "solve_tree_dp",
    "solve_tree_vc",
    "verify_result",
]
