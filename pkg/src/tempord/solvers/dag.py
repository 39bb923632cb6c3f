"""DAG 单边类求解器

极小极大：按尾顶点的拓扑位置给边排序 e_1..e_m，令 t(e_i) = m+1-i，
任意严格时序路径都只有一条边，最优值恰为 Δ^out + 1。
极大极小：同一排序令 t(e_i) = i，静态图中的每条路径都成为时序路径，
可达最大值等于静态图的最大可达数。
"""

from __future__ import annotations

import networkx as nx

from ..errors import PreconditionError
from ..model import Graph, Instance, Objective, Ordering, Semantics
from ..reach import static_max_reachability
from .base import Mode, SearchStats, SingletonSolver, SolveResult


def topological_edge_order(graph: Graph) -> list[int]:
    """按 (尾顶点拓扑位置, 边编号) 排列的边编号"""
    topo = list(nx.lexicographical_topological_sort(graph.to_networkx()))
    pos = {v: i for i, v in enumerate(topo)}
    return sorted(range(graph.m), key=lambda e: (pos[graph.edges[e][0]], e))


def _check_dag(instance: Instance) -> None:
    if not instance.directed or not instance.graph.is_dag():
        raise PreconditionError("not-a-dag", "底图必须是有向无环图")
    if instance.time_lists is not None:
        raise PreconditionError("time-lists", "不支持带时间列表的实例")
    if instance.semantics != Semantics.STRICT:
        raise PreconditionError("semantics", "只支持严格语义")
    if not instance.classes.is_singleton_up_to_duplicates(instance.graph.m):
        raise PreconditionError("non-singleton", "边类系统不是单边类系统")


class DagMinMaxSolver(SingletonSolver):
    name = "dag"

    def check(self, instance: Instance) -> None:
        _check_dag(instance)
        if instance.objective != Objective.MINMAX:
            raise PreconditionError("objective", "该求解器只处理极小极大目标")

    def _solve(self, instance: Instance, mode: Mode) -> SolveResult:
        g = instance.graph
        order = topological_edge_order(g)
        m = g.m
        times = [0] * m
        for i, e in enumerate(order):
            times[e] = m - i
        value = g.max_out_degree + 1
        decision = instance.k >= value
        stats = SearchStats(explored=1, extra={"max_out_degree": g.max_out_degree})

        witness = Ordering(tuple(times))
        if mode == Mode.OPTIMISE:
            return SolveResult(decision, value, witness, stats)
        return SolveResult(decision, None, witness if decision else None, stats)


class DagMaxMinSolver(SingletonSolver):
    """给出可达最大值的刻画；判定含义为“最大可达数 ≥ k”"""

    name = "dag"

    def check(self, instance: Instance) -> None:
        _check_dag(instance)
        if instance.objective != Objective.MAXMIN:
            raise PreconditionError("objective", "该求解器只处理极大极小目标")

    def _solve(self, instance: Instance, mode: Mode) -> SolveResult:
        g = instance.graph
        order = topological_edge_order(g)
        times = [0] * g.m
        for i, e in enumerate(order):
            times[e] = i + 1
        value = static_max_reachability(g)
        decision = value >= instance.k
        stats = SearchStats(explored=1, extra={"measure": "max"})

        witness = Ordering(tuple(times))
        if mode == Mode.OPTIMISE:
            return SolveResult(decision, value, witness, stats)
        return SolveResult(decision, None, witness if decision else None, stats)


def solve_dag_singleton_minmax(
    instance: Instance, mode: Mode = Mode.DECISION, *, verbose: bool = False
) -> SolveResult:
    return DagMinMaxSolver(verbose=verbose).solve(instance, mode)


def solve_dag_singleton_maxmin(
    instance: Instance, mode: Mode = Mode.OPTIMISE, *, verbose: bool = False
) -> SolveResult:
    return DagMaxMinSolver(verbose=verbose).solve(instance, mode)
