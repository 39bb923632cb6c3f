"""树上的顶点覆盖参数化求解器

叶边一律排在最前（按边编号），只枚举非叶边的全排列。
非叶边数不超过 2c-2（c 为顶点覆盖数），这里只作为统计量记录。
"""

from __future__ import annotations

import math
from itertools import permutations

from ..config import Config
from ..errors import BudgetExceeded, PreconditionError
from ..model import Instance, Ordering
from ..reach import compile_kernel, lower_bound, require_singleton_minmax
from .base import Mode, SearchStats, SingletonSolver, SolveResult, log


def check_tree(instance: Instance) -> None:
    if instance.directed or not instance.graph.is_tree():
        raise PreconditionError("not-a-tree", "底图必须是无向树")
    require_singleton_minmax(instance, allow_duplicates=True)


class TreeVertexCoverSolver(SingletonSolver):
    name = "tree-vc"

    def __init__(self, *, budget: int | None = None, verify: bool = True, verbose: bool = False):
        super().__init__(verify=verify, verbose=verbose)
        self.budget = budget if budget is not None else Config().budget

    def check(self, instance: Instance) -> None:
        check_tree(instance)

    def _solve(self, instance: Instance, mode: Mode) -> SolveResult:
        g = instance.graph
        leaves = [e for e in range(g.m) if g.is_leaf_edge(e)]
        inner = [e for e in range(g.m) if not g.is_leaf_edge(e)]
        bound = math.factorial(len(inner))
        floor = lower_bound(instance)
        stats = SearchStats(extra={"non_leaf_edges": len(inner), "bound": bound})

        if mode == Mode.DECISION and instance.k < floor:
            stats.extra["short_circuit"] = "degree"
            return SolveResult(decision=False, stats=stats)
        if bound > self.budget:
            raise BudgetExceeded(bound, 0, None)

        log("求解", f"tree-vc: {len(leaves)} 条叶边前置，枚举 {len(inner)}! = {bound} 种",
            verbose=self.verbose)

        kernel = compile_kernel(instance)
        best_value: int | None = None
        best_seq: list[int] | None = None
        for perm in permutations(inner):
            stats.explored += 1
            seq = leaves + list(perm)
            if mode == Mode.DECISION:
                value = kernel.extreme(seq, instance.k)
                if value is not None:
                    return SolveResult(True, None, Ordering.from_sequence(seq), stats)
                continue
            cap = best_value - 1 if best_value is not None else None
            value = kernel.extreme(seq, cap)
            if value is None:
                continue
            best_value, best_seq = value, seq
            if best_value <= floor:
                break

        if mode == Mode.DECISION:
            return SolveResult(decision=False, stats=stats)
        return SolveResult(
            decision=best_value <= instance.k,
            optimal_value=best_value,
            witness=Ordering.from_sequence(best_seq),
            stats=stats,
        )


def solve_tree_vc(
    instance: Instance,
    mode: Mode = Mode.OPTIMISE,
    *,
    budget: int | None = None,
    verbose: bool = False,
) -> SolveResult:
    return TreeVertexCoverSolver(budget=budget, verbose=verbose).solve(instance, mode)
