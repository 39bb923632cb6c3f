"""穷举求解器 - 按字典序枚举全部排序（或全部满足时间列表的单射分配）

任意目标、任意语义、可带时间列表。候选数超出预算时抛出 BudgetExceeded，
附带截至中断时的最好结果。workers > 1 时按类 0 的时间步切分给多个进程，
按 (取值, 字典序见证) 确定性合并，结果与单进程一致。
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator

from ..config import Config
from ..errors import BudgetExceeded
from ..model import Instance, Objective, Ordering
from ..reach import compile_kernel, lower_bound, satisfies
from .base import BaseSolver, Mode, SearchStats, SolveResult, log


@dataclass
class _Outcome:
    """单个分区（或整次串行搜索）的结果"""

    value: int | None
    times: tuple[int, ...] | None
    explored: int
    exhausted: bool = True


def candidate_bound(instance: Instance) -> int:
    """候选排序数：h!，带时间列表时取各列表长度之积作上界"""
    if instance.time_lists is None:
        return math.factorial(instance.h)
    return instance.time_lists.candidate_count()


def _first_choices(instance: Instance) -> list[int]:
    if instance.h == 0:
        return []
    if instance.time_lists is None:
        return list(range(1, instance.h + 1))
    return list(instance.time_lists[0])


def _candidates(instance: Instance, first: int | None = None) -> Iterator[tuple[int, ...]]:
    """按字典序生成 times 元组；first 固定类 0 的时间步"""
    h = instance.h
    if instance.time_lists is None:
        if first is None:
            yield from permutations(range(1, h + 1))
            return
        rest = [t for t in range(1, h + 1) if t != first]
        for tail in permutations(rest):
            yield (first, *tail)
        return

    lists = instance.time_lists.lists
    used: set[int] = set()
    current: list[int] = []

    def backtrack(i: int) -> Iterator[tuple[int, ...]]:
        if i == h:
            yield tuple(current)
            return
        choices = lists[i] if (i > 0 or first is None) else (first,)
        for t in choices:
            if t in used:
                continue
            used.add(t)
            current.append(t)
            yield from backtrack(i + 1)
            current.pop()
            used.discard(t)

    yield from backtrack(0)


def _sequence(times: tuple[int, ...], standard: bool) -> list[int]:
    if standard:
        seq = [0] * len(times)
        for i, t in enumerate(times):
            seq[t - 1] = i
        return seq
    return sorted(range(len(times)), key=times.__getitem__)


def _better(instance: Instance, value: int, best: int | None) -> bool:
    if best is None:
        return True
    if instance.objective == Objective.MINMAX:
        return value < best
    return value > best


def _search(
    instance: Instance, mode: Mode, budget: int, first: int | None = None
) -> _Outcome:
    """串行搜索（也是单个工作进程的入口）"""
    kernel = compile_kernel(instance)
    minmax = instance.objective == Objective.MINMAX
    standard = instance.time_lists is None
    floor = lower_bound(instance) if minmax else None

    best_value: int | None = None
    best_times: tuple[int, ...] | None = None
    explored = 0

    for times in _candidates(instance, first):
        if explored >= budget:
            return _Outcome(best_value, best_times, explored, exhausted=False)
        explored += 1
        seq = _sequence(times, standard)

        if mode == Mode.DECISION:
            value = kernel.extreme(seq, instance.k if minmax else None)
            if value is not None and satisfies(instance, value):
                return _Outcome(value, times, explored)
            continue

        cap = best_value - 1 if (minmax and best_value is not None) else None
        value = kernel.extreme(seq, cap)
        if value is None:
            continue
        if _better(instance, value, best_value):
            best_value, best_times = value, times
            if minmax and best_value <= floor:
                break

    if mode == Mode.DECISION:
        return _Outcome(None, None, explored)
    return _Outcome(best_value, best_times, explored)


def _merge(instance: Instance, mode: Mode, outcomes: list[_Outcome]) -> _Outcome:
    """确定性合并：判定模式取字典序最小的满足见证，优化模式按 (取值, 见证)"""
    explored = sum(o.explored for o in outcomes)
    found = [o for o in outcomes if o.times is not None]
    if not found:
        return _Outcome(None, None, explored)
    if mode == Mode.DECISION:
        best = min(found, key=lambda o: o.times)
    elif instance.objective == Objective.MINMAX:
        best = min(found, key=lambda o: (o.value, o.times))
    else:
        best = min(found, key=lambda o: (-o.value, o.times))
    return _Outcome(best.value, best.times, explored)


class BruteForceSolver(BaseSolver):
    """穷举求解器"""

    name = "brute"

    def __init__(
        self,
        *,
        budget: int | None = None,
        workers: int | None = None,
        verify: bool = True,
        verbose: bool = False,
    ):
        super().__init__(verify=verify, verbose=verbose)
        defaults = Config()
        self.budget = budget if budget is not None else defaults.budget
        self.workers = workers if workers is not None else defaults.workers

    def _solve(self, instance: Instance, mode: Mode) -> SolveResult:
        minmax = instance.objective == Objective.MINMAX
        bound = candidate_bound(instance)
        stats = SearchStats(extra={"bound": bound, "workers": 1})

        if mode == Mode.DECISION and minmax and instance.k < lower_bound(instance):
            stats.extra["short_circuit"] = "degree"
            log("求解", f"k={instance.k} 低于度数下界 {lower_bound(instance)}，直接判否",
                verbose=self.verbose)
            return SolveResult(decision=False, stats=stats)

        choices = _first_choices(instance)
        if self.workers > 1 and len(choices) > 1 and bound <= self.budget:
            outcome = self._parallel(instance, mode, choices)
            stats.extra["workers"] = self.workers
            stats.extra["partitions"] = len(choices)
        else:
            if self.workers > 1 and bound > self.budget:
                log("求解", f"候选数 {bound} 超出预算，退回单进程枚举", verbose=self.verbose)
            outcome = _search(instance, mode, self.budget)

        stats.explored = outcome.explored
        if not outcome.exhausted:
            partial = None
            if outcome.times is not None:
                partial = SolveResult(
                    decision=satisfies(instance, outcome.value),
                    optimal_value=outcome.value,
                    witness=Ordering(outcome.times),
                    stats=stats,
                )
            raise BudgetExceeded(bound, outcome.explored, partial)

        if outcome.times is None:
            # 判定为否，或时间列表不存在任何单射分配
            if mode == Mode.OPTIMISE:
                stats.extra["infeasible"] = True
            return SolveResult(decision=False, stats=stats)

        witness = Ordering(outcome.times)
        if mode == Mode.DECISION:
            return SolveResult(decision=True, witness=witness, stats=stats)
        return SolveResult(
            decision=satisfies(instance, outcome.value),
            optimal_value=outcome.value,
            witness=witness,
            stats=stats,
        )

    def _parallel(self, instance: Instance, mode: Mode, choices: list[int]) -> _Outcome:
        outcomes: list[_Outcome] = []
        with ProcessPoolExecutor(max_workers=self.workers) as pool:
            future_map = {
                pool.submit(_search, instance, mode, self.budget, first): first
                for first in choices
            }
            for future in as_completed(future_map):
                first = future_map[future]
                outcome = future.result()
                outcomes.append(outcome)
                log(
                    "求解",
                    f"分区 t(E_0)={first}: 检查 {outcome.explored} 个，"
                    f"{'找到' if outcome.times is not None else '无'}候选",
                    verbose=self.verbose,
                )
        return _merge(instance, mode, outcomes)


def solve_brute_force(
    instance: Instance,
    mode: Mode = Mode.DECISION,
    *,
    budget: int | None = None,
    workers: int | None = None,
    verbose: bool = False,
) -> SolveResult:
    return BruteForceSolver(budget=budget, workers=workers, verbose=verbose).solve(
        instance, mode
    )
