"""求解器基类 - 结果类型 / 见证复核 / 重复单边类折叠"""

from __future__ import annotations

import sys
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from ..errors import TempordError
from ..model import EdgeClassSystem, Instance, Ordering, validate_instance
from ..reach import reachability_report, satisfies


class Mode(str, Enum):
    DECISION = "decision"
    OPTIMISE = "optimise"


@dataclass
class SearchStats:
    explored: int = 0
    elapsed: float = 0.0
    algo: str = ""
    extra: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "algo": self.algo,
            "explored": self.explored,
            "elapsed": round(self.elapsed, 6),
            **self.extra,
        }


@dataclass(frozen=True)
class SolveResult:
    """求解结果

    decision 相对实例阈值 k；optimal_value 只在优化模式下给出；
    witness 在 decision 为真或优化模式下给出。stats 不参与相等比较。
    """

    decision: bool
    optimal_value: int | None = None
    witness: Ordering | None = None
    stats: SearchStats = field(default_factory=SearchStats, compare=False)


class WitnessMismatch(TempordError):
    """求解器给出的见证与其声明的结果不一致"""


def verify_result(instance: Instance, result: SolveResult) -> None:
    """用 reachability_report 复核见证排序"""
    if result.witness is None:
        if result.decision:
            raise WitnessMismatch("判定为真但没有给出见证排序")
        return

    report = reachability_report(instance, result.witness)
    # DAG 极大极小求解器刻画的是可达最大值，而不是最小值
    if result.stats.extra.get("measure") == "max":
        value = report.max_value
        holds = value >= instance.k
    else:
        value = report.extreme_value
        holds = satisfies(instance, value)

    if result.optimal_value is not None and value != result.optimal_value:
        raise WitnessMismatch(f"见证取值 {value} 与最优值 {result.optimal_value} 不一致")
    if holds != result.decision:
        raise WitnessMismatch(f"见证取值 {value} 与判定 {result.decision} 不一致（k={instance.k}）")


def collapse_duplicates(instance: Instance) -> tuple[Instance, list[list[int]]]:
    """把“单边类允许重复”的系统折叠成每边恰好一个类

    返回折叠后的实例和 groups：groups[e] 是原系统中只含边 e 的类编号列表。
    """
    m = instance.graph.m
    groups = instance.classes.classes_of_edge(m)
    reduced = Instance(
        graph=instance.graph,
        classes=EdgeClassSystem.singletons(m),
        objective=instance.objective,
        semantics=instance.semantics,
        time_lists=None,
        k=instance.k,
    )
    return reduced, groups


def expand_ordering(ordering: Ordering, groups: list[list[int]]) -> Ordering:
    """折叠后的排序展开回原系统，同一边的重复类占据连续时间步"""
    seq: list[int] = []
    for e in ordering.sequence():
        seq.extend(groups[e])
    return Ordering.from_sequence(seq)


def log(tag: str, message: str, *, verbose: bool = True) -> None:
    if verbose:
        print(f"[{tag}] {message}", file=sys.stderr)


class BaseSolver(ABC):
    """求解器基类：校验实例 → 前置检查 → 求解 → 复核见证"""

    name: str = "未命名"

    def __init__(self, *, verify: bool = True, verbose: bool = False):
        self.verify = verify
        self.verbose = verbose

    def check(self, instance: Instance) -> None:
        """前置条件检查，不满足时抛出 PreconditionError"""

    @abstractmethod
    def _solve(self, instance: Instance, mode: Mode) -> SolveResult:
        ...

    def solve(self, instance: Instance, mode: Mode = Mode.DECISION) -> SolveResult:
        validate_instance(instance)
        self.check(instance)
        mode = Mode(mode)

        t0 = time.perf_counter()
        result = self._solve(instance, mode)
        result.stats.elapsed = time.perf_counter() - t0
        result.stats.algo = self.name

        if self.verify:
            verify_result(instance, result)
        log(
            "求解",
            f"{self.name}: decision={result.decision} optimal={result.optimal_value} "
            f"explored={result.stats.explored} ({result.stats.elapsed:.3f}s)",
            verbose=self.verbose,
        )
        return result


class SingletonSolver(BaseSolver):
    """单边类求解器：先折叠重复类，在折叠后的实例上求解，再展开见证"""

    def solve(self, instance: Instance, mode: Mode = Mode.DECISION) -> SolveResult:
        validate_instance(instance)
        self.check(instance)
        mode = Mode(mode)

        reduced, groups = collapse_duplicates(instance)
        t0 = time.perf_counter()
        inner = self._solve(reduced, mode)
        witness = (
            expand_ordering(inner.witness, groups) if inner.witness is not None else None
        )
        stats = inner.stats
        stats.elapsed = time.perf_counter() - t0
        stats.algo = self.name
        if reduced.h != instance.h:
            stats.extra["collapsed_classes"] = instance.h - reduced.h
        result = SolveResult(
            decision=inner.decision,
            optimal_value=inner.optimal_value,
            witness=witness,
            stats=stats,
        )

        if self.verify:
            verify_result(instance, result)
        log(
            "求解",
            f"{self.name}: decision={result.decision} optimal={result.optimal_value} "
            f"explored={stats.explored} ({stats.elapsed:.3f}s)",
            verbose=self.verbose,
        )
        return result
