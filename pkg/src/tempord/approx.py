"""近似排序 - 分块拼接 / 边着色近似（单边类）/ 交互图着色近似（一般边类）"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .coloring import Coloring, color_interaction_graph, edge_coloring_delta_plus_one
from .errors import Issue, OrderingError, PreconditionError
from .model import EdgeClassSystem, Instance, Objective, Ordering, Semantics
from .reach import interaction_graph, lower_bound, require_singleton_minmax


@dataclass(frozen=True)
class ApproxResult:
    ordering: Ordering
    bound: int
    ratio: Fraction
    coloring: Coloring


# ============================================================
# 分块拼接
# ============================================================


def block_instance(instance: Instance, edges: Iterable[int]) -> tuple[Instance, list[int]]:
    """只保留边全部落在 edges 中的非空类，返回子实例和这些类的原编号

    子实例沿用原图；不在任何保留类中的边永不激活，因此子实例上的可达性
    就是子图 (V, edges) 上的可达性。
    """
    block = set(edges)
    ids = [
        i for i, c in enumerate(instance.classes.classes) if c and set(c) <= block
    ]
    sub = Instance(
        graph=instance.graph,
        classes=EdgeClassSystem(tuple(instance.classes[i] for i in ids)),
        objective=instance.objective,
        semantics=instance.semantics,
        time_lists=None,
        k=instance.k,
    )
    return sub, ids


def composition_bound(reaches: Iterable[int]) -> int:
    """分块拼接后的最大可达数上界：各块最大可达数之积"""
    return math.prod(reaches)


def compose_orderings(
    instance: Instance, partition: Sequence[tuple[Iterable[int], Ordering]]
) -> Ordering:
    """按块顺序拼接子排序：第 i 块整体平移前 i-1 块的类数

    空类（不含任何边）排在所有块之后，按编号升序。
    """
    m = instance.graph.m
    blocks = [(frozenset(edges), ordering) for edges, ordering in partition]

    owner: dict[int, int] = {}
    issues: list[Issue] = []
    for b, (edges, _) in enumerate(blocks):
        for e in edges:
            if not 0 <= e < m:
                issues.append(Issue("not-a-partition", f"块 {b} 含不存在的边 {e}"))
            elif e in owner:
                issues.append(Issue("not-a-partition", f"边 {e} 同时属于块 {owner[e]} 和块 {b}"))
            else:
                owner[e] = b
    missing = [e for e in range(m) if e not in owner]
    if missing:
        issues.append(Issue("not-a-partition", f"边 {missing} 不属于任何块"))
    for i, c in enumerate(instance.classes.classes):
        if len({owner.get(e) for e in c}) > 1:
            issues.append(Issue("not-a-partition", f"类 {i} 跨越了多个块"))
    if issues:
        raise PreconditionError("not-a-partition", "; ".join(i.message for i in issues))

    sequence: list[int] = []
    for b, (edges, ordering) in enumerate(blocks):
        _, ids = block_instance(instance, edges)
        times = ordering.times
        if len(times) != len(ids) or sorted(times) != list(range(1, len(ids) + 1)):
            raise OrderingError(
                [Issue("ordering-length", f"块 {b} 的子排序不是 {len(ids)} 个类上的双射")]
            )
        local = sorted(range(len(ids)), key=times.__getitem__)
        sequence.extend(ids[j] for j in local)
    sequence.extend(i for i, c in enumerate(instance.classes.classes) if not c)
    return Ordering.from_sequence(sequence)


# ============================================================
# 单边类：边着色近似
# ============================================================


def approx_singleton(instance: Instance) -> ApproxResult:
    """颜色块依次排开，块内按类编号；最大可达数不超过 2^颜色数"""
    if instance.directed:
        raise PreconditionError("directed", "边着色近似只适用于无向图")
    require_singleton_minmax(instance)

    g = instance.graph
    coloring = edge_coloring_delta_plus_one(g)
    partition = []
    for block in coloring.blocks():
        _, ids = block_instance(instance, block)
        partition.append((block, Ordering.identity(len(ids))))
    ordering = compose_orderings(instance, partition)

    delta = g.max_degree
    return ApproxResult(
        ordering=ordering,
        bound=2 ** coloring.color_count,
        ratio=Fraction(2 ** (delta + 1), delta + 1),
        coloring=coloring,
    )


# ============================================================
# 一般边类：交互图着色近似
# ============================================================


def approx_general(instance: Instance) -> ApproxResult:
    """按交互图颜色块排程，块内按类编号；最大可达数不超过 (d+1)^颜色数

    同色的类在交互图中互不相邻，所以块内任何时序路径只用到一个类。
    """
    if instance.time_lists is not None:
        raise PreconditionError("time-lists", "近似算法不支持时间列表")
    if instance.semantics != Semantics.STRICT:
        raise PreconditionError("semantics", "只支持严格语义")
    if instance.objective != Objective.MINMAX:
        raise PreconditionError("objective", "只支持极小极大目标")

    coloring = color_interaction_graph(interaction_graph(instance))
    sequence = sorted(range(instance.h), key=lambda i: (coloring.colors[i], i))
    ordering = Ordering.from_sequence(sequence)

    d = instance.classes.max_class_degree(instance.graph)
    bound = (d + 1) ** coloring.color_count
    return ApproxResult(
        ordering=ordering,
        bound=bound,
        ratio=Fraction(bound, lower_bound(instance)),
        coloring=coloring,
    )
