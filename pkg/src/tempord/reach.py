"""时序可达性 - 可达集 / 全顶点报告 / 判定 / 边类交互图 / 叶边前置"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

import networkx as nx

from .errors import PreconditionError
from .model import (
    Graph,
    Instance,
    Objective,
    Ordering,
    Semantics,
    validate_ordering,
)


@dataclass(frozen=True)
class ReachabilityReport:
    per_vertex_size: tuple[int, ...]
    extreme_value: int
    extreme_vertex: int
    extreme_set: frozenset[int]
    objective: Objective = Objective.MINMAX

    @property
    def max_value(self) -> int:
        return max(self.per_vertex_size)

    @property
    def min_value(self) -> int:
        return min(self.per_vertex_size)


# ============================================================
# 编译后的可达性内核（每个实例编译一次，穷举时反复求值）
# ============================================================


@dataclass(frozen=True)
class ReachKernel:
    """按类展开的弧表：无向边展开成两条方向相反的弧

    sizes()/extreme() 对“按时间升序的类序列”做反向位集扫描：
    R[v] 初始为 {v}，从最晚的类往前处理，R[u] |= R[v] 对每条弧 (u, v)。
    严格语义同一步内不能接力（先快照再写回）；弱语义在步内求闭包。
    """

    vertex_count: int
    arcs: tuple[tuple[tuple[int, int], ...], ...]
    strict: bool
    minmax: bool

    @classmethod
    def compile(cls, instance: Instance) -> ReachKernel:
        g = instance.graph
        arcs = []
        for c in instance.classes.classes:
            lst: list[tuple[int, int]] = []
            for e in c:
                u, v = g.edges[e]
                lst.append((u, v))
                if not g.directed:
                    lst.append((v, u))
            arcs.append(tuple(lst))
        return cls(
            vertex_count=g.vertex_count,
            arcs=tuple(arcs),
            strict=instance.semantics == Semantics.STRICT,
            minmax=instance.objective == Objective.MINMAX,
        )

    def bitsets(self, sequence: Sequence[int]) -> list[int]:
        """返回每个顶点的可达位集"""
        reach = [1 << v for v in range(self.vertex_count)]
        for cls_idx in reversed(sequence):
            arcs = self.arcs[cls_idx]
            if not arcs:
                continue
            if self.strict:
                upd = [(u, reach[v]) for u, v in arcs]
                for u, bits in upd:
                    reach[u] |= bits
            else:
                changed = True
                while changed:
                    changed = False
                    for u, v in arcs:
                        merged = reach[u] | reach[v]
                        if merged != reach[u]:
                            reach[u] = merged
                            changed = True
        return reach

    def sizes(self, sequence: Sequence[int]) -> list[int]:
        return [bits.bit_count() for bits in self.bitsets(sequence)]

    def extreme(self, sequence: Sequence[int], cap: int | None = None) -> int | None:
        """极值（极小极大取最大、极大极小取最小）

        cap 只对极小极大生效：扫描中任一可达集超过 cap 立即返回 None。
        可达集只会随扫描增大，所以提前放弃是安全的。
        """
        if not self.minmax or cap is None:
            sizes = self.sizes(sequence)
            return max(sizes) if self.minmax else min(sizes)

        reach = [1 << v for v in range(self.vertex_count)]
        for cls_idx in reversed(sequence):
            arcs = self.arcs[cls_idx]
            if not arcs:
                continue
            if self.strict:
                upd = [(u, reach[v]) for u, v in arcs]
                for u, bits in upd:
                    merged = reach[u] | bits
                    reach[u] = merged
                    if merged.bit_count() > cap:
                        return None
            else:
                changed = True
                while changed:
                    changed = False
                    for u, v in arcs:
                        merged = reach[u] | reach[v]
                        if merged != reach[u]:
                            reach[u] = merged
                            changed = True
                            if merged.bit_count() > cap:
                                return None
        return max(bits.bit_count() for bits in reach)


@lru_cache(maxsize=64)
def compile_kernel(instance: Instance) -> ReachKernel:
    return ReachKernel.compile(instance)


def _bits_to_set(bits: int) -> frozenset[int]:
    out = []
    v = 0
    while bits:
        if bits & 1:
            out.append(v)
        bits >>= 1
        v += 1
    return frozenset(out)


# ============================================================
# 对外操作
# ============================================================


def reach_set(
    instance: Instance, ordering: Ordering, source: int, after: int = 0
) -> frozenset[int]:
    """从 source 出发、只用时间严格大于 after 的边能到达的顶点集合

    按时间升序单遍扫描，维护每个顶点的最早到达时间。
    严格语义：弧 (u, v) 在时间 s 可用当且仅当 arrival[u] < s；
    弱语义：arrival[u] ≤ s，且同一步内可以接力。
    """
    validate_ordering(instance, ordering)
    n = instance.graph.vertex_count
    if not 0 <= source < n:
        raise PreconditionError("invalid-source", f"顶点 {source} 不在 [0,{n}) 中")

    kernel = compile_kernel(instance)
    inf = math.inf
    arrival: list[float] = [inf] * n
    arrival[source] = after

    steps = sorted(
        (t, i) for i, t in enumerate(ordering.times) if t > after
    )
    for t, cls_idx in steps:
        arcs = kernel.arcs[cls_idx]
        if kernel.strict:
            # 本步新到达的顶点 arrival == t，不满足 < t，天然不会在步内接力
            for u, v in arcs:
                if arrival[u] < t and arrival[v] > t:
                    arrival[v] = t
        else:
            changed = True
            while changed:
                changed = False
                for u, v in arcs:
                    if arrival[u] <= t and arrival[v] > t:
                        arrival[v] = t
                        changed = True

    return frozenset(v for v in range(n) if arrival[v] != inf)


def reachability_report(instance: Instance, ordering: Ordering) -> ReachabilityReport:
    """全部顶点的可达集大小，按目标取极值，平局取最小顶点编号"""
    validate_ordering(instance, ordering)
    kernel = compile_kernel(instance)
    bitsets = kernel.bitsets(ordering.sequence())
    sizes = tuple(b.bit_count() for b in bitsets)

    if instance.objective == Objective.MINMAX:
        value = max(sizes)
    else:
        value = min(sizes)
    vertex = sizes.index(value)
    return ReachabilityReport(
        per_vertex_size=sizes,
        extreme_value=value,
        extreme_vertex=vertex,
        extreme_set=_bits_to_set(bitsets[vertex]),
        objective=instance.objective,
    )


def satisfies(instance: Instance, value: int) -> bool:
    if instance.objective == Objective.MINMAX:
        return value <= instance.k
    return value >= instance.k


def decide(instance: Instance, ordering: Ordering) -> bool:
    """证书校验：极小极大要求 extreme ≤ k，极大极小要求 extreme ≥ k"""
    return satisfies(instance, reachability_report(instance, ordering).extreme_value)


def lower_bound(instance: Instance) -> int:
    """度数下界：无向 Δ(G)+1，有向 Δ^out+1"""
    g = instance.graph
    if g.directed:
        return g.max_out_degree + 1
    return g.max_degree + 1


# ============================================================
# 静态可达性
# ============================================================


def static_reachability(graph: Graph, v: int) -> frozenset[int]:
    """底图中 v 能到达的顶点（含 v）"""
    g = graph.to_networkx()
    if graph.directed:
        return frozenset(nx.descendants(g, v) | {v})
    return frozenset(nx.node_connected_component(g, v))


def static_max_reachability(graph: Graph) -> int:
    g = graph.to_networkx()
    if graph.directed:
        return max(len(nx.descendants(g, v)) + 1 for v in g.nodes)
    return max(len(c) for c in nx.connected_components(g))


# ============================================================
# 边类交互图
# ============================================================


def interaction_graph(instance: Instance) -> Graph:
    """类之间的交互图（无向，顶点为 0..h-1）

    无向底图：两类含有相关联的边即相邻，同一条边视为与自身关联。
    有向底图：某顶点上一类有入边、另一类有出边即相邻。
    """
    g = instance.graph
    h = instance.h
    owners = instance.classes.classes_of_edge(g.m)
    pairs: set[tuple[int, int]] = set()

    for v in range(g.vertex_count):
        if not g.directed:
            touching = sorted({i for e in g.incident(v) for i in owners[e]})
            pairs.update(combinations(touching, 2))
            continue
        ins = {i for e in g.in_edges(v) for i in owners[e]}
        outs = {j for e in g.out_edges(v) for j in owners[e]}
        for i in ins:
            for j in outs:
                if i != j:
                    pairs.add((min(i, j), max(i, j)))

    return Graph(directed=False, vertex_count=h, edges=tuple(sorted(pairs)))


# ============================================================
# 叶边前置
# ============================================================


def require_singleton_minmax(instance: Instance, *, allow_duplicates: bool = False) -> None:
    """单边类 / 严格 / 极小极大 / 无时间列表的公共前置检查"""
    if instance.time_lists is not None:
        raise PreconditionError("time-lists", "不支持带时间列表的实例")
    if instance.semantics != Semantics.STRICT:
        raise PreconditionError("semantics", "只支持严格语义")
    if instance.objective != Objective.MINMAX:
        raise PreconditionError("objective", "只支持极小极大目标")
    m = instance.graph.m
    ok = (
        instance.classes.is_singleton_up_to_duplicates(m)
        if allow_duplicates
        else instance.classes.is_singleton(m)
    )
    if not ok:
        raise PreconditionError("non-singleton", "边类系统不是单边类系统")


def leaves_first_normalize(instance: Instance, ordering: Ordering) -> Ordering:
    """把所有叶边的类挪到最前面，块内保持原有相对顺序"""
    if instance.directed:
        raise PreconditionError("directed", "叶边前置只适用于无向图")
    require_singleton_minmax(instance)
    validate_ordering(instance, ordering)

    g = instance.graph
    seq = ordering.sequence()
    leaf = [c for c in seq if g.is_leaf_edge(instance.classes[c][0])]
    rest = [c for c in seq if not g.is_leaf_edge(instance.classes[c][0])]
    return Ordering.from_sequence(leaf + rest)
