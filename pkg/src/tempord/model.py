"""数据模型 - 图 / 边类系统 / 时间列表 / 排序 / 实例，以及实例校验

顶点是 0 起的稠密整数；边按位置编号；边类引用边编号而不是端点对。
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, replace
from enum import Enum
from functools import cached_property
from typing import Sequence

import networkx as nx

from .errors import InstanceError, Issue, OrderingError


class Objective(str, Enum):
    MINMAX = "minmax"
    MAXMIN = "maxmin"


class Semantics(str, Enum):
    STRICT = "strict"
    WEAK = "weak"


# ============================================================
# 图
# ============================================================


@dataclass(frozen=True)
class Graph:
    """静态（有向）图

    无向边 (u, v) 按给定的端点顺序保存，比较时视为无序对。
    派生量（度、邻接）只在校验通过的图上有意义。
    """

    directed: bool
    vertex_count: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "edges", tuple((int(u), int(v)) for u, v in self.edges)
        )

    @property
    def n(self) -> int:
        return self.vertex_count

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def _out_incidence(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for idx, (u, v) in enumerate(self.edges):
            out[u].append(idx)
            if not self.directed:
                out[v].append(idx)
        return tuple(tuple(x) for x in out)

    @cached_property
    def _in_incidence(self) -> tuple[tuple[int, ...], ...]:
        if not self.directed:
            return self._out_incidence
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for idx, (_, v) in enumerate(self.edges):
            inc[v].append(idx)
        return tuple(tuple(x) for x in inc)

    def incident(self, v: int) -> tuple[int, ...]:
        """与 v 关联的全部边编号（有向图含入边和出边）"""
        if not self.directed:
            return self._out_incidence[v]
        return tuple(sorted(self._out_incidence[v] + self._in_incidence[v]))

    def out_edges(self, v: int) -> tuple[int, ...]:
        return self._out_incidence[v]

    def in_edges(self, v: int) -> tuple[int, ...]:
        return self._in_incidence[v]

    def degree(self, v: int) -> int:
        if not self.directed:
            return len(self._out_incidence[v])
        return len(self._out_incidence[v]) + len(self._in_incidence[v])

    def out_degree(self, v: int) -> int:
        return len(self._out_incidence[v])

    @cached_property
    def max_degree(self) -> int:
        return max((self.degree(v) for v in range(self.vertex_count)), default=0)

    @cached_property
    def max_out_degree(self) -> int:
        return max((self.out_degree(v) for v in range(self.vertex_count)), default=0)

    def other_end(self, edge: int, v: int) -> int:
        a, b = self.edges[edge]
        return b if a == v else a

    def neighbors(self, v: int) -> list[int]:
        """无向邻居；有向图时为出邻居"""
        if self.directed:
            return [self.edges[e][1] for e in self._out_incidence[v]]
        return [self.other_end(e, v) for e in self._out_incidence[v]]

    def is_leaf_edge(self, edge: int) -> bool:
        u, v = self.edges[edge]
        return self.degree(u) == 1 or self.degree(v) == 1

    def leaf_edges(self) -> list[int]:
        return [e for e in range(self.m) if self.is_leaf_edge(e)]

    def to_networkx(self) -> nx.Graph:
        g: nx.Graph = nx.DiGraph() if self.directed else nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        for idx, (u, v) in enumerate(self.edges):
            g.add_edge(u, v, index=idx)
        return g

    def is_tree(self) -> bool:
        return not self.directed and nx.is_tree(self.to_networkx())

    def is_dag(self) -> bool:
        return self.directed and nx.is_directed_acyclic_graph(self.to_networkx())


# ============================================================
# 边类系统 / 时间列表 / 排序
# ============================================================


@dataclass(frozen=True)
class EdgeClassSystem:
    """边类多重集 E_1..E_h，相同的类可以重复出现，按位置区分"""

    classes: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(
            self,
            "classes",
            tuple(tuple(sorted(set(int(e) for e in c))) for c in self.classes),
        )

    @classmethod
    def singletons(cls, m: int) -> EdgeClassSystem:
        return cls(tuple((e,) for e in range(m)))

    @property
    def h(self) -> int:
        return len(self.classes)

    def __len__(self) -> int:
        return len(self.classes)

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.classes[i]

    def is_singleton(self, m: int) -> bool:
        """每个类恰好一条边，两两不交，且覆盖全部 m 条边"""
        if any(len(c) != 1 for c in self.classes):
            return False
        return sorted(c[0] for c in self.classes) == list(range(m))

    def is_singleton_up_to_duplicates(self, m: int) -> bool:
        """每个类恰好一条边且覆盖全部边，允许同一条边的类重复出现"""
        if any(len(c) != 1 for c in self.classes):
            return False
        return {c[0] for c in self.classes} == set(range(m))

    def classes_of_edge(self, m: int) -> list[list[int]]:
        owners: list[list[int]] = [[] for _ in range(m)]
        for i, c in enumerate(self.classes):
            for e in c:
                if 0 <= e < m:
                    owners[e].append(i)
        return owners

    def max_class_degree(self, graph: Graph) -> int:
        """d = max over classes of Δ((V, E')), 有向图按总度数计"""
        best = 0
        for c in self.classes:
            deg: Counter[int] = Counter()
            for e in c:
                u, v = graph.edges[e]
                deg[u] += 1
                deg[v] += 1
            if deg:
                best = max(best, max(deg.values()))
        return best


@dataclass(frozen=True)
class TimeLists:
    """每个类允许使用的时间步集合"""

    lists: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(
            self,
            "lists",
            tuple(tuple(sorted(set(int(t) for t in lst))) for lst in self.lists),
        )

    def __len__(self) -> int:
        return len(self.lists)

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.lists[i]

    def candidate_count(self) -> int:
        """单射分配数的上界：各列表长度之积"""
        return math.prod(len(lst) for lst in self.lists)


def time_lists_feasible(lists: TimeLists) -> bool:
    """Hall 条件：是否存在单射分配 t(E_i) ∈ L_i（二部图最大匹配）"""
    if len(lists) == 0:
        return True
    g = nx.Graph()
    left = [("c", i) for i in range(len(lists))]
    g.add_nodes_from(left, bipartite=0)
    for i, lst in enumerate(lists.lists):
        for t in lst:
            g.add_edge(("c", i), ("t", t))
    matching = nx.bipartite.maximum_matching(g, top_nodes=left)
    matched = sum(1 for node in left if node in matching)
    return matched == len(lists)


@dataclass(frozen=True)
class Ordering:
    """times[i] 为类 i 分配的时间步（正整数）"""

    times: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "times", tuple(int(t) for t in self.times))

    @classmethod
    def identity(cls, h: int) -> Ordering:
        return cls(tuple(range(1, h + 1)))

    @classmethod
    def from_sequence(cls, sequence: Sequence[int]) -> Ordering:
        """由“按时间先后排列的类编号”构造标准排序（时间 1..h）"""
        times = [0] * len(sequence)
        for pos, cls_idx in enumerate(sequence):
            times[cls_idx] = pos + 1
        return cls(tuple(times))

    @property
    def h(self) -> int:
        return len(self.times)

    def sequence(self) -> list[int]:
        """类编号按时间升序排列"""
        return sorted(range(len(self.times)), key=lambda i: self.times[i])


# ============================================================
# 实例
# ============================================================


@dataclass(frozen=True)
class Instance:
    graph: Graph
    classes: EdgeClassSystem
    objective: Objective = Objective.MINMAX
    semantics: Semantics = Semantics.STRICT
    time_lists: TimeLists | None = None
    k: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "objective", Objective(self.objective))
        object.__setattr__(self, "semantics", Semantics(self.semantics))

    @classmethod
    def singleton(
        cls,
        graph: Graph,
        *,
        objective: Objective = Objective.MINMAX,
        semantics: Semantics = Semantics.STRICT,
        k: int | None = None,
    ) -> Instance:
        """单边类实例；k 缺省为 n（极大极小下总是成立的阈值）"""
        return cls(
            graph=graph,
            classes=EdgeClassSystem.singletons(graph.m),
            objective=objective,
            semantics=semantics,
            k=graph.vertex_count if k is None else k,
        )

    @property
    def h(self) -> int:
        return self.classes.h

    @property
    def directed(self) -> bool:
        return self.graph.directed

    @property
    def is_singleton(self) -> bool:
        return self.classes.is_singleton(self.graph.m)

    def with_k(self, k: int) -> Instance:
        return replace(self, k=k)


def check_instance(raw: Instance) -> list[Issue]:
    """收集候选实例违反的全部不变量（不抛异常）"""
    issues: list[Issue] = []
    g = raw.graph
    n = g.vertex_count

    if n < 1:
        issues.append(Issue("bad-vertex-count", f"顶点数必须 ≥ 1，实际为 {n}"))

    seen: dict[tuple[int, int], int] = {}
    for idx, (u, v) in enumerate(g.edges):
        if not (0 <= u < n and 0 <= v < n):
            issues.append(
                Issue("index-out-of-range", f"边 {idx} = ({u},{v}) 端点超出 [0,{n})")
            )
            continue
        if u == v:
            issues.append(Issue("self-loop", f"边 {idx} 是自环 ({u},{v})"))
            continue
        key = (u, v) if g.directed else (min(u, v), max(u, v))
        if key in seen:
            issues.append(
                Issue("duplicate-edge", f"边 {idx} 与边 {seen[key]} 重复 ({u},{v})")
            )
        else:
            seen[key] = idx

    m = g.m
    if raw.classes.h == 0 and m > 0:
        issues.append(Issue("empty-class-list", f"图有 {m} 条边但没有任何边类"))

    covered: set[int] = set()
    for i, c in enumerate(raw.classes.classes):
        for e in c:
            if not 0 <= e < m:
                issues.append(
                    Issue("bad-class-edge-index", f"类 {i} 引用了边 {e}，而 m={m}")
                )
            else:
                covered.add(e)
    if raw.classes.h > 0:
        for e in range(m):
            if e not in covered:
                issues.append(Issue("uncovered-edge", f"边 {e} 不属于任何类"))

    if raw.time_lists is not None:
        lists = raw.time_lists
        if len(lists) != raw.classes.h:
            issues.append(
                Issue(
                    "time-list-count",
                    f"时间列表数 {len(lists)} 与类数 {raw.classes.h} 不一致",
                )
            )
        for i, lst in enumerate(lists.lists):
            if not lst:
                issues.append(Issue("empty-time-list", f"类 {i} 的时间列表为空"))
            bad = [t for t in lst if t < 1]
            if bad:
                issues.append(
                    Issue("bad-time-value", f"类 {i} 的时间列表含非正时间步 {bad}")
                )

    if raw.k < 1:
        issues.append(Issue("bad-k", f"阈值 k 必须 ≥ 1，实际为 {raw.k}"))

    return issues


def validate_instance(raw: Instance) -> Instance:
    """校验候选实例；失败时抛出携带完整问题列表的 InstanceError"""
    issues = check_instance(raw)
    if issues:
        raise InstanceError(issues)
    return raw


def validate_ordering(instance: Instance, ordering: Ordering) -> Ordering:
    """校验排序对实例合法：单射、标准形式落在 [h]、列表形式落在 L_i"""
    issues: list[Issue] = []
    h = instance.h
    times = ordering.times

    if len(times) != h:
        raise OrderingError(
            [Issue("ordering-length", f"排序长度 {len(times)} 与类数 {h} 不一致")]
        )

    counts = Counter(times)
    for t, c in sorted(counts.items()):
        if c > 1:
            owners = [i for i, x in enumerate(times) if x == t]
            issues.append(Issue("duplicate-time", f"时间步 {t} 被类 {owners} 重复使用"))

    lists = instance.time_lists
    for i, t in enumerate(times):
        if t < 1:
            issues.append(Issue("time-out-of-range", f"类 {i} 的时间步 {t} 不是正整数"))
        elif lists is None and t > h:
            issues.append(Issue("time-out-of-range", f"类 {i} 的时间步 {t} 超出 [1,{h}]"))
        elif lists is not None and t not in lists[i]:
            issues.append(
                Issue(
                    "list-violation",
                    f"类 {i} 的时间步 {t} 不在列表 {list(lists[i])} 中",
                )
            )

    if issues:
        raise OrderingError(issues)
    return ordering


def edge_set(graph: Graph) -> set[tuple[int, int]]:
    """端点对集合（无向图规范为 (min, max)）"""
    if graph.directed:
        return set(graph.edges)
    return {(min(u, v), max(u, v)) for u, v in graph.edges}
