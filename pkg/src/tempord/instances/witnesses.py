"""构造证明里给出的排序，用作归约实例的证书

这些排序只依赖 NamedVertexMap 中的角色与源问题的解，
配合 reachability_report / decide 即可在测试里逐条核对证明中的计数。
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from ..errors import PreconditionError
from ..model import Instance, Ordering
from .builder import NamedVertexMap
from .reductions import CNF, sat34_class_literal


def _edge_sequence_ordering(instance: Instance, edges: Iterable[int]) -> Ordering:
    """单边类实例上，按边的先后给出排序；未列出的边接在最后（按编号）"""
    owners = instance.classes.classes_of_edge(instance.graph.m)
    sequence: list[int] = []
    placed: set[int] = set()
    for e in edges:
        for c in owners[e]:
            if c not in placed:
                placed.add(c)
                sequence.append(c)
    sequence.extend(c for c in range(instance.h) if c not in placed)
    return Ordering.from_sequence(sequence)


def _classes_first(instance: Instance, first: Iterable[int]) -> Ordering:
    head = list(dict.fromkeys(first))
    if any(not 0 <= c < instance.h for c in head):
        raise PreconditionError("bad-parameter", f"类编号超出 [0,{instance.h})")
    chosen = set(head)
    return Ordering.from_sequence(head + [c for c in range(instance.h) if c not in chosen])


# ============================================================
# 小工具 / 二等分
# ============================================================


def gadget_canonical_ordering(
    instance: Instance, gadget: NamedVertexMap, u: int, v: int
) -> Ordering:
    """全部叶边；u、v 上除 ua、vb 外的边；ua、vb；ab、ac、bc；其余边"""
    g = instance.graph
    attach = gadget.role("attach")
    triangle = gadget.role("triangle")
    late = set(attach) | set(triangle)

    leaves = g.leaf_edges()
    at_uv = sorted(
        e for e in set(g.incident(u)) | set(g.incident(v))
        if e not in late and not g.is_leaf_edge(e)
    )
    return _edge_sequence_ordering(instance, [*leaves, *at_uv, *attach, *triangle])


BISECTION_PHASES = (
    "leaf",
    "x",
    "w.first",
    "w.second",
    "decoration.clique",
    "decoration.root",
    "gadget.attach",
    "gadget.triangle",
)


def bisection_witness_ordering(
    instance: Instance, names: NamedVertexMap, side_a: Iterable[int]
) -> Ordering:
    """按 BISECTION_PHASES 的阶段依次排边

    i ∈ A 时 v_a[i]w[i] 先于 w[i]v_b[i]，否则相反。
    """
    side = set(side_a)
    wa, wb = names.role("w.a"), names.role("w.b")
    first = [wa[i] if i in side else wb[i] for i in range(len(wa))]
    second = [wb[i] if i in side else wa[i] for i in range(len(wa))]

    phases = {"w.first": first, "w.second": second}
    edges: list[int] = []
    for phase in BISECTION_PHASES:
        edges.extend(phases[phase] if phase in phases else names.role(phase))
    return _edge_sequence_ordering(instance, edges)


def bisection_reach_formula(n: int, side_a_size: int, cut: int) -> Fraction:
    """|reach(x_a)| = 1 + n(13/2 + r) + |A|(11/2 + r) + (3/2) e(A, B)，r = 3n"""
    r = 3 * n
    return (
        1
        + n * (Fraction(13, 2) + r)
        + side_a_size * (Fraction(11, 2) + r)
        + Fraction(3, 2) * cut
    )


# ============================================================
# 一般边类归约
# ============================================================


def sat34_witness_ordering(
    instance: Instance, formula: CNF, assignment: dict[int, bool]
) -> Ordering:
    """标记文字为真的 6m 个类排在最前，其余在后"""
    true_first = [
        c for c in range(instance.h)
        if assignment[abs(lit := sat34_class_literal(c, formula))] == (lit > 0)
    ]
    return _classes_first(instance, true_first)


def pclique_witness_ordering(instance: Instance, clique: Iterable[int]) -> Ordering:
    return _classes_first(instance, sorted(clique))


def vc_list_witness_ordering(instance: Instance, cover: Iterable[int], k: int) -> Ordering:
    """覆盖顶点（不足 k 个时用编号最小的其余顶点补齐）占 1..k，中间边类占 k+1，其余从 k+2 起"""
    n = instance.h - 1
    chosen = sorted(set(cover))
    if len(chosen) > k:
        raise PreconditionError("bad-parameter", f"覆盖大小 {len(chosen)} 超过 k={k}")
    rest = [i for i in range(n) if i not in set(chosen)]
    head = chosen + rest[: k - len(chosen)]
    tail = rest[k - len(chosen):]

    times = [0] * (n + 1)
    for t, i in enumerate(head, start=1):
        times[i] = t
    times[n] = k + 1
    for t, i in enumerate(tail, start=k + 2):
        times[i] = t
    return Ordering(tuple(times))


def vc_maxmin_witness_ordering(instance: Instance, cover: Iterable[int]) -> Ordering:
    return _classes_first(instance, sorted(cover))
