"""基准实例族 - 路径 / 完全二叉树 / 带悬挂叶的团 / 随机树 / 随机 DAG / 随机图

全部生成单边类系统，类按边编号排列；随机族由显式 seed 决定。
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Callable

import networkx as nx

from ..errors import PreconditionError
from ..model import Graph, Instance, Objective


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise PreconditionError("bad-parameter", message)


def path_graph(n: int) -> Graph:
    _require(n >= 1, f"path 要求 n ≥ 1，实际 {n}")
    return Graph(False, n, tuple((i, i + 1) for i in range(n - 1)))


def complete_binary_tree(depth: int) -> Graph:
    """深度 depth 的完全二叉树，2^(depth+1)-1 个顶点，孩子 c 的父亲为 (c-1)//2"""
    _require(depth >= 0, f"depth 必须 ≥ 0，实际 {depth}")
    n = 2 ** (depth + 1) - 1
    return Graph(False, n, tuple(((c - 1) // 2, c) for c in range(1, n)))


def clique_with_pendants(r: int, s: int) -> Graph:
    """r 团，每个团顶点挂 s 片叶子；团边在前，叶边在后"""
    _require(r >= 1 and s >= 0, f"clique_with_pendants 要求 r ≥ 1, s ≥ 0，实际 r={r}, s={s}")
    edges = list(combinations(range(r), 2))
    for i in range(r):
        for j in range(s):
            edges.append((i, r + i * s + j))
    return Graph(False, r + r * s, tuple(edges))


def random_tree(n: int, seed: int) -> Graph:
    """均匀随机标号树（Prüfer 序列）"""
    _require(n >= 1, f"random_tree 要求 n ≥ 1，实际 {n}")
    if n == 1:
        return Graph(False, 1, ())
    rng = random.Random(seed)
    prufer = [rng.randrange(n) for _ in range(n - 2)]
    tree = nx.from_prufer_sequence(prufer)
    edges = sorted((min(u, v), max(u, v)) for u, v in tree.edges)
    return Graph(False, n, tuple(edges))


def random_dag(n: int, p: float, seed: int) -> Graph:
    """G(n, p) 有向随机图只保留 u < v 的边，得到以编号为拓扑序的 DAG"""
    _require(n >= 1, f"random_dag 要求 n ≥ 1，实际 {n}")
    _require(0.0 <= p <= 1.0, f"p 必须在 [0,1] 内，实际 {p}")
    g = nx.gnp_random_graph(n, p, seed=seed, directed=True)
    edges = sorted((u, v) for u, v in g.edges if u < v)
    return Graph(True, n, tuple(edges))


def random_graph(n: int, p: float, seed: int) -> Graph:
    _require(n >= 1, f"random_graph 要求 n ≥ 1，实际 {n}")
    _require(0.0 <= p <= 1.0, f"p 必须在 [0,1] 内，实际 {p}")
    g = nx.gnp_random_graph(n, p, seed=seed)
    edges = sorted((min(u, v), max(u, v)) for u, v in g.edges)
    return Graph(False, n, tuple(edges))


FAMILIES: dict[str, Callable[..., Graph]] = {
    "path": path_graph,
    "complete_binary_tree": complete_binary_tree,
    "clique_with_pendants": clique_with_pendants,
    "random_tree": random_tree,
    "random_dag": random_dag,
    "random_graph": random_graph,
}


def gen_family(
    kind: str,
    *,
    k: int | None = None,
    objective: Objective = Objective.MINMAX,
    **params,
) -> Instance:
    """按族名生成单边类实例；k 缺省为顶点数"""
    if kind not in FAMILIES:
        raise PreconditionError("bad-parameter", f"未知实例族: {kind}（可选 {', '.join(FAMILIES)}）")
    try:
        graph = FAMILIES[kind](**params)
    except TypeError as e:
        raise PreconditionError("bad-parameter", f"{kind} 参数错误: {e}") from None
    return Instance.singleton(graph, objective=objective, k=k)
