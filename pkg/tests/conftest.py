"""共享夹具与源问题的穷举判定器"""

from __future__ import annotations

import random
from itertools import combinations, product

import pytest

from tempord.instances.reductions import CNF
from tempord.model import EdgeClassSystem, Graph, Instance, Objective, Ordering, Semantics


def path(n: int) -> Graph:
    return Graph(False, n, tuple((i, i + 1) for i in range(n - 1)))


def singleton(graph: Graph, k: int | None = None, **kwargs) -> Instance:
    return Instance.singleton(graph, k=k, **kwargs)


def random_graph(rng: random.Random, n: int, p: float = 0.5, *, directed: bool = False) -> Graph:
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v] if directed else list(
        combinations(range(n), 2)
    )
    edges = [e for e in pairs if rng.random() < p]
    return Graph(directed, n, tuple(edges))


def random_classes(rng: random.Random, m: int, h: int) -> EdgeClassSystem:
    """随机类系统：每条边至少落在一个类里，类可以重叠"""
    classes: list[set[int]] = [set() for _ in range(h)]
    for e in range(m):
        classes[rng.randrange(h)].add(e)
    for c in classes:
        if m and rng.random() < 0.3:
            c.add(rng.randrange(m))
    return EdgeClassSystem(tuple(tuple(c) for c in classes))


def random_instance(
    rng: random.Random,
    *,
    max_n: int = 6,
    general: bool | None = None,
    directed: bool | None = None,
    semantics: Semantics = Semantics.STRICT,
) -> Instance:
    """小规模随机实例（至少一条边）"""
    if directed is None:
        directed = rng.random() < 0.3
    if general is None:
        general = rng.random() < 0.5
    while True:
        n = rng.randint(2, max_n)
        g = random_graph(rng, n, rng.uniform(0.3, 0.8), directed=directed)
        if g.m:
            break
    if general:
        classes = random_classes(rng, g.m, rng.randint(1, min(g.m, 5)))
    else:
        classes = EdgeClassSystem.singletons(g.m)
    return Instance(graph=g, classes=classes, semantics=semantics, k=n)


def random_ordering(rng: random.Random, h: int) -> Ordering:
    times = list(range(1, h + 1))
    rng.shuffle(times)
    return Ordering(tuple(times))


# ============================================================
# 源问题判定器（只用于小图）
# ============================================================


def min_vertex_cover(graph: Graph) -> int:
    n = graph.vertex_count
    for size in range(n + 1):
        for cover in combinations(range(n), size):
            chosen = set(cover)
            if all(u in chosen or v in chosen for u, v in graph.edges):
                return size
    return n


def vertex_cover_of_size(graph: Graph, k: int) -> list[int] | None:
    for size in range(k + 1):
        for cover in combinations(range(graph.vertex_count), size):
            chosen = set(cover)
            if all(u in chosen or v in chosen for u, v in graph.edges):
                return list(cover)
    return None


def find_clique(graph: Graph, k: int) -> list[int] | None:
    adjacent = {(min(u, v), max(u, v)) for u, v in graph.edges}
    for group in combinations(range(graph.vertex_count), k):
        if all(pair in adjacent for pair in combinations(group, 2)):
            return list(group)
    return None


def satisfying_assignment(formula: CNF) -> dict[int, bool] | None:
    variables = formula.variables()
    for values in product((False, True), repeat=len(variables)):
        assignment = dict(zip(variables, values))
        if formula.satisfied_by(assignment):
            return assignment
    return None


def all_graphs(n: int):
    """n 个顶点上的全部标号简单图"""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(False, n, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


@pytest.fixture
def p3() -> Instance:
    return singleton(path(3))


@pytest.fixture
def p5() -> Instance:
    return singleton(path(5))


@pytest.fixture
def maxmin_p3() -> Instance:
    return singleton(path(3), objective=Objective.MAXMIN)
