"""困难性归约的实例构造 - 三正则图最小二等分 / (3,4)-SAT / p-团 / 顶点覆盖（列表版、极大极小版）

每个构造返回 (Instance, NamedVertexMap)。标签沿用构造中的角色名，
例如 x_a、v_a[i]、w[i]、c[j]、v[x3,1]、v[~x3,2]、s、r、u[i,j]。
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from ..documents import read_text
from ..errors import ConstructionError, DocumentError, PreconditionError
from ..model import (
    EdgeClassSystem,
    Graph,
    Instance,
    Objective,
    Semantics,
    TimeLists,
    edge_set,
)
from ..reach import interaction_graph
from .builder import GraphBuilder, NamedVertexMap
from .gadgets import build_decoration, build_uv_gadget


def _simple_undirected(graph: Graph) -> None:
    if graph.directed:
        raise PreconditionError("directed", "源图必须是无向图")
    if len(edge_set(graph)) != graph.m or any(u == v for u, v in graph.edges):
        raise PreconditionError("bad-parameter", "源图必须是简单图")


# ============================================================
# 最小二等分（三正则图）→ 单边类
# ============================================================


def bisection_threshold(n: int, alpha: int) -> Fraction:
    """h = 1 + n(13/2 + 3n) + (n/2)(11/2 + 3n) + 3α/2"""
    return (
        1
        + n * (Fraction(13, 2) + 3 * n)
        + Fraction(n, 2) * (Fraction(11, 2) + 3 * n)
        + Fraction(3 * alpha, 2)
    )


def reduce_min_bisection(cubic_graph: Graph, alpha: int) -> tuple[Instance, NamedVertexMap]:
    """阈值取 floor(h)，r = 3n

    每个源顶点 i：路径 v_a[i] – w[i] – v_b[i]，w[i] 挂 k-2r-21 片叶子，
    v_a[i]、v_b[i] 各挂一个 (r, k-r-10)-装饰；每条源边 ij 在 v_a[i]/v_a[j]
    与 v_b[i]/v_b[j] 之间各放一个 k-小工具；x_a 连全部 v_a，x_b 连全部 v_b。
    """
    _simple_undirected(cubic_graph)
    n = cubic_graph.vertex_count
    if any(cubic_graph.degree(v) != 3 for v in range(n)):
        raise PreconditionError("not-cubic", "源图必须是三正则图")
    if n % 2:
        raise PreconditionError("odd-order", f"源图顶点数必须为偶数，实际 {n}")
    if alpha < 0:
        raise PreconditionError("bad-parameter", f"α 必须 ≥ 0，实际 {alpha}")

    r = 3 * n
    k = math.floor(bisection_threshold(n, alpha))
    w_leaves = k - 2 * r - 21
    dec_leaves = k - r - 10
    if w_leaves < 1 or dec_leaves < 1 or k < 5:
        raise PreconditionError(
            "regime", f"参数不在可构造范围内：k={k}, r={r}, w 叶数 {w_leaves}, 装饰叶数 {dec_leaves}"
        )

    b = GraphBuilder()
    va = [b.add_vertex(f"v_a[{i}]") for i in range(n)]
    w = [b.add_vertex(f"w[{i}]") for i in range(n)]
    vb = [b.add_vertex(f"v_b[{i}]") for i in range(n)]
    x_a = b.add_vertex("x_a")
    x_b = b.add_vertex("x_b")

    for i in range(n):
        b.add_edge(va[i], w[i], "w.a")
        b.add_edge(w[i], vb[i], "w.b")
    for i in range(n):
        b.add_edge(x_a, va[i], "x")
    for i in range(n):
        b.add_edge(x_b, vb[i], "x")
    for i in range(n):
        for leaf in b.add_vertices(w_leaves, f"w[{i}].leaf"):
            b.add_edge(w[i], leaf, "leaf")
    for i in range(n):
        build_decoration(r, dec_leaves, va[i], b, prefix=f"dec_a[{i}]")
        build_decoration(r, dec_leaves, vb[i], b, prefix=f"dec_b[{i}]")
    for e, (i, j) in enumerate(cubic_graph.edges):
        build_uv_gadget(k, va[i], va[j], b, prefix=f"gadget_a[{e}]")
        build_uv_gadget(k, vb[i], vb[j], b, prefix=f"gadget_b[{e}]")

    instance = Instance.singleton(b.graph(), k=k)
    return instance, b.names


# ============================================================
# (3,4)-SAT → DAG 上的一般边类
# ============================================================


@dataclass(frozen=True)
class CNF:
    """DIMACS 风格的合取范式：文字为非零整数，负号表示取反"""

    clauses: tuple[tuple[int, ...], ...]
    num_vars: int = 0

    def __post_init__(self) -> None:
        clauses = tuple(tuple(int(x) for x in c) for c in self.clauses)
        object.__setattr__(self, "clauses", clauses)
        used = max((abs(x) for c in clauses for x in c), default=0)
        object.__setattr__(self, "num_vars", max(self.num_vars, used))

    def variables(self) -> list[int]:
        return sorted({abs(x) for c in self.clauses for x in c})

    def satisfied_by(self, assignment: dict[int, bool]) -> bool:
        return all(any(assignment[abs(x)] == (x > 0) for x in c) for c in self.clauses)


def check_34sat(formula: CNF) -> None:
    """每个子句恰含三个不同变量，每个变量至多出现在四个子句中"""
    if not formula.clauses:
        raise PreconditionError("malformed-formula", "公式没有子句")
    for j, c in enumerate(formula.clauses):
        if len(c) != 3 or 0 in c or len({abs(x) for x in c}) != 3:
            raise PreconditionError("malformed-formula", f"子句 {j} {list(c)} 不是三个不同变量的析取")
    occurrences = Counter(abs(x) for c in formula.clauses for x in c)
    over = sorted(v for v, cnt in occurrences.items() if cnt > 4)
    if over:
        raise PreconditionError("malformed-formula", f"变量 {over} 出现在超过四个子句中")


def literal_label(lit: int) -> str:
    return f"x{lit}" if lit > 0 else f"~x{-lit}"


def sat34_class_literal(index: int, formula: CNF) -> int:
    """类 index 的标记文字：每个 (子句, 文字) 依次是标记 ℓ 的两个类、标记 ¬ℓ 的两个类"""
    j, rest = divmod(index, 12)
    p, q = divmod(rest, 4)
    lit = formula.clauses[j][p]
    return lit if q < 2 else -lit


def reduce_34sat(formula: CNF) -> tuple[Instance, NamedVertexMap]:
    """k = 9；每个子句、每个文字四个类，共 12m 个类"""
    check_34sat(formula)

    b = GraphBuilder(directed=True)
    clause_v = [b.add_vertex(f"c[{j}]") for j in range(len(formula.clauses))]
    lit_v: dict[tuple[int, int], int] = {}
    path_edge: dict[tuple[int, int], int] = {}
    for var in formula.variables():
        for lit in (var, -var):
            for pos in (1, 2, 3):
                lit_v[(lit, pos)] = b.add_vertex(f"v[{literal_label(lit)},{pos}]")
            path_edge[(lit, 1)] = b.add_edge(lit_v[(lit, 1)], lit_v[(lit, 2)], "path")
            path_edge[(lit, 2)] = b.add_edge(lit_v[(lit, 2)], lit_v[(lit, 3)], "path")

    classes: list[tuple[int, ...]] = []
    for j, clause in enumerate(formula.clauses):
        for lit in clause:
            entry = b.add_edge(clause_v[j], lit_v[(lit, 1)], "clause")
            pos_class = (entry, path_edge[(lit, 2)], path_edge[(-lit, 1)])
            neg_class = (entry, path_edge[(lit, 1)], path_edge[(-lit, 2)])
            classes.extend([pos_class, pos_class, neg_class, neg_class])

    graph = b.graph()
    if not (graph.is_dag() and graph.max_degree <= 5):
        raise ConstructionError("(3,4)-SAT 构造应得到最大度 ≤ 5 的 DAG")
    instance = Instance(
        graph=graph,
        classes=EdgeClassSystem(tuple(classes)),
        objective=Objective.MINMAX,
        semantics=Semantics.STRICT,
        k=9,
    )
    return instance, b.names


def parse_dimacs(text: str) -> CNF:
    """读取 DIMACS CNF：c 开头为注释，p cnf V C 为头，子句以 0 结尾"""
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    num_vars = 0
    declared: int | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise DocumentError(lineno, 1, f"非法的头部: {line!r}")
            try:
                num_vars, declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise DocumentError(lineno, 1, f"头部不是整数: {line!r}") from None
            continue
        col = 1
        for token in raw.split():
            col = raw.index(token, col - 1) + 1
            try:
                lit = int(token)
            except ValueError:
                raise DocumentError(lineno, col, f"非法文字 {token!r}") from None
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
            col += len(token)
    if current:
        clauses.append(tuple(current))
    if declared is not None and declared != len(clauses):
        raise DocumentError(0, 0, f"头部声明 {declared} 个子句，实际 {len(clauses)} 个")
    return CNF(tuple(clauses), num_vars)


def write_dimacs(formula: CNF) -> str:
    lines = [f"p cnf {formula.num_vars} {len(formula.clauses)}"]
    lines.extend(" ".join(str(x) for x in c) + " 0" for c in formula.clauses)
    return "\n".join(lines) + "\n"


def read_dimacs(path: str | Path) -> CNF:
    return parse_dimacs(read_text(path))


# ============================================================
# p-团 → 树上的一般边类
# ============================================================


def reduce_pclique(graph: Graph, k: int) -> tuple[Instance, NamedVertexMap]:
    """路径 s..r 共 k+1 个顶点，s 挂 n(C(k,2)+1) 片叶子 u[i,j]，r 挂 m 片叶子 w[j]

    E_i = 路径边 ∪ {s u[i,j]} ∪ {r w[j] : 源边 j 与 v_i 关联}，k' = |V'| - C(k,2)。
    """
    _simple_undirected(graph)
    n, m = graph.vertex_count, graph.m
    if not 2 <= k <= n:
        raise PreconditionError("bad-parameter", f"p-团要求 2 ≤ k ≤ n，实际 k={k}, n={n}")

    pairs = math.comb(k, 2)
    b = GraphBuilder()
    path = [b.add_vertex("s")]
    path += [b.add_vertex(f"p[{i}]") for i in range(1, k)]
    path.append(b.add_vertex("r"))
    s, r = path[0], path[-1]
    path_edges = [b.add_edge(path[i], path[i + 1], "path") for i in range(k)]

    u_edges: list[list[int]] = []
    for i in range(n):
        row = []
        for j in range(pairs + 1):
            u = b.add_vertex(f"u[{i},{j}]")
            row.append(b.add_edge(s, u, "u"))
        u_edges.append(row)
    w_edges = []
    for j in range(m):
        w = b.add_vertex(f"w[{j}]")
        w_edges.append(b.add_edge(r, w, "w"))

    classes = []
    for i in range(n):
        incident = [w_edges[j] for j, (a, c) in enumerate(graph.edges) if i in (a, c)]
        classes.append(tuple(path_edges + u_edges[i] + incident))

    g = b.graph()
    instance = Instance(
        graph=g,
        classes=EdgeClassSystem(tuple(classes)),
        k=g.vertex_count - pairs,
    )
    return instance, b.names


# ============================================================
# 顶点覆盖 → 列表版（五顶点路径的不交并）
# ============================================================


def reduce_vertex_cover_list(graph: Graph, k: int) -> tuple[Instance, NamedVertexMap]:
    """每条源边 e = v_i v_j 一条路径 u[e] – u'[e] – x[e] – v'[e] – v[e]

    类 i（i < n）为源顶点 i 一侧的外侧边，类 n 为全部中间边；
    L_i = [n+1] \\ {k+1}，L_n = {k+1}，阈值 4。孤立源顶点对应空类。
    """
    _simple_undirected(graph)
    n, m = graph.vertex_count, graph.m
    if m == 0:
        raise PreconditionError("bad-parameter", "源图没有边")
    if not 0 <= k < n:
        raise PreconditionError("bad-parameter", f"要求 0 ≤ k < n，实际 k={k}, n={n}")

    b = GraphBuilder()
    outer: list[list[int]] = [[] for _ in range(n)]
    middle: list[int] = []
    for e, (i, j) in enumerate(graph.edges):
        u = b.add_vertex(f"u[{e}]")
        u1 = b.add_vertex(f"u'[{e}]")
        x = b.add_vertex(f"x[{e}]")
        v1 = b.add_vertex(f"v'[{e}]")
        v = b.add_vertex(f"v[{e}]")
        outer[i].append(b.add_edge(u, u1, "outer"))
        middle.append(b.add_edge(u1, x, "middle"))
        middle.append(b.add_edge(x, v1, "middle"))
        outer[j].append(b.add_edge(v1, v, "outer"))

    classes = [tuple(outer[i]) for i in range(n)] + [tuple(middle)]
    others = tuple(t for t in range(1, n + 2) if t != k + 1)
    lists = TimeLists(tuple([others] * n + [(k + 1,)]))
    instance = Instance(
        graph=b.graph(),
        classes=EdgeClassSystem(tuple(classes)),
        time_lists=lists,
        k=4,
    )
    if not all(n in pair for pair in interaction_graph(instance).edges):
        raise ConstructionError("交互图应为以中间类为中心的星")
    return instance, b.names


# ============================================================
# 顶点覆盖 → 极大极小（树）
# ============================================================


def reduce_vertex_cover_maxmin(graph: Graph, k: int) -> tuple[Instance, NamedVertexMap]:
    """路径 s..r 共 n-k 个顶点，r 挂 m 片叶子 w[j]，s 挂 m+1 片叶子 u[j]

    E_i = 路径边 ∪ {s u[j]} ∪ {r w[j] : v_i ∈ e_j}，k' = n + m - k + 1，目标为极大极小。
    """
    _simple_undirected(graph)
    n, m = graph.vertex_count, graph.m
    if n - k < 2 or k < 0:
        raise PreconditionError("bad-parameter", f"要求 0 ≤ k 且 n-k ≥ 2，实际 k={k}, n={n}")

    b = GraphBuilder()
    length = n - k
    path = [b.add_vertex("s")]
    path += [b.add_vertex(f"p[{i}]") for i in range(1, length - 1)]
    path.append(b.add_vertex("r"))
    s, r = path[0], path[-1]
    path_edges = [b.add_edge(path[i], path[i + 1], "path") for i in range(length - 1)]

    w_edges = []
    for j in range(m):
        w = b.add_vertex(f"w[{j}]")
        w_edges.append(b.add_edge(r, w, "w"))
    u_edges = []
    for j in range(m + 1):
        u = b.add_vertex(f"u[{j}]")
        u_edges.append(b.add_edge(s, u, "u"))

    classes = []
    for i in range(n):
        incident = [w_edges[j] for j, (a, c) in enumerate(graph.edges) if i in (a, c)]
        classes.append(tuple(path_edges + u_edges + incident))

    instance = Instance(
        graph=b.graph(),
        classes=EdgeClassSystem(tuple(classes)),
        objective=Objective.MAXMIN,
        k=n + m - k + 1,
    )
    return instance, b.names


REDUCTIONS = {
    "bisection": reduce_min_bisection,
    "sat34": reduce_34sat,
    "pclique": reduce_pclique,
    "vclist": reduce_vertex_cover_list,
    "vcmaxmin": reduce_vertex_cover_maxmin,
}
