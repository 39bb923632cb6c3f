"""归约用的两种子结构：(r, s)-装饰 与 u-v k-小工具"""

from __future__ import annotations

from itertools import combinations

from ..errors import PreconditionError
from .builder import GraphBuilder, NamedVertexMap


def build_decoration(
    r: int, s: int, root: int, into: GraphBuilder, *, prefix: str = "dec"
) -> NamedVertexMap:
    """以 root 为根的 (r, s)-装饰：r 团，每个团顶点挂 s 片叶子，root 连向全部团顶点

    边角色：leaf（叶边）、decoration.clique（团边）、decoration.root（根边）。
    返回的映射使用局部标签 clique[j] / leaf[j,l] 和同名角色。
    """
    if r < 1 or s < 1:
        raise PreconditionError("bad-parameter", f"装饰要求 r,s ≥ 1，实际 r={r}, s={s}")

    local = NamedVertexMap()
    clique = []
    for j in range(r):
        vid = into.add_vertex(f"{prefix}.clique[{j}]")
        local.add(f"clique[{j}]", vid)
        clique.append(vid)

    for a, b in combinations(range(r), 2):
        local.add_edge_role("clique", into.add_edge(clique[a], clique[b], "decoration.clique"))
    for j, c in enumerate(clique):
        for l in range(s):
            leaf = into.add_vertex(f"{prefix}.leaf[{j},{l}]")
            local.add(f"leaf[{j},{l}]", leaf)
            local.add_edge_role("leaf", into.add_edge(c, leaf, "leaf"))
    for c in clique:
        local.add_edge_role("root", into.add_edge(root, c, "decoration.root"))
    return local


def build_uv_gadget(
    k: int, u: int, v: int, into: GraphBuilder, *, prefix: str = "gadget"
) -> NamedVertexMap:
    """u-v k-小工具：三角形 abc，a–u、b–v，a、b 各挂 k-4 片叶子，c 挂 k-3 片

    边角色：gadget.attach（ua, vb）、gadget.triangle（ab, ac, bc）、leaf。
    局部角色 attach / triangle / leaf 按上述顺序排列。
    """
    if k < 5:
        raise PreconditionError("bad-parameter", f"k-小工具要求 k ≥ 5，实际 k={k}")

    local = NamedVertexMap()
    a = into.add_vertex(f"{prefix}.a")
    b = into.add_vertex(f"{prefix}.b")
    c = into.add_vertex(f"{prefix}.c")
    for name, vid in (("a", a), ("b", b), ("c", c)):
        local.add(name, vid)

    local.add_edge_role("attach", into.add_edge(u, a, "gadget.attach"))
    local.add_edge_role("attach", into.add_edge(v, b, "gadget.attach"))
    local.add_edge_role("triangle", into.add_edge(a, b, "gadget.triangle"))
    local.add_edge_role("triangle", into.add_edge(a, c, "gadget.triangle"))
    local.add_edge_role("triangle", into.add_edge(b, c, "gadget.triangle"))

    for name, center, count in (("a", a, k - 4), ("b", b, k - 4), ("c", c, k - 3)):
        for l in range(count):
            leaf = into.add_vertex(f"{prefix}.{name}.leaf[{l}]")
            local.add(f"{name}.leaf[{l}]", leaf)
            local.add_edge_role("leaf", into.add_edge(center, leaf, "leaf"))
    return local
