"""着色 - 边着色（二部图 Δ 色 / 一般图 Misra–Gries Δ+1 色）与交互图顶点着色"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .errors import PreconditionError
from .model import Graph


@dataclass(frozen=True)
class Coloring:
    """colors[i] 为第 i 个对象（边或类）的颜色，取值 [0, color_count)"""

    colors: tuple[int, ...]
    color_count: int

    @classmethod
    def from_list(cls, colors: list[int]) -> Coloring:
        return cls(tuple(colors), (max(colors) + 1) if colors else 0)

    def blocks(self) -> list[list[int]]:
        """按颜色分组，组内按编号升序"""
        out: list[list[int]] = [[] for _ in range(self.color_count)]
        for item, c in enumerate(self.colors):
            out[c].append(item)
        return out


def is_proper_edge_coloring(graph: Graph, coloring: Coloring) -> bool:
    seen: set[tuple[int, int]] = set()
    for idx, (u, v) in enumerate(graph.edges):
        c = coloring.colors[idx]
        if (u, c) in seen or (v, c) in seen:
            return False
        seen.add((u, c))
        seen.add((v, c))
    return True


def is_proper_vertex_coloring(graph: Graph, coloring: Coloring) -> bool:
    return all(coloring.colors[u] != coloring.colors[v] for u, v in graph.edges)


# ============================================================
# 边着色
# ============================================================


class _EdgePalette:
    """着色过程中的状态：at[x][c] = 与 x 以颜色 c 相连的邻居"""

    def __init__(self, n: int):
        self.at: list[dict[int, int]] = [{} for _ in range(n)]

    def color_of(self, x: int, y: int) -> int | None:
        for c, z in self.at[x].items():
            if z == y:
                return c
        return None

    def free(self, x: int, c: int) -> bool:
        return c not in self.at[x]

    def first_free(self, x: int, palette: int) -> int:
        for c in range(palette):
            if c not in self.at[x]:
                return c
        raise AssertionError(f"顶点 {x} 没有空闲颜色")

    def set(self, x: int, y: int, c: int) -> None:
        self.at[x][c] = y
        self.at[y][c] = x

    def unset(self, x: int, y: int, c: int) -> None:
        del self.at[x][c]
        del self.at[y][c]

    def swap_path(self, start: int, first: int, second: int) -> None:
        """翻转从 start 出发、颜色 first/second 交替的路径"""
        path: list[tuple[int, int, int]] = []
        x, cur = start, first
        while cur in self.at[x]:
            y = self.at[x][cur]
            path.append((x, y, cur))
            x = y
            cur = second if cur == first else first
        for x, y, c in path:
            self.unset(x, y, c)
        for x, y, c in path:
            self.set(x, y, second if c == first else first)


def _bipartite_coloring(graph: Graph, palette: int) -> _EdgePalette:
    """二部图 Δ 色：a 在 u 空闲、b 在 v 空闲；a 在 v 被占用时翻转 v 出发的 a/b 交替路"""
    state = _EdgePalette(graph.vertex_count)
    for u, v in graph.edges:
        a = state.first_free(u, palette)
        if not state.free(v, a):
            b = state.first_free(v, palette)
            state.swap_path(v, a, b)
        state.set(u, v, a)
    return state


def _misra_gries(graph: Graph, palette: int) -> _EdgePalette:
    state = _EdgePalette(graph.vertex_count)
    nbrs = [graph.neighbors(x) for x in range(graph.vertex_count)]

    for x, f0 in graph.edges:
        # 极大扇：fan[i+1] 与 x 之间的边颜色在 fan[i] 上空闲
        fan = [f0]
        used = {f0}
        extended = True
        while extended:
            extended = False
            last = fan[-1]
            for w in nbrs[x]:
                if w in used:
                    continue
                c = state.color_of(x, w)
                if c is not None and state.free(last, c):
                    fan.append(w)
                    used.add(w)
                    extended = True
                    break

        c = state.first_free(x, palette)
        d = state.first_free(fan[-1], palette)
        state.swap_path(x, d, c)

        # 找第一个 d 空闲且前缀仍为扇的 w
        stop: int | None = None
        for i, w in enumerate(fan):
            if i > 0:
                ci = state.color_of(x, w)
                if ci is None or not state.free(fan[i - 1], ci):
                    break
            if state.free(w, d):
                stop = i
                break
        if stop is None:
            raise AssertionError(f"边 ({x},{f0}) 找不到可旋转的扇")

        # 旋转前缀扇：fan[j] 取 fan[j+1] 的颜色，最后 x–fan[stop] 着 d
        shifted = [state.color_of(x, fan[j + 1]) for j in range(stop)]
        for j in range(1, stop + 1):
            state.unset(x, fan[j], state.color_of(x, fan[j]))
        for j in range(stop):
            state.set(x, fan[j], shifted[j])
        state.set(x, fan[stop], d)

    return state


def edge_coloring_delta_plus_one(graph: Graph) -> Coloring:
    """真边着色，至多 Δ(G)+1 色；二部图只用 Δ 色"""
    if graph.directed:
        raise PreconditionError("directed", "边着色只接受无向图")
    delta = graph.max_degree
    if graph.m == 0:
        return Coloring((), 0)

    if nx.is_bipartite(graph.to_networkx()):
        state = _bipartite_coloring(graph, delta)
    else:
        state = _misra_gries(graph, delta + 1)

    colors = [state.color_of(u, v) for u, v in graph.edges]
    return Coloring.from_list(colors)


# ============================================================
# 交互图着色
# ============================================================


def _vertex_order(g: nx.Graph, colors: dict) -> list:
    return sorted(g)


def color_interaction_graph(H: Graph) -> Coloring:
    """二部图用分层遍历 2 着色（无边时 1 色），否则按顶点编号贪心着色"""
    if H.vertex_count == 0:
        return Coloring((), 0)
    g = H.to_networkx()
    if H.m == 0:
        return Coloring(tuple([0] * H.vertex_count), 1)
    if nx.is_bipartite(g):
        side = nx.bipartite.color(g)
    else:
        side = nx.greedy_color(g, strategy=_vertex_order)
    return Coloring.from_list([side[v] for v in range(H.vertex_count)])
