"""树上的 (α, β) 状态动态规划，判定“最大可达数 ≤ k”

以顶点 0 为根。非根顶点 v 的状态 (α, β) 相对于它通往父亲的边 e↑：
  α = T_v 中能经 e↑ 离开的顶点在 T_v 内的最大可达数（v 自身总能离开）
  β = 从父亲经 e↑ 进入 T_v 后能到达的 T_v 顶点数
在 v 处枚举全部 deg(v)! 种关联边局部顺序 Π（含 e↑）：
  α = max(1 + Σ_j β_j, max_{Π(i) < Π(↑)} 1 + α_i + Σ_{Π(j) > Π(i)} β_j)
  β = 1 + Σ_{Π(i) > Π(↑)} β_i
并要求对所有孩子 1 + α_i + Σ_{Π(j) > Π(i)} β_j ≤ k 以及 1 + Σ_i β_i ≤ k。
所有约束对 (α_i, β_i) 单调，只保留 Pareto 极小状态。
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

import networkx as nx

from ..model import Instance, Ordering
from ..reach import lower_bound
from .base import Mode, SearchStats, SingletonSolver, SolveResult, log
from .tree_vc import check_tree

State = tuple[int, int]


@dataclass(frozen=True)
class _Choice:
    """一个可实现状态的回溯指针：局部顺序 Π 和各孩子选用的状态"""

    perm: tuple[int, ...]
    child_states: tuple[State, ...]


def _evaluate(
    perm: tuple[int, ...], states: tuple[State, ...], up: int | None, k: int
) -> State | None:
    """给定局部顺序与孩子状态，返回 (α, β)；违反约束时返回 None

    perm 中的元素是孩子序号，up 表示 e↑（根为 None）。
    """
    suffix = 0
    up_suffix = 0
    seen_up = False
    exit_best = 0
    for item in reversed(perm):
        if item == up:
            seen_up = True
            up_suffix = suffix
            continue
        alpha_i, beta_i = states[item]
        val = 1 + alpha_i + suffix
        if val > k:
            return None
        if seen_up:
            exit_best = max(exit_best, val)
        suffix += beta_i
    if 1 + suffix > k:
        return None
    return max(1 + suffix, exit_best), 1 + up_suffix


def _pareto(states: dict[State, _Choice]) -> dict[State, _Choice]:
    """去掉被支配的状态（α、β 都不小于另一状态）"""
    keep: dict[State, _Choice] = {}
    for s in sorted(states):
        if any(o[0] <= s[0] and o[1] <= s[1] for o in keep):
            continue
        keep[s] = states[s]
    return keep


class TreeDPSolver(SingletonSolver):
    name = "tree-dp"

    def check(self, instance: Instance) -> None:
        check_tree(instance)

    def _solve(self, instance: Instance, mode: Mode) -> SolveResult:
        if mode == Mode.DECISION:
            return self._decide(instance, instance.k)

        # 优化模式：从度数下界起逐个尝试 k
        stats = SearchStats()
        n = instance.graph.vertex_count
        for k in range(lower_bound(instance), n + 1):
            result = self._decide(instance, k)
            stats.explored += result.stats.explored
            if result.decision:
                stats.extra.update(result.stats.extra)
                stats.extra["tried_k"] = k - lower_bound(instance) + 1
                return SolveResult(
                    decision=k <= instance.k,
                    optimal_value=k,
                    witness=result.witness,
                    stats=stats,
                )
        raise AssertionError("k = n 时判定必为真")

    def _decide(self, instance: Instance, k: int) -> SolveResult:
        g = instance.graph
        stats = SearchStats()
        if g.max_degree + 1 > k:
            stats.extra["short_circuit"] = "degree"
            return SolveResult(decision=False, stats=stats)

        root = 0
        nxg = g.to_networkx()
        parent: dict[int, int] = {}
        children: dict[int, list[int]] = {v: [] for v in range(g.vertex_count)}
        bfs_order = [root]
        for u, v in nx.bfs_edges(nxg, root):
            parent[v] = u
            children[u].append(v)
            bfs_order.append(v)
        for v in children:
            children[v].sort()
        edge_of = {}
        for idx, (a, b) in enumerate(g.edges):
            edge_of[(a, b)] = idx
            edge_of[(b, a)] = idx

        frontier: dict[int, dict[State, _Choice]] = {}
        root_choice: _Choice | None = None
        max_frontier = 0

        for v in reversed(bfs_order):
            kids = children[v]
            d = len(kids)
            is_root = v == root
            up = None if is_root else d
            items = tuple(range(d)) if is_root else tuple(range(d + 1))
            child_options = [sorted(frontier[c]) for c in kids]

            found: dict[State, _Choice] = {}
            feasible_root = False
            for perm in permutations(items):
                for combo in product(*child_options):
                    stats.explored += 1
                    state = _evaluate(perm, combo, up, k)
                    if state is None:
                        continue
                    if is_root:
                        root_choice = _Choice(perm, combo)
                        feasible_root = True
                        break
                    if state not in found:
                        found[state] = _Choice(perm, combo)
                if feasible_root:
                    break

            if is_root:
                break
            if not found:
                log("求解", f"tree-dp: 顶点 {v} 无可实现状态，k={k} 判否", verbose=self.verbose)
                stats.extra["max_frontier"] = max_frontier
                return SolveResult(decision=False, stats=stats)
            frontier[v] = _pareto(found)
            max_frontier = max(max_frontier, len(frontier[v]))

        stats.extra["max_frontier"] = max_frontier
        if root_choice is None:
            return SolveResult(decision=False, stats=stats)

        witness = self._reconstruct(
            bfs_order, children, parent, edge_of, frontier, root_choice
        )
        return SolveResult(decision=True, witness=witness, stats=stats)

    @staticmethod
    def _reconstruct(
        bfs_order: list[int],
        children: dict[int, list[int]],
        parent: dict[int, int],
        edge_of: dict[tuple[int, int], int],
        frontier: dict[int, dict[State, _Choice]],
        root_choice: _Choice,
    ) -> Ordering:
        """自顶向下确定各顶点选用的回溯指针，再自底向上拼接边序列

        每个非根顶点得到 (prefix, suffix)：prefix 排在 e↑ 之前，suffix 在其后。
        """
        root = bfs_order[0]
        chosen: dict[int, _Choice] = {root: root_choice}
        for v in bfs_order:
            choice = chosen[v]
            for c, state in zip(children[v], choice.child_states):
                chosen[c] = frontier[c][state]

        parts: dict[int, tuple[list[int], list[int]]] = {}
        for v in reversed(bfs_order):
            kids = children[v]
            up = len(kids) if v != root else None
            before: list[int] = []
            after: list[int] = []
            current = before
            for item in chosen[v].perm:
                if item == up:
                    current = after
                    continue
                c = kids[item]
                c_prefix, _ = parts[c]
                current.extend(c_prefix)
                current.append(edge_of[(v, c)])
            for c in kids:
                after.extend(parts[c][1])
            if v == root:
                return Ordering.from_sequence(before + after)
            parts[v] = (before, after)
            for c in kids:
                del parts[c]

        raise AssertionError("根顶点未处理")


def solve_tree_dp(
    instance: Instance, mode: Mode = Mode.DECISION, *, verbose: bool = False
) -> SolveResult:
    return TreeDPSolver(verbose=verbose).solve(instance, mode)
