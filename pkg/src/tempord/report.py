"""输出报告 - 标准输出上的 key value 行 + 可选 JSON 报告"""

from __future__ import annotations

import json
from dataclasses import asdict
from datetime import datetime
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable

from .approx import ApproxResult
from .config import Config
from .documents import save_text
from .reach import ReachabilityReport
from .solvers import SolveResult

Pairs = list[tuple[str, Any]]


def _format_value(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else str(value.numerator)
    if isinstance(value, (list, tuple, frozenset, set)):
        items = sorted(value) if isinstance(value, (frozenset, set)) else value
        return " ".join(str(x) for x in items)
    return str(value)


def format_pairs(pairs: Iterable[tuple[str, Any]]) -> str:
    return "".join(f"{key} {_format_value(value)}\n" for key, value in pairs)


def solve_pairs(result: SolveResult) -> Pairs:
    stats = result.stats
    pairs: Pairs = [("algo", stats.algo)]
    if stats.extra.get("measure") == "max":
        # 刻画的是可达最大值，阈值判定不适用
        pairs.append(("measure", "max"))
    else:
        pairs.append(("decision", result.decision))
    if result.optimal_value is not None:
        pairs.append(("optimal", result.optimal_value))
    pairs.append(("explored", stats.explored))
    pairs.append(("elapsed", f"{stats.elapsed:.3f}"))
    return pairs


def reach_pairs(report: ReachabilityReport, decision: bool) -> Pairs:
    return [
        ("objective", report.objective.value),
        ("extreme", report.extreme_value),
        ("extreme_vertex", report.extreme_vertex),
        ("extreme_set", report.extreme_set),
        ("sizes", report.per_vertex_size),
        ("decision", decision),
    ]


def approx_pairs(result: ApproxResult, achieved: int) -> Pairs:
    return [
        ("colors", result.coloring.color_count),
        ("bound", result.bound),
        ("achieved", achieved),
        ("ratio", result.ratio),
    ]


# ============================================================
# JSON 报告
# ============================================================


def _jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (frozenset, set)):
        return sorted(value)
    if isinstance(value, tuple):
        return list(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_jsonable(v) for v in value]
    return value


def save_json_report(
    path: str | Path,
    *,
    command: str,
    cfg: Config,
    stats: dict[str, Any],
    result: dict[str, Any],
) -> Path:
    payload = {
        "generated_at": datetime.now().isoformat(),
        "command": command,
        "config": asdict(cfg),
        "stats": _jsonable(stats),
        "result": _jsonable(result),
    }
    return save_text(path, json.dumps(payload, ensure_ascii=False, indent=2) + "\n")
