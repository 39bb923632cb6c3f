"""主入口 + CLI"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .approx import approx_general, approx_singleton
from .config import Config, load_config
from .documents import (
    read_graph,
    read_instance,
    read_ordering,
    save_text,
    write_instance,
    write_ordering,
)
from .errors import BudgetExceeded, ConfigError, DocumentError, TempordError
from .instances import FAMILIES, REDUCTIONS, gen_family, read_dimacs
from .model import Objective, validate_instance, validate_ordering
from .reach import decide, reachability_report
from .report import (
    approx_pairs,
    format_pairs,
    reach_pairs,
    save_json_report,
    solve_pairs,
)
from .solvers import ALGORITHMS, Mode, choose_algorithm, solve

EXIT_YES = 0
EXIT_NO = 1
EXIT_ERROR = 2
EXIT_BUDGET = 3


class CLIError(TempordError):
    """命令行参数组合不合法"""


def _log(tag: str, message: str) -> None:
    print(f"[{tag}] {message}", file=sys.stderr)


def _emit(pairs) -> None:
    sys.stdout.write(format_pairs(pairs))
    sys.stdout.flush()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tempord",
        description="tempord - 时序图边类排序的可达性最优化工具",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""\
示例:
  # 穷举求最优值
  tempord solve --in p5.tg --algo brute --optimise

  # 二叉树的边着色近似
  tempord approx --in btree13.tg

  # 生成实例 / 构造归约 / 核验排序
  tempord generate --family path --params n=5 --out p5.tg
  tempord reduce --kind vclist --source g.graph --k 2 --out vc.tg --map vc.json
  tempord eval --in p5.tg --ordering p5.ord
""",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="精确求解（判定或优化）")
    p.add_argument("--in", dest="input", required=True, help="实例文件")
    p.add_argument("--algo", choices=ALGORITHMS, default="auto", help="求解算法（默认 auto）")
    p.add_argument("--optimise", action="store_true", help="优化模式：求最优值")
    p.add_argument("--k", type=int, help="覆盖实例文件中的阈值 k")
    p.add_argument("--budget", type=int, help="穷举候选预算（默认 TEMPORD_BUDGET 或 10000000）")
    p.add_argument("--workers", type=int, help="穷举进程数（默认 TEMPORD_WORKERS 或 1）")
    p.add_argument("--no-verify", action="store_true", help="跳过见证复核")
    p.add_argument("--out", help="见证排序输出路径")
    p.add_argument("--json", help="JSON 报告输出路径")
    p.add_argument("-v", "--verbose", action="store_true", help="在标准错误上打印求解进度")

    p = sub.add_parser("approx", help="着色近似排序")
    p.add_argument("--in", dest="input", required=True, help="实例文件")
    p.add_argument("--general", action="store_true", help="一般边类：交互图着色")
    p.add_argument("--out", help="排序输出路径")
    p.add_argument("--json", help="JSON 报告输出路径")

    p = sub.add_parser("generate", help="生成基准实例")
    p.add_argument("--family", choices=sorted(FAMILIES), required=True, help="实例族")
    p.add_argument("--params", nargs="*", default=[], metavar="KEY=VALUE", help="族参数")
    p.add_argument("--seed", type=int, help="随机族的种子")
    p.add_argument("--k", type=int, help="阈值（默认顶点数）")
    p.add_argument("--objective", choices=[o.value for o in Objective], default="minmax")
    p.add_argument("--out", help="输出路径（缺省写到标准输出）")

    p = sub.add_parser("reduce", help="由源问题构造实例")
    p.add_argument("--kind", choices=sorted(REDUCTIONS), required=True, help="归约种类")
    p.add_argument("--source", required=True, help="源图文件（GRAPH 格式）或 DIMACS CNF")
    p.add_argument("--k", type=int, help="源问题参数 k（pclique / vclist / vcmaxmin）")
    p.add_argument("--alpha", type=int, help="二等分宽度上界 α（bisection）")
    p.add_argument("--out", help="输出路径（缺省写到标准输出）")
    p.add_argument("--map", help="角色标签映射 JSON 输出路径")

    p = sub.add_parser("eval", help="核验排序并输出可达性报告")
    p.add_argument("--in", dest="input", required=True, help="实例文件")
    p.add_argument("--ordering", required=True, help="排序文件")

    return parser


# ============================================================
# 子命令
# ============================================================


def cmd_solve(args: argparse.Namespace, cfg: Config) -> int:
    instance = validate_instance(read_instance(args.input))
    if args.k is not None:
        instance = validate_instance(instance.with_k(args.k))
    mode = Mode.OPTIMISE if args.optimise else Mode.DECISION

    algo = args.algo
    if algo == "auto":
        algo = choose_algorithm(instance, mode)
        _log("求解", f"auto → {algo}")
    elif algo == "dag" and instance.objective == Objective.MAXMIN and mode == Mode.DECISION:
        raise CLIError("极大极小 DAG 求解器只给出可达最大值，需配合 --optimise 使用")
    _log("求解", f"n={instance.graph.vertex_count} m={instance.graph.m} h={instance.h} k={instance.k} 模式={mode.value}")

    try:
        result = solve(
            instance,
            mode,
            algo=algo,
            budget=cfg.budget,
            workers=cfg.workers,
            verify=cfg.verify_witness,
            verbose=args.verbose,
        )
    except BudgetExceeded as e:
        _log("求解", f"预算耗尽: 候选 {e.bound} > 预算 {cfg.budget}，已检查 {e.explored}")
        pairs = [("algo", algo), ("status", "budget-exceeded"), ("bound", e.bound), ("explored", e.explored)]
        if e.best is not None and e.best.optimal_value is not None:
            pairs.append(("best", e.best.optimal_value))
        _emit(pairs)
        if e.best is not None and e.best.witness is not None and args.out:
            save_text(args.out, write_ordering(e.best.witness))
            _log("求解", f"中断前的最好排序 → {args.out}")
        return EXIT_BUDGET

    _emit(solve_pairs(result))
    if args.out:
        if result.witness is None:
            _log("求解", "没有见证排序，未写出 --out")
        else:
            save_text(args.out, write_ordering(result.witness))
            _log("求解", f"见证排序 → {args.out}")
    if args.json:
        save_json_report(
            args.json,
            command="solve",
            cfg=cfg,
            stats=result.stats.to_dict(),
            result={
                "decision": result.decision,
                "optimal_value": result.optimal_value,
                "witness": None if result.witness is None else list(result.witness.times),
            },
        )
        _log("求解", f"报告 → {args.json}")

    if mode == Mode.OPTIMISE:
        return EXIT_YES
    return EXIT_YES if result.decision else EXIT_NO


def cmd_approx(args: argparse.Namespace, cfg: Config) -> int:
    instance = validate_instance(read_instance(args.input))
    result = approx_general(instance) if args.general else approx_singleton(instance)
    report = reachability_report(instance, result.ordering)
    achieved = report.max_value
    _log("近似", f"{result.coloring.color_count} 种颜色，上界 {result.bound}，实测 {achieved}")
    _emit(approx_pairs(result, achieved))

    if args.out:
        save_text(args.out, write_ordering(result.ordering))
        _log("近似", f"排序 → {args.out}")
    if args.json:
        save_json_report(
            args.json,
            command="approx",
            cfg=cfg,
            stats={"colors": result.coloring.color_count, "achieved": achieved},
            result={
                "bound": result.bound,
                "ratio": result.ratio,
                "ordering": list(result.ordering.times),
                "coloring": list(result.coloring.colors),
            },
        )
    return EXIT_YES


def _parse_params(items: Sequence[str]) -> dict[str, Any]:
    params: dict[str, Any] = {}
    for item in items:
        key, sep, raw = item.partition("=")
        if not sep or not key:
            raise CLIError(f"参数应为 KEY=VALUE: {item!r}")
        try:
            params[key] = int(raw)
        except ValueError:
            try:
                params[key] = float(raw)
            except ValueError:
                raise CLIError(f"参数 {key} 不是数值: {raw!r}") from None
    return params


def _write_or_print(path: str | None, content: str, tag: str) -> None:
    if path:
        save_text(path, content)
        _log(tag, f"已写出 {path}")
    else:
        sys.stdout.write(content)


def cmd_generate(args: argparse.Namespace, cfg: Config) -> int:
    params = _parse_params(args.params)
    if args.seed is not None:
        params["seed"] = args.seed
    instance = gen_family(
        args.family, k=args.k, objective=Objective(args.objective), **params
    )
    _log("生成", f"{args.family} {params}: n={instance.graph.vertex_count} m={instance.graph.m}")
    _write_or_print(args.out, write_instance(instance), "生成")
    return EXIT_YES


def cmd_reduce(args: argparse.Namespace, cfg: Config) -> int:
    construct = REDUCTIONS[args.kind]
    if args.kind == "sat34":
        instance, names = construct(read_dimacs(args.source))
    elif args.kind == "bisection":
        if args.alpha is None:
            raise CLIError("bisection 需要 --alpha")
        instance, names = construct(read_graph(args.source), args.alpha)
    else:
        if args.k is None:
            raise CLIError(f"{args.kind} 需要 --k")
        instance, names = construct(read_graph(args.source), args.k)

    validate_instance(instance)
    _log("归约", f"{args.kind}: n={instance.graph.vertex_count} m={instance.graph.m} h={instance.h} k={instance.k}")
    _write_or_print(args.out, write_instance(instance), "归约")
    if args.map:
        save_text(args.map, json.dumps(names.to_dict(), ensure_ascii=False, indent=2) + "\n")
        _log("归约", f"标签映射 → {args.map}")
    return EXIT_YES


def cmd_eval(args: argparse.Namespace, cfg: Config) -> int:
    instance = validate_instance(read_instance(args.input))
    ordering = validate_ordering(instance, read_ordering(args.ordering))
    report = reachability_report(instance, ordering)
    decision = decide(instance, ordering)
    _log("评估", f"{report.objective.value} = {report.extreme_value}（顶点 {report.extreme_vertex}），k={instance.k}")
    _emit(reach_pairs(report, decision))
    return EXIT_YES if decision else EXIT_NO


COMMANDS = {
    "solve": cmd_solve,
    "approx": cmd_approx,
    "generate": cmd_generate,
    "reduce": cmd_reduce,
    "eval": cmd_eval,
}


# ============================================================
# 入口
# ============================================================


def run_cli(argv: Sequence[str] | None = None) -> int:
    """执行一条命令并返回退出码：0 是/成功，1 否，2 错误，3 预算耗尽"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_YES if e.code in (0, None) else EXIT_ERROR

    try:
        cfg = load_config(
            budget=getattr(args, "budget", None),
            workers=getattr(args, "workers", None),
            verify_witness=False if getattr(args, "no_verify", False) else None,
        )
    except ConfigError as e:
        _log("配置", str(e))
        return EXIT_ERROR

    try:
        return COMMANDS[args.command](args, cfg)
    except DocumentError as e:
        _log("错误", f"文件格式错误: {e}")
        return EXIT_ERROR
    except TempordError as e:
        _log("错误", str(e))
        return EXIT_ERROR
    except OSError as e:
        _log("错误", f"无法读写文件: {e}")
        return EXIT_ERROR


def main() -> None:
    """CLI 入口"""
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
