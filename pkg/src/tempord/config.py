"""配置管理 - 支持 .env / 环境变量 / CLI 参数"""

from __future__ import annotations

import os
from dataclasses import dataclass

from dotenv import load_dotenv

from .errors import ConfigError


@dataclass
class Config:
    """全局配置，优先级：CLI 参数 > 环境变量 > .env 文件 > 默认值"""

    # 穷举
    budget: int = 10_000_000
    workers: int = 1

    # 求解器返回前是否重新评估见证排序
    verify_witness: bool = True


def load_config(
    *,
    budget: int | None = None,
    workers: int | None = None,
    verify_witness: bool | None = None,
) -> Config:
    """从多个来源加载配置"""
    load_dotenv()

    cfg = Config()

    if budget is not None:
        cfg.budget = budget
    elif os.environ.get("TEMPORD_BUDGET"):
        cfg.budget = _parse_int("TEMPORD_BUDGET", os.environ["TEMPORD_BUDGET"])

    if workers is not None:
        cfg.workers = workers
    elif os.environ.get("TEMPORD_WORKERS"):
        cfg.workers = _parse_int("TEMPORD_WORKERS", os.environ["TEMPORD_WORKERS"])

    if verify_witness is not None:
        cfg.verify_witness = verify_witness

    if cfg.budget < 1:
        raise ConfigError(f"budget 必须为正整数，实际为 {cfg.budget}")
    if cfg.workers < 1:
        raise ConfigError(f"workers 必须为正整数，实际为 {cfg.workers}")
    return cfg


def _parse_int(name: str, raw: str) -> int:
    try:
        return int(raw.strip())
    except ValueError:
        raise ConfigError(f"环境变量 {name} 不是整数: {raw!r}") from None
