"""异常定义 - 校验问题列表 / 前置条件 / 预算超限 / 文档语法"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Issue:
    """单条校验问题：机器可读的 code + 人类可读的说明"""

    code: str
    message: str

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


class TempordError(Exception):
    """所有 tempord 异常的基类"""


class InstanceError(TempordError, ValueError):
    """实例校验失败，携带完整的问题列表"""

    def __init__(self, issues: list[Issue]):
        self.issues = list(issues)
        super().__init__("; ".join(str(i) for i in self.issues))

    @property
    def codes(self) -> list[str]:
        return [i.code for i in self.issues]


class OrderingError(TempordError, ValueError):
    """排序（时间分配）不合法"""

    def __init__(self, issues: list[Issue]):
        self.issues = list(issues)
        super().__init__("; ".join(str(i) for i in self.issues))

    @property
    def codes(self) -> list[str]:
        return [i.code for i in self.issues]


class PreconditionError(TempordError, ValueError):
    """求解器 / 构造器的前置条件不满足"""

    def __init__(self, code: str, message: str):
        self.code = code
        super().__init__(f"{code}: {message}")


class BudgetExceeded(TempordError):
    """穷举候选数超出预算

    Attributes:
        bound: 候选排序总数（或其上界）
        explored: 已检查的候选数
        best: 截至中断时的最好结果（SolveResult），可能为 None
    """

    def __init__(self, bound: int, explored: int, best: Any = None):
        self.bound = bound
        self.explored = explored
        self.best = best
        super().__init__(f"候选排序数 {bound} 超出预算，已检查 {explored} 个")


class DocumentError(TempordError, ValueError):
    """文本格式解析错误，定位到行列"""

    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, column {column}: {message}")


class ConfigError(TempordError, ValueError):
    """配置值非法"""


class ConstructionError(TempordError):
    """归约构造的输出不具备应有的结构性质"""
