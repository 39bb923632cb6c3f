"""实例 / 排序 / 源图文件的读写

实例文件格式（每行一项，# 之后为注释）：
    TEMPORD 1
    directed 0
    semantics strict
    objective minmax
    vertices 3
    edges 2
    0 1
    1 2
    classes 2
    1 0
    1 1
    lists 0
    k 3

排序文件：ORDERING 1，然后每行 "类编号 时间步"。
源图文件（reduce 的输入）：GRAPH 1，然后 vertices / edges 两段，同实例文件。
"""

from __future__ import annotations

import os
import tempfile
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from .errors import DocumentError, Issue, OrderingError
from .model import (
    EdgeClassSystem,
    Graph,
    Instance,
    Objective,
    Ordering,
    Semantics,
    TimeLists,
    check_instance,
)

INSTANCE_HEADER = "TEMPORD"
ORDERING_HEADER = "ORDERING"
GRAPH_HEADER = "GRAPH"
VERSION = 1


# ============================================================
# 逐行读取
# ============================================================


@dataclass(frozen=True)
class _Token:
    text: str
    column: int


@dataclass(frozen=True)
class _Line:
    number: int
    tokens: tuple[_Token, ...]

    @property
    def end_column(self) -> int:
        if not self.tokens:
            return 1
        last = self.tokens[-1]
        return last.column + len(last.text)


def _tokenize(raw: str) -> tuple[_Token, ...]:
    tokens = []
    pos = 0
    while pos < len(raw):
        if raw[pos].isspace():
            pos += 1
            continue
        start = pos
        while pos < len(raw) and not raw[pos].isspace():
            pos += 1
        tokens.append(_Token(raw[start:pos], start + 1))
    return tuple(tokens)


class _Cursor:
    """跳过空行和注释的行游标，所有报错都带行号列号"""

    def __init__(self, text: str):
        self._lines: list[_Line] = []
        last = 0
        for number, raw in enumerate(text.splitlines(), start=1):
            last = number
            body = raw.split("#", 1)[0]
            tokens = _tokenize(body)
            if tokens:
                self._lines.append(_Line(number, tokens))
        self._eof_line = last + 1
        self._pos = 0

    def next(self, expecting: str) -> _Line:
        if self._pos >= len(self._lines):
            raise DocumentError(self._eof_line, 1, f"文件提前结束，缺少 {expecting}")
        line = self._lines[self._pos]
        self._pos += 1
        return line

    def done(self) -> bool:
        return self._pos >= len(self._lines)

    def expect_end(self) -> None:
        if self._pos < len(self._lines):
            line = self._lines[self._pos]
            raise DocumentError(line.number, line.tokens[0].column, "文件末尾有多余内容")

    def keyword(self, name: str) -> tuple[_Line, _Token]:
        """读取形如 "name value" 的行"""
        line = self.next(f"'{name}' 行")
        head = line.tokens[0]
        if head.text != name:
            raise DocumentError(line.number, head.column, f"期望 '{name}'，实际 '{head.text}'")
        if len(line.tokens) != 2:
            raise DocumentError(line.number, line.end_column, f"'{name}' 行应恰有一个值")
        return line, line.tokens[1]


def _int(line: _Line, token: _Token, *, minimum: int | None = None) -> int:
    try:
        value = int(token.text)
    except ValueError:
        raise DocumentError(line.number, token.column, f"不是整数: {token.text!r}") from None
    if minimum is not None and value < minimum:
        raise DocumentError(line.number, token.column, f"值 {value} 小于 {minimum}")
    return value


def _choice(line: _Line, token: _Token, options: tuple[str, ...]) -> str:
    if token.text not in options:
        raise DocumentError(
            line.number, token.column, f"取值 {token.text!r} 不在 {'|'.join(options)} 中"
        )
    return token.text


def _header(cursor: _Cursor, name: str) -> None:
    line, token = cursor.keyword(name)
    version = _int(line, token)
    if version != VERSION:
        raise DocumentError(line.number, token.column, f"不支持的版本 {version}")


def _count_line(cursor: _Cursor, name: str) -> tuple[_Line, int]:
    line, token = cursor.keyword(name)
    return line, _int(line, token, minimum=0)


def _parse_edges(cursor: _Cursor, n: int, directed: bool) -> tuple[tuple[int, int], ...]:
    _, m = _count_line(cursor, "edges")
    edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    for idx in range(m):
        line = cursor.next(f"第 {idx} 条边")
        if len(line.tokens) != 2:
            raise DocumentError(line.number, line.tokens[0].column, "边行应为 'u v'")
        ends = []
        for token in line.tokens:
            v = _int(line, token)
            if not 0 <= v < n:
                raise DocumentError(line.number, token.column, f"端点 {v} 超出 [0,{n})")
            ends.append(v)
        u, v = ends
        if u == v:
            raise DocumentError(line.number, line.tokens[0].column, f"自环 ({u},{v})")
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in seen:
            raise DocumentError(
                line.number, line.tokens[0].column, f"边 ({u},{v}) 与边 {seen[key]} 重复"
            )
        seen[key] = idx
        edges.append((u, v))
    return tuple(edges)


def _parse_counted_rows(
    cursor: _Cursor, count: int, what: str, *, upper: int | None, minimum: int
) -> list[tuple[int, ...]]:
    """每行 "c x1 … xc"，xi ≥ minimum（以及 < upper，若给出）"""
    rows = []
    for idx in range(count):
        line = cursor.next(f"第 {idx} 个{what}")
        c = _int(line, line.tokens[0], minimum=0)
        if len(line.tokens) != c + 1:
            raise DocumentError(
                line.number, line.tokens[0].column,
                f"{what}声明 {c} 项，实际 {len(line.tokens) - 1} 项",
            )
        values = []
        for token in line.tokens[1:]:
            x = _int(line, token, minimum=minimum)
            if upper is not None and x >= upper:
                raise DocumentError(line.number, token.column, f"编号 {x} 超出 [0,{upper})")
            values.append(x)
        rows.append(tuple(values))
    return rows


# ============================================================
# 实例
# ============================================================


def parse_instance(text: str) -> Instance:
    cursor = _Cursor(text)
    _header(cursor, INSTANCE_HEADER)

    line, token = cursor.keyword("directed")
    directed = _choice(line, token, ("0", "1")) == "1"
    line, token = cursor.keyword("semantics")
    semantics = Semantics(_choice(line, token, tuple(s.value for s in Semantics)))
    line, token = cursor.keyword("objective")
    objective = Objective(_choice(line, token, tuple(o.value for o in Objective)))

    vertices_line, token = cursor.keyword("vertices")
    n = _int(vertices_line, token, minimum=1)
    edges = _parse_edges(cursor, n, directed)

    classes_line, h = _count_line(cursor, "classes")
    classes = _parse_counted_rows(cursor, h, "类", upper=len(edges), minimum=0)

    line, token = cursor.keyword("lists")
    has_lists = _choice(line, token, ("0", "1")) == "1"
    time_lists = None
    if has_lists:
        rows = _parse_counted_rows(cursor, h, "时间列表", upper=None, minimum=1)
        for idx, row in enumerate(rows):
            if not row:
                raise DocumentError(line.number, token.column, f"类 {idx} 的时间列表为空")
        time_lists = TimeLists(tuple(rows))

    k_line, token = cursor.keyword("k")
    k = _int(k_line, token, minimum=1)
    cursor.expect_end()

    instance = Instance(
        graph=Graph(directed=directed, vertex_count=n, edges=edges),
        classes=EdgeClassSystem(tuple(classes)),
        objective=objective,
        semantics=semantics,
        time_lists=time_lists,
        k=k,
    )
    issues = check_instance(instance)
    if issues:
        # 逐行检查之后剩下的只有覆盖类问题，定位到 classes 段
        raise DocumentError(
            classes_line.number, 1, "; ".join(str(i) for i in issues)
        )
    return instance


def write_instance(instance: Instance) -> str:
    g = instance.graph
    lines = [
        f"{INSTANCE_HEADER} {VERSION}",
        f"directed {int(g.directed)}",
        f"semantics {instance.semantics.value}",
        f"objective {instance.objective.value}",
        f"vertices {g.vertex_count}",
        f"edges {g.m}",
    ]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    lines.append(f"classes {instance.h}")
    lines.extend(" ".join(str(x) for x in (len(c), *c)) for c in instance.classes.classes)
    if instance.time_lists is None:
        lines.append("lists 0")
    else:
        lines.append("lists 1")
        lines.extend(
            " ".join(str(x) for x in (len(lst), *lst)) for lst in instance.time_lists.lists
        )
    lines.append(f"k {instance.k}")
    return "\n".join(lines) + "\n"


# ============================================================
# 排序
# ============================================================


def parse_ordering(text: str) -> Ordering:
    """类编号必须恰好覆盖 0..h-1，时间步两两不同；列表约束留给 validate_ordering"""
    cursor = _Cursor(text)
    _header(cursor, ORDERING_HEADER)

    entries: list[tuple[_Line, int, int]] = []
    while not cursor.done():
        line = cursor.next("排序行")
        if len(line.tokens) != 2:
            raise DocumentError(line.number, line.tokens[0].column, "排序行应为 '类编号 时间步'")
        cls_idx = _int(line, line.tokens[0], minimum=0)
        t = _int(line, line.tokens[1])
        entries.append((line, cls_idx, t))

    issues: list[Issue] = []
    h = len(entries)
    owners: dict[int, int] = {}
    for line, cls_idx, _ in entries:
        if cls_idx in owners:
            issues.append(
                Issue("duplicate-class", f"第 {line.number} 行: 类 {cls_idx} 已在第 {owners[cls_idx]} 行出现")
            )
        else:
            owners[cls_idx] = line.number
    missing = [i for i in range(h) if i not in owners]
    if missing:
        issues.append(Issue("missing-class", f"缺少类 {missing}"))
    counts = Counter(t for _, _, t in entries)
    for t, c in sorted(counts.items()):
        if c > 1:
            classes = [i for _, i, x in entries if x == t]
            issues.append(Issue("duplicate-time", f"时间步 {t} 被类 {classes} 重复使用"))
    if issues:
        raise OrderingError(issues)

    times = [0] * h
    for _, cls_idx, t in entries:
        times[cls_idx] = t
    return Ordering(tuple(times))


def write_ordering(ordering: Ordering) -> str:
    lines = [f"{ORDERING_HEADER} {VERSION}"]
    lines.extend(f"{i} {t}" for i, t in enumerate(ordering.times))
    return "\n".join(lines) + "\n"


# ============================================================
# 源图
# ============================================================


def parse_graph(text: str) -> Graph:
    cursor = _Cursor(text)
    _header(cursor, GRAPH_HEADER)
    line, token = cursor.keyword("vertices")
    n = _int(line, token, minimum=1)
    edges = _parse_edges(cursor, n, directed=False)
    cursor.expect_end()
    return Graph(directed=False, vertex_count=n, edges=edges)


def write_graph(graph: Graph) -> str:
    lines = [f"{GRAPH_HEADER} {VERSION}", f"vertices {graph.vertex_count}", f"edges {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


# ============================================================
# 文件
# ============================================================


def read_text(path: str | Path) -> str:
    """按 UTF-8 读入；非法字节报为带行列的 DocumentError"""
    data = Path(path).read_bytes()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        head = data[: e.start]
        line = head.count(b"\n") + 1
        column = len(head[head.rfind(b"\n") + 1 :].decode("utf-8")) + 1
        raise DocumentError(line, column, "不是合法的 UTF-8 文本") from None


def read_instance(path: str | Path) -> Instance:
    return parse_instance(read_text(path))


def read_ordering(path: str | Path) -> Ordering:
    return parse_ordering(read_text(path))


def read_graph(path: str | Path) -> Graph:
    return parse_graph(read_text(path))


def save_text(path: str | Path, content: str) -> Path:
    """原子写入：先写同目录临时文件再 replace，防止半写损坏"""
    target = Path(path)
    parent = target.parent
    parent.mkdir(parents=True, exist_ok=True)

    fd, tmp_path = tempfile.mkstemp(dir=parent, prefix=".tempord_", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as f:
            f.write(content)
            f.flush()
            os.fsync(f.fileno())
        os.replace(tmp_path, target)
    except BaseException:
        try:
            os.unlink(tmp_path)
        except OSError:
            pass
        raise
    return target
