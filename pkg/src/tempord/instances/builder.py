"""图构造器 + 角色标签映射"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from ..model import Graph


@dataclass
class NamedVertexMap:
    """构造角色标签 → 顶点编号（单射），附带按角色分组的边编号"""

    vertices: dict[str, int] = field(default_factory=dict)
    edge_roles: dict[str, list[int]] = field(default_factory=dict)

    def add(self, label: str, vertex: int) -> None:
        if label in self.vertices:
            raise ValueError(f"标签重复: {label}")
        self.vertices[label] = vertex

    def add_edge_role(self, role: str, edge: int) -> None:
        self.edge_roles.setdefault(role, []).append(edge)

    def role(self, name: str) -> list[int]:
        return list(self.edge_roles.get(name, []))

    def __getitem__(self, label: str) -> int:
        return self.vertices[label]

    def __contains__(self, label: object) -> bool:
        return label in self.vertices

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[str]:
        return iter(self.vertices)

    def items(self):
        return self.vertices.items()

    def to_dict(self) -> dict:
        return {"vertices": dict(self.vertices), "edge_roles": {k: list(v) for k, v in self.edge_roles.items()}}


class GraphBuilder:
    """逐个追加顶点和边；带标签的顶点和带角色的边记录在 names 中"""

    def __init__(self, *, directed: bool = False):
        self.directed = directed
        self.vertex_count = 0
        self.edges: list[tuple[int, int]] = []
        self.names = NamedVertexMap()

    def add_vertex(self, label: str | None = None) -> int:
        vid = self.vertex_count
        self.vertex_count += 1
        if label is not None:
            self.names.add(label, vid)
        return vid

    def add_vertices(self, count: int, label: str | None = None) -> list[int]:
        """批量追加；label 形如 "w[3].leaf" 时各顶点标为 "w[3].leaf[j]" """
        return [
            self.add_vertex(None if label is None else f"{label}[{j}]")
            for j in range(count)
        ]

    def add_edge(self, u: int, v: int, role: str | None = None) -> int:
        idx = len(self.edges)
        self.edges.append((u, v))
        if role is not None:
            self.names.add_edge_role(role, idx)
        return idx

    def graph(self) -> Graph:
        return Graph(
            directed=self.directed,
            vertex_count=self.vertex_count,
            edges=tuple(self.edges),
        )
