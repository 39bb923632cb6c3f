from __future__ import annotations

import pytest

from tempord.errors import PreconditionError
from tempord.instances import (
    GraphBuilder,
    build_decoration,
    build_uv_gadget,
    gadget_canonical_ordering,
)
from tempord.model import Instance, Ordering
from tempord.reach import reachability_report


def test_decoration_shape():
    b = GraphBuilder()
    root = b.add_vertex("root")
    local = build_decoration(2, 1, root, b, prefix="dec")
    g = b.graph()
    assert g.vertex_count == 5
    assert g.m == 5
    assert len(local.role("clique")) == 1
    assert len(local.role("leaf")) == 2
    assert len(local.role("root")) == 2
    assert b.names["dec.clique[1]"] == local["clique[1]"]
    assert g.degree(root) == 2


def test_decoration_rejects_bad_parameters():
    with pytest.raises(PreconditionError):
        build_decoration(0, 1, 0, GraphBuilder())


def _gadget(k: int):
    b = GraphBuilder()
    u = b.add_vertex("u")
    v = b.add_vertex("v")
    b.add_edge(u, v)
    local = build_uv_gadget(k, u, v, b)
    return Instance.singleton(b.graph()), local, u, v


def test_gadget_shape():
    inst, local, _, _ = _gadget(5)
    assert inst.graph.vertex_count == 2 + 7
    assert len(local.role("attach")) == 2
    assert len(local.role("triangle")) == 3
    assert len(local.role("leaf")) == 4
    assert inst.graph.degree(local["a"]) == 5 - 1
    assert inst.graph.degree(local["c"]) == 5 - 1


@pytest.mark.parametrize("k", [5, 6, 7])
def test_canonical_ordering_keeps_reach_at_k(k):
    inst, local, u, v = _gadget(k)
    ordering = gadget_canonical_ordering(inst, local, u, v)
    report = reachability_report(inst, ordering)
    for name in ("a", "b", "c"):
        assert report.per_vertex_size[local[name]] == k
    assert report.max_value <= k


def test_triangle_before_attach_overshoots():
    inst, local, _, _ = _gadget(5)
    ua, vb = local.role("attach")
    ab, ac, bc = local.role("triangle")
    leaves = local.role("leaf")
    ordering = Ordering.from_sequence([*leaves, 0, ab, ua, vb, ac, bc])
    report = reachability_report(inst, ordering)
    assert report.per_vertex_size[local["b"]] == 6


def test_gadget_rejects_small_k():
    with pytest.raises(PreconditionError):
        build_uv_gadget(4, 0, 1, GraphBuilder())
