from __future__ import annotations

import pytest

from conftest import path, random_instance, random_ordering, singleton
from tempord.errors import PreconditionError
from tempord.model import EdgeClassSystem, Graph, Instance, Objective, Ordering, Semantics
from tempord.reach import (
    decide,
    interaction_graph,
    leaves_first_normalize,
    lower_bound,
    reach_set,
    reachability_report,
    static_max_reachability,
    static_reachability,
)


def test_reach_set_on_path(p3):
    forward = Ordering((1, 2))
    assert reach_set(p3, forward, 0) == {0, 1, 2}
    assert reach_set(p3, forward, 2) == {1, 2}
    backward = Ordering((2, 1))
    assert reach_set(p3, backward, 0) == {0, 1}
    assert reach_set(p3, backward, 2) == {0, 1, 2}


def test_reach_set_after(p3):
    forward = Ordering((1, 2))
    assert reach_set(p3, forward, 0, after=1) == {0}
    assert reach_set(p3, forward, 1, after=1) == {1, 2}


def test_reach_set_invalid_source(p3):
    with pytest.raises(PreconditionError) as err:
        reach_set(p3, Ordering((1, 2)), 3)
    assert err.value.code == "invalid-source"


def test_weak_semantics_relays_within_a_step():
    g = path(3)
    strict = Instance(graph=g, classes=EdgeClassSystem(((0, 1),)), k=3)
    weak = Instance(
        graph=g, classes=EdgeClassSystem(((0, 1),)), semantics=Semantics.WEAK, k=3
    )
    one = Ordering((1,))
    assert reach_set(strict, one, 0) == {0, 1}
    assert reach_set(weak, one, 0) == {0, 1, 2}
    assert reachability_report(strict, one).per_vertex_size == (2, 3, 2)
    assert reachability_report(weak, one).per_vertex_size == (3, 3, 3)


def test_report_extremes(p3, maxmin_p3):
    report = reachability_report(p3, Ordering((1, 2)))
    assert report.per_vertex_size == (3, 3, 2)
    assert report.extreme_value == 3
    assert report.extreme_vertex == 0
    assert report.extreme_set == {0, 1, 2}

    report = reachability_report(maxmin_p3, Ordering((1, 2)))
    assert report.extreme_value == 2
    assert report.extreme_vertex == 2
    assert report.min_value == 2
    assert report.max_value == 3


def test_report_matches_reach_set_per_vertex(rng):
    for _ in range(150):
        semantics = Semantics.WEAK if rng.random() < 0.3 else Semantics.STRICT
        inst = random_instance(rng, semantics=semantics)
        ordering = random_ordering(rng, inst.h)
        report = reachability_report(inst, ordering)
        for v in range(inst.graph.n):
            assert report.per_vertex_size[v] == len(reach_set(inst, ordering, v))
        assert report.extreme_set == reach_set(inst, ordering, report.extreme_vertex)


def test_decide_p5():
    inst = singleton(path(5), k=4)
    assert not decide(inst, Ordering.identity(4))
    # 叶边先、中间两条边后
    assert decide(inst, Ordering((1, 3, 4, 2)))


def test_lower_bound():
    star = singleton(Graph(False, 4, ((0, 1), (0, 2), (0, 3))))
    assert lower_bound(star) == 4
    out_star = singleton(Graph(True, 4, ((0, 1), (0, 2), (3, 0))))
    assert lower_bound(out_star) == 3


def test_static_reachability():
    g = Graph(True, 4, ((0, 1), (1, 2)))
    assert static_reachability(g, 0) == {0, 1, 2}
    assert static_reachability(g, 3) == {3}
    assert static_max_reachability(g) == 3
    assert static_max_reachability(path(4)) == 4


def test_interaction_graph_undirected():
    g = path(4)
    inst = Instance(graph=g, classes=EdgeClassSystem(((0,), (2,), (1,), (1, 2))), k=4)
    h = interaction_graph(inst)
    assert h.vertex_count == 4
    assert set(h.edges) == {(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)}


def test_interaction_graph_directed():
    g = Graph(True, 4, ((0, 1), (1, 2), (3, 1)))
    inst = Instance(graph=g, classes=EdgeClassSystem(((0,), (1,), (2,))), k=4)
    assert set(interaction_graph(inst).edges) == {(0, 1), (1, 2)}


def test_leaves_first_normalize():
    inst = singleton(path(4))
    ordering = Ordering.from_sequence([1, 0, 2])
    assert leaves_first_normalize(inst, ordering).sequence() == [0, 2, 1]


def test_leaves_first_rejects_directed():
    inst = singleton(Graph(True, 2, ((0, 1),)))
    with pytest.raises(PreconditionError) as err:
        leaves_first_normalize(inst, Ordering((1,)))
    assert err.value.code == "directed"


def test_leaves_first_never_hurts(rng):
    for _ in range(100):
        inst = random_instance(rng, general=False, directed=False)
        ordering = random_ordering(rng, inst.h)
        before = reachability_report(inst, ordering).extreme_value
        after = reachability_report(inst, leaves_first_normalize(inst, ordering)).extreme_value
        assert after <= before


def test_maxmin_objective_in_report():
    inst = singleton(path(3), objective=Objective.MAXMIN, k=2)
    assert decide(inst, Ordering((1, 2)))
    assert not decide(inst.with_k(3), Ordering((1, 2)))
