"""实例生成：基准族、证明中的子结构、困难性归约"""

from __future__ import annotations

from .builder import GraphBuilder, NamedVertexMap
from .families import FAMILIES, gen_family
from .gadgets import build_decoration, build_uv_gadget
from .reductions import (
    CNF,
    REDUCTIONS,
    check_34sat,
    parse_dimacs,
    read_dimacs,
    reduce_34sat,
    reduce_min_bisection,
    reduce_pclique,
    reduce_vertex_cover_list,
    reduce_vertex_cover_maxmin,
    write_dimacs,
)
from .witnesses import (
    bisection_reach_formula,
    bisection_witness_ordering,
    gadget_canonical_ordering,
    pclique_witness_ordering,
    sat34_witness_ordering,
    vc_list_witness_ordering,
    vc_maxmin_witness_ordering,
)

__all__ = [
    "CNF",
    "FAMILIES",
    "REDUCTIONS",
    "GraphBuilder",
    "NamedVertexMap",
    "bisection_reach_formula",
    "bisection_witness_ordering",
    "build_decoration",
    "build_uv_gadget",
    "check_34sat",
    "gadget_canonical_ordering",
    "gen_family",
    "parse_dimacs",
    "pclique_witness_ordering",
    "read_dimacs",
    "reduce_34sat",
    "reduce_min_bisection",
    "reduce_pclique",
    "reduce_vertex_cover_list",
    "reduce_vertex_cover_maxmin",
    "sat34_witness_ordering",
    "vc_list_witness_ordering",
    "vc_maxmin_witness_ordering",
    "write_dimacs",
]
