"""Crystals: elementary pieces, tensor products, B(∞), B(Lambda) and axiom checks."""

from .binf import (
    BInfinity,
    BInfNode,
    CrystalGraph,
    IncompleteCrystal,
    NodeStats,
    StringModel,
    binf_generate,
    binf_stats,
    blambda_generate,
    direct_phi_count,
    multiplicity,
    weight_multiplicities,
)
from .elementary import (
    NEG_INF,
    Crystal,
    CrystalOps,
    ElementaryNode,
    TensorNode,
    b_node,
    elem_crystal_ops,
    t_node,
    tensor_crystal_ops,
)
from .export import graph_to_json, graph_to_json_text, multiplicities_csv, to_dot
from .verify import SUITES, FiniteCrystalGraph, Report, Violation, tensor_window, verify_all, verify_axioms

__all__ = [
    "BInfinity", "BInfNode", "CrystalGraph", "IncompleteCrystal", "NodeStats", "StringModel",
    "binf_generate", "binf_stats", "blambda_generate", "direct_phi_count", "multiplicity",
    "weight_multiplicities", "NEG_INF", "Crystal", "CrystalOps", "ElementaryNode", "TensorNode",
    "b_node", "elem_crystal_ops", "t_node", "tensor_crystal_ops", "graph_to_json",
    "graph_to_json_text", "multiplicities_csv", "to_dot", "SUITES", "FiniteCrystalGraph",
    "Report", "Violation", "tensor_window", "verify_all", "verify_axioms",
]
