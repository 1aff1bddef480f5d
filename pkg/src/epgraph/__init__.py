"""Enhanced power graphs of finite groups: construction, invariants and theorem checks."""

from ._backend import BACKEND
from .catalog import build_spec, default_catalog_specs, load_catalog, load_group
from .epg import Graph, enhanced_power_graph, proper_enhanced_power_graph
from .groups import FiniteGroup, direct_product, from_cayley_table, from_permutation_generators
from .invariants import (
    diameter,
    edge_connectivity,
    min_degree,
    strong_regularity,
    vertex_connectivity,
    wiener_index,
)
from .nilpotent import sylow_decomposition
from .theorems import Status, TheoremVerdict, run_all

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "FiniteGroup",
    "Graph",
    "Status",
    "TheoremVerdict",
    "build_spec",
    "default_catalog_specs",
    "diameter",
    "direct_product",
    "edge_connectivity",
    "enhanced_power_graph",
    "from_cayley_table",
    "from_permutation_generators",
    "load_catalog",
    "load_group",
    "min_degree",
    "proper_enhanced_power_graph",
    "run_all",
    "strong_regularity",
    "sylow_decomposition",
    "vertex_connectivity",
    "wiener_index",
]
