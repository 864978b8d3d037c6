"""Contractible non-edges of 3-connected graphs: library, exhaustive checks and catalogs."""

from .canon import CanonicalLabel, are_isomorphic, canonical_form
from .connectivity import (
    CutRecord,
    Fragment,
    fragments_of,
    fragment_inequality_holds,
    smallest_cuts,
    vertex_connectivity,
)
from .contraction import Classification, classify, is_contractible, non_edges
from .covering import fully_covered_graphs
from .generation import generate_3connected
from .graph import Graph, NamedFamily, contract_pair, delete, from_edges, make_named, subgraph
from .graph6 import emit_graph6, parse_graph6, parse_sparse6
from .structure import (
    Fan,
    StructureReport,
    min_fan_from,
    minimum_fan,
    recognize_family,
    reduced_structure,
    separation_witness,
)

__all__ = [
    "CanonicalLabel",
    "Classification",
    "CutRecord",
    "Fan",
    "Fragment",
    "Graph",
    "NamedFamily",
    "StructureReport",
    "are_isomorphic",
    "canonical_form",
    "classify",
    "contract_pair",
    "delete",
    "emit_graph6",
    "fragments_of",
    "from_edges",
    "fully_covered_graphs",
    "generate_3connected",
    "is_contractible",
    "separation_witness",
    "fragment_inequality_holds",
    "make_named",
    "min_fan_from",
    "minimum_fan",
    "non_edges",
    "parse_graph6",
    "parse_sparse6",
    "recognize_family",
    "reduced_structure",
    "smallest_cuts",
    "subgraph",
    "vertex_connectivity",
]
