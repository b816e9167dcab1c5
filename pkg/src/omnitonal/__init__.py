"""Balanceable, r-tonal and omnitonal graphs: deciders, constructions, formulas and exhaustive oracles."""

from .graph import (
    EdgeSet,
    Graph,
    Graph6Error,
    GraphError,
    ResourceError,
    named_graph,
    parse_graph6,
    to_graph6,
)
from .canon import CanonicalForm, are_isomorphic, canonical_form
from .spectra import (
    cut_spectrum,
    induced_spectrum,
    is_balanceable,
    is_omnitonal,
    is_r_tonal,
    tonal_report,
)
from .colorings import Coloring, contains_balanced, find_type_AB_clique, tone_set
from .amoeba import amoeba_verdict, edge_replacements, interpolation_chain, is_amoeba_at

__all__ = [
    "CanonicalForm", "Coloring", "EdgeSet", "Graph", "Graph6Error", "GraphError", "ResourceError",
    "amoeba_verdict", "are_isomorphic", "canonical_form", "contains_balanced", "cut_spectrum",
    "edge_replacements", "find_type_AB_clique", "induced_spectrum", "interpolation_chain",
    "is_amoeba_at", "is_balanceable", "is_omnitonal", "is_r_tonal", "named_graph", "parse_graph6",
    "to_graph6", "tonal_report", "tone_set",
]
