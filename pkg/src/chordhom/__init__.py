"""Extreme Khovanov homology through independence complexes of circle graphs."""

from .chords import ChordDiagram, canonical_form, connected_sum, intersection_graph, interlace
from .complexes import HomologyResult, SimplicialComplex, homology, independence_complex, independence_homology
from .graphs import Graph, is_bipartite
from .khovanov import LinkDiagram, extreme_khovanov, pretzel_pd

__version__ = "0.1.0"

__all__ = [
    "ChordDiagram",
    "Graph",
    "HomologyResult",
    "LinkDiagram",
    "SimplicialComplex",
    "canonical_form",
    "connected_sum",
    "extreme_khovanov",
    "homology",
    "independence_complex",
    "independence_homology",
    "interlace",
    "intersection_graph",
    "is_bipartite",
    "pretzel_pd",
]
