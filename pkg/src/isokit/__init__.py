"""isokit: cycle-isolation algorithms with exhaustive certification.

The package centers on one guarantee: every connected graph other than the
triangle has a set of at most floor(n/4) vertices whose closed neighborhood
meets every cycle. The constructive solver produces such a set with a
branch-labeled trace, the exact module brute-forces true minima, the
extremal module builds the families attaining the bound, and the harness
checks all of it exhaustively on small graphs and randomly beyond.
"""

from .constructive import (
    CASE_LABELS,
    GraphDisconnected,
    GraphIsTriangle,
    InternalProofViolation,
    IsolationResult,
    TraceStep,
    cycle_isolating_set,
    cycle_isolating_set_any,
)
from .exact import ExactResult, min_cycle_isolating, min_pattern_isolating
from .extremal import (
    ExtremalParams,
    build_B,
    build_star_path,
    nk_params,
    predicted_isolation,
)
from .graph import (
    Graph,
    build_graph,
    complete_graph,
    cycle_graph,
    graph_from_edges,
    path_graph,
)
from .harness import (
    FuzzReport,
    Lemma2Report,
    PatternMaxReport,
    TheoremReport,
    canonical_form,
    enumerate_connected_labeled,
    fuzz_constructive,
    random_connected,
    verify_lemma2,
    verify_theorem1,
    verify_theorem2,
)
from .isolation import (
    LinkMap,
    contains_pattern,
    is_cycle_isolating,
    is_pattern_isolating,
    link_map,
    triangle_components,
)
from .serialize import (
    ParseError,
    RunRecord,
    emit_edgelist,
    emit_graph6,
    parse_edgelist,
    parse_graph6,
)

__version__ = "0.1.0"

__all__ = [
    "CASE_LABELS",
    "ExactResult",
    "ExtremalParams",
    "FuzzReport",
    "Graph",
    "GraphDisconnected",
    "GraphIsTriangle",
    "InternalProofViolation",
    "IsolationResult",
    "Lemma2Report",
    "LinkMap",
    "ParseError",
    "PatternMaxReport",
    "RunRecord",
    "TheoremReport",
    "TraceStep",
    "build_B",
    "build_graph",
    "build_star_path",
    "canonical_form",
    "complete_graph",
    "contains_pattern",
    "cycle_graph",
    "cycle_isolating_set",
    "cycle_isolating_set_any",
    "emit_edgelist",
    "emit_graph6",
    "enumerate_connected_labeled",
    "fuzz_constructive",
    "graph_from_edges",
    "is_cycle_isolating",
    "is_pattern_isolating",
    "link_map",
    "min_cycle_isolating",
    "min_pattern_isolating",
    "nk_params",
    "parse_edgelist",
    "parse_graph6",
    "path_graph",
    "predicted_isolation",
    "random_connected",
    "triangle_components",
    "verify_lemma2",
    "verify_theorem1",
    "verify_theorem2",
]
