"""Adjacent-vertex-distinguishing total coloring of 3-degenerate graphs."""

from .coloring import (
    PartialColoring,
    Violation,
    avd_total_violations,
    complement,
    copalette_of,
    is_avd_total,
    is_partial_avd,
    palette_of,
    partial_avd_violations,
    satisfies_support,
)
from .graph import DegreePartition, Graph, Support, build_graph, degeneracy, find_pivot, validate_support
from .solver import (
    ExtensionCandidate,
    SolverConfig,
    claim2_repair,
    color_main,
    color_subcubic,
    complete_and_repair,
    extend_small_pivot,
    select_claim1,
    solve,
    zeta,
)

__all__ = [
    "DegreePartition", "ExtensionCandidate", "Graph", "PartialColoring", "SolverConfig", "Support",
    "Violation", "avd_total_violations", "build_graph", "claim2_repair", "color_main",
    "color_subcubic", "complement", "complete_and_repair", "copalette_of", "degeneracy",
    "extend_small_pivot", "find_pivot", "is_avd_total", "is_partial_avd", "palette_of",
    "partial_avd_violations", "satisfies_support", "select_claim1", "solve", "validate_support",
    "zeta",
]
