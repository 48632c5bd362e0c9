"""Chromatic numbers of annuli under the unit-distance constraint.

Exact geometry for distances between annular sectors, radial colorings and
their chromatic formula, embeddable lower-bound gadgets (rod, odd cycle,
tri-rod, Moser spindle), and an exact chromatic-number solver for small
graphs.
"""

__version__ = "0.1.0"

from .geometry import (
    DEFAULT_TOLERANCE,
    TWO_PI,
    AngularInterval,
    AnnularSector,
    Annulus,
    DistanceInterval,
    Point,
    contains_unit_pair,
    normalize_angle,
    sector_distance_interval,
    unit_chord_angle,
)
from .radial import (
    RadialColoring,
    Threshold,
    VerificationResult,
    coloring_from_json,
    coloring_to_json,
    construct_radial_coloring,
    max_color_class_span,
    radial_chromatic_number,
    spans_within_unit_sector,
    thresholds,
    verify_radial_coloring,
)
from .gadgets import (
    GADGET_KINDS,
    SPINDLE_EDGES,
    SPINDLE_THRESHOLD,
    TRI_ROD_THRESHOLD,
    GadgetEmbedding,
    GadgetInfeasible,
    LowerBoundResult,
    Placement,
    PlacementSearchError,
    embed_moser_spindle,
    embed_odd_cycle,
    embed_rod,
    embed_trirod,
    embedding_from_json,
    embedding_to_json,
    gadget_lower_bound,
    margin_of,
    rod_rotation_path,
    spindle_points,
    trirod_rotation_path,
)
from .schema import SchemaError
from .udg import (
    MAX_VERTICES,
    ColoringAssignment,
    UnitDistanceGraph,
    build_udg,
    chromatic_number_exact,
    graph_from_edges,
    graph_from_json,
    graph_to_json,
    greedy_clique,
    greedy_coloring,
    is_proper,
)
from .svg import PALETTE, render_embedding, render_radial_coloring

__all__ = [
    "DEFAULT_TOLERANCE",
    "TWO_PI",
    "AngularInterval",
    "AnnularSector",
    "Annulus",
    "ColoringAssignment",
    "DistanceInterval",
    "GADGET_KINDS",
    "GadgetEmbedding",
    "GadgetInfeasible",
    "LowerBoundResult",
    "MAX_VERTICES",
    "PALETTE",
    "Placement",
    "PlacementSearchError",
    "Point",
    "RadialColoring",
    "SPINDLE_EDGES",
    "SPINDLE_THRESHOLD",
    "SchemaError",
    "TRI_ROD_THRESHOLD",
    "Threshold",
    "UnitDistanceGraph",
    "VerificationResult",
    "build_udg",
    "chromatic_number_exact",
    "coloring_from_json",
    "coloring_to_json",
    "construct_radial_coloring",
    "contains_unit_pair",
    "embed_moser_spindle",
    "embed_odd_cycle",
    "embed_rod",
    "embed_trirod",
    "embedding_from_json",
    "embedding_to_json",
    "gadget_lower_bound",
    "graph_from_edges",
    "graph_from_json",
    "graph_to_json",
    "greedy_clique",
    "greedy_coloring",
    "is_proper",
    "margin_of",
    "max_color_class_span",
    "normalize_angle",
    "radial_chromatic_number",
    "render_embedding",
    "render_radial_coloring",
    "rod_rotation_path",
    "sector_distance_interval",
    "spans_within_unit_sector",
    "spindle_points",
    "thresholds",
    "trirod_rotation_path",
    "unit_chord_angle",
    "verify_radial_coloring",
]
