"""Exact computation in wreath products H wr Z.

Word metrics and group arithmetic, canonical coset models of the two
associated trees, explicit Hilbert-space embeddings with their affine
actions, brute-force verification oracles, and an empirical distortion lab.
"""

from .basegroups import INTEGERS, GroupElement, GroupSpec, ParseError, cyclic, parse_group
from .compression import (
    BoundSet,
    DistortionSample,
    EnvelopeFit,
    bounds,
    fit_envelope,
    sample_pairs,
)
from .embeddings import (
    H_DIRAC_SIMPLEX,
    H_IDENTITY_LINE,
    AffineMap,
    TreeMode,
    affine_alpha,
    cocycle,
    embedded_distance,
    gamma_action_on_sum,
    h_embed,
    iota,
    sigma,
    weighted_tree_embed,
)
from .oracles import (
    BallReport,
    BudgetError,
    PropernessReport,
    ball_reports,
    cayley_bfs,
    properness_check,
    properness_cross_check,
    tree_bfs_dist,
)
from .trees import (
    TreeSide,
    TreeVertex,
    act,
    base_vertex,
    dist,
    dist_from_base,
    format_vertex,
    geodesic,
    vertex_of,
)
from .vectors import GeomEdge, LampCoord, OrientedEdge, SparseVector, geom_edge
from .wreath import (
    SupportStats,
    WreathElement,
    format_element,
    parse_element,
    shift_lamps,
    travel_length,
)

__version__ = "0.1.0"

__all__ = [
    "INTEGERS",
    "AffineMap",
    "BallReport",
    "BoundSet",
    "BudgetError",
    "DistortionSample",
    "EnvelopeFit",
    "GeomEdge",
    "GroupElement",
    "GroupSpec",
    "H_DIRAC_SIMPLEX",
    "H_IDENTITY_LINE",
    "LampCoord",
    "OrientedEdge",
    "ParseError",
    "PropernessReport",
    "SparseVector",
    "SupportStats",
    "TreeMode",
    "TreeSide",
    "TreeVertex",
    "WreathElement",
    "act",
    "affine_alpha",
    "ball_reports",
    "base_vertex",
    "bounds",
    "cayley_bfs",
    "cocycle",
    "cyclic",
    "dist",
    "dist_from_base",
    "embedded_distance",
    "fit_envelope",
    "format_element",
    "format_vertex",
    "gamma_action_on_sum",
    "geodesic",
    "geom_edge",
    "h_embed",
    "iota",
    "parse_element",
    "parse_group",
    "properness_check",
    "properness_cross_check",
    "sample_pairs",
    "shift_lamps",
    "sigma",
    "tree_bfs_dist",
    "travel_length",
    "vertex_of",
    "weighted_tree_embed",
]
