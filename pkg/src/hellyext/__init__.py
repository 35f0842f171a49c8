"""Helly-type ball intersection properties and Lipschitz extension.

The package decides (n,m)-Helly, bipartite and scaled Helly properties
with violation certificates, extends partial Lipschitz maps from lattice
or graph domains one point at a time, fills box boundaries by
homomorphisms, and ships brute-force oracles plus an equivalence harness
tying the Helly property to universal extendability.
"""

from .errors import (
    DimensionMismatch,
    EmptyGraph,
    FormatError,
    IncompleteAssignment,
    InputError,
    InvalidSize,
    NotAViolation,
    NotBipartite,
    NotConnected,
    NotHomomorphism,
    NotLipschitzInput,
    NotSimple,
    ParameterError,
    ParityMismatch,
    PointInSet,
    TooLarge,
    TooManyRays,
)
from .extension import (
    ExtensionOutcome,
    LipschitzViolation,
    PartialMap,
    ext_set,
    extend_one_point,
    greedy_extend,
    is_lipschitz,
    map_from_text,
    map_to_text,
    violation_to_witness_map,
)
from .graphs import (
    Graph,
    all_pairs_distances,
    ball,
    bipartition,
    canonical_form,
    complete_graph,
    cycle_graph,
    graph_from_edges,
    graph_from_text,
    graph_to_text,
    hyperoctahedron,
    induced_subgraph,
    path_graph,
    star_tree,
    strong_product,
    tensor_product,
)
from .helly import (
    Ball,
    HellyViolation,
    available_backends,
    bipartite_helly_check,
    default_backend,
    helly_check,
    t_helly_check,
    verify_violation,
    violation_from_text,
    violation_to_text,
)
from .holefill import (
    BoundaryCondition,
    HellyPreconditionWarning,
    boundary_from_text,
    boundary_to_text,
    hole_fill_construct,
    hole_fill_decide,
    random_boundary_condition,
    validate_boundary,
)
from .lattice import (
    Box,
    axis_embed_star,
    box_boundary,
    box_graph,
    box_interior,
    box_vertices,
    ext_set_lattice,
    l1,
    parity,
    point_from_text,
    point_to_text,
)
from .oracle import (
    HarnessReport,
    HarnessRow,
    ProductReport,
    SmallDiameterReport,
    brute_force_extend,
    brute_force_helly,
    enumerate_connected_graphs,
    graph_kirszbraun_status,
    bipartite_kirszbraun_status,
    kirszbraun_equivalence_harness,
    product_preservation_check,
    small_diameter_check,
)

__version__ = "0.1.0"

__all__ = [
    "Ball",
    "BoundaryCondition",
    "Box",
    "DimensionMismatch",
    "EmptyGraph",
    "ExtensionOutcome",
    "FormatError",
    "Graph",
    "HarnessReport",
    "HarnessRow",
    "HellyPreconditionWarning",
    "HellyViolation",
    "IncompleteAssignment",
    "InputError",
    "InvalidSize",
    "LipschitzViolation",
    "NotAViolation",
    "NotBipartite",
    "NotConnected",
    "NotHomomorphism",
    "NotLipschitzInput",
    "NotSimple",
    "ParameterError",
    "ParityMismatch",
    "PartialMap",
    "PointInSet",
    "ProductReport",
    "SmallDiameterReport",
    "TooLarge",
    "TooManyRays",
    "all_pairs_distances",
    "available_backends",
    "axis_embed_star",
    "ball",
    "bipartite_helly_check",
    "bipartite_kirszbraun_status",
    "bipartition",
    "boundary_from_text",
    "boundary_to_text",
    "box_boundary",
    "box_graph",
    "box_interior",
    "box_vertices",
    "brute_force_extend",
    "brute_force_helly",
    "canonical_form",
    "complete_graph",
    "cycle_graph",
    "default_backend",
    "enumerate_connected_graphs",
    "ext_set",
    "ext_set_lattice",
    "extend_one_point",
    "graph_from_edges",
    "graph_from_text",
    "graph_kirszbraun_status",
    "graph_to_text",
    "greedy_extend",
    "helly_check",
    "hole_fill_construct",
    "hole_fill_decide",
    "hyperoctahedron",
    "induced_subgraph",
    "is_lipschitz",
    "kirszbraun_equivalence_harness",
    "l1",
    "map_from_text",
    "map_to_text",
    "parity",
    "path_graph",
    "point_from_text",
    "point_to_text",
    "product_preservation_check",
    "random_boundary_condition",
    "small_diameter_check",
    "star_tree",
    "strong_product",
    "t_helly_check",
    "tensor_product",
    "validate_boundary",
    "verify_violation",
    "violation_from_text",
    "violation_to_text",
    "violation_to_witness_map",
]
