"""Tableau calculus for Prym-Brill-Noether loci on folded chains of loops."""

from . import cli, io, kernels, selftest
from .core import (
    Box,
    GuardRefused,
    InvalidInputError,
    InvariantError,
    PrymParams,
    Shape,
    Tableau,
    codimension,
    dominates,
    dual_symbol,
    equivalent,
    explicit_shape,
    generic_regime,
    is_displacement,
    is_prym,
    is_reflective,
    is_tableau,
    rank_map,
    square_shape,
    staircase_shape,
)
from .counting import (
    BRUTE_SYMBOL_LIMIT,
    cardinality,
    count_brute,
    count_even_determinant,
    count_generic,
    count_lattice_paths,
    hook_length_syt_count,
    max_cell_count,
)
from .dimension import (
    BRUTE_BOX_LIMIT,
    DimensionReport,
    brute_min_codim,
    dimension_report,
    enumerate_staircase_tableaux,
    expected_codim,
    minimal_witness,
    pbn_dimension,
)
from .divisors import (
    ChipDivisor,
    ChipEntry,
    FoldedChain,
    cell_dimension,
    loop_torsion,
    make_folded_chain,
    tableau_to_divisor,
)
from .io import (
    SCHEMA_VERSION,
    divisor_entries_from_json,
    divisor_to_json,
    shape_from_json,
    shape_to_json,
    tableau_from_json,
    tableau_to_json,
)
from .locus import (
    CELL_GUARD,
    GraphVertex,
    HeightDescent,
    IntersectionGraph,
    MaximalCell,
    average_intersections,
    betti_closed_form,
    betti_number,
    build_intersection_graph,
    connect_path,
    cycle_out,
    cycle_out_trace,
    enumerate_maximal_cells,
    graph_to_dot,
    height,
    height_descent_step,
    is_adjacent,
    standard_filling,
    standard_rank,
    swap_in_for,
    swap_into,
)
from .reflection import (
    ReflectionState,
    extend_to_reflective,
    loose_boxes,
    reflectify,
    reflectify_states,
    reflectify_trace,
    restrict_to_staircase,
    upward_displacement,
)
from .strips import (
    StripShape,
    StripTableau,
    cell_strips,
    dominating_non_repeating,
    effective_width,
    enumerate_strip_tableaux,
    enumerate_strips,
    extend_strip_tableau,
    horizontal_strip,
    is_non_repeating,
    restrict_to_strip,
    strip_shape,
    strips_admitting,
)

__version__ = "0.1.0"

__all__ = [
    # parameters, shapes, tableaux, predicates
    "Box",
    "GuardRefused",
    "InvalidInputError",
    "InvariantError",
    "PrymParams",
    "Shape",
    "Tableau",
    "codimension",
    "dominates",
    "dual_symbol",
    "equivalent",
    "explicit_shape",
    "generic_regime",
    "is_displacement",
    "is_prym",
    "is_reflective",
    "is_tableau",
    "rank_map",
    "square_shape",
    "staircase_shape",
    # cardinality routes
    "BRUTE_SYMBOL_LIMIT",
    "cardinality",
    "count_brute",
    "count_even_determinant",
    "count_generic",
    "count_lattice_paths",
    "hook_length_syt_count",
    "max_cell_count",
    # dimension
    "BRUTE_BOX_LIMIT",
    "DimensionReport",
    "brute_min_codim",
    "dimension_report",
    "enumerate_staircase_tableaux",
    "expected_codim",
    "minimal_witness",
    "pbn_dimension",
    # chip divisors on folded chains
    "ChipDivisor",
    "ChipEntry",
    "FoldedChain",
    "cell_dimension",
    "loop_torsion",
    "make_folded_chain",
    "tableau_to_divisor",
    # serialization
    "SCHEMA_VERSION",
    "divisor_entries_from_json",
    "divisor_to_json",
    "shape_from_json",
    "shape_to_json",
    "tableau_from_json",
    "tableau_to_json",
    # cells, paths, and the intersection graph
    "CELL_GUARD",
    "GraphVertex",
    "HeightDescent",
    "IntersectionGraph",
    "MaximalCell",
    "average_intersections",
    "betti_closed_form",
    "betti_number",
    "build_intersection_graph",
    "connect_path",
    "cycle_out",
    "cycle_out_trace",
    "enumerate_maximal_cells",
    "graph_to_dot",
    "height",
    "height_descent_step",
    "is_adjacent",
    "standard_filling",
    "standard_rank",
    "swap_in_for",
    "swap_into",
    # square-to-reflective completion
    "ReflectionState",
    "extend_to_reflective",
    "loose_boxes",
    "reflectify",
    "reflectify_states",
    "reflectify_trace",
    "restrict_to_staircase",
    "upward_displacement",
    # strips
    "StripShape",
    "StripTableau",
    "cell_strips",
    "dominating_non_repeating",
    "effective_width",
    "enumerate_strip_tableaux",
    "enumerate_strips",
    "extend_strip_tableau",
    "horizontal_strip",
    "is_non_repeating",
    "restrict_to_strip",
    "strip_shape",
    "strips_admitting",
    # submodules
    "cli",
    "io",
    "kernels",
    "selftest",
]
