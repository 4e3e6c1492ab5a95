"""Exact q-rook theory of Ferrers diagrams, driven by their diagonals.

The package computes q-rook polynomials (classical, alternating, symmetric)
and the rank distributions of general, symmetric and alternating matrices
over small finite fields supported on a Ferrers diagram, and machine-checks
the identities tying those quantities together against an exhaustive
enumeration oracle.
"""

from .diagrams import (
    Cell,
    FerrersDiagram,
    diagram_from_sequence,
    enumerate_diagrams,
    enumerate_symmetric_diagrams,
    equivalence_classes,
    parse_diagram,
    symmetric_diagram_from_sequence,
)
from .laurent import NEG_INFINITY, ONE, Q, ZERO, LaurentPolynomial
from .oracle import (
    BudgetExceededError,
    FieldMatrix,
    FiniteField,
    RankDistribution,
    brute_force_distribution,
    make_field,
    rank,
)
from .placements import (
    Placement,
    atk,
    enumerate_alternating,
    enumerate_placements,
    enumerate_symmetric,
    inv,
    inv_histogram,
    inv_histogram_alternating,
    inv_histogram_symmetric,
    placement_to_json_dict,
    puncture,
    reduce,
    reduce_placement,
    reduce_symmetric,
)
from .qrook import (
    QRookCache,
    SymbolicRankDistribution,
    qrook_alt_enumerative,
    qrook_alt_recursive,
    qrook_enumerative,
    qrook_recursive,
    qrook_sym_enumerative,
    qrook_sym_recursive,
    rank_distribution_alternating,
    rank_distribution_general,
    rank_distribution_symmetric,
    trailing_degree_alt_closed_form,
    trailing_degree_closed_form,
    w_alternating,
    w_symmetric,
)
from .sequences import (
    is_ferrers_sequence,
    is_symmetric_sequence,
    normalize,
    parse_sequence,
    sequence_degree,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "Cell",
    "FerrersDiagram",
    "FieldMatrix",
    "FiniteField",
    "LaurentPolynomial",
    "NEG_INFINITY",
    "ONE",
    "Placement",
    "Q",
    "QRookCache",
    "RankDistribution",
    "SymbolicRankDistribution",
    "ZERO",
    "atk",
    "brute_force_distribution",
    "diagram_from_sequence",
    "enumerate_alternating",
    "enumerate_diagrams",
    "enumerate_placements",
    "enumerate_symmetric",
    "enumerate_symmetric_diagrams",
    "equivalence_classes",
    "inv",
    "inv_histogram",
    "inv_histogram_alternating",
    "inv_histogram_symmetric",
    "is_ferrers_sequence",
    "is_symmetric_sequence",
    "make_field",
    "normalize",
    "parse_diagram",
    "parse_sequence",
    "placement_to_json_dict",
    "puncture",
    "qrook_alt_enumerative",
    "qrook_alt_recursive",
    "qrook_enumerative",
    "qrook_recursive",
    "qrook_sym_enumerative",
    "qrook_sym_recursive",
    "rank",
    "rank_distribution_alternating",
    "rank_distribution_general",
    "rank_distribution_symmetric",
    "reduce",
    "reduce_placement",
    "reduce_symmetric",
    "sequence_degree",
    "symmetric_diagram_from_sequence",
    "trailing_degree_alt_closed_form",
    "trailing_degree_closed_form",
    "w_alternating",
    "w_symmetric",
]
