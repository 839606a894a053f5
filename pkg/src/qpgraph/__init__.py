"""Exact computations in the adjacency algebra of a graph."""
from .algebra import ClosureFailure, StandardBasis, is_hadamard_closed, standard_basis
from .errors import PreconditionError
from .graph import Graph, from_spec
from .linalg import Polynomial, RationalMatrix
from .report import AnalysisReport, analyze
from .spectral import count_distinct_eigenvalues, is_distance_regular
from .structure import Diameter2Class, diameter2_four_ev_check, faithful_diagram_analysis
from .walkpart import distance_matrix_polynomials, is_quotient_polynomial, walk_partition

__all__ = [
    "AnalysisReport", "ClosureFailure", "Diameter2Class", "Graph", "Polynomial",
    "PreconditionError", "RationalMatrix", "StandardBasis", "analyze",
    "count_distinct_eigenvalues", "diameter2_four_ev_check", "distance_matrix_polynomials",
    "faithful_diagram_analysis", "from_spec", "is_distance_regular", "is_hadamard_closed",
    "is_quotient_polynomial", "standard_basis", "walk_partition",
]
