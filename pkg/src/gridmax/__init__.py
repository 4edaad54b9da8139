"""Maximum number of edges induced by n points of the d-dimensional grid."""

from gridmax.cubicle import Cubicle, build_cubicle, lift, pseudo_cube, side
from gridmax.errors import BudgetExceeded, DomainError
from gridmax.formula import (
    EdgeMaxResult,
    asymptotic_bound,
    binary_ones_formula,
    discrepancy,
    f_pseudo_cube,
    f_recursive,
    harary_harborth,
    max_edges,
    projection_lower_bound,
)
from gridmax.pcr import Pcr, PseudoCubicTerm, cubic_value, pcr_decompose
from gridmax.pointset import PointSet, edge_count

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "Cubicle",
    "DomainError",
    "EdgeMaxResult",
    "Pcr",
    "PointSet",
    "PseudoCubicTerm",
    "asymptotic_bound",
    "binary_ones_formula",
    "build_cubicle",
    "cubic_value",
    "discrepancy",
    "edge_count",
    "f_pseudo_cube",
    "f_recursive",
    "harary_harborth",
    "lift",
    "max_edges",
    "pcr_decompose",
    "projection_lower_bound",
    "pseudo_cube",
    "side",
]
