"""Exact matrix representations of cyclotomic fields and minimal 0,1-companion polynomials."""
from .ansearch import SparseSignature, bounds_report, search_min
from .matrixrep import CayleyDigraph, CirculantMatrix, CompanionMatrix, DenseRatMatrix
from .polyring import Poly, cyclotomic, profile

__all__ = [
    "CayleyDigraph",
    "CirculantMatrix",
    "CompanionMatrix",
    "DenseRatMatrix",
    "Poly",
    "SparseSignature",
    "bounds_report",
    "cyclotomic",
    "profile",
    "search_min",
]
__version__ = "0.1.0"
