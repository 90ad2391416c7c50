"""Exact zero counting for Wronskians of orthogonal polynomials."""

from .families import FamilySpec, classical_poly, from_moments
from .polyalg import Interval, RatPoly, sturm_count
from .theorems import (
    SymmetricPrediction,
    VerificationReport,
    predicted_count_generic,
    predicted_symmetric,
    verify_partition,
)
from .wronskian import MultiIndex, Partition, WronskianResult, wronskian_det

__all__ = [
    "FamilySpec",
    "Interval",
    "MultiIndex",
    "Partition",
    "RatPoly",
    "SymmetricPrediction",
    "VerificationReport",
    "WronskianResult",
    "classical_poly",
    "from_moments",
    "predicted_count_generic",
    "predicted_symmetric",
    "sturm_count",
    "verify_partition",
    "wronskian_det",
]
