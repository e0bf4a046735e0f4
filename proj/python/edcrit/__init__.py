"""ED critical points on orthogonally invariant matrix sets."""

from ._core import (
    BoundaryError,
    DegenerateDataError,
    EdcritError,
    InputError,
    InternalError,
    RefusalError,
    SymmetricSet,
    UnsupportedError,
    classify,
    count_formula,
    critical_points,
    distance,
    empirical_count,
    ledger,
    lift,
    membership,
    normal_vector_check,
    projection,
)

__all__ = [
    "BoundaryError",
    "DegenerateDataError",
    "EdcritError",
    "InputError",
    "InternalError",
    "RefusalError",
    "SymmetricSet",
    "UnsupportedError",
    "classify",
    "count_formula",
    "critical_points",
    "distance",
    "empirical_count",
    "ledger",
    "lift",
    "membership",
    "normal_vector_check",
    "projection",
]
