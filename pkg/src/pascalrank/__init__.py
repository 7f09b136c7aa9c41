"""Exact rank and lacunary fitting for submatrices of the Pascal matrix."""

from .lacunary import (
    EmptyModelError,
    LacunaryFit,
    derivative_at_one,
    fit,
    fit_subpair,
    format_decimal,
    polynomial_string,
    residual_vector,
    to_rational,
)
from .pascal_core import (
    DimensionError,
    ExactMatrix,
    Selection,
    SelectionError,
    binomial,
    generalized_vandermonde,
    submatrix,
)
from .rank import RankReport, is_invertible, oracle_determinant, oracle_rank, rank_report
from .subpair import (
    SubPairIndices,
    index_matrix,
    is_ordered_subpair,
    maximal_subpair,
    oracle_max_length,
)

__all__ = [
    "DimensionError",
    "EmptyModelError",
    "ExactMatrix",
    "LacunaryFit",
    "RankReport",
    "Selection",
    "SelectionError",
    "SubPairIndices",
    "binomial",
    "derivative_at_one",
    "fit",
    "fit_subpair",
    "format_decimal",
    "generalized_vandermonde",
    "index_matrix",
    "is_invertible",
    "is_ordered_subpair",
    "maximal_subpair",
    "oracle_determinant",
    "oracle_max_length",
    "oracle_rank",
    "polynomial_string",
    "rank_report",
    "residual_vector",
    "submatrix",
    "to_rational",
]
