"""Exact scalar, polynomial, rational-function and matrix arithmetic."""
from .matrix import Matrix, ShapeError, SingularMatrixError, all_ones_matrix, block, identity, kron, ones
from .poly import (
    LAMBDA,
    ONE,
    ZERO,
    Polynomial,
    as_fraction,
    format_poly,
    gcd,
    lcm,
    rational_roots,
    square_free_decomposition,
)
from .ratfunc import LAMBDA_RF, RationalFunction, compose, compose_poly_with_ratfunc
from .roots import RootFindingError, cluster_roots, numeric_roots, simple_roots
from .spectral import (
    charpoly,
    coronal,
    faddeev_leverrier,
    rank_one_det,
    rank_one_inverse,
    resolvent_sum_numerator,
    schur_block_det,
)

__all__ = [
    "LAMBDA",
    "LAMBDA_RF",
    "Matrix",
    "ONE",
    "Polynomial",
    "RationalFunction",
    "RootFindingError",
    "ShapeError",
    "SingularMatrixError",
    "ZERO",
    "all_ones_matrix",
    "as_fraction",
    "block",
    "charpoly",
    "cluster_roots",
    "compose",
    "compose_poly_with_ratfunc",
    "coronal",
    "faddeev_leverrier",
    "format_poly",
    "gcd",
    "identity",
    "kron",
    "lcm",
    "numeric_roots",
    "ones",
    "rank_one_det",
    "rank_one_inverse",
    "rational_roots",
    "resolvent_sum_numerator",
    "schur_block_det",
    "simple_roots",
    "square_free_decomposition",
]
