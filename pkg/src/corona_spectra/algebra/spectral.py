"""Characteristic polynomials, coronals and the block-determinant identities."""
from __future__ import annotations

from fractions import Fraction

from .matrix import Matrix, ShapeError, SingularMatrixError
from .poly import Polynomial
from .ratfunc import RationalFunction


def faddeev_leverrier(m: Matrix) -> tuple[Polynomial, list[Matrix]]:
    """Characteristic polynomial and the adjugate coefficient matrices.

    Returns ``(f, [N_0, ..., N_{n-1}])`` with
    ``adj(lambda*I - M) = sum_k N_k * lambda**(n-1-k)``.
    """
    if not m.is_square():
        raise ShapeError(f"characteristic polynomial of a non-square {m.shape} matrix")
    n = m.rows
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    adj = []
    current = Matrix.identity(n)
    for k in range(1, n + 1):
        adj.append(current)
        mn = m @ current
        c = -mn.trace() / k
        coeffs[n - k] = c
        if k < n:
            current = mn + Matrix.identity(n).scale(c)
    return Polynomial(coeffs), adj


def charpoly(m: Matrix) -> Polynomial:
    """det(lambda*I - M), monic of degree n."""
    if m.is_square() and m.rows == 0:
        raise ValueError("characteristic polynomial of an empty matrix")
    return faddeev_leverrier(m)[0]


def coronal(m: Matrix) -> RationalFunction:
    """Sum of the entries of the resolvent (lambda*I - M)^-1, reduced."""
    if not m.is_square():
        raise ShapeError(f"coronal of a non-square {m.shape} matrix")
    if m.rows == 0:
        raise ValueError("coronal of an empty matrix")
    f, adj = faddeev_leverrier(m)
    n = m.rows
    num = [Fraction(0)] * n
    for k, nk in enumerate(adj):
        num[n - 1 - k] = nk.total()
    return RationalFunction(Polynomial(num), f)


def resolvent_sum_numerator(m: Matrix) -> Polynomial:
    """ones^T adj(lambda*I - M) ones, before any reduction."""
    _, adj = faddeev_leverrier(m)
    n = m.rows
    return Polynomial([adj[n - 1 - k].total() for k in range(n)])


def schur_block_det(m1: Matrix, m2: Matrix, m3: Matrix, m4: Matrix):
    """det [[M1, M2], [M3, M4]] = det(M4) * det(M1 - M2 M4^-1 M3)."""
    p, q = m1.rows, m4.rows
    if not (m1.shape == (p, p) and m2.shape == (p, q) and m3.shape == (q, p) and m4.shape == (q, q)):
        raise ShapeError("blocks are not conformal")
    d4 = m4.det()
    if not d4:
        raise SingularMatrixError("lower-right block is singular")
    schur = m1 - m2 @ m4.inverse() @ m3
    return d4 * schur.det()


def rank_one_det(c: Matrix, alpha):
    """det(C + alpha*J) = det(C) * (1 + alpha * ones^T C^-1 ones)."""
    d = c.det()
    if not d:
        raise SingularMatrixError("C must be invertible")
    return d * (1 + alpha * c.inverse().total())


def rank_one_inverse(c: Matrix, alpha) -> Matrix:
    """(C + alpha*J)^-1 = C^-1 - alpha C^-1 J C^-1 / (1 + alpha ones^T C^-1 ones)."""
    c_inv = c.inverse()
    denom = 1 + alpha * c_inv.total()
    if not denom:
        raise SingularMatrixError("C + alpha*J is singular (1 + alpha ones^T C^-1 ones = 0)")
    correction = c_inv @ Matrix.all_ones(c.rows) @ c_inv
    return c_inv - correction.scale(alpha / denom)
