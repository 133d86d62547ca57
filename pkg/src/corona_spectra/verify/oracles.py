"""Brute-force reference computations, kept independent of the main path.

``oracle_charpoly`` uses Berkowitz's division-free recurrence and
``oracle_coronal`` expands a bordered determinant by Laplace expansion,
so neither shares intermediate structure with the
Faddeev-LeVerrier code in ``algebra.spectral``.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from ..algebra import Matrix, Polynomial, RationalFunction, ShapeError
from ..digraph import Digraph

ORACLE_CORONAL_MAX_N = 9


def oracle_charpoly(m: Matrix) -> Polynomial:
    """det(lambda*I - M) by Berkowitz's algorithm."""
    if not m.is_square():
        raise ShapeError(f"characteristic polynomial of a non-square {m.shape} matrix")
    n = m.rows
    a = m.tolist()
    desc = [Fraction(1)]  # coefficients, highest degree first
    for k in range(n):
        row = a[k][:k]
        col = [a[i][k] for i in range(k)]
        toeplitz = [Fraction(1), -a[k][k]]
        x = col
        for _ in range(k):
            toeplitz.append(-sum((r * v for r, v in zip(row, x)), Fraction(0)))
            x = [sum((a[i][j] * x[j] for j in range(k)), Fraction(0)) for i in range(k)]
        desc = [
            sum((toeplitz[i - j] * desc[j] for j in range(len(desc)) if 0 <= i - j < len(toeplitz)), Fraction(0))
            for i in range(k + 2)
        ]
    return Polynomial(desc[::-1])


def _padd(a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return out


def _pmul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _laplace_det(rows: list[list[list]]) -> list:
    """Determinant by expansion over column subsets, row by row.

    Entries are coefficient lists (ascending powers of lambda); an empty
    list is zero.
    """
    n = len(rows)
    table: dict[int, list] = {0: [1]}
    for k in range(n):
        nxt: dict[int, list] = {}
        for mask, acc in table.items():
            for c in range(n):
                bit = 1 << c
                entry = rows[k][c]
                if mask & bit or not entry:
                    continue
                term = _pmul(acc, entry)
                if bin(mask >> (c + 1)).count("1") % 2:
                    term = [-x for x in term]
                prev = nxt.get(mask | bit)
                nxt[mask | bit] = term if prev is None else _padd(prev, term)
        table = nxt
    return table.get((1 << n) - 1, [])


def oracle_coronal(m: Matrix) -> RationalFunction:
    """ones^T adj(lambda*I - M) ones over det(lambda*I - M).

    The numerator is minus the determinant of lambda*I - M bordered by a
    row and a column of ones with a zero corner.
    """
    if not m.is_square():
        raise ShapeError(f"coronal of a non-square {m.shape} matrix")
    n = m.rows
    if n == 0:
        raise ValueError("coronal of an empty matrix")
    if n > ORACLE_CORONAL_MAX_N:
        raise ValueError(f"oracle coronal is limited to n <= {ORACLE_CORONAL_MAX_N}, got {n}")

    def entry(i, j):
        c = -m[i, j]
        if c.denominator == 1:
            c = int(c)  # plain ints keep the expansion fast
        if i == j:
            return [c, 1]
        return [c] if c else []

    char = [[entry(i, j) for j in range(n)] for i in range(n)]
    bordered = [r + [[1]] for r in char] + [[[1]] * n + [[]]]
    num = Polynomial(_laplace_det(bordered))
    return RationalFunction(-num, Polynomial(_laplace_det(char)))


# -- seeded randomness ------------------------------------------------


def rng_for(*words: int) -> np.random.Generator:
    """Counter-based generator keyed by a tuple of non-negative integers."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([int(w) for w in words])))


def random_digraph_from(rng: np.random.Generator, n: int, density: float) -> Digraph:
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    draws = rng.random(n * (n - 1)) if n > 1 else []
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    return Digraph(n, tuple(p for p, x in zip(pairs, draws) if x < density))


def random_digraph(seed: int, n: int, density: float) -> Digraph:
    """Each ordered pair (u, v), u != v, in lexicographic order is an arc
    independently with probability ``density``."""
    return random_digraph_from(rng_for(seed), n, density)


def random_int_matrix(rng: np.random.Generator, rows: int, cols: int | None = None, bound: int = 5) -> Matrix:
    cols = rows if cols is None else cols
    vals = rng.integers(-bound, bound + 1, size=(rows, cols))
    return Matrix([[int(x) for x in r] for r in vals], cols)
