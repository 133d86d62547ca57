"""Dense exact matrices.

One class serves three entry rings: rationals (``Fraction``), polynomials
in lambda, and rational functions in lambda. Entry arithmetic goes through
the entries' own operators, so ``Matrix`` never inspects the ring except in
``det`` and ``inverse``, where the elimination strategy differs.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .poly import ONE, Polynomial, as_fraction, lcm
from .ratfunc import RationalFunction


class ShapeError(ValueError):
    pass


class SingularMatrixError(ArithmeticError):
    pass


def _scalar(x):
    if isinstance(x, (Polynomial, RationalFunction, Fraction)):
        return x
    return as_fraction(x)


class Matrix:
    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable], cols: int | None = None):
        rows = [tuple(_scalar(x) for x in row) for row in data]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ShapeError("ragged matrix rows")
        else:
            width = cols or 0
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "_data", tuple(rows))

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def _raw(cls, data: Sequence[tuple], rows: int, cols: int) -> "Matrix":
        m = object.__new__(cls)
        object.__setattr__(m, "rows", rows)
        object.__setattr__(m, "cols", cols)
        object.__setattr__(m, "_data", tuple(data))
        return m

    # -- constructors -------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        z = Fraction(0)
        return cls._raw([(z,) * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.diag([1] * n)

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        n = len(values)
        z = Fraction(0)
        data = []
        for i, v in enumerate(values):
            row = [z] * n
            row[i] = _scalar(v)
            data.append(tuple(row))
        return cls._raw(data, n, n)

    @classmethod
    def all_ones(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        one = Fraction(1)
        return cls._raw([(one,) * cols for _ in range(rows)], rows, cols)

    @classmethod
    def ones(cls, n: int) -> "Matrix":
        """The all-ones column vector of length n."""
        return cls.all_ones(n, 1)

    @classmethod
    def from_function(cls, rows: int, cols: int, fn: Callable[[int, int], object]) -> "Matrix":
        return cls([[fn(i, j) for j in range(cols)] for i in range(rows)], cols)

    # -- access -------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, idx):
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def tolist(self) -> list[list]:
        return [list(r) for r in self._data]

    def __iter__(self):
        return iter(self._data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for ra, rb in zip(self._data, other._data) for a, b in zip(ra, rb)
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self._data)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"

    # -- arithmetic ---------------------------------------------------

    def _check_same(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix._raw(
            [tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self._data, other._data)],
            self.rows,
            self.cols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix._raw(
            [tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self._data, other._data)],
            self.rows,
            self.cols,
        )

    def __neg__(self) -> "Matrix":
        return self.map(lambda x: -x)

    def scale(self, c) -> "Matrix":
        c = _scalar(c)
        return self.map(lambda x: c * x)

    def map(self, fn: Callable) -> "Matrix":
        return Matrix._raw([tuple(fn(x) for x in r) for r in self._data], self.rows, self.cols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        cols_b = list(zip(*other._data)) if other.rows else [()] * other.cols
        out = []
        for ra in self._data:
            row = []
            for cb in cols_b:
                acc = Fraction(0)
                for a, b in zip(ra, cb):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(tuple(row))
        return Matrix._raw(out, self.rows, other.cols)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self @ other
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    @property
    def T(self) -> "Matrix":
        return Matrix._raw(list(zip(*self._data)) if self.rows else [], self.cols, self.rows)

    def transpose(self) -> "Matrix":
        return self.T

    def trace(self):
        if not self.is_square():
            raise ShapeError("trace of a non-square matrix")
        acc = Fraction(0)
        for i in range(self.rows):
            acc = acc + self._data[i][i]
        return acc

    def total(self):
        """Sum of all entries, i.e. ones^T M ones."""
        acc = Fraction(0)
        for r in self._data:
            for x in r:
                acc = acc + x
        return acc

    def row_sums(self) -> list:
        out = []
        for r in self._data:
            acc = Fraction(0)
            for x in r:
                acc = acc + x
            out.append(acc)
        return out

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "Matrix":
        return Matrix._raw(
            [tuple(self._data[i][j] for j in col_idx) for i in row_idx], len(row_idx), len(col_idx)
        )

    def permute(self, perm: Sequence[int]) -> "Matrix":
        """P^T M P where vertex perm[k] moves to position k."""
        return self.submatrix(perm, perm)

    def minus_lambda_identity(self) -> "Matrix":
        """lambda*I - M as a polynomial matrix."""
        if not self.is_square():
            raise ShapeError("characteristic matrix of a non-square matrix")
        n = self.rows
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                x = self._data[i][j]
                entry = -x if isinstance(x, (Polynomial, RationalFunction)) else Polynomial([-x])
                if i == j:
                    entry = entry + Polynomial([0, 1])
                row.append(entry)
            out.append(tuple(row))
        return Matrix._raw(out, n, n)

    # -- determinants and inverses ------------------------------------

    def det(self):
        """Exact determinant.

        Rational and rational-function entries use elimination over the
        field; polynomial entries use fraction-free Bareiss elimination.
        Rational-function matrices are first cleared row by row to
        polynomial matrices.
        """
        if not self.is_square():
            raise ShapeError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return Fraction(1)
        kinds = {type(x) for r in self._data for x in r}
        if RationalFunction in kinds:
            return _det_ratfunc(self)
        if Polynomial in kinds:
            return _bareiss([[_as_poly(x) for x in r] for r in self._data])
        return _det_field([list(r) for r in self._data])

    def inverse(self) -> "Matrix":
        """Gauss-Jordan inverse over the entry field (rationals or rational functions)."""
        if not self.is_square():
            raise ShapeError("inverse of a non-square matrix")
        n = self.rows
        kinds = {type(x) for r in self._data for x in r}
        lift = RationalFunction if (Polynomial in kinds or RationalFunction in kinds) else None
        conv = (lambda x: RationalFunction._coerce(x)) if lift else (lambda x: x)
        one = conv(Fraction(1))
        zero = conv(Fraction(0))
        a = [[conv(x) for x in r] + [one if i == j else zero for j in range(n)] for i, r in enumerate(self._data)]
        for c in range(n):
            p = next((r for r in range(c, n) if a[r][c]), None)
            if p is None:
                raise SingularMatrixError("matrix is singular")
            a[c], a[p] = a[p], a[c]
            inv = 1 / a[c][c] if lift is None else a[c][c].inverse()
            a[c] = [x * inv for x in a[c]]
            for r in range(n):
                if r != c and a[r][c]:
                    f = a[r][c]
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]
        return Matrix._raw([tuple(r[n:]) for r in a], n, n)

    def to_json(self) -> list:
        return [[_entry_json(x) for x in r] for r in self._data]


def _entry_json(x):
    if isinstance(x, (Polynomial, RationalFunction)):
        return x.to_json()
    return str(x)


def _as_poly(x) -> Polynomial:
    return x if isinstance(x, Polynomial) else Polynomial([x])


def _det_field(a: list[list]):
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        piv = a[c][c]
        det = det * piv
        for r in range(c + 1, n):
            if a[r][c]:
                f = a[r][c] / piv
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det


def _bareiss(a: list[list[Polynomial]]) -> Polynomial:
    n = len(a)
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if not a[k][k]:
            p = next((r for r in range(k + 1, n) if a[r][k]), None)
            if p is None:
                return Polynomial()
            a[k], a[p] = a[p], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]).exact_div(prev)
            row_i[k] = Polynomial()
        prev = akk
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def _det_ratfunc(m: Matrix) -> RationalFunction:
    rows = []
    scale = RationalFunction(1)
    for r in m:
        rf = [RationalFunction._coerce(x) for x in r]
        den = ONE
        for x in rf:
            den = lcm(den, x.den)
        rows.append([(x * den).to_polynomial() for x in rf])
        scale = scale * RationalFunction(ONE, den)
    return scale * _bareiss(rows)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product with row-major block layout."""
    data = []
    for i in range(a.rows):
        for k in range(b.rows):
            data.append(tuple(a[i, j] * b[k, l] for j in range(a.cols) for l in range(b.cols)))
    return Matrix._raw(data, a.rows * b.rows, a.cols * b.cols)


def block(grid: Sequence[Sequence[Matrix]]) -> Matrix:
    """Assemble a block matrix from a grid of conformal blocks."""
    data = []
    for brow in grid:
        h = brow[0].rows
        if any(b.rows != h for b in brow):
            raise ShapeError("blocks in one block-row differ in height")
        for i in range(h):
            data.append(tuple(x for b in brow for x in b.row(i)))
    widths = {len(r) for r in data}
    if len(widths) > 1:
        raise ShapeError("block columns are not conformal")
    return Matrix._raw(data, len(data), widths.pop() if widths else 0)


def identity(n: int) -> Matrix:
    return Matrix.identity(n)


def ones(n: int) -> Matrix:
    return Matrix.ones(n)


def all_ones_matrix(rows: int, cols: int | None = None) -> Matrix:
    return Matrix.all_ones(rows, cols)
