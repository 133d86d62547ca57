"""Dense univariate polynomials over the rationals in the indeterminate lambda.

Coefficients are stored ascending: ``coeffs[k]`` multiplies ``lambda**k``.
The zero polynomial has an empty coefficient tuple, so the leading
coefficient of any stored polynomial is nonzero.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

Scalar = Union[int, Fraction]

VAR = "λ"


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot use {type(x).__name__} as an exact scalar")


def _trim(coeffs: list) -> tuple:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Polynomial:
    """Immutable polynomial with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _trim([as_fraction(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def _raw(cls, coeffs: tuple) -> "Polynomial":
        # caller guarantees Fractions and a trimmed tuple
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", coeffs)
        return p

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c=1) -> "Polynomial":
        return cls([0] * degree + [c])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "Polynomial":
        p = cls.constant(1)
        for r in roots:
            p = p * cls([-as_fraction(r), 1])
        return p

    # -- basic queries -------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim([Fraction(other)])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Polynomial", self.coeffs))

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return format_poly(self)

    # -- arithmetic ----------------------------------------------------

    @staticmethod
    def _coerce(x) -> "Polynomial | None":
        if isinstance(x, Polynomial):
            return x
        if isinstance(x, (int, Fraction)):
            return Polynomial.constant(x)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial._raw(_trim(out))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Polynomial._raw(())
            return Polynomial._raw(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial._raw(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Polynomial._raw(_trim(out))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial exponent must be a non-negative integer")
        result = Polynomial.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = o.degree
        inv_lc = 1 / o.lc
        if len(rem) - 1 < db:
            return Polynomial._raw(()), self
        q = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] * inv_lc
            q[k] = c
            if c:
                for j, bj in enumerate(o.coeffs):
                    rem[k + j] -= c * bj
        return Polynomial._raw(_trim(q)), Polynomial._raw(_trim(rem[:db]))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Polynomial":
        """Quotient that must leave no remainder."""
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{self} is not divisible by {other}")
        return q

    def divides(self, other: "Polynomial") -> bool:
        return not (other % self)

    # -- transforms ----------------------------------------------------

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            return self
        return self * (1 / self.lc)

    def __call__(self, x):
        """Evaluate at a scalar, or compose with a polynomial/rational function."""
        if isinstance(x, Polynomial):
            return self.compose(x)
        if hasattr(x, "num") and hasattr(x, "den"):
            from .ratfunc import compose_poly_with_ratfunc

            return compose_poly_with_ratfunc(self, x)
        return self.eval(x)

    def eval(self, x):
        acc = 0 * x if not isinstance(x, int) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "Polynomial") -> "Polynomial":
        acc = Polynomial._raw(())
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def shift(self, c) -> "Polynomial":
        """p(lambda + c)."""
        return self.compose(Polynomial([c, 1]))

    def scale_arg(self, a) -> "Polynomial":
        """p(a * lambda)."""
        a = as_fraction(a)
        out, pw = [], Fraction(1)
        for c in self.coeffs:
            out.append(c * pw)
            pw *= a
        return Polynomial(out)

    def derivative(self) -> "Polynomial":
        return Polynomial._raw(_trim([k * c for k, c in enumerate(self.coeffs)][1:]))

    def content_primitive(self) -> tuple[Fraction, "Polynomial"]:
        """Split into a rational content and an integer primitive part."""
        from math import gcd, lcm

        if not self.coeffs:
            return Fraction(0), self
        den = 1
        for c in self.coeffs:
            den = lcm(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if ints[-1] < 0:
            g = -g
        return Fraction(g, den), Polynomial([Fraction(v, g) for v in ints])

    def to_json(self) -> dict:
        return {"var": "lambda", "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "Polynomial":
        if obj.get("var", "lambda") != "lambda":
            raise ValueError(f"unsupported variable {obj.get('var')!r}")
        return cls([Fraction(c) for c in obj["coeffs"]])


LAMBDA = Polynomial([0, 1])
ZERO = Polynomial()
ONE = Polynomial([1])


def gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor; gcd(0, 0) is 0."""
    while b:
        a, b = b, a % b
    return a.monic()


def lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.is_zero() or b.is_zero():
        return ZERO
    return (a * b).exact_div(gcd(a, b)).monic()


def poly_prod(factors: Iterable[Polynomial]) -> Polynomial:
    out = ONE
    for f in factors:
        out = out * f
    return out


def rational_roots(p: Polynomial) -> list[Fraction]:
    """Distinct rational roots, found by the rational root test."""
    if p.degree < 1:
        return []
    roots = []
    if p[0] == 0:
        roots.append(Fraction(0))
        k = next(i for i, c in enumerate(p.coeffs) if c != 0)
        p = Polynomial(p.coeffs[k:])
        if p.degree < 1:
            return roots
    _, prim = p.content_primitive()
    a0, an = abs(int(prim[0])), abs(int(prim.lc))
    for num in _divisors(a0):
        for den in _divisors(an):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if cand not in roots and prim.eval(cand) == 0:
                    roots.append(cand)
    return sorted(roots)


def _divisors(m: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def format_poly(p: Polynomial, var: str = VAR) -> str:
    """Human-readable form such as ``λ^3 - 2λ + 1/2``."""
    if p.is_zero():
        return "0"
    terms = []
    for k in range(p.degree, -1, -1):
        c = p[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            if mag == 1:
                body = mono
            elif mag.denominator == 1:
                body = f"{mag}{mono}"
            else:
                body = f"({mag}){mono}"
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def square_free_decomposition(p: Polynomial) -> list[tuple[Polynomial, int]]:
    """Yun's algorithm: monic square-free factors ``g_i`` with p ~ prod g_i**i."""
    if p.degree < 1:
        return []
    out = []
    dp = p.derivative()
    a = gcd(p, dp)
    b = p.exact_div(a)
    c = dp.exact_div(a)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        g = gcd(b, d)
        if g.degree > 0:
            out.append((g, i))
        b = b.exact_div(g)
        c = d.exact_div(g)
        d = c - b.derivative()
        i += 1
    return out
