"""Rational functions in lambda kept in a canonical reduced form.

The canonical form has a monic denominator and numerator/denominator
coprime, so two rational functions are equal exactly when their stored
pairs are equal.
"""
from __future__ import annotations

from fractions import Fraction

from .poly import ONE, ZERO, Polynomial, as_fraction, format_poly, gcd


class RationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_poly(num)
        den = ONE if den is None else _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = ZERO, ONE
        else:
            g = gcd(num, den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
            lc = den.lc
            if lc != 1:
                num, den = num * (1 / lc), den * (1 / lc)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def _coerce(cls, x) -> "RationalFunction | None":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, (Polynomial, int, Fraction)):
            return cls(x)
        return None

    def is_polynomial(self) -> bool:
        return self.den == ONE

    def to_polynomial(self) -> Polynomial:
        if not self.is_polynomial():
            raise ArithmeticError(f"{self} does not reduce to a polynomial")
        return self.num

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        return hash(("RationalFunction", self.num.coeffs, self.den.coeffs))

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        if self.is_polynomial():
            return format_poly(self.num)
        return f"({format_poly(self.num)})/({format_poly(self.den)})"

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return _raw(-self.num, self.den)

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
                return _raw(ZERO, ONE)
            return _raw(self.num * other, self.den)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # cross-cancel before multiplying to keep degrees small
        g1, g2 = gcd(self.num, o.den), gcd(o.num, self.den)
        n1 = self.num.exact_div(g1) if g1.degree > 0 else self.num
        d2 = o.den.exact_div(g1) if g1.degree > 0 else o.den
        n2 = o.num.exact_div(g2) if g2.degree > 0 else o.num
        d1 = self.den.exact_div(g2) if g2.degree > 0 else self.den
        if n1.is_zero() or n2.is_zero():
            return _raw(ZERO, ONE)
        den = d1 * d2
        lc = den.lc
        return _raw(n1 * n2 * (1 / lc), den * (1 / lc))

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        lc = self.num.lc
        return _raw(self.den * (1 / lc), self.num * (1 / lc))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("rational function division by zero")
            return _raw(self.num * (1 / as_fraction(other)), self.den)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            raise TypeError("exponent must be an integer")
        if e < 0:
            return self.inverse() ** (-e)
        return _raw(self.num**e, self.den**e)

    def __call__(self, x):
        """Evaluate at a scalar or compose with a polynomial / rational function."""
        if isinstance(x, (Polynomial, RationalFunction)):
            return compose(self, RationalFunction._coerce(x))
        d = self.den.eval(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num.eval(x) / d

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "RationalFunction":
        return cls(Polynomial.from_json(obj["num"]), Polynomial.from_json(obj["den"]))


def _as_poly(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    return Polynomial.constant(as_fraction(x))


def _raw(num: Polynomial, den: Polynomial) -> RationalFunction:
    # caller guarantees the canonical form
    r = object.__new__(RationalFunction)
    object.__setattr__(r, "num", num)
    object.__setattr__(r, "den", den)
    return r


def compose_poly_with_ratfunc(f: Polynomial, r: RationalFunction) -> RationalFunction:
    """f(p/q) = (sum_k f_k p^k q^(d-k)) / q^d, reduced."""
    r = RationalFunction._coerce(r)
    d = max(f.degree, 0)
    num = _expand_homogeneous(f, r.num, r.den, d)
    return RationalFunction(num, r.den**d)


def _expand_homogeneous(f: Polynomial, p: Polynomial, q: Polynomial, d: int) -> Polynomial:
    out = ZERO
    ppow = ONE
    q_powers = [ONE]
    for _ in range(d):
        q_powers.append(q_powers[-1] * q)
    for k in range(f.degree + 1):
        if f[k]:
            out = out + ppow * q_powers[d - k] * f[k]
        ppow = ppow * p
    return out


def compose(outer: RationalFunction, inner: RationalFunction) -> RationalFunction:
    """outer(inner) for rational functions."""
    d = max(outer.num.degree, outer.den.degree, 0)
    num = _expand_homogeneous(outer.num, inner.num, inner.den, d)
    den = _expand_homogeneous(outer.den, inner.num, inner.den, d)
    if den.is_zero():
        raise ZeroDivisionError("composition lands on a pole identically")
    return RationalFunction(num, den)


LAMBDA_RF = RationalFunction(Polynomial([0, 1]))
