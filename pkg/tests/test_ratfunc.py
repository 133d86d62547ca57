from fractions import Fraction

import pytest
from hypothesis import given

from corona_spectra.algebra import LAMBDA, Polynomial, RationalFunction, compose_poly_with_ratfunc

from conftest import fractions, polynomials

lam = LAMBDA


def R(num, den=None):
    return RationalFunction(num, den)


def test_canonical_form():
    r = R(2 * lam**2 - 2, 4 * lam**2 - 4 * lam)
    assert r.num == Polynomial([Fraction(1, 2), Fraction(1, 2)])
    assert r.den == lam
    assert R(3, 2 * lam).den.is_monic()
    assert R(0, lam + 3).den == Polynomial([1])


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionError):
        R(1, 0)
    with pytest.raises(ZeroDivisionError):
        R(1) / R(0)


def test_compose_examples():
    assert compose_poly_with_ratfunc(lam**2, R(lam + 1, lam)) == R((lam + 1) ** 2, lam**2)
    assert compose_poly_with_ratfunc(lam**3 - 1, R(lam)) == R(lam**3 - 1)
    inner = R(lam**3 - 2 * lam - 1, lam**2)
    out = compose_poly_with_ratfunc(lam**3 - 1, inner)
    assert out == R((lam**3 - 2 * lam - 1) ** 3 - lam**6, lam**6)
    for x in (2, 3, 5):
        assert out(x) == inner(x) ** 3 - 1


def test_evaluation_at_pole_raises():
    with pytest.raises(ZeroDivisionError):
        R(1, lam - 1)(1)


def test_json_round_trip():
    r = R(2 * lam + 1, lam**2)
    assert RationalFunction.from_json(r.to_json()) == r


def test_to_polynomial():
    assert R(lam**2 - 1, lam - 1).to_polynomial() == lam + 1
    with pytest.raises(ArithmeticError):
        R(1, lam).to_polynomial()


@given(polynomials(max_degree=3), polynomials(max_degree=3), polynomials(max_degree=3))
def test_field_operations(a, b, c):
    if b.is_zero() or c.is_zero():
        return
    x, y = R(a, b), R(c, b + 1 if not (b + 1).is_zero() else lam)
    assert x + y - y == x
    if not y.is_zero():
        assert x * y / y == x
    assert x * (y + 1) == x * y + x


@given(polynomials(max_degree=4))
def test_compose_with_identity(f):
    assert compose_poly_with_ratfunc(f, R(lam)) == R(f)


@given(polynomials(max_degree=3), fractions)
def test_compose_matches_pointwise(f, x):
    inner = R(lam + 2, lam**2 + 1)
    assert compose_poly_with_ratfunc(f, inner)(x) == f(inner(x))
