from fractions import Fraction

import pytest
from hypothesis import given

from corona_spectra.algebra import LAMBDA, Polynomial, format_poly, gcd, lcm, rational_roots, square_free_decomposition
from corona_spectra.algebra.poly import poly_prod

from conftest import fractions, polynomials

lam = LAMBDA


def P(*coeffs):
    return Polynomial(coeffs)


def test_gcd_is_monic_common_factor():
    assert gcd(lam**2 - 1, lam - 1) == lam - 1
    assert gcd(P(0, 0, 2), P(0, 4)) == lam
    assert gcd(P(), P(3, 6)) == P(Fraction(1, 2), 1)


def test_product_and_division():
    assert (lam - 1) * (lam + 1) == lam**2 - 1
    assert divmod(lam**3, lam - 1) == (lam**2 + lam + 1, P(1))
    with pytest.raises(ZeroDivisionError):
        divmod(lam, P())


def test_exact_div_rejects_remainder():
    assert (lam**2 - 1).exact_div(lam + 1) == lam - 1
    with pytest.raises(ArithmeticError):
        (lam**2 + 1).exact_div(lam + 1)


def test_zero_polynomial_conventions():
    z = P(0, 0)
    assert z.is_zero() and z.degree == -1 and z.coeffs == ()
    assert P(1, 0, 0).degree == 0


def test_eval_and_compose():
    p = lam**3 - 1
    assert p(2) == 7
    assert p(Fraction(1, 2)) == Fraction(-7, 8)
    assert p(lam + 1) == lam**3 + 3 * lam**2 + 3 * lam
    assert p.shift(1) == p(lam + 1)
    assert p.scale_arg(2) == 8 * lam**3 - 1


def test_format():
    assert format_poly(lam**3 - 2 * lam + Fraction(1, 2)) == "λ^3 - 2λ + 1/2"
    assert format_poly(P()) == "0"


def test_json_round_trip():
    p = P(Fraction(3, 2), 0, -1)
    assert p.to_json() == {"var": "lambda", "coeffs": ["3/2", "0", "-1"]}
    assert Polynomial.from_json(p.to_json()) == p


def test_rational_roots():
    p = (lam - 2) * (2 * lam + 1) * (lam**2 + 1)
    assert rational_roots(p) == [Fraction(-1, 2), Fraction(2)]
    assert rational_roots(lam**3) == [0]


def test_square_free_decomposition():
    p = (lam - 1) ** 3 * (lam + 2) * lam**2
    parts = square_free_decomposition(p)
    assert poly_prod(g**k for g, k in parts) == p.monic()
    assert {k for _, k in parts} == {1, 2, 3}


@given(polynomials(), polynomials(), polynomials())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)


@given(polynomials(), polynomials())
def test_divmod_reconstructs(a, b):
    if b.is_zero():
        return
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(polynomials(max_degree=4), polynomials(max_degree=4))
def test_gcd_divides_both_and_lcm_relation(a, b):
    g = gcd(a, b)
    if g.is_zero():
        assert a.is_zero() and b.is_zero()
        return
    assert g.is_monic()
    assert a % g == Polynomial() and b % g == Polynomial()
    if not a.is_zero() and not b.is_zero():
        assert (g * lcm(a, b)) == (a * b).monic()


@given(polynomials(), fractions)
def test_compose_agrees_with_evaluation(p, x):
    inner = lam**2 - 3
    assert p(inner)(x) == p(inner(x))
