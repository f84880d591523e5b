"""Exact polynomial and truncated power series arithmetic."""

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from shufflelab.poly import RationalPoly, as_fraction, fraction_str
from shufflelab.series import TruncatedSeries, geometric_series

x = RationalPoly.var("x")
y = RationalPoly.var("y")

fractions_st = st.fractions(
    min_value=Fraction(-3), max_value=Fraction(3), max_denominator=6
)


def small_poly(coeffs):
    """Polynomial c0 + c1 x + c2 y + c3 x y from a 4-tuple of Fractions."""
    c0, c1, c2, c3 = coeffs
    return RationalPoly.const(c0) + c1 * x + c2 * y + c3 * x * y


# ---------------------------------------------------------------------------
# fractions


def test_as_fraction():
    assert as_fraction("3/4") == Fraction(3, 4)
    assert as_fraction("-1/2") == Fraction(-1, 2)
    assert as_fraction(2) == Fraction(2)
    assert as_fraction(Fraction(1, 3)) == Fraction(1, 3)
    with pytest.raises(ValueError):
        as_fraction("0.5.1")


def test_fraction_str():
    assert fraction_str(Fraction(3, 4)) == "3/4"
    assert fraction_str(Fraction(2)) == "2/1"
    assert fraction_str(0) == "0/1"
    assert as_fraction(fraction_str(Fraction(-7, 12))) == Fraction(-7, 12)


# ---------------------------------------------------------------------------
# polynomials


def test_poly_basic_identity():
    p = (x + y) ** 2
    assert p == x**2 + 2 * x * y + y**2
    assert p.coefficient({"x": 1, "y": 1}) == 2
    assert p.coefficient({"x": 2}) == 1
    assert p.coefficient({"x": 3}) == 0
    assert p.total_degree() == 2
    assert p.variables() == {"x", "y"}


def test_poly_zero_and_constants():
    zero = x - x
    assert zero.is_zero()
    assert not zero
    assert zero == 0
    assert RationalPoly.const(Fraction(5, 3)).as_constant() == Fraction(5, 3)
    with pytest.raises(ValueError):
        (x + 1).as_constant()


def test_poly_mixed_scalar_ops():
    p = 1 - x
    assert p + x == 1
    assert (2 * p) == 2 - 2 * x
    assert (p - 1) == -x
    assert Fraction(1, 2) * x + Fraction(1, 2) * x == x


def test_poly_pow():
    assert (1 + x) ** 0 == 1
    assert (1 + x) ** 3 == 1 + 3 * x + 3 * x**2 + x**3
    with pytest.raises(ValueError):
        (1 + x) ** -1


def test_poly_substitute_partial():
    p = x**2 + x * y + 1
    q = p.substitute({"x": Fraction(1, 2)})
    assert q == Fraction(5, 4) + Fraction(1, 2) * y
    # substituting a polynomial composes
    r = p.substitute({"x": y + 1})
    assert r == (y + 1) ** 2 + (y + 1) * y + 1
    assert p.substitute({}) == p


def test_poly_substitute_full_evaluates():
    p = (x + 2 * y) ** 3
    v = p.substitute({"x": Fraction(1, 3), "y": Fraction(1, 6)}).as_constant()
    assert v == Fraction(8, 27)


@given(
    st.tuples(fractions_st, fractions_st, fractions_st, fractions_st),
    st.tuples(fractions_st, fractions_st, fractions_st, fractions_st),
    st.tuples(fractions_st, fractions_st, fractions_st, fractions_st),
)
def test_poly_ring_axioms(ca, cb, cc):
    a, b, c = small_poly(ca), small_poly(cb), small_poly(cc)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)


@given(
    st.tuples(fractions_st, fractions_st, fractions_st, fractions_st),
    fractions_st,
    fractions_st,
)
def test_poly_evaluation_homomorphism(coeffs, vx, vy):
    p = small_poly(coeffs)
    env = {"x": vx, "y": vy}
    direct = p.substitute(env).as_constant()
    expected = coeffs[0] + coeffs[1] * vx + coeffs[2] * vy + coeffs[3] * vx * vy
    assert direct == expected


# ---------------------------------------------------------------------------
# truncated series


def test_series_constructors():
    s = TruncatedSeries(3, [1, 2, 3, 4])
    assert s.coefficient(0) == 1
    assert s.coefficient(3) == 4
    with pytest.raises(IndexError):
        s.coefficient(4)
    assert TruncatedSeries.one(2) == TruncatedSeries(2, [1, 0, 0])
    assert TruncatedSeries.term(4, 2, Fraction(1, 3)).coefficient(2) == Fraction(1, 3)
    # a term beyond the order is silently zero
    assert TruncatedSeries.term(2, 5, 1) == TruncatedSeries.zero(2)


def test_series_exp_taylor():
    u = TruncatedSeries.term(8, 1, Fraction(1))
    e = u.exp()
    for n in range(9):
        assert e.coefficient(n) == Fraction(1, math.factorial(n))


def test_series_log_exp_round_trip():
    u = TruncatedSeries.term(6, 1, Fraction(1))
    s = 2 * u - 3 * u * u + u.shift(2)
    assert s.exp().log() == s
    g = geometric_series(6, 1, Fraction(1, 2))
    assert g.log().exp() == g


def test_series_geometric():
    g = geometric_series(5, 1, Fraction(1, 3))
    for n in range(6):
        assert g.coefficient(n) == Fraction(1, 3) ** n
    # 1/(1-u^2) has only even powers
    g2 = geometric_series(5, 2, 1)
    assert [g2.coefficient(n) for n in range(6)] == [1, 0, 1, 0, 1, 0]


def test_series_inverse():
    s = TruncatedSeries(5, [1, 1, 0, 0, 0, 0])
    inv = s.inverse()
    assert s * inv == TruncatedSeries.one(5)
    for n in range(6):
        assert inv.coefficient(n) == (-1) ** n
    assert s**-2 == inv * inv


def test_series_mul_truncates():
    u = TruncatedSeries.term(2, 1, 1)
    p = (1 + u) * (1 + u) * (1 + u)
    assert p == TruncatedSeries(2, [1, 3, 3])


def test_series_poly_coefficients():
    x1 = RationalPoly.var("x1")
    x2 = RationalPoly.var("x2")
    s = TruncatedSeries.term(4, 1, x1) + TruncatedSeries.term(4, 2, x2)
    e = s.exp()
    assert e.coefficient(2) == x1**2 * Fraction(1, 2) + x2
    assert e.extract(2, {"x2": 1}) == 1
    assert e.extract(2, {"x1": 2}) == Fraction(1, 2)
    assert e.extract(2, {"x1": 1}) == 0
    assert e.log() == s


def test_series_substitute():
    x1 = RationalPoly.var("x1")
    s = TruncatedSeries.term(3, 1, x1).exp()
    t = s.substitute({"x1": Fraction(2)})
    for n in range(4):
        assert t.extract(n) == Fraction(2**n, math.factorial(n))


def test_series_extract_scalar_coeffs():
    g = geometric_series(4, 1, Fraction(1, 2))
    assert g.extract(3) == Fraction(1, 8)
    assert g.extract(3, {"x1": 1}) == 0


@given(st.lists(fractions_st, min_size=5, max_size=5))
def test_series_exp_log_inverse(coeffs):
    s = TruncatedSeries(4, [Fraction(0)] + coeffs[1:])
    assert s.exp().log() == s
    t = TruncatedSeries(4, [Fraction(1)] + coeffs[1:])
    assert t * t.inverse() == TruncatedSeries.one(4)
    assert t.log().exp() == t


@given(st.lists(fractions_st, min_size=4, max_size=4), st.lists(fractions_st, min_size=4, max_size=4))
def test_series_exp_is_multiplicative(a, b):
    sa = TruncatedSeries(3, [Fraction(0)] + a[1:])
    sb = TruncatedSeries(3, [Fraction(0)] + b[1:])
    assert (sa + sb).exp() == sa.exp() * sb.exp()
