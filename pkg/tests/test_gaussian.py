from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from csl.errors import DomainError
from csl.gaussian import (
    I,
    ONE,
    GaussianInt,
    GaussianRational,
    canonical_associate,
    euclid_divide,
    factor,
    format_gaussian,
    gcd,
    inverse_mod,
    is_odd_visible,
    is_visible,
    lcm,
    parse_gaussian,
    parse_gaussian_rational,
)

from .strategies import gaussian, gaussian_rational, nonzero_gaussian

G = GaussianInt


def test_gcd_examples():
    assert gcd(G(1, 2), G(1, -2)).is_unit()
    assert gcd(G(5), G(1, 2)) == canonical_associate(G(1, 2))[0]
    assert gcd(G(0), G(3, 1)) == G(3, 1)


def test_gcd_of_zeros_rejected():
    with pytest.raises(DomainError):
        gcd(G(0), G(0))


def test_factor_examples():
    f5 = factor(G(5))
    assert sorted(p.norm() for p, _ in f5.factors) == [5, 5]
    assert f5.product() == G(5)
    f2 = factor(G(2))
    assert f2.unit == -I
    assert f2.factors == ((G(1, 1), 2),)
    f3 = factor(G(3))
    assert f3.factors == ((G(3), 1),)


def test_factor_zero_rejected():
    with pytest.raises(DomainError):
        factor(G(0))


def test_euclid_examples():
    assert euclid_divide(G(3, 2), G(5)) == (G(1), G(-2, 2))
    assert euclid_divide(G(6), G(2)) == (G(3), G(0))
    assert euclid_divide(G(1, 1), G(3)) == (G(0), G(1, 1))
    with pytest.raises(DomainError):
        euclid_divide(G(1), G(0))


def test_visibility():
    assert not is_visible(G(2, 4))
    assert is_visible(G(3, 2))
    assert not is_odd_visible(G(1, 1))
    assert is_odd_visible(G(1, 2))


@given(gaussian, nonzero_gaussian)
def test_euclid_remainder_bound(a, b):
    k, r = euclid_divide(a, b)
    assert k * b + r == a
    assert 2 * r.norm() <= b.norm()


@given(gaussian, gaussian)
def test_gcd_divides_and_is_canonical(a, b):
    if not a and not b:
        return
    g = gcd(a, b)
    assert g.divides(a) and g.divides(b)
    assert canonical_associate(g)[0] == g
    if a and b:
        assert lcm(a, b).norm() * g.norm() == a.norm() * b.norm()


@given(nonzero_gaussian)
def test_factor_reproduces(z):
    f = factor(z)
    assert f.product() == z
    for p, _ in f.factors:
        assert canonical_associate(p)[0] == p


@given(gaussian, nonzero_gaussian)
def test_inverse_mod(a, m):
    if m.norm() == 1 or not a or not gcd(a, m).is_unit():
        return
    inv = inverse_mod(a, m)
    assert m.divides(a * inv - ONE)


@given(gaussian)
def test_format_parse_roundtrip(z):
    assert parse_gaussian(format_gaussian(z)) == z


def test_format_examples():
    assert format_gaussian(G(1, 2)) == "1+2i"
    assert format_gaussian(G(-3, 0)) == "-3"
    assert format_gaussian(G(2, -1)) == "2-i"
    assert format_gaussian(G(0, 1)) == "i"
    assert parse_gaussian("-3+0i") == G(-3)
    assert parse_gaussian("1i") == I


def test_parse_errors_report_position():
    with pytest.raises(DomainError, match="position"):
        parse_gaussian("2+x")
    with pytest.raises(DomainError):
        parse_gaussian_rational("(1+i)/0")


def test_parse_rational_forms():
    x = parse_gaussian_rational("(2+1i)/5")
    assert x.parts() == (Fraction(2, 5), Fraction(1, 5))
    assert parse_gaussian_rational("1/3,1/6").parts() == (Fraction(1, 3), Fraction(1, 6))
    assert parse_gaussian_rational("1/2").parts() == (Fraction(1, 2), 0)


def _pair_mul(x, y):
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


@given(gaussian_rational, gaussian_rational)
def test_rational_field_ops_match_componentwise(x, y):
    xp, yp = x.parts(), y.parts()
    assert (x + y).parts() == (xp[0] + yp[0], xp[1] + yp[1])
    assert (x - y).parts() == (xp[0] - yp[0], xp[1] - yp[1])
    assert (x * y).parts() == _pair_mul(xp, yp)
    if y.num:
        assert ((x / y) * y) == x


@given(gaussian_rational)
def test_rational_equality_is_structural(x):
    assert GaussianRational.from_parts(*x.parts()) == x
    assert x.is_integral() == all(v.denominator == 1 for v in x.parts())
