from fractions import Fraction
from itertools import product
from math import gcd

from hypothesis import given
from hypothesis import strategies as st

from csl import linalg, oracle, square
from csl.gaussian import ONE, UNITS, GaussianInt
from csl.lattice import RationalLattice
from csl.square import PlanarCoincidence

G = GaussianInt
F = Fraction
Z2 = RationalLattice.integer(2)
COINCIDENCES = square.enumerate_coincidences(100)
coincidence = st.sampled_from(COINCIDENCES)


def _scan_numerators(n):
    out = []
    for a in range(1, int(n**0.5) + 1, 2):
        for b in range(-int(n**0.5), int(n**0.5) + 1):
            if b % 2 == 0 and a * a + b * b <= n and gcd(a, b) == 1:
                out.append(G(a, b))
    return sorted(out, key=lambda z: (z.norm(), z.re, -z.im))


def test_enumerate_numerators_examples():
    assert square.enumerate_numerators(4) == [ONE]
    assert square.enumerate_numerators(5) == [ONE, G(1, 2), G(1, -2)]
    assert sum(z.norm() == 65 for z in square.enumerate_numerators(65)) == 4


def test_enumerate_numerators_matches_direct_scan():
    assert square.enumerate_numerators(1000) == _scan_numerators(1000)


def test_isometry_matrix_examples():
    assert square.isometry_matrix(PlanarCoincidence(ONE, G(0, 1))) == ((0, -1), (1, 0))
    assert square.isometry_matrix(PlanarCoincidence(G(1, 2))) == ((F(-3, 5), F(-4, 5)), (F(4, 5), F(-3, 5)))
    assert square.isometry_matrix(PlanarCoincidence(ONE, ONE, True)) == ((1, 0), (0, -1))


def test_index_examples():
    assert [square.coincidence_index(PlanarCoincidence(z)) for z in (ONE, G(1, 2), G(3, 2))] == [1, 5, 13]


def test_csl_and_dsc_examples():
    c = PlanarCoincidence(G(1, 2))
    assert square.csl_basis(PlanarCoincidence(ONE)) == Z2
    assert square.csl_basis(c) == RationalLattice.span([(1, 2), (-2, 1)])
    assert square.csl_basis(PlanarCoincidence(G(3, 2))).index_in(Z2) == 13
    assert square.dsc_basis(c) == RationalLattice.span([(F(1, 5), F(2, 5)), (F(-2, 5), F(1, 5))])


def _box_csl(r, box=12):
    """Points of Z^2 whose image under r^-1 is integral, i.e. Z^2 ∩ r Z^2, by brute force."""
    rinv = linalg.transpose(r)
    pts = []
    for p in product(range(-box, box + 1), repeat=2):
        if all(x.denominator == 1 for x in linalg.mat_vec(rinv, p)):
            pts.append(p)
    return RationalLattice.span(pts) if len(pts) > 2 else None


def test_csl_against_point_scan():
    for c in square.enumerate_coincidences(65):
        assert _box_csl(square.isometry_matrix(c)) == square.csl_basis(c), c


@given(coincidence)
def test_matrix_orthogonal_with_index_denominators(c):
    m = square.isometry_matrix(c)
    assert linalg.is_orthogonal(m)
    assert all(c.sigma % x.denominator == 0 for row in m for x in row)


@given(coincidence, coincidence)
def test_composition_matches_matrix_product(a, b):
    prod = square.compose(b, a)
    assert square.isometry_matrix(prod) == linalg.mat_mul(square.isometry_matrix(b), square.isometry_matrix(a))


@given(coincidence)
def test_inverse(c):
    assert square.compose(square.inverse(c), c) == PlanarCoincidence(ONE)


@given(coincidence)
def test_from_multiplier_roundtrip(c):
    assert PlanarCoincidence.from_multiplier(c.multiplier(), c.reflection) == c


@given(coincidence)
def test_eps_z_minus_zbar_closed_form(c):
    assert square.eps_z_minus_zbar(c) == c.unit * c.numerator - c.numerator.conj()


def test_csl_count_multiplicative():
    f = square.csl_counts(200)
    for m in range(1, 201):
        for n in range(1, 200 // m + 1):
            if gcd(m, n) == 1:
                assert f[m * n] == f[m] * f[n]


def test_empirical_index_sigma5():
    c = PlanarCoincidence(G(1, 2))
    window = ((0, 50), (0, 50))
    a = oracle.enumerate_points(Z2, window)
    b = oracle.transformed_points(Z2, square.isometry_matrix(c), window)
    assert oracle.empirical_index(a, b) == 5
