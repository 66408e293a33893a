from fractions import Fraction

import pytest

from csl import oracle, square
from csl.engine import CosetLattice, Multilattice
from csl.errors import DomainError
from csl.gaussian import GaussianInt
from csl.lattice import RationalLattice
from csl.square import PlanarCoincidence

F = Fraction
Z2 = RationalLattice.integer(2)
ZERO = (F(0), F(0))


def test_hnf_examples():
    lat = oracle.hnf([(1, 2), (-2, 1)])
    assert lat.covolume() == 5
    assert oracle.hnf([(1, 0, 0), (0, 1, 0), (0, 0, 1)]) == RationalLattice.integer(3)


def test_snf():
    s = oracle.snf([[2, 4], [6, 8]])
    assert s.diagonal == (2, 4) and s.index == 8
    with pytest.raises(DomainError):
        oracle.snf([[1, 2], [2, 4]])


def test_coset_intersect_examples():
    assert oracle.coset_intersect((ZERO, Z2), (ZERO, Z2)) == CosetLattice.make(ZERO, Z2)
    assert oracle.coset_intersect((ZERO, Z2), ((F(1, 2), 0), Z2)) is None
    r = square.isometry_matrix(PlanarCoincidence(GaussianInt(1, 2)))
    x = (F(1, 2), F(0))
    got = oracle.coset_intersect((x, Z2), oracle.image_coset(r, x, Z2))
    assert got == CosetLattice.make((F(1, 2), F(1)), RationalLattice.span([(1, 2), (-2, 1)]))


def test_point_counts():
    assert len(oracle.enumerate_points(Z2, ((0, 10), (0, 10)))) == 100
    with pytest.raises(DomainError):
        oracle.enumerate_points(Z2, ((0, 0), (0, 1)))


def test_diamond_box_ratio():
    from csl.diamond import DIAMOND, DiamondIsometry
    from csl.quat import Quaternion

    r = DiamondIsometry(Quaternion.of(1, 1)).matrix()
    window = ((0, 8),) * 3
    a = oracle.enumerate_points(DIAMOND, window)
    b = oracle.transformed_points(DIAMOND, r, window)
    assert oracle.empirical_index(a, b) == 2
