from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from csl import diamond, oracle
from csl.diamond import DIAMOND, DiamondIsometry, NormClass
from csl.engine import ShiftedLattice
from csl.errors import DomainError
from csl.quat import Quaternion, enumerate_primitive, odd_part

Q = Quaternion.of
F = Fraction
isometries = st.builds(DiamondIsometry, st.sampled_from(enumerate_primitive(30)), st.booleans())


def test_shifted_fcc_membership_examples():
    assert diamond.shifted_fcc_member(Q(1))
    assert not diamond.shifted_fcc_member(Q(1, 1))
    assert diamond.shifted_fcc_member(Q(1, 1), improper=True)


def test_coincidence_examples():
    r = diamond.diamond_coincidence(DiamondIsometry(Q(1, 1)))
    assert r.index == 2 and len(r.cosets.cosets) == 1
    r = diamond.diamond_coincidence(DiamondIsometry(Q(1, 1, 1), improper=True))
    assert r.index == 6 and len(r.cosets.cosets) == 1
    r = diamond.diamond_coincidence(DiamondIsometry(Q(1, 1, 1)))
    assert r.index == 3 and len(r.cosets.cosets) == 2 and r.norm_class is NormClass.ODD
    with pytest.raises(DomainError):
        DiamondIsometry(Q(2))


def test_counting_examples():
    assert [diamond.f_diamond(m) for m in (2, 10, 4)] == [1, 6, 0]


@settings(max_examples=30)
@given(isometries)
def test_closed_form_matches_engine(iso):
    closed = diamond.diamond_coincidence(iso)
    generic = diamond.diamond_coincidence_engine(iso)
    assert closed.index == generic.index
    assert closed.cosets.cosets == generic.cosets
    assert diamond.shifted_fcc_member(iso.q, iso.improper) == diamond.shifted_fcc_member_engine(iso.q, iso.improper)


@settings(max_examples=30)
@given(isometries)
def test_index_identity(iso):
    # |sigma| * index = m * Sigma with m = 2 points per cell
    res = diamond.diamond_coincidence(iso)
    assert res.index * len(res.cosets.sigma_pairs) == 2 * odd_part(iso.q.norm())


@pytest.mark.parametrize("q", [Q(1), Q(1, 1), Q(1, 1, 1), Q(2, 1, 1), Q(1, 1, 1, 1)])
@pytest.mark.parametrize("improper", [False, True])
def test_box_count_density(q, improper):
    iso = DiamondIsometry(q, improper)
    res = diamond.diamond_coincidence(iso)
    side = 4 * odd_part(q.norm())
    window = ((0, side),) * 3
    # a box whose side is a multiple of the CSL period counts exactly
    a = oracle.enumerate_points(DIAMOND, window)
    common = set()
    for c in res.cosets.cosets:
        pts = oracle.enumerate_points(ShiftedLattice(c.sublattice, c.representative), window)
        common |= pts.points
    b = oracle.transformed_points(DIAMOND, iso.matrix(), window)
    assert common == (a & b).points
    assert F(len(a), len(common)) == res.index


def test_shifted_fcc_counts_small():
    t = diamond.shifted_fcc_counts(9)
    assert t["csl"] == {1: 1, 2: 0, 3: 4, 4: 0, 5: 6, 6: 0, 7: 8, 8: 0, 9: 12}
    assert t["rotations"] == {m: 12 * v for m, v in t["csl"].items()}
    assert t["isometries"] == {m: 24 * v for m, v in t["csl"].items()}
