"""Per-shift property checks of the laws relating OC(x + Z^2) for different shifts."""

from hypothesis import given, settings
from hypothesis import strategies as st

from . import laws

SHIFTS = laws.shifts(13)
shift = st.sampled_from(SHIFTS)


@settings(max_examples=25)
@given(shift)
def test_point_group_conjugation(x):
    assert laws.point_group_conjugation([x]) == []


@settings(max_examples=25)
@given(shift)
def test_scaled_shift(x):
    assert laws.scaled_shift_law([x]) == []


@settings(max_examples=15)
@given(shift)
def test_similarity_through_generic_engine(x):
    assert laws.similarity_law([x]) == []


@settings(max_examples=25)
@given(shift)
def test_inverse_and_coprime_closure(x):
    assert laws.inverse_closure([x]) == []
    assert laws.coprime_products([x]) == []


@settings(max_examples=25)
@given(shift)
def test_rotations_form_a_group(x):
    assert laws.soc_closure([x]) == []
