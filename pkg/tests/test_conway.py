from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from jonesone.bracket import jones_from_pd
from jonesone.conway import InvalidCode, conway_fraction, pd_from_conway, pd_ring
from jonesone.laurent import Var, parse


def test_fraction():
    assert conway_fraction([2, 3]) == Fraction(7, 2)
    assert conway_fraction([3]) == 3


def test_small_codes():
    assert jones_from_pd(pd_from_conway([1])) == parse("1")
    assert jones_from_pd(pd_from_conway([3])) == parse("t + t^3 - t^4")
    assert jones_from_pd(pd_from_conway([2])).var is Var.Q


@given(st.lists(st.integers(1, 4), min_size=1, max_size=4))
def test_positive_codes_alternate(code):
    assert pd_from_conway(code).is_alternating()


@given(st.lists(st.integers(1, 3), min_size=1, max_size=3))
def test_determinant_is_numerator(code):
    """|J(-1)| equals the numerator of the tangle fraction."""
    from jonesone.laurent import eval_complex

    j = jones_from_pd(pd_from_conway(code))
    z = -1 if j.var is Var.T else 1j
    assert round(abs(eval_complex(j, z))) == conway_fraction(code).numerator


def test_negated_code_is_mirror():
    j = jones_from_pd(pd_from_conway([2, 3]))
    assert jones_from_pd(pd_from_conway([-2, -3])) == j.substitute_inverse()


def test_invalid_codes():
    for bad in ([], [0], [2, 0]):
        with pytest.raises(InvalidCode):
            pd_from_conway(bad)
    with pytest.raises(InvalidCode):
        pd_ring(0, 3)


def test_ring_writhes():
    assert pd_ring(1, 3).writhe() == -3
    assert pd_ring(3, 3).writhe() == -9
    assert pd_ring(2, 2).writhe() == 4
    assert pd_ring(2, 3).writhe() == 2
