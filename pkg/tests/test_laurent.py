import cmath
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from jonesone.laurent import (
    LaurentPoly,
    NotDivisible,
    PoleAtZero,
    PolyDivisionByZero,
    Var,
    VariableMismatch,
    change_variable,
    cyclotomic,
    derivative,
    div_exact,
    divides,
    eval_array,
    eval_complex,
    evaluate,
    multiplicity,
    parse,
)

coeffs = st.integers(-20, 20)
exps = st.integers(-8, 8)
polys = st.dictionaries(exps, coeffs, max_size=6).map(LaurentPoly)
nonzero = polys.filter(lambda p: not p.is_zero())
points = st.complex_numbers(min_magnitude=0.3, max_magnitude=2.0, allow_nan=False, allow_infinity=False)


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == LaurentPoly()
    assert p * 1 == p


@given(polys, nonzero)
def test_div_exact_inverts_mul(p, q):
    assert div_exact(p * q, q) == p
    assert divides(q, p * q)


@given(polys, polys, points)
def test_evaluation_is_multiplicative(p, q, z):
    lhs = eval_complex(p * q, z)
    rhs = eval_complex(p, z) * eval_complex(q, z)
    assert abs(lhs - rhs) <= 1e-9 * max(1.0, abs(rhs))


@given(polys)
def test_render_parse_roundtrip(p):
    assert parse(p.to_str()) == p
    assert parse(p.to_str(descending=True)) == p


def test_rendering():
    p = LaurentPoly({-1: 1, -2: -1, -3: 2})
    assert p.to_str() == "2*t^-3 - t^-2 + t^-1"
    assert p.to_str(descending=True) == "t^-1 - t^-2 + 2*t^-3"
    assert LaurentPoly({1: 1}).to_str() == "t"
    assert str(LaurentPoly()) == "0"


def test_zero_coefficients_dropped_and_equality_structural():
    assert LaurentPoly({0: 0, 2: 3}) == LaurentPoly({2: 3})
    assert LaurentPoly({1: 1}, Var.T) != LaurentPoly({1: 1}, Var.Q)


def test_variable_mismatch():
    with pytest.raises(VariableMismatch):
        LaurentPoly({1: 1}, Var.T) + LaurentPoly({1: 1}, Var.A)


def test_division_errors():
    with pytest.raises(PolyDivisionByZero):
        div_exact(LaurentPoly({0: 1}), LaurentPoly())
    with pytest.raises(NotDivisible):
        div_exact(LaurentPoly({0: 1, 1: 1}), LaurentPoly({0: 1, 1: -1}))
    assert not divides(LaurentPoly({0: 2}), LaurentPoly({0: 3}))


def test_pole_at_zero():
    with pytest.raises(PoleAtZero):
        eval_complex(LaurentPoly({-1: 1}), 0)
    assert eval_complex(LaurentPoly({0: 3, 2: 1}), 0) == 3


def test_exact_evaluation():
    p = LaurentPoly({-2: 1, 1: 3})
    assert evaluate(p, 2) == Fraction(1, 4) + 6
    assert evaluate(p, -1) == 1 - 3


def test_eval_array_matches_scalar():
    p = LaurentPoly({-3: 2, 0: -1, 4: 5})
    z = np.array([0.5 + 0.1j, -1.2j, 1.7])
    got = eval_array(p, z)
    want = [eval_complex(p, x) for x in z]
    np.testing.assert_allclose(got, want, rtol=1e-13)


def test_derivative():
    assert derivative(LaurentPoly({-2: 1, 3: 2})) == LaurentPoly({-3: -2, 2: 6})


@pytest.mark.parametrize("d", list(range(1, 61)))
def test_cyclotomic_matches_primitive_roots(d):
    """Integer-rounded product over the primitive d-th roots of unity."""
    roots = [cmath.exp(2j * cmath.pi * k / d) for k in range(d) if np.gcd(k, d) == 1]
    want = np.rint(np.real(np.poly(roots))).astype(int)[::-1]
    got = cyclotomic(d)
    assert got.dense() == (0, [int(c) for c in want])


@given(st.integers(1, 60))
def test_product_of_cyclotomics(n):
    """t^n - 1 is the product of Phi_d over the divisors d of n."""
    prod = LaurentPoly({0: 1})
    for d in range(1, n + 1):
        if n % d == 0:
            prod = prod * cyclotomic(d)
    assert prod == LaurentPoly({n: 1, 0: -1})


def test_multiplicity():
    one = LaurentPoly({1: 1, 0: -1})
    assert multiplicity(one, one * one * LaurentPoly({0: 1, 1: 1})) == 2


def test_change_variable():
    a = LaurentPoly({-8: 1, 4: -1}, Var.A)
    assert change_variable(a, Var.T) == LaurentPoly({2: 1, -1: -1})
    assert change_variable(a, Var.Q) == LaurentPoly({4: 1, -2: -1}, Var.Q)
