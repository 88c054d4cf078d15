import cmath

import numpy as np
import pytest
from hypothesis import given, strategies as st

from jonesone.cli import default_table
from jonesone.bracket import jones_from_pd
from jonesone.dtwist import pn
from jonesone.laurent import LaurentPoly, cyclotomic, eval_complex
from jonesone.pd import load_table
from jonesone.roots import (
    ZeroPolynomial,
    classify,
    find_roots,
    residual,
    solutions_of_jones_equals_one,
)

W = cmath.exp(2j * cmath.pi / 3)


def test_p1_roots_and_classification():
    p = pn(1)
    # P_1 = -(t^3 - 1)(t^4 - 1)
    assert p == -(LaurentPoly({3: 1, 0: -1}) * LaurentPoly({4: 1, 0: -1}))
    rep = find_roots(p)
    want = {1: 2, -1: 1, 1j: 1, -1j: 1, W: 1, W.conjugate(): 1}
    assert len(rep.roots) == len(want)
    for z, m in want.items():
        r = rep.find(z, 1e-9)
        assert r is not None and r.multiplicity == m
        assert r.residual < 1e-10
    for r in rep.roots:
        assert classify(r.z, p, spurious_one_plus_t=True).on_unit_circle
    assert classify(-1, p, spurious_one_plus_t=True).excluded_minus_one
    assert {classify(r.z, p).rou_order for r in rep.roots if abs(r.z + 1) > 1e-6} == {1, 3, 4}


@given(
    st.lists(
        st.complex_numbers(min_magnitude=0.3, max_magnitude=2.5, allow_nan=False, allow_infinity=False),
        min_size=1,
        max_size=8,
    )
)
def test_reconstruction_from_integer_roots(zs):
    """Round a random monic polynomial to integers, then check the roots rebuild it."""
    c = np.rint(np.real(np.poly(zs)) * 4).astype(int)
    if c[0] == 0 or not c.any():
        return
    p = LaurentPoly({len(c) - 1 - k: int(v) for k, v in enumerate(c)})
    if p.is_zero() or p.span == 0:
        return
    rep = find_roots(p)
    assert rep.total_multiplicity() == rep.degree
    assert rep.all_converged()
    for r in rep.roots:
        assert residual(p, r.z) < 1e-8


def test_determinism():
    p = pn(5)
    assert find_roots(p) == find_roots(p)


def test_zero_polynomial():
    with pytest.raises(ZeroPolynomial):
        find_roots(LaurentPoly())


def test_constant_and_monomial():
    assert find_roots(LaurentPoly({3: 2})).roots == []


def test_high_multiplicity_at_one():
    t1 = LaurentPoly({1: 1, 0: -1})
    p = t1 * t1 * t1 * t1 * cyclotomic(5)
    rep = find_roots(p)
    assert rep.find(1).multiplicity == 4


def test_rou_order_certified_by_cyclotomic():
    p = cyclotomic(12) * cyclotomic(7)
    rep = find_roots(p)
    assert {classify(r.z, p).rou_order for r in rep.roots} == {7, 12}


def test_off_circle_root():
    p = LaurentPoly({1: 1, 0: -2})
    (r,) = find_roots(p).roots
    assert not classify(r.z, p).on_unit_circle


def test_unknot_is_degenerate():
    rep = solutions_of_jones_equals_one(LaurentPoly({0: 1}))
    assert rep.degenerate_identity and rep.roots == []


def test_table_scan_properties():
    for e in load_table(default_table())[1:]:
        j = jones_from_pd(e.code())
        rep = solutions_of_jones_equals_one(j, e.name)
        assert rep.all_converged()
        assert rep.total_multiplicity() + sum(r.multiplicity for r in rep.excluded) == rep.degree
        assert rep.find(1).multiplicity >= 2
        assert rep.find(W) is not None
        for r in rep.roots:
            assert abs(eval_complex(j, r.z) - 1) < 1e-6 * max(1, abs(r.z)) ** rep.degree
