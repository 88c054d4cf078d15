import cmath

import numpy as np
import pytest
from hypothesis import given, strategies as st

from jonesone import bkw
from jonesone.bkw import (
    DominanceViolated,
    EigenFamily,
    NoEquimodularPointFound,
    TangleVector,
    crossing_matrix,
    equimodular_residual,
    find_equimodular_near,
    jw_zero_accumulation,
    paper_relation,
    ratio_correction,
    relation_discrepancy,
    rescale_check,
    ring_family_jones,
    ring_family_polynomial,
    transfer_matrix,
    column_vector,
    twist_ring,
    twist_vector,
)
from jonesone.bracket import bracket, jones_from_pd
from jonesone.conway import pd_from_conway, pd_ring
from jonesone.laurent import LaurentPoly, PoleAtZero, Var, eval_array, evaluate

A = lambda *pairs: LaurentPoly(dict(pairs), Var.A)
TSTAR3 = 0.02 - 0.8788920644743994j  # dominant equimodular point of twist_ring(3)


def test_crossing_matrix_action():
    (a, b), (c, d) = crossing_matrix()
    assert (a, b, c, d) == (A((1, 1)), A(), A((-1, 1)), A((-3, -1)))
    assert twist_vector(1) == TangleVector(A((1, 1)), A((-1, 1)))
    assert twist_vector(2) == TangleVector(A((2, 1)), A((0, 1), (-4, -1)))
    assert twist_vector(-1) == TangleVector(A((-1, 1)), A((1, 1)))


def test_zero_vector_rejected():
    with pytest.raises(ValueError):
        TangleVector(A(), A())
    with pytest.raises(ValueError):
        twist_vector(0)


@pytest.mark.parametrize("s", [1, 2, 3, 4, -2, -3])
def test_closures_against_state_sum(s):
    """Numerator closure of a row of s crossings is the (2, s) torus link."""
    v = twist_vector(s)
    br = bracket(pd_from_conway([s]))
    assert v.numerator() in (br, br.substitute_inverse())
    # the denominator closure is an unknot with |s| kinks
    kink = A((-3 if s > 0 else 3, -1))
    assert v.denominator() == kink ** abs(s)


@pytest.mark.parametrize(
    "s,n", [(s, n) for s in (-4, -3, -2, -1, 1, 2, 3, 4) for n in range(1, 13) if abs(s) * n <= 12]
)
def test_ring_family_matches_bracket(s, n):
    assert ring_family_jones(s, n) == jones_from_pd(pd_ring(s, n))


def test_ring_examples(knotinfo_jones):
    j = ring_family_jones(1, 3)
    assert j in (knotinfo_jones["3_1"], knotinfo_jones["3_1"].substitute_inverse())
    for s, n in [(3, 3), (1, 5), (3, 1)]:
        assert evaluate(ring_family_jones(s, n), 1) == 1


@given(st.integers(-3, 3).filter(bool), st.integers(1, 6))
def test_family_polynomial_matches_eigen_form(s, n):
    t = np.array([0.7 + 0.4j, -0.3 + 1.1j, 1.4 - 0.2j])
    p = ring_family_polynomial(s, n)
    x = np.sqrt(t) if p.var is Var.Q else t
    exact = eval_array(p, x)
    np.testing.assert_allclose(twist_ring(s, jw=False)(t, n), exact, rtol=1e-10, atol=1e-10)
    if pd_ring(s, n).is_knot():
        assert p == ring_family_jones(s, n)


def test_residual_examples():
    assert abs(equimodular_residual(1j, 1)) < 1e-12
    assert abs(equimodular_residual(1, 1)) < 1e-12
    assert abs(equimodular_residual(2, 1) - (-3)) < 1e-12
    with pytest.raises(PoleAtZero):
        equimodular_residual(0, 1)


def test_residual_conjugate_symmetry():
    rng = np.random.default_rng(7)
    t = rng.uniform(0.2, 2.5, 1000) * np.exp(1j * rng.uniform(0, 2 * np.pi, 1000))
    for s in (1, 2, 5):
        diff = equimodular_residual(t, s) - equimodular_residual(np.conj(t), s)
        assert np.max(np.abs(diff)) < 1e-12


def test_mirror_columns_give_the_relation():
    rng = np.random.default_rng(3)
    t = rng.uniform(0.3, 2.0, 200) * np.exp(1j * rng.uniform(0, 2 * np.pi, 200))
    for s in (1, 2, 3, 6):
        assert np.max(np.abs(relation_discrepancy(t, s))) < 1e-9


@pytest.mark.parametrize("s", [1, 2, 3, -1, -2])
def test_ratio_correction_against_matrix_eigenvalues(s):
    rng = np.random.default_rng(11)
    t = rng.uniform(0.3, 2.0, 100) * np.exp(1j * rng.uniform(-3, 3, 100))
    m = transfer_matrix(column_vector(s))
    a = t ** -0.25
    for tk, ak, ck in zip(t, a, ratio_correction(s, t)):
        mat = np.array([[complex(eval_array(e, ak)) for e in row] for row in m])
        ev = np.linalg.eigvals(mat)
        ratio = ck * (-tk) ** s
        want = [ev[1] / ev[0], ev[0] / ev[1]]
        assert min(abs(ratio - w) for w in want) < 1e-8 * max(1, abs(ratio))


def test_ratio_correction_s1_is_monomial():
    t = np.array([0.5 + 0.5j, 2j, 1.3])
    np.testing.assert_allclose(ratio_correction(1, t), t ** -2.0, rtol=1e-12)


@pytest.mark.parametrize("t0,eps", [(1j, 0.1), (1, 0.01)])
def test_exact_equimodular_points(t0, eps):
    pt = find_equimodular_near(t0, eps, 40)
    assert pt.t_star == t0 and pt.s == 1 and pt.residual == 0


def test_equimodular_point_is_accepted_and_close():
    t0 = -0.5 + 1.2j
    pt = find_equimodular_near(t0, 0.5, 40)
    assert abs(pt.t_star - t0) < 0.25
    assert pt.residual <= 1e-9
    assert abs(equimodular_residual(pt.t_star, pt.s)) <= 1e-9


def test_relation_misses_far_points():
    """For |t + 1/t + 1| > 1 + 2/|t| the right-hand side always wins."""
    with pytest.raises(NoEquimodularPointFound):
        find_equimodular_near(2 + 2j, 0.5, 40)


@pytest.mark.parametrize("t0", [1.5 + 0.5j, -0.5 + 1.2j, 2 + 2j])
def test_mirror_scan_reaches_points(t0):
    pt = find_equimodular_near(t0, 0.5, 40, mirror=True)
    assert abs(pt.t_star - t0) < 0.25 and pt.residual <= 1e-9


def test_pole_inside_search_disk():
    with pytest.raises(PoleAtZero):
        find_equimodular_near(0, 0.01, 5)


def test_rescale_check_examples():
    assert rescale_check(twist_ring(1), 1)
    assert rescale_check(twist_ring(1), 2 + 1j, samples=100)
    assert rescale_check(paper_relation(1), 3, points=[1j])
    l1, l2 = paper_relation(1).rescaled(3).eigenvalues(1j)
    assert abs(abs(l1) - abs(l2)) < 1e-12
    with pytest.raises(ValueError):
        rescale_check(twist_ring(1), 0)


def test_rescale_random_constants():
    rng = np.random.default_rng(5)
    cs = rng.normal(size=100) + 1j * rng.normal(size=100)
    for fam in (twist_ring(2), paper_relation(2)):
        assert all(rescale_check(fam, c, samples=20, seed=i) for i, c in enumerate(cs))


def test_proportional_eigenvalues_rejected():
    f = lambda t: np.asarray(t, dtype=complex)
    with pytest.raises(ValueError):
        EigenFamily(f, f, f, lambda t: 2 * f(t))


def test_dominance_checks():
    fam = paper_relation(1)
    zero = lambda t: np.zeros_like(np.asarray(t, dtype=complex))
    degenerate = EigenFamily(zero, zero, fam.lambda1, fam.lambda2, -1.0)
    with pytest.raises(DominanceViolated):
        jw_zero_accumulation(degenerate, 1j, [10])
    with pytest.raises(DominanceViolated):
        jw_zero_accumulation(fam, 2.0, [10])
    with pytest.raises(DominanceViolated):
        jw_zero_accumulation(paper_relation(1, jw=False), 1j, [10])
    # on the unit circle the two ring eigenvalues have modulus exactly 1
    with pytest.raises(DominanceViolated):
        jw_zero_accumulation(twist_ring(1), 1j, [10])


def test_no_zeros_where_one_eigenvalue_dominates():
    one = lambda t: np.ones_like(np.asarray(t, dtype=complex))
    fam = EigenFamily(
        one,
        one,
        lambda t: 1.6 * np.asarray(t, dtype=complex) ** 0,
        lambda t: 0.4 * np.asarray(t, dtype=complex),
        -1.0,
    )
    l1, l2 = fam.eigenvalues(1.0)
    assert abs(l1) - abs(l2) >= 0.1 and abs(l1) > 1
    assert bkw._grid_zeros(fam, 200, 1.0, 0.05) == []


def test_paper_relation_accumulates():
    rows = jw_zero_accumulation(paper_relation(1), 1j, [10, 50, 150], 0.5)
    d = [r.distance for r in rows]
    assert d[0] > d[1] > d[2] and d[2] < 0.05


def test_twist_ring_exact_and_grid_agree():
    fam = twist_ring(3)
    for n in (4, 6, 8):
        (e,) = jw_zero_accumulation(fam, TSTAR3, [n], 0.3, method="exact")
        (g,) = jw_zero_accumulation(fam, TSTAR3, [n], 0.3, method="grid")
        assert abs(e.nearest_zero - g.nearest_zero) < 1e-9


def test_twist_ring_accumulates():
    fam = twist_ring(3)
    l1, l2 = fam.eigenvalues(TSTAR3)
    assert abs(abs(l1) - abs(l2)) < 1e-6 and abs(l1) > 1
    (row,) = jw_zero_accumulation(fam, TSTAR3, [150], 0.2)
    assert row.distance < 0.05


def test_presets_parse():
    assert bkw.preset("twist_ring:3").ring_s == 3
    assert bkw.preset("paper_relation:2").provenance == "paper_relation(2)"
    with pytest.raises(ValueError):
        bkw.preset("nope:1")
