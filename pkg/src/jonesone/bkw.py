"""Transfer matrices for pretzel rings and Beraha-Kahane-Weiss experiments.

A 2-tangle is stored by its bracket coordinates (f, g) in the basis
{<0>, <oo>}. Adding a tangle (f, g) on the right of another acts on the
coordinates by the lower-triangular matrix [[f, 0], [g, f + g delta]], so a
ring of ``n`` identical tangles closes up to

    <L_n> = mu1^n (delta - 1/delta) + mu2^n / delta,

with mu1 = f and mu2 = f + g delta the two eigenvalues. The Jones
normalisation multiplies both eigenvalues by a common factor, so zeros of
J(L_n) - 1 follow the three-eigenvalue pattern mu1, mu2, 1.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace
from typing import Callable

import numpy as np

from .bracket import normalize
from .conway import pd_ring
from .laurent import LaurentPoly, PoleAtZero, Var, eval_array
from .roots import find_roots

__all__ = [
    "TangleVector",
    "EigenFamily",
    "EquimodularPoint",
    "AccumulationRow",
    "NoEquimodularPointFound",
    "DominanceViolated",
    "NoZeroInBox",
    "crossing_matrix",
    "mirror_crossing_matrix",
    "twist_vector",
    "column_vector",
    "transfer_matrix",
    "ring_bracket",
    "ring_family_jones",
    "ring_family_polynomial",
    "equimodular_residual",
    "mirror_equimodular_residual",
    "find_equimodular_near",
    "twist_ring",
    "paper_relation",
    "preset",
    "rescale_check",
    "relation_discrepancy",
    "ratio_correction",
    "jw_zero_accumulation",
    "EXACT_MAX_DEGREE",
]

_A = Var.A
A1 = LaurentPoly({1: 1}, _A)
AINV = LaurentPoly({-1: 1}, _A)
ZERO = LaurentPoly((), _A)
ONE = LaurentPoly({0: 1}, _A)
DELTA = LaurentPoly({2: -1, -2: -1}, _A)


class NoEquimodularPointFound(RuntimeError):
    def __init__(self, t0: complex, eps: float, s_max: int):
        super().__init__(
            f"no equimodular point within {eps / 2:g} of {t0} for s = 1..{s_max}"
        )
        self.s_max = s_max


class DominanceViolated(ValueError):
    pass


class NoZeroInBox(RuntimeError):
    pass


Matrix = tuple[tuple[LaurentPoly, LaurentPoly], tuple[LaurentPoly, LaurentPoly]]


def crossing_matrix() -> Matrix:
    """Action of adding one positive crossing: (f, g) -> (A f, A^-1 f - A^-3 g)."""
    return ((A1, ZERO), (AINV, LaurentPoly({-3: -1}, _A)))


def mirror_crossing_matrix() -> Matrix:
    return ((AINV, ZERO), (A1, LaurentPoly({3: -1}, _A)))


@dataclass(frozen=True)
class TangleVector:
    f: LaurentPoly
    g: LaurentPoly

    def __post_init__(self):
        if self.f.is_zero() and self.g.is_zero():
            raise ValueError("a tangle vector cannot be zero")

    def apply(self, m: Matrix) -> "TangleVector":
        (a, b), (c, d) = m
        return TangleVector(a * self.f + b * self.g, c * self.f + d * self.g)

    def rotate(self) -> "TangleVector":
        """Quarter turn: swaps the roles of <0> and <oo>."""
        return TangleVector(self.g, self.f)

    def numerator(self) -> LaurentPoly:
        """Bracket of the numerator closure: <0> closes to delta, <oo> to 1."""
        return self.f * DELTA + self.g

    def denominator(self) -> LaurentPoly:
        return self.f + self.g * DELTA


ZERO_TANGLE = TangleVector(ONE, ZERO)


def twist_vector(s: int) -> TangleVector:
    """Horizontal row of ``|s|`` crossings; negative ``s`` uses mirrored crossings."""
    if s == 0:
        raise ValueError("s must be nonzero")
    m = crossing_matrix() if s > 0 else mirror_crossing_matrix()
    v = ZERO_TANGLE
    for _ in range(abs(s)):
        v = v.apply(m)
    return v


def column_vector(s: int) -> TangleVector:
    """Vertical twist column used as the repeating tile of the ring."""
    return twist_vector(s).rotate()


def transfer_matrix(v: TangleVector) -> Matrix:
    """Matrix of ``x -> x + v`` (tangle addition) on bracket coordinates."""
    return ((v.f, ZERO), (v.g, v.f + v.g * DELTA))


def ring_bracket(s: int, n: int) -> LaurentPoly:
    """<L_n(T_s)>: numerator closure of ``n`` columns added in a row."""
    if n < 1:
        raise ValueError("n must be positive")
    m = transfer_matrix(column_vector(s))
    v = ZERO_TANGLE
    for _ in range(n):
        v = v.apply(m)
    return v.numerator()


def ring_family_jones(s: int, n: int) -> LaurentPoly:
    """Jones polynomial of the pretzel ring P(s, ..., s) with ``n`` columns.

    The bracket comes from the transfer matrix; only the writhe is read off
    the diagram built by :func:`jonesone.conway.pd_ring`.
    """
    return normalize(ring_bracket(s, n), pd_ring(s, n).writhe())


def equimodular_residual(t, s: int):
    """|1 - (-t)^s| - |1 + (t + 1/t + 1)(-t)^s|; zero on the I_s^+ locus."""
    t = np.asarray(t, dtype=complex)
    if np.any(t == 0):
        raise PoleAtZero("t = 0")
    w = (-t) ** s
    out = np.abs(1 - w) - np.abs(1 + (t + 1 / t + 1) * w)
    return out if out.ndim else float(out)


def mirror_equimodular_residual(t, s: int):
    """The same relation read through t -> 1/t (mirror crossings)."""
    t = np.asarray(t, dtype=complex)
    if np.any(t == 0):
        raise PoleAtZero("t = 0")
    return equimodular_residual(1 / t, s)


# --------------------------------------------------------------------------
# eigenvalue families


def _principal_A(t):
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.asarray(t, dtype=complex) ** -0.25


@dataclass(frozen=True)
class EigenFamily:
    """F_n(t) = alpha1 Lambda1^n + alpha2 Lambda2^n + constant_term."""

    alpha1: Callable
    alpha2: Callable
    lambda1: Callable
    lambda2: Callable
    constant_term: complex = 0.0
    provenance: str = "custom"
    ring_s: int | None = None

    def __post_init__(self):
        pts = np.array([0.83 + 0.41j, -0.37 + 1.21j, 1.7 - 0.6j])
        r = np.asarray(self.lambda1(pts)) / np.asarray(self.lambda2(pts))
        if np.all(np.abs(r - r[0]) <= 1e-12 * np.abs(r[0])):
            raise ValueError("Lambda1 and Lambda2 look proportional")

    def eigenvalues(self, t):
        return np.asarray(self.lambda1(t)), np.asarray(self.lambda2(t))

    def __call__(self, t, n: int):
        l1, l2 = self.eigenvalues(t)
        return (
            np.asarray(self.alpha1(t)) * l1**n
            + np.asarray(self.alpha2(t)) * l2**n
            + self.constant_term
        )

    def scale(self, t, n: int):
        l1, l2 = self.eigenvalues(t)
        return (
            np.abs(self.alpha1(t)) * np.abs(l1) ** n
            + np.abs(self.alpha2(t)) * np.abs(l2) ** n
            + abs(self.constant_term)
        )

    def rescaled(self, c) -> "EigenFamily":
        """Multiply both eigenvalues by ``c`` (a constant or a function of t)."""
        cf = c if callable(c) else (lambda t, c=c: c)
        l1, l2 = self.lambda1, self.lambda2
        return replace(
            self,
            lambda1=lambda t: cf(t) * l1(t),
            lambda2=lambda t: cf(t) * l2(t),
            provenance=f"{self.provenance}*c",
            ring_s=None,
        )

    def with_constant(self, c: complex) -> "EigenFamily":
        return replace(self, constant_term=c)


def _laurent_fn(p: LaurentPoly) -> Callable:
    return lambda t: eval_array(p, _principal_A(t))


def twist_ring(s: int, jw: bool = True) -> EigenFamily:
    """Eigen-data of the pretzel ring P(s, ..., s).

    The writhe factor uses the antiparallel orientation of each column
    (writhe of one closed column times n), exact whenever the ring is a knot.
    """
    v = column_vector(s)
    mu1 = v.f
    mu2 = v.f + v.g * DELTA
    w1 = pd_ring(s, 1).writhe()
    norm = LaurentPoly({-3 * w1: (-1) ** (w1 % 2)}, _A)
    lam1, lam2 = norm * mu1, norm * mu2
    d_fn = _laurent_fn(DELTA)
    return EigenFamily(
        alpha1=lambda t: d_fn(t) - 1 / d_fn(t),
        alpha2=lambda t: 1 / d_fn(t),
        lambda1=_laurent_fn(lam1),
        lambda2=_laurent_fn(lam2),
        constant_term=-1.0 if jw else 0.0,
        provenance=f"twist_ring({s})",
        ring_s=s,
    )


def paper_relation(s: int, jw: bool = True) -> EigenFamily:
    """Lambda1 = 1 - (-t)^s, Lambda2 = 1 + (t + 1/t + 1)(-t)^s, unit coefficients."""

    def lam1(t):
        t = np.asarray(t, dtype=complex)
        return 1 - (-t) ** s

    def lam2(t):
        t = np.asarray(t, dtype=complex)
        return 1 + (t + 1 / t + 1) * (-t) ** s

    one = lambda t: np.ones_like(np.asarray(t, dtype=complex))
    return EigenFamily(
        alpha1=one,
        alpha2=one,
        lambda1=lam1,
        lambda2=lam2,
        constant_term=-1.0 if jw else 0.0,
        provenance=f"paper_relation({s})",
    )


def preset(spec: str, jw: bool = True) -> EigenFamily:
    """Parse ``"twist_ring:3"`` or ``"paper_relation:1"``."""
    name, _, arg = spec.partition(":")
    s = int(arg) if arg else 1
    if name == "twist_ring":
        return twist_ring(s, jw)
    if name == "paper_relation":
        return paper_relation(s, jw)
    raise ValueError(f"unknown preset {spec!r}")


def relation_discrepancy(t, s: int):
    """|Lambda2/Lambda1| of twist_ring(-s) minus the I_s^+ relation's modulus ratio.

    Identically zero: the I_s^+ relation is equimodularity of the ring built
    from mirrored columns.
    """
    t = np.asarray(t, dtype=complex)
    l1, l2 = twist_ring(-s).eigenvalues(t)
    p1, p2 = paper_relation(s).eigenvalues(t)
    return np.abs(l2 / l1) - np.abs(p2 / p1)


def ratio_correction(s: int, t):
    """(Lambda2 / Lambda1) / (-t)^s for twist_ring(s), read off the transfer matrix.

    The ring eigenvalue ratio is 1 + delta f_s / g_s for the row tangle
    (f_s, g_s); it is not a monomial, so this factor is recorded rather
    than assumed to be 1.
    """
    t = np.asarray(t, dtype=complex)
    m = transfer_matrix(column_vector(s))
    a = _principal_A(t)
    mu1, mu2 = eval_array(m[0][0], a), eval_array(m[1][1], a)
    return (mu2 / mu1) / (-t) ** s


def rescale_check(fam: EigenFamily, c: complex, samples: int = 100, seed: int = 0, points=None) -> bool:
    """Scaling both eigenvalues by ``c`` keeps their ratio and |L1| = |L2|."""
    if c == 0:
        raise ValueError("c must be nonzero")
    if points is None:
        rng = np.random.default_rng(seed)
        r = rng.uniform(0.5, 2.0, samples)
        th = rng.uniform(0, 2 * math.pi, samples)
        points = r * np.exp(1j * th)
    t = np.asarray(points, dtype=complex)
    l1, l2 = fam.eigenvalues(t)
    m1, m2 = fam.rescaled(c).eigenvalues(t)
    ratio_err = np.abs(m1 / m2 - l1 / l2) / np.maximum(np.abs(l1 / l2), 1e-300)
    gap = np.abs(m1) - np.abs(m2)
    gap_err = np.abs(gap - abs(c) * (np.abs(l1) - np.abs(l2))) / (
        abs(c) * np.maximum(np.abs(l1), np.abs(l2))
    )
    return bool(np.all(ratio_err < 1e-12) and np.all(gap_err < 1e-12))


# --------------------------------------------------------------------------
# equimodular points


@dataclass(frozen=True)
class EquimodularPoint:
    t_star: complex
    s: int
    residual: float
    dominant: bool


def _bisect(f, a: complex, b: complex, fa: float, tol: float) -> tuple[complex, float]:
    m, fm = a, fa
    for _ in range(200):
        m = (a + b) / 2
        fm = float(f(m))
        if abs(fm) <= tol:
            break
        if (fm < 0) == (fa < 0):
            a, fa = m, fm
        else:
            b = m
    return m, fm


def find_equimodular_near(
    t0: complex,
    eps: float,
    s_max: int = 40,
    tol: float = 1e-9,
    mirror: bool = False,
) -> EquimodularPoint:
    """Nearest point of the locus |Lambda1| = |Lambda2| within eps/2 of ``t0``.

    For s = 1, 2, ... the residual is sampled on a square grid (step eps/40)
    clipped to the disk of radius eps/2; sign changes along grid edges are
    bisected. The first s with an accepted point wins, and within it the point
    closest to ``t0``. ``mirror=True`` scans the mirrored relation instead.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    t0 = complex(t0)
    rad = eps / 2
    h = eps / 40
    k = np.arange(-20, 21)
    grid = t0 + h * (k[None, :] + 1j * k[:, None])
    inside = np.abs(grid - t0) <= rad * (1 + 1e-12)
    if np.any(grid[inside] == 0):
        raise PoleAtZero("the search disk contains t = 0")
    rel = mirror_equimodular_residual if mirror else equimodular_residual
    for s in range(1, s_max + 1):
        f = lambda t, s=s: rel(t, s)
        vals = np.where(inside, f(np.where(inside, grid, 1)), np.nan)
        found: list[tuple[float, complex, float]] = []
        for i, j in zip(*np.nonzero(inside & (np.abs(vals) <= tol))):
            found.append((abs(grid[i, j] - t0), complex(grid[i, j]), float(vals[i, j])))
        for di, dj in ((0, 1), (1, 0)):
            a = vals[: vals.shape[0] - di, : vals.shape[1] - dj]
            b = vals[di:, dj:]
            flips = np.nonzero((a * b < 0) & np.isfinite(a) & np.isfinite(b))
            for i, j in zip(*flips):
                z, fz = _bisect(f, grid[i, j], grid[i + di, j + dj], a[i, j], tol)
                if abs(fz) <= tol and abs(z - t0) < rad:
                    found.append((abs(z - t0), complex(z), fz))
        if found:
            _, z, fz = min(found, key=lambda x: x[0])
            fam = paper_relation(s)
            l1, _ = fam.eigenvalues(1 / z if mirror else z)
            return EquimodularPoint(z, s, abs(fz), bool(abs(l1) > 1))
    raise NoEquimodularPointFound(t0, eps, s_max)


# --------------------------------------------------------------------------
# zero accumulation


@dataclass(frozen=True)
class AccumulationRow:
    n: int
    nearest_zero: complex
    distance: float


def _check_dominance(fam: EigenFamily, t_star: complex, tol: float = 1e-6) -> None:
    if fam.constant_term != -1:
        raise DominanceViolated("family must carry the constant term -1")
    l1, l2 = (complex(x) for x in fam.eigenvalues(t_star))
    a1, a2 = complex(fam.alpha1(t_star)), complex(fam.alpha2(t_star))
    if a1 == 0 and a2 == 0:
        raise DominanceViolated("both coefficients vanish: F_n is constant")
    if abs(abs(l1) - abs(l2)) > tol:
        raise DominanceViolated(f"|L1| = {abs(l1):.12g} != |L2| = {abs(l2):.12g}")
    if abs(l1) <= 1:
        raise DominanceViolated(f"|L1| = |L2| = {abs(l1):.12g} does not exceed 1")


def _grid_zeros(fam: EigenFamily, n: int, centre: complex, radius: float) -> list[complex]:
    """Zeros of F_n in the disk: local minima of |F_n| on a grid, then Newton."""
    m = max(81, int(math.ceil(8 * n * radius)) * 2 + 1)
    k = np.linspace(-radius, radius, m)
    grid = centre + k[None, :] + 1j * k[:, None]
    with np.errstate(all="ignore"):
        mag = np.abs(fam(grid, n)) / fam.scale(grid, n)
    mag = np.where(np.isfinite(mag), mag, np.inf)
    core = mag[1:-1, 1:-1]
    is_min = np.ones_like(core, dtype=bool)
    for di in (-1, 0, 1):
        for dj in (-1, 0, 1):
            if di or dj:
                is_min &= core <= mag[1 + di : m - 1 + di, 1 + dj : m - 1 + dj]
    seeds = grid[1:-1, 1:-1][is_min]
    z = seeds.astype(complex)
    h = 1e-6
    with np.errstate(all="ignore"):
        for _ in range(60):
            fz = fam(z, n)
            dz = (fam(z + h, n) - fam(z - h, n)) / (2 * h)
            step = np.where(dz != 0, fz / dz, 0)
            step = np.where(np.isfinite(step), step, 0)
            z = z - step
            if np.all(np.abs(step) <= 1e-14 * np.maximum(1, np.abs(z))):
                break
        ok = np.abs(fam(z, n)) <= 1e-9 * fam.scale(z, n)
    zs = [complex(x) for x in z[ok & (np.abs(z - centre) <= radius)]]
    out: list[complex] = []
    for x in sorted(zs, key=lambda x: (abs(x - centre), x.real, x.imag)):
        if all(abs(x - y) > 1e-8 for y in out):
            out.append(x)
    return out


def ring_family_polynomial(s: int, n: int) -> LaurentPoly:
    """J(L_n(T_s)) with the preset's writhe convention (n times one column).

    Equals :func:`ring_family_jones` whenever the ring is a knot; for links it
    is the Jones polynomial for the orientation with antiparallel columns, so
    that it agrees with :func:`twist_ring` for every ``n``.
    """
    return normalize(ring_bracket(s, n), n * pd_ring(s, 1).writhe())


def _poly_zeros(p: LaurentPoly, centre: complex, radius: float) -> list[complex]:
    zs = [r.z for r in find_roots(p).roots]
    if p.var is Var.Q:
        # q = t^(1/2) on the principal branch, matching A = t^(-1/4)
        zs = [q * q for q in zs if -math.pi / 2 < cmath.phase(q) <= math.pi / 2]
    return [z for z in zs if abs(z - centre) <= radius]


EXACT_MAX_DEGREE = 80


def jw_zero_accumulation(
    fam: EigenFamily,
    t_star: complex,
    n_list,
    box_radius: float = 0.5,
    method: str = "auto",
) -> list[AccumulationRow]:
    """Nearest zero of F_n = a1 L1^n + a2 L2^n - 1 to ``t_star`` for each n.

    ``method="exact"`` builds J(L_n) - 1 for ring presets and calls
    :func:`find_roots`; ``"grid"`` samples F_n and refines with Newton.
    ``"auto"`` uses the exact polynomial while its degree is at most
    ``EXACT_MAX_DEGREE``: beyond that its zeros inside the unit disk are
    too ill-conditioned for double precision.
    """
    if method not in ("auto", "exact", "grid"):
        raise ValueError(f"unknown method {method!r}")
    if method == "exact" and fam.ring_s is None:
        raise ValueError("the exact method needs a ring preset")
    t_star = complex(t_star)
    _check_dominance(fam, t_star)
    rows = []
    for n in n_list:
        exact = None
        if fam.ring_s is not None and method != "grid":
            poly = ring_family_polynomial(fam.ring_s, n) - 1
            if method == "exact" or poly.span <= EXACT_MAX_DEGREE:
                exact = poly
        if exact is not None:
            zs = _poly_zeros(exact, t_star, box_radius)
        else:
            zs = _grid_zeros(fam, n, t_star, box_radius)
        if not zs:
            raise NoZeroInBox(f"no zero of F_{n} within {box_radius} of {t_star}")
        z = min(zs, key=lambda x: abs(x - t_star))
        rows.append(AccumulationRow(n, z, abs(z - t_star)))
    return rows
