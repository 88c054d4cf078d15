"""Complex zeros of integer Laurent polynomials and their classification.

Zeros are found all at once by Aberth-Ehrlich iteration, polished by Newton,
clustered, and given multiplicities. A zero at t = 1 is divided out exactly
first, so its multiplicity is certified. Points on the unit circle are tested
for being roots of unity by exact division by cyclotomic polynomials.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .laurent import (
    LaurentPoly,
    Var,
    cyclotomic,
    div_exact,
    divides,
    evaluate,
    multiplicity,
)

__all__ = [
    "Root",
    "RootReport",
    "Classification",
    "ZeroPolynomial",
    "RootConfig",
    "find_roots",
    "classify",
    "solutions_of_jones_equals_one",
    "residual",
]

EPS = np.finfo(float).eps


class ZeroPolynomial(ValueError):
    pass


@dataclass(frozen=True)
class RootConfig:
    cluster_radius: float = 1e-7
    max_sweeps: int = 500
    tol_circle: float = 1e-6
    dmax: int = 200
    # relative size below which a scaled derivative counts as vanishing
    deriv_tol: float = 1e-6


DEFAULT = RootConfig()


@dataclass(frozen=True)
class Root:
    z: complex
    multiplicity: int
    residual: float
    converged: bool = True


@dataclass
class RootReport:
    roots: list[Root]
    source: str = ""
    polynomial: LaurentPoly | None = None
    degenerate_identity: bool = False
    excluded: list[Root] = field(default_factory=list)

    @property
    def degree(self) -> int:
        if self.polynomial is None or self.polynomial.is_zero():
            return 0
        return self.polynomial.span

    def total_multiplicity(self) -> int:
        return sum(r.multiplicity for r in self.roots)

    def all_converged(self) -> bool:
        return all(r.converged for r in self.roots)

    def find(self, z: complex, tol: float = 1e-6) -> Root | None:
        best = min(self.roots, key=lambda r: abs(r.z - z), default=None)
        if best is not None and abs(best.z - z) <= tol:
            return best
        return None


@dataclass(frozen=True)
class Classification:
    on_unit_circle: bool
    rou_order: int | None = None
    excluded_minus_one: bool = False


def _stripped(p: LaurentPoly) -> LaurentPoly:
    return p.shift(-p.min_exp)


def residual(p: LaurentPoly, z: complex) -> float:
    """|p(z)| / (||p||_1 max(1, |z|^deg)) for the monomial-stripped ``p``.

    Evaluated through the reversed polynomial outside the unit disk so that
    high degrees do not overflow.
    """
    q = _stripped(p)
    lo, cs = q.dense()
    c = np.array(cs, dtype=float)
    scale = float(np.abs(c).sum())
    if scale == 0:
        return 0.0
    z = complex(z)
    if abs(z) <= 1:
        val = np.polyval((c / scale)[::-1].astype(complex), z)
    else:
        val = np.polyval((c / scale).astype(complex), 1 / z)
    return float(abs(val))


def _initial_points(a: np.ndarray) -> np.ndarray:
    """Starting points on circles given by the Newton polygon of log|a_k|.

    ``a`` is ascending. One circle per upper-hull edge, radius
    (|a_i| / |a_j|)^(1/(j - i)), carrying j - i equally spaced points.
    """
    d = len(a) - 1
    ks = [k for k in range(d + 1) if a[k] != 0]
    pts = [(k, math.log(abs(a[k]))) for k in ks]
    hull: list[tuple[int, float]] = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1) >= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    out = []
    sigma = 0.7
    for (i, yi), (j, yj) in zip(hull, hull[1:]):
        m = j - i
        r = math.exp((yi - yj) / m)
        for k in range(m):
            out.append(r * cmath.exp(1j * (2 * math.pi * k / m + 2 * math.pi * i / d + sigma)))
    return np.array(out, dtype=complex)


def _newton_ratio(c_desc: np.ndarray, z: np.ndarray):
    """p/p' at each z plus a rounding-error bound for |p(z)| (relative form).

    Evaluates the reversed polynomial outside the unit disk for stability.
    Returns (ratio, small) where ``small`` marks points whose value is within
    the rounding bound, i.e. numerically zero.
    """
    d = len(c_desc) - 1
    absc = np.abs(c_desc)
    ratio = np.empty_like(z)
    small = np.zeros(z.shape, dtype=bool)
    inside = np.abs(z) <= 1
    for mask, rev in ((inside, False), (~inside, True)):
        if not mask.any():
            continue
        x = z[mask] if not rev else 1 / z[mask]
        cs = c_desc[::-1] if rev else c_desc
        ac = absc[::-1] if rev else absc
        p = np.zeros_like(x)
        dp = np.zeros_like(x)
        bound = np.zeros(x.shape, dtype=float)
        ax = np.abs(x)
        for k, c in enumerate(cs):
            dp = dp * x + p
            p = p * x + c
            bound = bound * ax + ac[k]
        with np.errstate(divide="ignore", invalid="ignore"):
            if rev:
                r = np.where(p == 0, 0, 1 / (x * (d - x * dp / p)))
            else:
                r = np.where(dp == 0, 0, p / dp)
        r = np.where(np.isfinite(r), r, 0)
        ratio[mask] = r
        small[mask] = np.abs(p) <= 8 * d * EPS * bound
    return ratio, small


def _aberth(c_desc: np.ndarray, max_sweeps: int):
    d = len(c_desc) - 1
    z = _initial_points(c_desc[::-1])
    done = np.zeros(d, dtype=bool)
    for _ in range(max_sweeps):
        ratio, small = _newton_ratio(c_desc, z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1)
        inv = 1 / diff
        np.fill_diagonal(inv, 0)
        s = inv.sum(axis=1)
        with np.errstate(divide="ignore", invalid="ignore"):
            step = ratio / (1 - ratio * s)
        step = np.where(np.isfinite(step), step, 0)
        active = ~done
        z = np.where(active, z - step, z)
        done |= small | (np.abs(step) <= 4 * EPS * np.abs(z))
        if done.all():
            break
    return z, done


def _polish(c_desc: np.ndarray, z: np.ndarray, steps: int = 3) -> np.ndarray:
    for _ in range(steps):
        ratio, small = _newton_ratio(c_desc, z)
        cand = z - ratio
        old = np.abs(np.polyval(c_desc, z))
        new = np.abs(np.polyval(c_desc, cand))
        z = np.where((new < old) & ~small, cand, z)
    return z


def _scaled_derivatives(c_desc: np.ndarray, z: complex, upto: int) -> list[float]:
    """|p^(k)(z)| / sum_j |a_j| C(j,k) |z|^(j-k) for k < upto."""
    out = []
    c = c_desc.astype(complex)
    a = np.abs(c_desc)
    az = abs(z)
    for _ in range(upto):
        if len(c) == 0:
            out.append(1.0)
            continue
        val = abs(np.polyval(c, z))
        scale = float(np.polyval(a, az))
        out.append(val / scale if scale else 0.0)
        c = np.polyder(c) if len(c) > 1 else np.array([], dtype=complex)
        a = np.polyder(a) if len(a) > 1 else np.array([], dtype=float)
    return out


def _cluster(z: np.ndarray, radius: float) -> list[list[int]]:
    n = len(z)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(z[i] - z[j]) <= radius * max(1.0, abs(z[i])):
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values(), key=lambda g: min(g))


def _merge_hidden_multiples(c_desc, z, groups, tol):
    """Merge nearby clusters when derivatives say the zero is multiple.

    Multiple zeros split under rounding by roughly eps^(1/m), which can exceed
    the primary cluster radius for m >= 3.
    """
    merged = True
    while merged:
        merged = False
        centres = [np.mean(z[g]) for g in groups]
        for gi, g in enumerate(groups):
            c = centres[gi]
            near = sorted(
                (abs(centres[h] - c), h) for h in range(len(groups)) if h != gi
            )
            near = [h for dist, h in near if dist <= 1e-3 * max(1.0, abs(c))]
            if not near:
                continue
            cand = list(g)
            for h in near:
                trial = cand + groups[h]
                centre = np.mean(z[trial])
                ders = _scaled_derivatives(c_desc, centre, len(trial))
                if all(v <= tol for v in ders):
                    cand = trial
            if len(cand) > len(g):
                absorbed = {i for i in cand}
                groups = [grp for grp in groups if not (set(grp) & absorbed)] + [sorted(cand)]
                groups.sort(key=lambda grp: min(grp))
                merged = True
                break
    return groups


def _order_key(r: Root):
    ang = cmath.phase(r.z) % (2 * math.pi)
    if ang > 2 * math.pi - 1e-12:
        ang = 0.0
    return (round(ang, 9), round(abs(r.z), 9))


def _clean(z: complex) -> complex:
    re, im = z.real, z.imag
    return complex(re + 0.0, im + 0.0)


def find_roots(p: LaurentPoly, source: str = "", config: RootConfig = DEFAULT) -> RootReport:
    """All nonzero complex zeros of ``p`` with multiplicities.

    The monomial factor is stripped first; multiplicities sum to the degree
    of what remains. Works in whatever variable ``p`` is tagged with.
    """
    if p.is_zero():
        raise ZeroPolynomial("the zero polynomial has no isolated roots")
    poly = _stripped(p)
    roots: list[Root] = []
    rest = poly
    if poly.span > 0:
        m1 = multiplicity(LaurentPoly({0: -1, 1: 1}, poly.var), poly)
        if m1:
            roots.append(Root(1 + 0j, m1, 0.0, True))
            rest = div_exact(poly, LaurentPoly({0: -1, 1: 1}, poly.var) ** m1)
    d = rest.span
    if d > 0:
        _, cs = rest.dense()
        c_desc = np.array(cs[::-1], dtype=float)
        if d == 1:
            z = np.array([-c_desc[1] / c_desc[0]], dtype=complex)
            ok = np.array([True])
        else:
            z, ok = _aberth(c_desc, config.max_sweeps)
            z = _polish(c_desc, z)
        groups = _cluster(z, config.cluster_radius)
        groups = _merge_hidden_multiples(c_desc, z, groups, config.deriv_tol)
        for g in groups:
            centre = complex(np.mean(z[g]))
            if len(g) == 1:
                centre = complex(z[g[0]])
            roots.append(
                Root(_clean(centre), len(g), residual(poly, centre), bool(ok[g].all()))
            )
    roots.sort(key=_order_key)
    return RootReport(roots=roots, source=source, polynomial=poly)


def _rou_candidate(z: complex, dmax: int, tol: float) -> int | None:
    frac = (cmath.phase(z) / (2 * math.pi)) % 1.0
    best = Fraction(frac).limit_denominator(dmax)
    k, d = best.numerator % best.denominator, best.denominator
    if abs(z - cmath.exp(2j * math.pi * k / d)) > tol:
        return None
    return d


def classify(
    z: complex,
    p: LaurentPoly,
    dmax: int | None = None,
    spurious_one_plus_t: bool = False,
    config: RootConfig = DEFAULT,
) -> Classification:
    """Unit-circle membership and certified root-of-unity order of a zero.

    ``spurious_one_plus_t`` says that ``p`` carries a factor (1 + t) that was
    introduced by clearing denominators (as in P_n); a zero at -1 is then
    flagged as excluded instead of being certified.
    """
    dmax = config.dmax if dmax is None else dmax
    tol = config.tol_circle
    on_circle = abs(abs(z) - 1) <= tol
    if spurious_one_plus_t and abs(z + 1) <= tol:
        return Classification(on_circle, None, True)
    if not on_circle:
        return Classification(False)
    d = _rou_candidate(z, dmax, tol)
    if d is not None and divides(cyclotomic(d), _as_t(p)):
        return Classification(True, d)
    return Classification(True)


def _as_t(p: LaurentPoly) -> LaurentPoly:
    if p.var is Var.T:
        return p
    return LaurentPoly(p.terms, Var.T)


def solutions_of_jones_equals_one(j: LaurentPoly, source: str = "", config: RootConfig = DEFAULT) -> RootReport:
    """Zeros of t^m (J(t) - 1), excluding t = 0 and any false zero at -1."""
    if j.var is not Var.T:
        raise ValueError("expected a Jones polynomial in t")
    diff = j - 1
    if diff.is_zero():
        return RootReport([], source, diff, degenerate_identity=True)
    rep = find_roots(diff, source, config)
    keep, excluded = [], []
    for r in rep.roots:
        if abs(r.z + 1) <= config.tol_circle and evaluate(j, -1) != 1:
            excluded.append(r)
        else:
            keep.append(r)
    rep.roots = keep
    rep.excluded = excluded
    return rep
