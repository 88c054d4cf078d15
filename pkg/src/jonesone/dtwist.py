"""Double-twist knots K_n = C(2n, 3) and the J_n(t) = 1 algebra.

K_1, K_2, K_3 are the knots 5_2, 7_3, 9_3. The closed form is written in the
negative-exponent convention, so ``jones_closed(1)`` spans t^-6 .. t^-1.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .laurent import (
    LaurentPoly,
    cyclotomic,
    div_exact,
    divides,
    eval_complex,
    evaluate,
)

__all__ = [
    "CubicInX",
    "RootOfUnity",
    "MinusOneExcluded",
    "DegenerateLeadingCoefficient",
    "numerator_Nn",
    "jones_closed",
    "pn",
    "det_at_minus_one",
    "cubic_for_zeta",
    "factor_identity_check",
    "witness_n",
    "quadratic_roots",
    "quadratic_factor",
]

ONE = LaurentPoly({0: 1})
ONE_PLUS_T = LaurentPoly({0: 1, 1: 1})


class MinusOneExcluded(ValueError):
    """zeta = -1 never solves J_n = 1; ``value`` holds J_n(-1) for the n tried."""

    def __init__(self, n: int, value: int):
        super().__init__(f"zeta = -1 is excluded: J_{n}(-1) = {value} != 1")
        self.n = n
        self.value = value


class DegenerateLeadingCoefficient(ZeroDivisionError):
    pass


def _check_n(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    return n


@dataclass(frozen=True)
class RootOfUnity:
    """zeta = exp(2 pi i k / N) with gcd(k, N) = 1, so N is the order."""

    k: int
    N: int

    def __post_init__(self):
        if self.N < 1 or not 0 <= self.k < self.N or math.gcd(self.k, self.N) != 1:
            raise ValueError(f"not a primitive root of unity: k={self.k}, N={self.N}")

    @property
    def value(self) -> complex:
        if self.N == 1:
            return 1 + 0j
        if self.N == 2:
            return -1 + 0j
        return cmath.exp(2j * math.pi * self.k / self.N)

    def is_minus_one(self) -> bool:
        return self.N == 2

    @classmethod
    def primitive(cls, N: int):
        return [cls(k, N) for k in range(N) if math.gcd(k, N) == 1]


def numerator_Nn(n: int) -> LaurentPoly:
    """N_n(t) = t^(2n) (1 + t^2 + t^4) + t^3 - t^2 - 1."""
    _check_n(n)
    # list of pairs: at n = 1 the exponent 2n coincides with the -t^2 term
    return LaurentPoly([(2 * n, 1), (2 * n + 2, 1), (2 * n + 4, 1), (3, 1), (2, -1), (0, -1)])


def jones_closed(n: int) -> LaurentPoly:
    """Closed-form Jones polynomial of K_n, J_n = t^(-3n-3) N_n / (1 + t)."""
    return div_exact(numerator_Nn(n), ONE_PLUS_T).shift(-3 * n - 3)


def pn(n: int) -> LaurentPoly:
    """P_n = N_n - t^(3n+3) (1 + t), i.e. t^(3n+3) (1 + t) (J_n - 1)."""
    return numerator_Nn(n) - (ONE_PLUS_T).shift(3 * n + 3)


def det_at_minus_one(n: int) -> int:
    """J_n(-1) = (-1)^n (6n + 1), cross-checked by exact evaluation."""
    _check_n(n)
    value = (-1) ** n * (6 * n + 1)
    exact = evaluate(jones_closed(n), -1)
    if exact != value:  # pragma: no cover - would mean the closed form is broken
        raise AssertionError(f"J_{n}(-1) = {exact}, expected {value}")
    return value


@dataclass(frozen=True)
class CubicInX:
    """c3 x^3 + c2 x^2 + c1 x + c0 with coefficients Laurent in zeta."""

    c3: LaurentPoly
    c2: LaurentPoly
    c1: LaurentPoly
    c0: LaurentPoly

    def coeffs(self) -> list[LaurentPoly]:
        """Ascending in x: [c0, c1, c2, c3]."""
        return [self.c0, self.c1, self.c2, self.c3]

    def __call__(self, zeta: complex, x: complex) -> complex:
        return sum(eval_complex(c, zeta) * x**k for k, c in enumerate(self.coeffs()))


def cubic_for_zeta() -> CubicInX:
    """The relation P_n(zeta) = 0 rewritten as a cubic in x = zeta^n."""
    return CubicInX(
        c3=LaurentPoly({3: 1, 4: 1}),
        c2=LaurentPoly({0: -1, 2: -1, 4: -1}),
        c1=LaurentPoly(),
        c0=LaurentPoly({0: 1, 2: 1, 3: -1}),
    )


def quadratic_factor() -> list[LaurentPoly]:
    """zeta^3 (1 + zeta) x^2 + (zeta^3 - 1 - zeta^2)(x + 1), ascending in x."""
    b = LaurentPoly({3: 1, 0: -1, 2: -1})
    return [b, b, LaurentPoly({3: 1, 4: 1})]


def _xpoly_mul(p: list[LaurentPoly], q: list[LaurentPoly]) -> list[LaurentPoly]:
    out = [LaurentPoly() for _ in range(len(p) + len(q) - 1)]
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return out


def factor_identity_check() -> bool:
    """Expand (x - 1) * quadratic_factor() and compare with the cubic exactly."""
    x_minus_one = [LaurentPoly({0: -1}), ONE]
    product = _xpoly_mul(x_minus_one, quadratic_factor())
    return product == cubic_for_zeta().coeffs()


def witness_n(zeta: RootOfUnity, tol: float = 1e-9) -> int:
    """Return n = ord(zeta) with J_n(zeta) = 1, checked numerically and exactly.

    Raises MinusOneExcluded for zeta = -1.
    """
    if zeta.is_minus_one():
        raise MinusOneExcluded(2, det_at_minus_one(2))
    n = zeta.N
    residual = abs(eval_complex(jones_closed(n), zeta.value) - 1)
    if residual > tol:  # pragma: no cover - guarded by the theorem
        raise AssertionError(f"|J_{n}(zeta) - 1| = {residual:g}")
    if not divides(cyclotomic(n), pn(n)):  # pragma: no cover
        raise AssertionError(f"Phi_{n} does not divide P_{n}")
    return n


def quadratic_roots(zeta: complex) -> tuple[complex, complex]:
    """Roots x of zeta^3(1+zeta) x^2 + b x + b, b = zeta^3 - 1 - zeta^2."""
    zeta = complex(zeta)
    if zeta == 0:
        raise DegenerateLeadingCoefficient("zeta = 0")
    a = zeta**3 * (1 + zeta)
    if abs(a) < 1e-14:
        raise DegenerateLeadingCoefficient(f"|zeta^3 (1 + zeta)| = {abs(a):g}")
    b = zeta**3 - 1 - zeta**2
    root = cmath.sqrt(b * b - 4 * a * b)
    # pick the sign that avoids cancellation
    s = b + root if abs(b + root) >= abs(b - root) else b - root
    if s == 0:
        return 0j, 0j
    q = -s / 2
    return q / a, b / q
