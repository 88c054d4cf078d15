"""Exact Laurent polynomials with integer coefficients.

A :class:`LaurentPoly` is an immutable mapping ``exponent -> coefficient``
tagged with the variable it is written in:

* ``Var.T`` -- the Jones variable ``t``,
* ``Var.Q`` -- ``q`` with ``q**2 == t`` (links with half-integer powers),
* ``Var.A`` -- the Kauffman bracket variable, ``t == A**-4``.
"""

from __future__ import annotations

import enum
import re
from fractions import Fraction
from functools import lru_cache
from numbers import Complex, Rational

import numpy as np

__all__ = [
    "Var",
    "LaurentPoly",
    "LaurentError",
    "VariableMismatch",
    "NotDivisible",
    "PolyDivisionByZero",
    "PoleAtZero",
    "ExponentNotConvertible",
    "add",
    "mul",
    "div_exact",
    "divides",
    "eval_complex",
    "evaluate",
    "derivative",
    "cyclotomic",
    "change_variable",
    "parse",
    "monomial",
    "const",
]


class Var(str, enum.Enum):
    T = "t"
    Q = "q"
    A = "A"


# exponent of A corresponding to exponent 1 of each variable
_A_SCALE = {Var.T: -4, Var.Q: -2, Var.A: 1}


class LaurentError(ArithmeticError):
    pass


class VariableMismatch(LaurentError, TypeError):
    pass


class NotDivisible(LaurentError):
    pass


class PolyDivisionByZero(LaurentError, ZeroDivisionError):
    pass


class PoleAtZero(LaurentError, ZeroDivisionError):
    pass


class ExponentNotConvertible(LaurentError, ValueError):
    pass


class LaurentPoly:
    """Immutable Laurent polynomial over the integers.

    Terms are stored as a tuple of ``(exponent, coefficient)`` pairs sorted by
    ascending exponent with no zero coefficients, so equality is structural.
    """

    __slots__ = ("_terms", "_var", "_hash")

    def __init__(self, terms=None, var: Var | str = Var.T):
        var = Var(var)
        acc: dict[int, int] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for e, c in items:
                if not isinstance(e, int) or isinstance(e, bool):
                    if isinstance(e, Rational) and Fraction(e).denominator == 1:
                        e = int(e)
                    else:
                        raise TypeError(f"exponent must be an integer, got {e!r}")
                c = _as_int(c)
                acc[e] = acc.get(e, 0) + c
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c != 0))
        self._var = var
        self._hash = None

    @classmethod
    def _raw(cls, terms: tuple, var: Var) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._var = var
        obj._hash = None
        return obj

    @classmethod
    def _from_dict(cls, acc: dict, var: Var) -> "LaurentPoly":
        return cls._raw(tuple(sorted((e, c) for e, c in acc.items() if c)), var)

    @property
    def var(self) -> Var:
        return self._var

    @property
    def terms(self) -> tuple:
        return self._terms

    def as_dict(self) -> dict[int, int]:
        return dict(self._terms)

    def coeff(self, e: int) -> int:
        for ee, c in self._terms:
            if ee == e:
                return c
        return 0

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    @property
    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return self._terms[0][0]

    @property
    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return self._terms[-1][0]

    @property
    def span(self) -> int:
        return self.max_exp - self.min_exp

    def norm1(self) -> int:
        return sum(abs(c) for _, c in self._terms)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``var**k``."""
        return LaurentPoly._raw(tuple((e + k, c) for e, c in self._terms), self._var)

    def substitute_inverse(self) -> "LaurentPoly":
        """``p(x) -> p(1/x)``; the mirror map on Jones polynomials."""
        return LaurentPoly._raw(tuple(sorted((-e, c) for e, c in self._terms)), self._var)

    def scale_exponents(self, k: int) -> "LaurentPoly":
        """``p(x) -> p(x**k)`` for a nonzero integer ``k``."""
        if k == 0:
            raise ValueError("k must be nonzero")
        return LaurentPoly._raw(tuple(sorted((e * k, c) for e, c in self._terms)), self._var)

    def dense(self) -> tuple[int, list[int]]:
        """Return ``(min_exp, [c_min, ..., c_max])`` in ascending order."""
        lo, hi = self.min_exp, self.max_exp
        out = [0] * (hi - lo + 1)
        for e, c in self._terms:
            out[e - lo] = c
        return lo, out

    # arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other._var is not self._var:
                raise VariableMismatch(f"{self._var.value} vs {other._var.value}")
            return other
        if isinstance(other, int):
            return const(other, self._var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly._from_dict(acc, self._var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(tuple((e, -c) for e, c in self._terms), self._var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return LaurentPoly._raw((), self._var)
        acc: dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return LaurentPoly._from_dict(acc, self._var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            if isinstance(k, int) and self.is_monomial() and abs(self._terms[0][1]) == 1:
                (e, c), = self._terms
                return LaurentPoly._raw(((e * k, c ** abs(k)),), self._var)
            raise ValueError("only nonnegative integer powers (or powers of unit monomials)")
        result = const(1, self._var)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._var is other._var and self._terms == other._terms
        if isinstance(other, int):
            return self._terms == (((0, other),) if other else ())
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._var, self._terms))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __call__(self, z):
        return evaluate(self, z)

    def __repr__(self):
        return f"LaurentPoly({self.to_str()!r}, var={self._var.value!r})"

    def __str__(self):
        return self.to_str()

    def to_str(self, descending: bool = False) -> str:
        """Render as ``c*x^e + ...``; ascending exponent order by default."""
        if not self._terms:
            return "0"
        x = self._var.value
        terms = reversed(self._terms) if descending else self._terms
        out = []
        for i, (e, c) in enumerate(terms):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = x if e == 1 else f"{x}^{e}"
                body = power if mag == 1 else f"{mag}*{power}"
            if i == 0:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(out)


def _as_int(c) -> int:
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Rational) and Fraction(c).denominator == 1:
        return int(c)
    if isinstance(c, (np.integer,)):
        return int(c)
    raise TypeError(f"coefficient must be an integer, got {c!r}")


def const(c: int, var: Var | str = Var.T) -> LaurentPoly:
    return LaurentPoly({0: c}, var)


def monomial(e: int, c: int = 1, var: Var | str = Var.T) -> LaurentPoly:
    return LaurentPoly({e: c}, var)


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def _check_same(p: LaurentPoly, q: LaurentPoly) -> None:
    if p.var is not q.var:
        raise VariableMismatch(f"{p.var.value} vs {q.var.value}")


def _divmod_poly(num: list[int], den: list[int]) -> tuple[list[int], list[int]] | None:
    """Integer long division of ascending coefficient lists.

    Returns None when a leading-coefficient division is inexact over Z.
    """
    num = list(num)
    dn = len(den) - 1
    lead = den[-1]
    if len(num) - 1 < dn:
        return [], num
    quot = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c == 0:
            continue
        q, r = divmod(c, lead)
        if r:
            return None
        quot[i - dn] = q
        for j in range(dn + 1):
            num[i - dn + j] -= q * den[j]
    return quot, num[:dn]


def div_exact(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Return ``r`` with ``r * q == p``.

    Monomial factors are units, so both sides are shifted to ordinary
    polynomials with nonzero constant term before long division.
    """
    _check_same(p, q)
    if q.is_zero():
        raise PolyDivisionByZero("division by the zero polynomial")
    if p.is_zero():
        return p
    plo, pc = p.dense()
    qlo, qc = q.dense()
    res = _divmod_poly(pc, qc)
    if res is None or any(res[1]):
        raise NotDivisible(f"({p}) is not divisible by ({q})")
    return LaurentPoly(enumerate(res[0]), p.var).shift(plo - qlo)


def divides(q: LaurentPoly, p: LaurentPoly) -> bool:
    """True iff ``q`` divides ``p`` exactly in ``Z[x, 1/x]``."""
    _check_same(p, q)
    if q.is_zero():
        raise PolyDivisionByZero("division by the zero polynomial")
    try:
        div_exact(p, q)
    except NotDivisible:
        return False
    return True


def multiplicity(q: LaurentPoly, p: LaurentPoly) -> int:
    """Largest ``m`` with ``q**m`` dividing ``p`` (``q`` not a unit, ``p`` nonzero)."""
    if q.is_monomial() and abs(q.terms[0][1]) == 1:
        raise ValueError("multiplicity of a unit is unbounded")
    if p.is_zero():
        raise ValueError("multiplicity in the zero polynomial is unbounded")
    m = 0
    while True:
        try:
            p = div_exact(p, q)
        except NotDivisible:
            return m
        m += 1


def eval_complex(p: LaurentPoly, z: complex) -> complex:
    """Horner evaluation at a complex point."""
    z = complex(z)
    if p.is_zero():
        return 0j
    lo, cs = p.dense()
    if lo < 0 and z == 0:
        raise PoleAtZero("negative exponents at z = 0")
    acc = 0j
    for c in reversed(cs):
        acc = acc * z + c
    if lo:
        try:
            acc *= z**lo
        except (ZeroDivisionError, OverflowError) as exc:
            raise PoleAtZero(str(exc)) from None
    return acc


def evaluate(p: LaurentPoly, z):
    """Evaluate exactly for rational ``z`` (int/Fraction), else as complex."""
    if isinstance(z, (int, Fraction)) and not isinstance(z, bool):
        if p.is_zero():
            return 0
        lo, cs = p.dense()
        if lo < 0 and z == 0:
            raise PoleAtZero("negative exponents at z = 0")
        acc = 0
        for c in reversed(cs):
            acc = acc * z + c
        if lo < 0:
            acc = Fraction(acc) / Fraction(z) ** (-lo)
        elif lo > 0:
            acc = acc * z**lo
        if isinstance(acc, Fraction) and acc.denominator == 1:
            return int(acc)
        return acc
    if isinstance(z, Complex):
        return eval_complex(p, z)
    raise TypeError(f"cannot evaluate at {z!r}")


def eval_array(p: LaurentPoly, z: np.ndarray) -> np.ndarray:
    """Vectorised complex evaluation over an array of points."""
    z = np.asarray(z, dtype=complex)
    if p.is_zero():
        return np.zeros_like(z)
    lo, cs = p.dense()
    acc = np.zeros_like(z)
    for c in reversed(cs):
        acc = acc * z + c
    if lo:
        with np.errstate(divide="ignore", invalid="ignore"):
            acc = acc * z**lo
    return acc


def derivative(p: LaurentPoly) -> LaurentPoly:
    return LaurentPoly._raw(tuple((e - 1, e * c) for e, c in p.terms if e != 0), p.var)


@lru_cache(maxsize=None)
def _cyclotomic(d: int) -> LaurentPoly:
    poly = LaurentPoly({d: 1, 0: -1})
    for e in range(1, d):
        if d % e == 0:
            poly = div_exact(poly, _cyclotomic(e))
    return poly


def cyclotomic(d: int) -> LaurentPoly:
    """The ``d``-th cyclotomic polynomial in ``t``."""
    if not isinstance(d, int) or d < 1:
        raise ValueError(f"d must be a positive integer, got {d!r}")
    return _cyclotomic(d)


def change_variable(p: LaurentPoly, target: Var | str) -> LaurentPoly:
    """Re-express ``p`` in another of the variables ``t``, ``q``, ``A``.

    Uses ``t = q**2 = A**-4``; fails when an exponent has no integral image.
    """
    target = Var(target)
    if target is p.var:
        return p
    src, dst = _A_SCALE[p.var], _A_SCALE[target]
    out = []
    for e, c in p.terms:
        a = e * src
        if a % dst:
            raise ExponentNotConvertible(
                f"{p.var.value}^{e} has no integral exponent in {target.value}"
            )
        out.append((a // dst, c))
    return LaurentPoly(out, target)


_TERM_RE = re.compile(
    r"""\s*([+-])?\s*
        (?:(\d+)\s*\*?\s*)?
        (?:([tqA])\s*(?:\^\s*\(?\s*([+-]?\d+)\s*\)?)?)?
        \s*""",
    re.VERBOSE,
)


def parse(text: str, var: Var | str | None = None) -> LaurentPoly:
    """Parse the rendering produced by :meth:`LaurentPoly.to_str`.

    Also accepts ``t^(-2)`` style exponents. The variable is inferred from the
    text when not given.
    """
    s = text.strip()
    if s in ("", "0"):
        return LaurentPoly((), Var(var) if var else Var.T)
    pos = 0
    terms = []
    seen_var = None
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse polynomial near {s[pos:]!r}")
        sign, num, x, exp = m.groups()
        if pos and sign is None:
            raise ValueError(f"missing operator near {s[pos:]!r}")
        coef = int(num) if num is not None else 1
        if sign == "-":
            coef = -coef
        if x is not None:
            if seen_var is not None and x != seen_var:
                raise ValueError("mixed variables in polynomial text")
            seen_var = x
            e = int(exp) if exp is not None else 1
        else:
            e = 0
        terms.append((e, coef))
        pos = m.end()
    v = Var(var) if var else (Var(seen_var) if seen_var else Var.T)
    if seen_var is not None and Var(seen_var) is not v:
        raise VariableMismatch(f"text uses {seen_var}, expected {v.value}")
    return LaurentPoly(terms, v)
