"""Kauffman bracket state sums and Jones polynomials of PD codes.

At a crossing ``(a, b, c, d)`` the A-smoothing joins ``a-b`` and ``c-d`` and
the B-smoothing joins ``a-d`` and ``b-c``.  Then

    <D> = sum_S A^(#A - #B) delta^(loops - 1),   delta = -A^2 - A^-2,
    J(t) = (-A^3)^(-w) <D>  at  t = A^-4.
"""

from __future__ import annotations

import cmath
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .laurent import (
    ExponentNotConvertible,
    LaurentPoly,
    Var,
    change_variable,
    derivative,
    div_exact,
    eval_complex,
    evaluate,
)
from .pd import PDCode

__all__ = [
    "MAX_CROSSINGS",
    "DTWIST_MIRROR",
    "DELTA",
    "TooManyCrossings",
    "UnionFind",
    "bracket",
    "bracket_naive",
    "writhe",
    "normalize",
    "jones_from_pd",
    "SpecialValues",
    "special_values",
]

MAX_CROSSINGS = 24

# Calibrated against the closed form at n = 1: the PD built from the Conway
# code [2, 3] already has the chirality of jones_closed(1), so no mirror.
DTWIST_MIRROR = False

DELTA = LaurentPoly({2: -1, -2: -1}, Var.A)


class TooManyCrossings(ValueError):
    pass


class UnionFind:
    """Disjoint sets over hashable items with path halving and union by size."""

    def __init__(self, items=()):
        self.parent = {}
        self.size = {}
        self.count = 0
        for x in items:
            self.add(x)

    def add(self, x):
        if x not in self.parent:
            self.parent[x] = x
            self.size[x] = 1
            self.count += 1

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x, y) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        self.count -= 1
        return True


def _check_size(pd: PDCode) -> None:
    if len(pd) > MAX_CROSSINGS:
        raise TooManyCrossings(f"{len(pd)} crossings exceeds the cap of {MAX_CROSSINGS}")


def _delta_powers(k: int) -> list[dict[int, int]]:
    out = [{0: 1}]
    for _ in range(k):
        prev = out[-1]
        nxt: dict[int, int] = {}
        for e, c in prev.items():
            nxt[e + 2] = nxt.get(e + 2, 0) - c
            nxt[e - 2] = nxt.get(e - 2, 0) - c
        out.append({e: c for e, c in nxt.items() if c})
    return out


def _naive_partial(crossings, edges, start: int, stop: int) -> dict[int, int]:
    """Sum of A^(#A-#B) delta^loops over states ``start <= s < stop``."""
    n = len(crossings)
    acc: dict[int, int] = {}
    dpow = _delta_powers(len(edges))
    for state in range(start, stop):
        uf = UnionFind(edges)
        nb = 0
        for i, (a, b, c, d) in enumerate(crossings):
            if state >> i & 1:
                nb += 1
                uf.union(a, d)
                uf.union(b, c)
            else:
                uf.union(a, b)
                uf.union(c, d)
        shift = n - 2 * nb
        for e, c in dpow[uf.count].items():
            acc[e + shift] = acc.get(e + shift, 0) + c
    return acc


def bracket_naive(pd: PDCode, workers: int = 1) -> LaurentPoly:
    """Enumerate all 2^c states, counting loops with union-find.

    With ``workers > 1`` the state range is split into contiguous chunks
    summed in separate processes; the exact result does not depend on it.
    """
    _check_size(pd)
    crossings = pd.crossings
    if not crossings:
        return LaurentPoly({0: 1}, Var.A)
    edges = pd.edges
    total = 1 << len(crossings)
    if workers > 1 and total >= 256:
        bounds = [total * k // workers for k in range(workers + 1)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            futs = [
                ex.submit(_naive_partial, crossings, edges, lo, hi)
                for lo, hi in zip(bounds, bounds[1:])
            ]
            parts = [f.result() for f in futs]
    else:
        parts = [_naive_partial(crossings, edges, 0, total)]
    acc = LaurentPoly((), Var.A)
    for part in parts:
        acc = acc + LaurentPoly(part, Var.A)
    return div_exact(acc, DELTA)


def _crossing_order(crossings) -> list[int]:
    """Greedy order keeping the set of half-processed edges small."""
    n = len(crossings)
    done: list[int] = []
    open_edges: dict[int, int] = {}
    remaining = set(range(n))
    while remaining:
        best = min(
            remaining,
            key=lambda i: (-sum(1 for e in crossings[i] if e in open_edges), i),
        )
        remaining.remove(best)
        done.append(best)
        for e in crossings[best]:
            open_edges[e] = open_edges.get(e, 0) + 1
            if open_edges[e] == 2:
                del open_edges[e]
    return done


def _join(part: dict, u: int, v: int) -> int:
    """Add an arc joining edge ends ``u`` and ``v``; return 1 if it closes a loop."""
    if u == v:
        return 1
    if part.get(u) == v:
        del part[u]
        del part[v]
        return 1
    eu = part.pop(u, u)
    ev = part.pop(v, v)
    part[eu] = ev
    part[ev] = eu
    return 0


def bracket(pd: PDCode) -> LaurentPoly:
    """Kauffman bracket <D> in A, normalised so the round unknot is 1.

    Same state sum as :func:`bracket_naive`, but states sharing the same
    connectivity of dangling edges are merged as crossings are added.
    """
    _check_size(pd)
    crossings = pd.crossings
    if not crossings:
        return LaurentPoly({0: 1}, Var.A)
    dpow = _delta_powers(2)
    states: dict[tuple, dict[int, int]] = {(): {0: 1}}
    for i in _crossing_order(crossings):
        a, b, c, d = crossings[i]
        nxt: dict[tuple, dict[int, int]] = {}
        for key, poly in states.items():
            for shift, pairs in ((1, ((a, b), (c, d))), (-1, ((a, d), (b, c)))):
                part = {}
                for u, v in key:
                    part[u] = v
                    part[v] = u
                loops = sum(_join(part, u, v) for u, v in pairs)
                newkey = tuple(sorted((u, v) for u, v in part.items() if u < v))
                tgt = nxt.setdefault(newkey, {})
                for e, co in poly.items():
                    for de, dc in dpow[loops].items():
                        k = e + shift + de
                        tgt[k] = tgt.get(k, 0) + co * dc
        states = {k: {e: c for e, c in v.items() if c} for k, v in nxt.items()}
    (final,) = states.values()
    return div_exact(LaurentPoly(final, Var.A), DELTA)


def writhe(pd: PDCode) -> int:
    return pd.writhe()


def normalize(br: LaurentPoly, w: int) -> LaurentPoly:
    """(-A^3)^(-w) <D>, re-expressed in t (knots) or q = t^(1/2) (links)."""
    f = br * LaurentPoly({-3 * w: (-1) ** (w % 2)}, Var.A)
    try:
        return change_variable(f, Var.T)
    except ExponentNotConvertible:
        return change_variable(f, Var.Q)


def jones_from_pd(pd: PDCode, mirror: bool = False) -> LaurentPoly:
    """Jones polynomial of an oriented PD code; ``mirror`` applies t -> 1/t."""
    j = normalize(bracket(pd), writhe(pd))
    return j.substitute_inverse() if mirror else j


@dataclass(frozen=True)
class SpecialValues:
    v1: complex
    dv1: complex
    v_omega: complex


OMEGA = cmath.exp(2j * math.pi / 3)


def special_values(pd: PDCode | LaurentPoly) -> SpecialValues:
    """J(1), J'(1) and J(exp(2 pi i / 3)) of a knot."""
    j = jones_from_pd(pd) if isinstance(pd, PDCode) else pd
    if j.var is not Var.T:
        raise ValueError("special values are defined here for knots only")
    return SpecialValues(
        v1=complex(evaluate(j, 1)),
        dv1=complex(evaluate(derivative(j), 1)),
        v_omega=eval_complex(j, OMEGA),
    )
