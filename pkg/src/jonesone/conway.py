"""Diagram builders: rational (Conway-code) links and pretzel rings.

Tangles are assembled from crossings whose four slots are, counterclockwise,
SW, SE, NE, NW.  A crossing of type 0 has its under-strand on the SW-NE
diagonal; in the bracket basis it equals A<0> + A^-1<oo>, where <0> joins
NW-NE and SW-SE and <oo> joins NW-SW and NE-SE.  Type 1 is its mirror.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .pd import PDCode

__all__ = [
    "InvalidCode",
    "TangleBuilder",
    "pd_from_conway",
    "conway_fraction",
    "pd_ring",
]

SW, SE, NE, NW = 0, 1, 2, 3


class InvalidCode(ValueError):
    pass


class TangleBuilder:
    """Mutable scratch space for wiring crossings into a closed diagram."""

    def __init__(self):
        self.types: list[int] = []
        self.wires: dict[tuple[int, int], tuple[int, int]] = {}

    def crossing(self, typ: int):
        x = len(self.types)
        self.types.append(typ)
        return (x, NW), (x, NE), (x, SW), (x, SE)

    def connect(self, u, v) -> None:
        if u in self.wires or v in self.wires:
            raise RuntimeError(f"slot already wired: {u} or {v}")
        self.wires[u] = v
        self.wires[v] = u

    def twist_h(self, t, typ: int):
        """Add a crossing to the right of tangle ``t``."""
        nw, ne, sw, se = t
        xnw, xne, xsw, xse = self.crossing(typ)
        self.connect(ne, xnw)
        self.connect(se, xsw)
        return nw, xne, sw, xse

    def twist_v(self, t, typ: int):
        """Add a crossing below tangle ``t``."""
        nw, ne, sw, se = t
        xnw, xne, xsw, xse = self.crossing(typ)
        self.connect(sw, xnw)
        self.connect(se, xne)
        return nw, ne, xsw, xse

    def hsum(self, t1, t2):
        self.connect(t1[1], t2[0])
        self.connect(t1[3], t2[2])
        return t1[0], t2[1], t1[2], t2[3]

    def numerator(self, t) -> None:
        self.connect(t[0], t[1])
        self.connect(t[2], t[3])

    def denominator(self, t) -> None:
        self.connect(t[0], t[2])
        self.connect(t[1], t[3])

    def to_pd(self) -> PDCode:
        """Orient by traversal and label edges consecutively per component."""
        n = len(self.types)
        if len(self.wires) != 4 * n:
            raise RuntimeError("diagram has unwired slots")
        label: dict[tuple[int, int], int] = {}
        incoming: set[tuple[int, int]] = set()
        nxt = 1
        for x in range(n):
            for p in range(4):
                if (x, p) in label:
                    continue
                out = (x, p)
                while out not in label:
                    arrive = self.wires[out]
                    label[out] = label[arrive] = nxt
                    nxt += 1
                    incoming.add(arrive)
                    out = (arrive[0], (arrive[1] + 2) % 4)
        crossings = []
        for x, typ in enumerate(self.types):
            u = SW if typ == 0 else SE
            start = u if (x, u) in incoming else u + 2
            crossings.append(tuple(label[(x, (start + k) % 4)] for k in range(4)))
        return PDCode(tuple(crossings))


def conway_fraction(code) -> Fraction:
    """Fraction a_k + 1/(a_{k-1} + ... + 1/a_1) of the rational tangle."""
    code = _check_code(code)
    f = Fraction(code[0])
    for a in code[1:]:
        f = a + 1 / f
    return f


def _check_code(code) -> list[int]:
    code = [int(a) for a in code]
    if not code or any(a == 0 for a in code):
        raise InvalidCode(f"Conway code entries must be nonzero, got {code}")
    return code


def _build_rational(code, h_type: int, v_type: int) -> PDCode:
    tb = TangleBuilder()
    k = len(code)
    t = None
    for i, a in enumerate(code):
        horizontal = (k - 1 - i) % 2 == 0
        typ = (h_type if horizontal else v_type) ^ (a < 0)
        for _ in range(abs(a)):
            if t is None:
                t = tb.crossing(typ)
            elif horizontal:
                t = tb.twist_h(t, typ)
            else:
                t = tb.twist_v(t, typ)
    tb.numerator(t)
    return tb.to_pd()


def pd_from_conway(code) -> PDCode:
    """Numerator closure of the rational tangle with Conway code ``code``.

    Blocks alternate between vertical and horizontal twisting, the last block
    horizontal.  Crossing types are chosen so that a code with all entries
    positive gives an alternating diagram.
    """
    code = _check_code(code)
    probe = [abs(a) for a in code]
    for h_type, v_type in product((0, 1), repeat=2):
        if _build_rational(probe, h_type, v_type).is_alternating():
            return _build_rational(code, h_type, v_type)
    raise AssertionError("no alternating crossing assignment")  # pragma: no cover


def pd_ring(s: int, n: int) -> PDCode:
    """Pretzel ring P(s, ..., s): ``n`` vertical twist columns closed into a ring.

    Each column is the horizontal twist tangle of ``s`` crossings turned a
    quarter, so its crossings have type 1 for ``s > 0`` and type 0 for ``s < 0``.
    """
    if s == 0 or n < 1:
        raise InvalidCode(f"need s != 0 and n >= 1, got s={s}, n={n}")
    typ = 1 if s > 0 else 0
    tb = TangleBuilder()
    ring = None
    for _ in range(n):
        col = tb.crossing(typ)
        for _ in range(abs(s) - 1):
            col = tb.twist_v(col, typ)
        ring = col if ring is None else tb.hsum(ring, col)
    tb.numerator(ring)
    return tb.to_pd()
