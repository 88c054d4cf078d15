"""Planar diagram (PD) codes, orientations and knot tables.

A crossing ``(a, b, c, d)`` lists its four edge labels counterclockwise,
starting from the incoming under-strand ``a``; the under-strand runs
``a -> c``. Edges are labelled consecutively along each oriented component.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

__all__ = [
    "PDCode",
    "InvalidPD",
    "OrientationUnderivable",
    "TableEntry",
    "load_table",
    "dump_table",
]


class InvalidPD(ValueError):
    pass


class OrientationUnderivable(InvalidPD):
    pass


@dataclass(frozen=True)
class PDCode:
    crossings: tuple[tuple[int, int, int, int], ...] = ()

    def __post_init__(self):
        xs = tuple(tuple(int(v) for v in x) for x in self.crossings)
        object.__setattr__(self, "crossings", xs)
        counts: dict[int, int] = {}
        for x in xs:
            if len(x) != 4:
                raise InvalidPD(f"crossing {x} does not have four edges")
            for e in x:
                if e < 1:
                    raise InvalidPD(f"edge labels must be positive, got {e}")
                counts[e] = counts.get(e, 0) + 1
        bad = sorted(e for e, k in counts.items() if k != 2)
        if bad:
            raise InvalidPD(f"edge labels not occurring exactly twice: {bad}")

    @classmethod
    def from_list(cls, crossings) -> "PDCode":
        return cls(tuple(tuple(x) for x in crossings))

    def __len__(self) -> int:
        return len(self.crossings)

    @property
    def edges(self) -> list[int]:
        return sorted({e for x in self.crossings for e in x})

    @cached_property
    def _slots(self) -> dict[int, list[tuple[int, int]]]:
        slots: dict[int, list[tuple[int, int]]] = {}
        for i, x in enumerate(self.crossings):
            for p, e in enumerate(x):
                slots.setdefault(e, []).append((i, p))
        return slots

    def _cycle(self, edge: int, head: tuple[int, int]):
        """Walk a component from ``edge`` whose head is at slot ``head``.

        Yields ``(edge, tail_slot, head_slot)`` once per edge of the cycle.
        """
        slots = self._slots
        start = (edge, head)
        while True:
            s0, s1 = slots[edge]
            tail = s1 if head == s0 else s0
            yield edge, tail, head
            x, p = head
            nxt_tail = (x, (p + 2) % 4)
            edge = self.crossings[x][nxt_tail[1]]
            e0, e1 = slots[edge]
            head = e1 if nxt_tail == e0 else e0
            if (edge, head) == start:
                return

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Edges of each component in traversal order (orientation derived)."""
        return self._oriented[0]

    @cached_property
    def _oriented(self):
        seen: set[int] = set()
        out = []
        heads: dict[tuple[int, int], bool] = {}
        for e in self.edges:
            if e in seen:
                continue
            s0, s1 = self._slots[e]
            walk = list(self._cycle(e, s1))
            cyc = [w[0] for w in walk]
            seen.update(cyc)
            hs = {w[2] for w in walk}
            under = [(x, p) for x, p in _all_slots(walk) if p in (0, 2)]
            fwd = all((p == 0) == ((x, p) in hs) for x, p in under)
            bwd = all((p == 2) == ((x, p) in hs) for x, p in under)
            if under:
                if fwd and not bwd:
                    reverse = False
                elif bwd and not fwd:
                    reverse = True
                else:
                    raise OrientationUnderivable(
                        f"under-strands of component containing edge {e} disagree"
                    )
            else:
                reverse = _prefers_reverse(cyc)
            if reverse:
                walk = list(self._cycle(e, s0))
                cyc = [w[0] for w in walk]
                hs = {w[2] for w in walk}
            _check_consecutive(cyc)
            for x, p in _all_slots(walk):
                heads[(x, p)] = (x, p) in hs
            out.append(tuple(cyc))
        return tuple(out), heads

    @cached_property
    def signs(self) -> tuple[int, ...]:
        """Crossing signs: +1 when the over-strand enters at ``d``."""
        heads = self._oriented[1]
        out = []
        for i in range(len(self.crossings)):
            d_in = heads[(i, 3)]
            if d_in == heads[(i, 1)]:
                raise OrientationUnderivable(f"over-strand of crossing {i} is not through")
            out.append(1 if d_in else -1)
        return tuple(out)

    def writhe(self) -> int:
        return sum(self.signs)

    def is_knot(self) -> bool:
        return len(self.components) <= 1

    def is_alternating(self) -> bool:
        """Every edge runs from an under-pass to an over-pass."""
        for pair in self._slots.values():
            if (pair[0][1] % 2) == (pair[1][1] % 2):
                return False
        return True

    def mirror(self) -> "PDCode":
        """Switch all crossings; relabels each tuple to start at the new under-strand."""
        heads_in_d = [s == 1 for s in self.signs]
        out = []
        for (a, b, c, d), d_in in zip(self.crossings, heads_in_d):
            out.append((d, a, b, c) if d_in else (b, c, d, a))
        return PDCode(tuple(out))

    def to_list(self) -> list[list[int]]:
        return [list(x) for x in self.crossings]


def _all_slots(walk):
    for _, tail, head in walk:
        yield tail
        yield head


def _prefers_reverse(cyc: list[int]) -> bool:
    if len(cyc) < 3:
        return False
    i = cyc.index(min(cyc))
    return cyc[(i + 1) % len(cyc)] != cyc[i] + 1


def _check_consecutive(cyc: list[int]) -> None:
    n = len(cyc)
    if n < 3:
        return
    i = cyc.index(min(cyc))
    rot = cyc[i:] + cyc[:i]
    if rot != list(range(rot[0], rot[0] + n)):
        raise OrientationUnderivable(
            f"edge labels {sorted(cyc)} are not consecutive along their component"
        )


@dataclass
class TableEntry:
    """One knot-table row; ``pd`` keeps the raw crossing lists until used."""

    name: str
    pd: list
    alternating: bool | None = None
    extra: dict = field(default_factory=dict, compare=False)

    def code(self) -> PDCode:
        return PDCode.from_list(self.pd)


def load_table(path: str | Path) -> list[TableEntry]:
    """Read a JSON-Lines knot table: ``{"name", "alternating"?, "pd"}`` per line."""
    entries = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
                name = str(obj["name"])
                pd = obj["pd"]
            except (json.JSONDecodeError, KeyError, TypeError) as exc:
                raise InvalidPD(f"{path}:{lineno}: bad table row ({exc})") from None
            alt = obj.get("alternating")
            extra = {k: v for k, v in obj.items() if k not in ("name", "pd", "alternating")}
            entries.append(TableEntry(name, pd, None if alt is None else bool(alt), extra))
    return entries


def dump_table(entries, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for e in entries:
            obj = {"name": e.name}
            if e.alternating is not None:
                obj["alternating"] = e.alternating
            pd = e.pd.to_list() if isinstance(e.pd, PDCode) else e.pd
            obj["pd"] = pd
            fh.write(json.dumps(obj, separators=(",", ":")) + "\n")
