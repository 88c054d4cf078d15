"""Deterministic CSV rows and the SVG scatter of J(t) = 1 solutions."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from xml.sax.saxutils import escape

ROOT_FIELDS = [
    "name",
    "re",
    "im",
    "multiplicity",
    "residual",
    "on_unit_circle",
    "rou_order",
    "excluded_minus_one",
]
EQUIMODULAR_FIELDS = ["re", "im", "s", "residual", "dominant"]
ACCUMULATION_FIELDS = ["n", "zero_re", "zero_im", "distance"]

SIZE = 800
RE_RANGE = (-1.0, 1.0)
IM_RANGE = (0.0, 2.0)
RED = "#d22"
BLUE = "#22d"


def fmt(x) -> str:
    """Fixed, platform-independent text for a CSV cell."""
    if isinstance(x, bool):
        return "true" if x else "false"
    if x is None:
        return ""
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float):
        if x == 0:
            x = 0.0  # drops the sign of -0.0
        return f"{x:.15g}" if x == x else "nan"
    return str(x)


def csv_text(fields, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(fields)
    for row in rows:
        w.writerow([fmt(row[f]) for f in fields])
    return buf.getvalue()


def write_csv(path, fields, rows) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(csv_text(fields, rows))


def root_rows(name: str, report, classifications) -> list[dict]:
    rows = []
    for r, c in zip(report.roots, classifications):
        rows.append(
            {
                "name": name,
                "re": float(r.z.real),
                "im": float(r.z.imag),
                "multiplicity": r.multiplicity,
                "residual": float(r.residual),
                "on_unit_circle": c.on_unit_circle,
                "rou_order": c.rou_order,
                "excluded_minus_one": c.excluded_minus_one,
            }
        )
    return rows


@dataclass(frozen=True)
class Point:
    re: float
    im: float
    alternating: bool


def in_viewport(re: float, im: float) -> bool:
    return RE_RANGE[0] <= re <= RE_RANGE[1] and IM_RANGE[0] <= im <= IM_RANGE[1]


def to_pixels(re: float, im: float) -> tuple[float, float]:
    x = (re - RE_RANGE[0]) / (RE_RANGE[1] - RE_RANGE[0]) * SIZE
    y = (IM_RANGE[1] - im) / (IM_RANGE[1] - IM_RANGE[0]) * SIZE
    return x, y


def svg_text(points, title: str = "Solutions of J(t) = 1") -> str:
    """Scatter over Re in [-1, 1], Im in [0, 2] with the unit circle drawn.

    Non-alternating points are drawn first so the red layer stays on top.
    """
    pts = [p for p in points if in_viewport(p.re, p.im)]
    pts.sort(key=lambda p: p.alternating)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f"<title>{escape(title)}</title>",
        f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>',
        f'<path d="M 0 {SIZE} A {SIZE // 2} {SIZE // 2} 0 0 1 {SIZE} {SIZE}" '
        'fill="none" stroke="#888" stroke-width="1"/>',
        '<g class="points" stroke="none">',
    ]
    for p in pts:
        x, y = to_pixels(p.re, p.im)
        colour = RED if p.alternating else BLUE
        lines.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="2" fill="{colour}"/>')
    lines += ["</g>", "</svg>", ""]
    return "\n".join(lines)


def write_svg(path, points, title: str = "Solutions of J(t) = 1") -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(svg_text(points, title))
