"""Scatter of the solutions of J(t) = 1 over the bundled knot table.

    python3 scripts/figure1.py --out-dir out --workers 4
"""

import argparse
import logging
from pathlib import Path

from jonesone.cli import ScanConfig, run_scan
from jonesone.emit import ROOT_FIELDS, Point, in_viewport, write_csv, write_svg

log = logging.getLogger("figure1")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--input", default="", help="knot table (default: bundled)")
    ap.add_argument("--out-dir", type=Path, default=Path("out"))
    ap.add_argument("--workers", type=int, default=4)
    ap.add_argument("--max-crossings", type=int, default=10)
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")

    args.out_dir.mkdir(parents=True, exist_ok=True)
    cfg = ScanConfig(
        input=args.input,
        max_crossings=args.max_crossings,
        out_csv=str(args.out_dir / "figure1.csv"),
        out_svg=str(args.out_dir / "figure1.svg"),
        workers=args.workers,
    )
    rows, errors, total = run_scan(cfg)
    for name, err in errors:
        log.warning("skipped %s: %s", name, err)
    write_csv(cfg.out_csv, ROOT_FIELDS, rows)
    write_svg(cfg.out_svg, [Point(r["re"], r["im"], r["alternating"]) for r in rows])

    shown = sum(in_viewport(r["re"], r["im"]) for r in rows)
    on_circle = sum(r["on_unit_circle"] for r in rows)
    certified = sum(r["rou_order"] is not None for r in rows)
    log.info("%d knots, %d distinct roots, %d in the viewport", total, len(rows), shown)
    log.info("%d on |t| = 1, %d certified roots of unity", on_circle, certified)


if __name__ == "__main__":
    main()
