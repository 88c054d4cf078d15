#!/usr/bin/env python3
"""Regenerate the bundled knot table from the KnotInfo database.

Needs the optional ``database_knotinfo`` package. Writes the PD table that
ships with the package and a reference file of KnotInfo's Jones polynomials
used only by the test suite.
"""

import argparse
import json
from pathlib import Path

from database_knotinfo import link_list

ROOT = Path(__file__).resolve().parent.parent


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-crossings", type=int, default=10)
    ap.add_argument("--table", default=ROOT / "src/jonesone/data/knots_upto10.jsonl")
    ap.add_argument("--reference", default=ROOT / "tests/data/knotinfo_jones_upto10.json")
    args = ap.parse_args()

    rows, ref = [], {}
    for k in link_list()[1:]:
        if int(k["crossing_number"]) > args.max_crossings:
            continue
        pd = json.loads(k["pd_notation"]) if k["pd_notation"] else []
        rows.append({"name": k["name"], "alternating": k["alternating"] == "Y", "pd": pd})
        ref[k["name"]] = k["jones_polynomial"]

    with open(args.table, "w", encoding="utf-8") as fh:
        for row in rows:
            fh.write(json.dumps(row, separators=(",", ":")) + "\n")
    with open(args.reference, "w", encoding="utf-8") as fh:
        json.dump(ref, fh, indent=0, sort_keys=False)
    print(f"wrote {len(rows)} knots")


if __name__ == "__main__":
    main()
