"""Command-line entry point: ``jonesone {dtwist,scan,bkw} ...``."""

from __future__ import annotations

import argparse
import logging
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields
from importlib import resources
from pathlib import Path

from . import bkw, dtwist, emit
from .bracket import MAX_CROSSINGS, jones_from_pd
from .laurent import LaurentPoly, PoleAtZero, cyclotomic, divides, evaluate
from .pd import PDCode, load_table
from .roots import RootConfig, classify, find_roots, solutions_of_jones_equals_one

log = logging.getLogger("jonesone")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def default_table() -> Path:
    return Path(str(resources.files("jonesone") / "data" / "knots_upto10.jsonl"))


_COMPLEX = re.compile(r"^([+-]?[0-9.]+(?:e[+-]?\d+)?)?(?:([+-])([0-9.]*(?:e[+-]?\d+)?)i)?$", re.I)


def parse_complex(text: str) -> complex:
    """Parse ``"a+bi"``, ``"a"``, ``"bi"`` or ``"-i"`` with decimal literals."""
    s = text.strip().replace(" ", "")
    if s.endswith("i") and not re.search(r"\d|\.", s[:-1].lstrip("+-")):
        s = s[:-1] + "1i"
    m = _COMPLEX.match(s)
    if not s or not m:
        # bare imaginary part such as "2.5i"
        m2 = re.match(r"^([+-]?[0-9.]+(?:e[+-]?\d+)?)i$", s, re.I)
        if not m2:
            raise argparse.ArgumentTypeError(f"not a complex number: {text!r}")
        return complex(0, float(m2.group(1)))
    re_part = float(m.group(1)) if m.group(1) else 0.0
    im_part = 0.0
    if m.group(2):
        im_part = float(m.group(3) or 1.0) * (-1 if m.group(2) == "-" else 1)
    return complex(re_part, im_part)


def positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def int_list(text: str) -> list[int]:
    return [positive_int(x) for x in text.split(",") if x.strip()]


# --------------------------------------------------------------------------
# dtwist


def _print_poly(p: LaurentPoly) -> None:
    print(p.to_str(descending=True))


def verify_dtwist(n: int) -> list[tuple[str, bool, str]]:
    j = dtwist.jones_closed(n)
    p = dtwist.pn(n)
    checks = []
    v1 = evaluate(j, 1)
    checks.append(("J(1) = 1", v1 == 1, f"J_{n}(1) = {v1}"))
    vm = evaluate(j, -1)
    want = (-1) ** n * (6 * n + 1)
    checks.append(("determinant", vm == want, f"J_{n}(-1) = {vm}"))
    for d in (d for d in range(1, n + 1) if n % d == 0):
        ok = divides(cyclotomic(d), p)
        checks.append((f"Phi_{d} | P_{n}", ok, "divides" if ok else "does not divide"))
    return checks


def cmd_dtwist(args) -> int:
    n = args.n
    if n < 1:
        print(f"error: n must be >= 1, got {n}", file=sys.stderr)
        return EXIT_USAGE
    if args.action == "jones":
        _print_poly(dtwist.jones_closed(n))
    elif args.action == "pn":
        _print_poly(dtwist.pn(n))
    elif args.action == "roots":
        p = dtwist.pn(n)
        rep = find_roots(p, source=f"P_{n}")
        cls = [classify(r.z, p, spurious_one_plus_t=True) for r in rep.roots]
        sys.stdout.write(emit.csv_text(emit.ROOT_FIELDS, emit.root_rows(f"P_{n}", rep, cls)))
    else:
        failed = False
        for name, ok, detail in verify_dtwist(n):
            print(f"{'ok  ' if ok else 'FAIL'} {name}: {detail}")
            failed |= not ok
        return EXIT_FAIL if failed else EXIT_OK
    return EXIT_OK


# --------------------------------------------------------------------------
# scan


@dataclass
class ScanConfig:
    input: str = ""
    max_crossings: int = 10
    out_csv: str = "roots.csv"
    out_svg: str = "roots.svg"
    tol_circle: float = 1e-6
    workers: int = 1

    def __post_init__(self):
        if not self.input:
            self.input = str(default_table())
        if not 1 <= self.max_crossings <= MAX_CROSSINGS:
            raise ValueError(f"max_crossings must be in 1..{MAX_CROSSINGS}")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.tol_circle <= 0:
            raise ValueError("tol_circle must be positive")


def read_config_file(path) -> dict[str, str]:
    """``key = value`` lines; ``#`` starts a comment; dashes in keys become underscores."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key = value")
            k, v = (x.strip() for x in line.split("=", 1))
            out[k.replace("-", "_")] = v
    return out


def build_scan_config(args) -> ScanConfig:
    kinds = {f.name: f.type for f in fields(ScanConfig)}
    values: dict = {}
    if args.config:
        for k, v in read_config_file(args.config).items():
            if k not in kinds:
                raise ValueError(f"unknown config key {k!r}")
            conv = {"int": int, "float": float}.get(kinds[k], str)
            values[k] = conv(v)
    for k in kinds:
        v = getattr(args, k, None)
        if v is not None:
            values[k] = v
    return ScanConfig(**values)


def scan_entry(name: str, pd_list, alternating, max_crossings: int, tol_circle: float):
    """Full pipeline for one knot; returns (rows, error message or None)."""
    try:
        pd = PDCode.from_list(pd_list)
        if len(pd) > max_crossings:
            raise ValueError(f"{len(pd)} crossings exceeds max_crossings = {max_crossings}")
        config = RootConfig(tol_circle=tol_circle)
        j = jones_from_pd(pd)
        rep = solutions_of_jones_equals_one(j, source=name, config=config)
        cls = [classify(r.z, rep.polynomial, config=config) for r in rep.roots]
        rows = emit.root_rows(name, rep, cls)
        for row in rows:
            row["alternating"] = bool(alternating)
        return rows, None
    except Exception as exc:  # logged and skipped by the caller
        return [], f"{type(exc).__name__}: {exc}"


def run_scan(cfg: ScanConfig) -> tuple[list[dict], list[tuple[str, str]], int]:
    entries = load_table(cfg.input)
    jobs = [(e.name, e.pd, e.alternating, cfg.max_crossings, cfg.tol_circle) for e in entries]
    if cfg.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as ex:
            results = list(ex.map(scan_entry, *zip(*jobs), chunksize=8))
    else:
        results = [scan_entry(*job) for job in jobs]
    rows, errors = [], []
    for job, (r, err) in zip(jobs, results):
        if err is not None:
            errors.append((job[0], err))
        rows.extend(r)
    return rows, errors, len(entries)


def cmd_scan(args) -> int:
    try:
        cfg = build_scan_config(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        rows, errors, total = run_scan(cfg)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    for name, err in errors:
        log.warning("skipped %s: %s", name, err)
    emit.write_csv(cfg.out_csv, emit.ROOT_FIELDS, rows)
    points = [emit.Point(r["re"], r["im"], r["alternating"]) for r in rows]
    emit.write_svg(cfg.out_svg, points)
    print(f"{total} entries, {len(errors)} failed, {len(rows)} roots -> {cfg.out_csv}, {cfg.out_svg}")
    return EXIT_FAIL if total and len(errors) > 0.05 * total else EXIT_OK


# --------------------------------------------------------------------------
# bkw


def cmd_bkw(args) -> int:
    try:
        if args.action == "equimodular":
            pt = bkw.find_equimodular_near(args.t0, args.eps, args.s_max, mirror=args.mirror)
            rows = [
                {
                    "re": pt.t_star.real,
                    "im": pt.t_star.imag,
                    "s": pt.s,
                    "residual": pt.residual,
                    "dominant": pt.dominant,
                }
            ]
            text = emit.csv_text(emit.EQUIMODULAR_FIELDS, rows)
        else:
            fam = bkw.preset(args.preset)
            res = bkw.jw_zero_accumulation(fam, args.tstar, args.n, args.box, method=args.method)
            rows = [
                {"n": r.n, "zero_re": r.nearest_zero.real, "zero_im": r.nearest_zero.imag, "distance": r.distance}
                for r in res
            ]
            text = emit.csv_text(emit.ACCUMULATION_FIELDS, rows)
    except (bkw.NoEquimodularPointFound, bkw.DominanceViolated, bkw.NoZeroInBox, PoleAtZero, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="jonesone", description="Solutions of J(t) = 1 for knots.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dtwist", help="double-twist knots C(2n, 3)")
    p.add_argument("n", type=int)
    p.add_argument("action", choices=["jones", "pn", "roots", "verify"])
    p.set_defaults(func=cmd_dtwist)

    p = sub.add_parser("scan", help="scan a knot table and plot solutions of J(t) = 1")
    p.add_argument("--config", help="key = value file; flags override it")
    p.add_argument("--input", default=None, help="JSONL knot table (default: bundled table)")
    p.add_argument("--max-crossings", dest="max_crossings", type=positive_int, default=None)
    p.add_argument("--out-csv", dest="out_csv", default=None)
    p.add_argument("--out-svg", dest="out_svg", default=None)
    p.add_argument("--tol-circle", dest="tol_circle", type=float, default=None)
    p.add_argument("--workers", type=positive_int, default=None)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("bkw", help="equimodular points and zero accumulation")
    bsub = p.add_subparsers(dest="action", required=True)
    q = bsub.add_parser("equimodular")
    q.add_argument("--t0", type=parse_complex, required=True)
    q.add_argument("--eps", type=float, default=0.5)
    q.add_argument("--s-max", dest="s_max", type=positive_int, default=40)
    q.add_argument("--mirror", action="store_true", help="scan the mirrored relation")
    q.add_argument("--out")
    q.set_defaults(func=cmd_bkw)
    q = bsub.add_parser("accumulate")
    q.add_argument("--preset", required=True, help="twist_ring:S or paper_relation:S")
    q.add_argument("--tstar", type=parse_complex, required=True)
    q.add_argument("--n", type=int_list, default=[10, 50, 150])
    q.add_argument("--box", type=float, default=0.5)
    q.add_argument("--method", choices=["auto", "exact", "grid"], default="auto")
    q.add_argument("--out")
    q.set_defaults(func=cmd_bkw)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    return args.func(args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
