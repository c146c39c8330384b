"""Command-line front end.

Subcommands::

    symham gen     --set symmetrized --m 8 --shift alternating --format svg
    symham l2      --set hammersley --m 1 --shift 0 [--format json]
    symham verify  --max-m 6 --exhaustive [--only lemma4,corollary] [--workers 4]
    symham table   --m 1..14

Exit status: 0 on success, 1 when an exact check fails, 2 on bad usage.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from decimal import Decimal, localcontext
from typing import Optional, Sequence

from . import l2, verify
from .pointset import PointSet, Shift, hammersley, reflected_symmetrized, symmetrized

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

SETS = {
    "hammersley": hammersley,
    "symmetrized": symmetrized,
    "reflected": reflected_symmetrized,
}


class UsageError(Exception):
    pass


def parse_shift(spec: str, m: int) -> Shift:
    """Resolve a shift given as bits, a preset name or ``random:<seed>``."""
    if spec == "zeros":
        return Shift((0,) * m)
    if spec == "ones":
        return Shift((1,) * m)
    if spec == "alternating":
        return Shift(tuple(j % 2 for j in range(m)))
    if spec.startswith("random:"):
        seed = spec.split(":", 1)[1]
        rng = random.Random(f"shift:{seed}:{m}")
        return Shift(tuple(rng.randrange(2) for _ in range(m)))
    try:
        sigma = Shift.parse(spec)
    except ValueError as exc:
        raise UsageError(str(exc))
    if sigma.m != m:
        raise UsageError(f"shift {spec!r} has length {sigma.m}, but --m is {m}")
    return sigma


def parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            return range(int(lo), int(lo) + 1)
        r = range(int(lo), int(hi) + 1)
    except ValueError:
        raise UsageError(f"bad level range {text!r}; expected e.g. 1..10")
    if not r or r.start < 1:
        raise UsageError(f"bad level range {text!r}")
    return r


def fixed(x: Decimal, digits: int) -> str:
    """Decimal with ``digits`` significant digits, never in exponent notation."""
    with localcontext() as ctx:
        ctx.prec = digits
        return format(+x, "f")


# -- point file writers ----------------------------------------------------


def points_csv(P: PointSet, decimals: Optional[int] = None) -> str:
    d = 1 << P.level
    lines = ["x,y"]
    for a, b in P.points:
        if decimals is None:
            lines.append(f"{a}/{d},{b}/{d}")
        else:
            lines.append(f"{a / d:.{decimals}f},{b / d:.{decimals}f}")
    return "\n".join(lines) + "\n"


def points_svg(P: PointSet, size: int = 600, radius: float = 2.0, margin: int = 10) -> str:
    d = 1 << P.level
    span = size - 2 * margin
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect x="{margin}" y="{margin}" width="{span}" height="{span}" '
        'fill="none" stroke="black" stroke-width="1"/>',
    ]
    for a, b in P.points:
        cx = margin + span * a / d
        cy = margin + span * (1 - b / d)
        out.append(f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="{radius:g}" fill="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def points_json(P: PointSet, kind: str, sigma: Shift) -> str:
    d = 1 << P.level
    doc = {
        "set": kind,
        "m": P.level,
        "shift": str(sigma),
        "N": P.size,
        "points": [[f"{a}/{d}", f"{b}/{d}"] for a, b in P.points],
    }
    return json.dumps(doc, indent=2) + "\n"


# -- commands ------------------------------------------------------------------


def _emit(text: str, path: Optional[str], stdout) -> None:
    if path and path != "-":
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        stdout.write(text)


def cmd_gen(args, stdout) -> int:
    sigma = parse_shift(args.shift, args.m)
    P = SETS[args.set](args.m, sigma)
    if args.format == "svg":
        text = points_svg(P)
    elif args.format == "json":
        text = points_json(P, args.set, sigma)
    else:
        text = points_csv(P, args.precision if args.decimal else None)
    _emit(text, args.output, stdout)
    return EXIT_OK


def cmd_l2(args, stdout) -> int:
    sigma = parse_shift(args.shift, args.m)
    rep = l2.l2_report(args.set, args.m, sigma)
    dec = fixed(rep.l2(args.precision + 5), args.precision)
    if args.format == "json":
        pred = rep.predicted
        doc = {
            "command": "l2",
            "m": rep.m,
            "shift": str(sigma),
            "N": rep.n,
            "l2_squared_num": rep.squared_scaled.numerator,
            "l2_squared_den": rep.squared_scaled.denominator,
            "predicted_num": pred.numerator if pred is not None else None,
            "predicted_den": pred.denominator if pred is not None else None,
            "match": rep.match,
            "l2_decimal": dec,
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.output, stdout)
    else:
        lines = [
            f"set:        {args.set}",
            f"m:          {rep.m}",
            f"shift:      {sigma}",
            f"N:          {rep.n}",
            f"(N*L2)^2:   {rep.squared_scaled}",
            f"predicted:  {rep.predicted if rep.predicted is not None else 'n/a'}",
            f"L2:         {dec}",
            f"match:      {'n/a' if rep.match is None else str(rep.match).lower()}",
        ]
        _emit("\n".join(lines) + "\n", args.output, stdout)
    return EXIT_MISMATCH if rep.match is False else EXIT_OK


def cmd_verify(args, stdout) -> int:
    only = None
    if args.only:
        only = [name for item in args.only for name in item.split(",") if name]
    try:
        tasks = verify.plan(args.max_m, only, args.exhaustive, args.samples, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc))
    summaries = verify.run(tasks, workers=args.workers)
    width = max((len(s.check) for s in summaries), default=5)
    lines = []
    failures = []
    for s in summaries:
        status = "PASS" if s.ok else "FAIL"
        lines.append(f"{s.check:<{width}}  {s.passed:>7}/{s.total:<7} {status}")
        if not s.ok:
            failures.append(s)
    if failures:
        lines.append(f"first failure: {failures[0].first_failure}")
    lines.append(f"{'all checks passed' if not failures else f'{len(failures)} check(s) failed'}")
    stdout.write("\n".join(lines) + "\n")
    return EXIT_MISMATCH if failures else EXIT_OK


def table_rows(levels: Sequence[int], sigma_spec: str = "zeros", digits: int = 12):
    """Rows ``(m, N, (N L2)^2, L2, L2 N / sqrt(log N), match)`` for the symmetrized set."""
    rows = []
    for m in levels:
        sigma = parse_shift(sigma_spec, m)
        n = 1 << (m + 1)
        sq = l2.l2sq_exact(symmetrized(m, sigma))
        with localcontext() as ctx:
            ctx.prec = digits + 10
            ratio = (Decimal(sq.numerator) / Decimal(sq.denominator) / Decimal(n).ln()).sqrt()
        rows.append((m, n, sq, l2.l2_decimal(sq, n, digits + 5), ratio, sq == l2.theorem1_value(m)))
    return rows


def cmd_table(args, stdout) -> int:
    levels = parse_range(args.m)
    lines = ["m,N,l2_squared,l2,ratio,match"]
    all_ok = True
    for m, n, sq, dec, ratio, ok in table_rows(levels, args.shift, args.precision):
        all_ok &= ok
        lines.append(
            f"{m},{n},{sq},{fixed(dec, args.precision)},{fixed(ratio, args.precision)},"
            f"{str(ok).lower()}"
        )
    _emit("\n".join(lines) + "\n", args.output, stdout)
    return EXIT_OK if all_ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symham", description="Exact L2 discrepancy of (symmetrized) Hammersley point sets."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, sets=True):
        p.add_argument("--m", type=int, required=True, help="level; the set has 2^m or 2^(m+1) points")
        p.add_argument(
            "--shift", default="zeros",
            help="bit string, 'zeros', 'ones', 'alternating' or 'random:<seed>' (default zeros)",
        )
        if sets:
            p.add_argument("--set", choices=sorted(SETS), default="symmetrized")
        p.add_argument("--precision", type=int, default=12, help="significant digits of decimals")
        p.add_argument("-o", "--output", help="write to this file instead of stdout")

    p = sub.add_parser("gen", help="write a point set as CSV, JSON or SVG")
    common(p)
    p.add_argument("--format", choices=("csv", "json", "svg"), default="csv")
    p.add_argument("--decimal", action="store_true", help="CSV coordinates as decimals")

    p = sub.add_parser("l2", help="exact L2 discrepancy with its closed-form prediction")
    common(p)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify", help="run the exact verification sweeps")
    p.add_argument("--max-m", type=int, default=6)
    p.add_argument("--only", action="append", help=f"comma-separated subset of: {', '.join(verify.CHECKS)}")
    p.add_argument("--exhaustive", action="store_true", help="enumerate all shifts at small levels")
    p.add_argument("--samples", type=int, default=8, help="shifts per sampled level")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("table", help="CSV table of the symmetrized set over a level range")
    p.add_argument("--m", default="1..10", help="level range, e.g. 1..14")
    p.add_argument("--shift", default="zeros")
    p.add_argument("--precision", type=int, default=12)
    p.add_argument("-o", "--output")
    return parser


COMMANDS = {"gen": cmd_gen, "l2": cmd_l2, "verify": cmd_verify, "table": cmd_table}


def main(argv: Optional[Sequence[str]] = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "precision", 1) < 1:
        parser.print_usage(sys.stderr)
        print("symham: error: --precision must be positive", file=sys.stderr)
        return EXIT_USAGE
    if args.command == "verify" and (args.max_m < 1 or args.workers < 1 or args.samples < 1):
        print("symham: error: --max-m, --workers and --samples must be positive", file=sys.stderr)
        return EXIT_USAGE
    if args.command in ("gen", "l2") and not 1 <= args.m <= 16:
        print(f"symham: error: --m {args.m} outside 1..16", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args, stdout)
    except UsageError as exc:
        print(f"symham: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
