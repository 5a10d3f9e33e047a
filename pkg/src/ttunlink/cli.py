"""Command-line entry point: ``ttlink <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .braid import BraidError, BraidWord, format_braid, parse_braid
from .classifier import ClassifierError, unlink_verdict
from .invariants import InvariantError, jones_limit, unlink_consistent
from .scan import ConfigError, ScanConfig, ScanSummary, run_scan
from .ttlink import ParameterError, parse_params, twisted_torus_braid
from .word_problem import ParameterOutOfRange, braids_equal, twist_identity_report

EXIT_OK, EXIT_USAGE, EXIT_DISCREPANCY = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad arguments; 2 is reserved for discrepancies
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _dump(obj) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def braid_svg(w: BraidWord, step: int = 30, gap: int = 24) -> str:
    """Strand diagram, top to bottom, one row per letter. Under-strands are drawn
    with a break at the crossing."""
    n, rows = w.strands, len(w.letters)
    width, height = gap * (n + 1), step * (rows + 2)

    def x(pos):
        return gap * (pos + 1)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<g stroke="black" stroke-width="2" fill="none">',
    ]
    y0 = step
    for pos in range(n):
        parts.append(f'<line x1="{x(pos)}" y1="0" x2="{x(pos)}" y2="{y0}"/>')
    for k, g in enumerate(w.letters):
        top, bot = y0 + k * step, y0 + (k + 1) * step
        i = abs(g)
        for pos in range(n):
            if pos not in (i - 1, i):
                parts.append(f'<line x1="{x(pos)}" y1="{top}" x2="{x(pos)}" y2="{bot}"/>')
        # sigma_i: the strand from the left passes over
        over, under = (i - 1, i) if g > 0 else (i, i - 1)
        parts.append(
            f'<line x1="{x(over)}" y1="{top}" x2="{x(2 * i - 1 - over)}" y2="{bot}"/>'
        )
        mid = (top + bot) / 2
        xa, xb = x(under), x(2 * i - 1 - under)
        xm = (xa + xb) / 2
        cut = 0.3
        parts.append(
            f'<line x1="{xa}" y1="{top}" x2="{xa + (xm - xa) * (1 - cut)}" '
            f'y2="{top + (mid - top) * (1 - cut)}"/>'
        )
        parts.append(
            f'<line x1="{xm + (xb - xm) * cut}" y1="{mid + (bot - mid) * cut}" '
            f'x2="{xb}" y2="{bot}"/>'
        )
    yb = y0 + rows * step
    for pos in range(n):
        parts.append(f'<line x1="{x(pos)}" y1="{yb}" x2="{x(pos)}" y2="{height}"/>')
    parts.append("</g></svg>")
    return "\n".join(parts) + "\n"


def cmd_braid(args) -> int:
    w = twisted_torus_braid(parse_params(args.params))
    print(format_braid(w))
    if args.svg:
        Path(args.svg).write_text(braid_svg(w))
    return EXIT_OK


def cmd_invariants(args) -> int:
    if (args.params is None) == (args.word is None):
        raise UsageError("give either parameters p,q,r,s or --word")
    w = parse_braid(args.word) if args.word else twisted_torus_braid(parse_params(args.params))
    limit = args.jones_limit if args.jones_limit is not None else jones_limit()
    _dump(unlink_consistent(w, limit).to_json())
    return EXIT_OK


def cmd_classify(args) -> int:
    tp = parse_params(args.params)
    _dump(unlink_verdict(*tp.as_tuple()).to_json())
    return EXIT_OK


def cmd_scan(args) -> int:
    config = ScanConfig(
        p_max=args.p_max,
        s_min=args.s_min,
        s_max=args.s_max,
        gcd_min=args.gcd_min,
        gcd_max=args.gcd_max,
        r_beyond_p=args.r_beyond_p,
        jones_limit=args.jones_limit if args.jones_limit is not None else jones_limit(),
        jobs=args.jobs,
    )
    summary = ScanSummary()
    for f in run_scan(config):
        summary.add(f)
        if args.json:
            _dump(f.to_json())
        elif f.discrepancy:
            _dump(f.to_json())
    if args.json:
        _dump(summary.to_json())
    else:
        d = summary.to_json()["discrepancies"]
        print(f"tuples: {summary.tuples}")
        print("unlink tuples: " + " ".join(",".join(map(str, t)) for t in summary.unlink_tuples))
        print("discrepancies: " + ", ".join(f"{k}={v}" for k, v in d.items()))
    return EXIT_DISCREPANCY if summary.failed else EXIT_OK


def cmd_verify_lemma(args) -> int:
    report = twist_identity_report(args.n)
    for k, ok in report.items():
        print(f"k={k}: {'pass' if ok else 'FAIL'}")
    return EXIT_OK if all(report.values()) else EXIT_DISCREPANCY


def cmd_equal(args) -> int:
    print("equal" if braids_equal(parse_braid(args.a), parse_braid(args.b)) else "distinct")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ttlink", description="Twisted torus links as braid closures.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("braid", help="print the braid word for p,q,r,s")
    p.add_argument("params")
    p.add_argument("--svg", metavar="FILE", help="also write a strand diagram")
    p.set_defaults(func=cmd_braid)

    p = sub.add_parser("invariants", help="components, linking matrix and Jones")
    p.add_argument("params", nargs="?")
    p.add_argument("--word", help='braid word such as "2: 1 1"')
    p.add_argument("--jones-limit", type=int)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("classify", help="unlink verdict for p,q,r,s")
    p.add_argument("params")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("scan", help="cross-check classifier against invariants")
    p.add_argument("--p-max", type=int, default=8)
    p.add_argument("--s-min", type=int, default=-4)
    p.add_argument("--s-max", type=int, default=4)
    p.add_argument("--gcd-min", type=int, default=2)
    p.add_argument("--gcd-max", type=int)
    p.add_argument("--r-beyond-p", action="store_true", help="include p < r <= p+q")
    p.add_argument("--jones-limit", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true", help="JSON line per tuple plus summary")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify-lemma", help="check the T(2n+2,2n,2n+1,-1) braid identity")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_verify_lemma)

    p = sub.add_parser("equal", help="decide whether two braid words are equal")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_equal)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except (
        UsageError,
        BraidError,
        ParameterError,
        ParameterOutOfRange,
        ClassifierError,
        InvariantError,
        ConfigError,
    ) as exc:
        kind = "RangeError" if isinstance(exc, (ParameterError, ParameterOutOfRange)) else type(exc).__name__
        print(f"error: {kind}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
