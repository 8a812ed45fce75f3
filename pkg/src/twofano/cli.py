"""Command line front end: ``twofano classify|sweep|lemma3|bb-degree``."""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from twofano import report
from twofano.classify import Lemma3Input, bend_and_break_degree, lemma3_bound, lemma3_terms
from twofano.errors import TwoFanoError
from twofano.grammar import parse_spec
from twofano.ring import format_rational


def _rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def build_parser():
    parser = argparse.ArgumentParser(
        prog="twofano",
        description="Chern characters and 2-Fano verdicts for catalog spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify one space")
    p.add_argument("spec", nargs="+", help='space spec, e.g. "ci n=5 d=3"')
    p.add_argument("--format", choices=report.FORMATS, default="table")
    p.add_argument("--verbose", action="store_true", help="include witness pairings")
    p.add_argument("--describe", action="store_true", help="print the space data instead")

    p = sub.add_parser("sweep", help="classify a parameter family")
    p.add_argument("--family", choices=report.FAMILIES, required=True)
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--max-r", type=int, default=3)
    p.add_argument("--min-d", type=int, default=2)
    p.add_argument("--max-d", type=int, default=6)
    p.add_argument("--max-k", type=int, default=4)
    p.add_argument("--max-weight", type=int, default=1)
    p.add_argument("--max-c1l", type=int, default=3)
    p.add_argument("--format", choices=report.FORMATS, default="table")
    p.add_argument("--boundary-only", action="store_true")
    p.add_argument("--verbose", action="store_true")
    p.add_argument("--cap", type=int, default=report.DEFAULT_CAP)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("lemma3", help="evaluate the deformation-dimension lower bound")
    p.add_argument("--ch2", type=_rational, required=True, help="deg ch2(T_X) on the surface")
    p.add_argument("--c1sq", type=_rational, required=True, help="deg c1(T_X)^2 on the surface")
    p.add_argument("--e", type=int, required=True, help="anticanonical degree of the curves")
    p.add_argument("--dim", type=int, required=True, help="dimension of X")
    p.add_argument("--g", type=int, required=True, help="genus of C")
    p.add_argument("--b", type=int, required=True, help="number of marked points")

    p = sub.add_parser("bb-degree", help="bend-and-break degree against each surface generator")
    p.add_argument("spec", nargs="+")
    p.add_argument("--e", type=int, required=True)
    return parser


def cmd_classify(args, out):
    spec_text = " ".join(args.spec)
    if args.describe:
        out.write(parse_spec(spec_text).build().describe() + "\n")
        return
    row = report.run_classify(spec_text, args.verbose)
    out.write(report.render([row], args.format))


def cmd_sweep(args, out):
    config = report.SweepConfig(
        family=args.family,
        max_n=args.max_n,
        max_r=args.max_r,
        min_d=args.min_d,
        max_d=args.max_d,
        max_k=args.max_k,
        max_weight=args.max_weight,
        max_c1l=args.max_c1l,
        output_format=args.format,
        boundary_only=args.boundary_only,
        verbose=args.verbose,
        cap=args.cap,
        jobs=args.jobs,
    )
    rows = report.run_sweep(config)
    out.write(report.render(rows, config.output_format, report.summarize(rows)))


def cmd_lemma3(args, out):
    inp = Lemma3Input(args.ch2, args.c1sq, args.e, args.dim, args.g, args.b)
    ch2_term, c1sq_term, genus_term = lemma3_terms(inp)
    out.write(format_rational(lemma3_bound(inp)) + "\n")
    out.write(f"ch2 term: {format_rational(ch2_term)}\n")
    out.write(f"c1^2/(2e) term: {format_rational(c1sq_term)}\n")
    out.write(f"(e+dim-3)(1-g-b) term: {format_rational(genus_term)}\n")


def cmd_bb_degree(args, out):
    space = parse_spec(" ".join(args.spec)).build(report.CLASSIFY_DEPTH)
    if not space.surface_cone:
        out.write(f"{space.label}: no surface generators\n")
    for gen in space.surface_cone:
        value = bend_and_break_degree(space, gen.cls, args.e)
        out.write(f"{gen.label}\t{format_rational(value)}\n")


COMMANDS = {
    "classify": cmd_classify,
    "sweep": cmd_sweep,
    "lemma3": cmd_lemma3,
    "bb-degree": cmd_bb_degree,
}


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        COMMANDS[args.command](args, out)
    except TwoFanoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
