"""Command-line surface: pack, validate, gen, bound, render.

Exit codes: 0 success, 2 packing/validation failure (message on stderr, the
case trace when one exists), 3 malformed input file.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import certify, dispatch, io, svg
from .instances import PROFILES, GeneratorInfeasible, gen_instance
from .scalar import format_fraction

EXIT_OK = 0
EXIT_FAIL = 2
EXIT_MALFORMED = 3

_FAMILY_CHOICES = ("iso_axis", "iso_diag", "equilateral")


def _exact_str(v):
    """Human-readable exact value: 'p/q' or 'p/q + r/s*sqrt(d)'."""
    a, b = v.a, v.b
    if v.d == 1 or b == 0:
        return format_fraction(a)
    root = f"sqrt({v.d})"
    bs = format_fraction(abs(b))
    term = root if abs(b) == 1 else f"{bs}*{root}"
    if a == 0:
        return term if b > 0 else f"-{term}"
    sign = "+" if b > 0 else "-"
    return f"{format_fraction(a)} {sign} {term}"


def _print_trace(trace, stream):
    if trace is not None:
        print(json.dumps(trace.to_json(), indent=2), file=stream)


def _cmd_pack(args):
    try:
        inst = io.read_instance(args.infile)
    except io.MalformedFile as exc:
        print(f"malformed instance: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    if inst.family != args.family:
        print(f"malformed instance: file family {inst.family!r} does not "
              f"match --family {args.family!r}", file=sys.stderr)
        return EXIT_MALFORMED
    try:
        result = dispatch.pack_instance(inst.family, inst.sides)
    except dispatch.Unpackable as exc:
        print(f"Unpackable: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except dispatch.AreaBoundExceeded as exc:
        print(f"AreaBoundExceeded: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except dispatch.InternalStop as exc:
        print(f"InternalStop: {exc}", file=sys.stderr)
        _print_trace(exc.trace, sys.stderr)
        return EXIT_FAIL
    io.write_canonical(args.outfile, io.packing_to_json(inst, result))
    if args.svg:
        note = result.trace.case_path
        if result.trace.candidate:
            note += f" [{result.trace.candidate}]"
        svg.write_svg(args.svg, result.certificate.container,
                      result.placements, note)
    print(f"packed {len(result.placements)} triangles "
          f"({result.trace.case_path})")
    return EXIT_OK


def _cmd_validate(args):
    try:
        inst, placements, _trace, cert = io.read_packing(args.infile)
    except io.MalformedFile as exc:
        print(f"malformed packing: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    try:
        outcome = certify.validate_packing(cert.container, placements,
                                           mode=args.mode)
    except certify.MalformedPacking as exc:
        print(f"malformed packing: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    if isinstance(outcome, certify.Violation):
        print(outcome.describe(), file=sys.stderr)
        return EXIT_FAIL
    print(f"valid: {outcome.count} placements certified")
    return EXIT_OK


def _cmd_gen(args):
    try:
        density = Fraction(args.density)
    except (ValueError, ZeroDivisionError):
        print(f"bad density {args.density!r}", file=sys.stderr)
        return EXIT_FAIL
    try:
        inst = gen_instance(args.family, density, args.count, args.seed,
                            args.profile)
    except (GeneratorInfeasible, ValueError) as exc:
        print(f"generation failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    io.write_instance(args.outfile, inst)
    print(f"wrote {args.count} sides to {args.outfile}")
    return EXIT_OK


def _cmd_bound(args):
    try:
        ts = [Fraction(part) for part in args.t.split(",") if part]
    except (ValueError, ZeroDivisionError):
        print(f"bad size list {args.t!r}", file=sys.stderr)
        return EXIT_FAIL
    try:
        value = dispatch.evaluate_case_lower_bound(args.case, ts)
    except (ValueError, KeyError) as exc:
        print(f"bound failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(f"{args.case} lower bound: {_exact_str(value)} = {float(value)!r}")
    return EXIT_OK


def _cmd_render(args):
    try:
        _inst, placements, trace, cert = io.read_packing(args.infile)
    except io.MalformedFile as exc:
        print(f"malformed packing: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    container = cert.container
    note = None
    if isinstance(trace, dict) and trace.get("case_path"):
        note = trace["case_path"]
        if trace.get("candidate"):
            note += f" [{trace['candidate']}]"
    svg.write_svg(args.outfile, container, placements, note)
    print(f"rendered {len(placements)} triangles to {args.outfile}")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tripack",
        description="Certified parallel packing of homothetic triangles")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pack", help="pack an instance into the unit square")
    p.add_argument("--family", required=True, choices=_FAMILY_CHOICES)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="outfile", required=True)
    p.add_argument("--svg", default=None)
    p.set_defaults(func=_cmd_pack)

    p = sub.add_parser("validate", help="revalidate a packing file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--mode", choices=("sweep", "all_pairs"), default="sweep")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("gen", help="generate a seeded instance")
    p.add_argument("--family", required=True, choices=_FAMILY_CHOICES)
    p.add_argument("--density", required=True,
                   help="target squared-size budget fraction, e.g. 1 or 9/10")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--profile", choices=PROFILES, default="uniform_split")
    p.add_argument("--out", dest="outfile", required=True)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bound", help="evaluate a case lower bound exactly")
    p.add_argument("--case", required=True)
    p.add_argument("--t", required=True,
                   help="comma-separated sizes, e.g. 1/3,1/3,1/3")
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("render", help="render a packing file to SVG")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="outfile", required=True)
    p.set_defaults(func=_cmd_render)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
