"""Command-line entry point: ``extpers <command> ...``.

Exit status is 0 on success, 1 when a verification fails and 2 for usage or
parse errors.  ``STRIP_FIELD`` sets the default field characteristic.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import List, Optional

from .homology import check_prime
from .io import (ParseError, format_diagram, read_complex, read_diagram, read_values,
                 write_complex, write_matching, write_pages, write_values)
from .matching import bottleneck_distance
from .plot import render_svg
from .realize import build_booklet, realize_matching, represent, verify_roundtrip
from .rish import axiom_suite, build_context, extract_diagram
from .strip import format_ext

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _field(value: Optional[str]) -> int:
    raw = value if value is not None else os.environ.get("STRIP_FIELD", "2")
    try:
        return check_prime(int(raw))
    except ValueError as exc:
        raise UsageError(f"bad field {raw!r}: {exc}") from None


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_dgm(args) -> int:
    q = _field(args.field)
    pair = read_complex(args.complex, relative=args.relative)
    if args.values:
        pair = pair.with_values(read_values(args.values, pair))
    ctx = build_context(pair, q, parts=args.parts)
    _emit(format_diagram(extract_diagram(ctx)), args.output)
    return EXIT_OK


def cmd_dist(args) -> int:
    a, b = read_diagram(args.first), read_diagram(args.second)
    value, m = bottleneck_distance(a, b)
    print(format_ext(value))
    if args.matching:
        if m is None:
            Path(args.matching).write_text("# no finite matching\n", encoding="utf-8")
        else:
            write_matching(args.matching, m)
    return EXIT_OK


def cmd_realize(args) -> int:
    d = read_diagram(args.diagram)
    booklet = build_booklet(represent(d))
    write_complex(args.output, booklet.pair)
    w = booklet.representation
    write_pages(args.output + ".pages", booklet.page_table(), (w.s0, w.points[w.s0]))
    return EXIT_OK


def cmd_realize_matching(args) -> int:
    q = _field(args.field)
    mu, nu = read_diagram(args.first), read_diagram(args.second)
    r = realize_matching(mu, nu, q)
    prefix = args.output
    write_complex(prefix + ".cplx", r.pair)
    write_values(prefix + ".f.val", r.pair, r.f)
    write_values(prefix + ".g.val", r.pair, r.g)
    write_matching(prefix + ".matching", r.matching)
    w = r.booklet.representation
    write_pages(prefix + ".pages", r.booklet.page_table(), (w.s0, w.points[w.s0]))
    c = r.certificate
    lines = [
        f"bottleneck {format_ext(c['bottleneck'])}",
        f"sup_norm {format_ext(c['sup_norm'])}",
        f"matching_norm {format_ext(c['matching_norm'])}",
        f"norm_equals_distance {str(c['norm_equals_distance']).lower()}",
        f"f_diagram_ok {str(c['f_diagram_ok']).lower()}",
        f"g_diagram_ok {str(c['g_diagram_ok']).lower()}",
    ]
    Path(prefix + ".cert").write_text("\n".join(lines) + "\n", encoding="utf-8")
    print("\n".join(lines))
    return EXIT_OK if r.ok else EXIT_FAIL


def cmd_verify(args) -> int:
    q = _field(args.field)
    if args.roundtrip:
        report = verify_roundtrip(read_diagram(args.roundtrip), q)
        print(f"roundtrip {'ok' if report.ok else 'FAILED'} (betti0={report.betti0})")
        if not report.ok:
            sys.stdout.write("expected:\n" + format_diagram(report.expected))
            sys.stdout.write("computed:\n" + format_diagram(report.computed))
        return EXIT_OK if report.ok else EXIT_FAIL
    pair = read_complex(args.axioms, relative=args.relative)
    report = axiom_suite(pair, q=q, seed=args.seed)
    print(report.summary())
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_plot(args) -> int:
    _emit(render_svg(read_diagram(args.diagram)), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="extpers", description="Extended persistence diagrams on the strip.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dgm", help="compute the diagram of a complex file")
    p.add_argument("-c", "--complex", required=True)
    p.add_argument("-a", "--relative", action="store_true", help="use the 'a' lines as the subcomplex")
    p.add_argument("--values", help="override vertex values with an '<id> <value>' file")
    p.add_argument("--field", help="prime field characteristic (default $STRIP_FIELD or 2)")
    p.add_argument("--parts", type=int, default=2, help="sample points per gap between critical values")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_dgm)

    p = sub.add_parser("dist", help="exact bottleneck distance of two diagram files")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--matching", help="write an optimal matching here")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("realize", help="build a booklet complex realizing a diagram")
    p.add_argument("diagram")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("realize-matching", help="realize two diagrams at bottleneck distance")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("-o", "--output", required=True, help="output prefix")
    p.add_argument("--field")
    p.set_defaults(func=cmd_realize_matching)

    p = sub.add_parser("verify", help="run the axiom checks on a complex or a realization round trip")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--axioms", metavar="COMPLEX")
    mode.add_argument("--roundtrip", metavar="DIAGRAM")
    p.add_argument("-a", "--relative", action="store_true")
    p.add_argument("--field")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("plot", help="render a diagram as SVG")
    p.add_argument("diagram")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "parts", 2) < 2:
        parser.error("--parts must be at least 2")
    try:
        return args.func(args)
    except (ParseError, UsageError, ValueError, OSError) as exc:
        print(f"extpers {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
