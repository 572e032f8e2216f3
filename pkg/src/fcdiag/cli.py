"""Command line interface.

Exit codes: 0 on success, 1 on domain errors (message names the violated
invariant), 2 on usage errors.  Output is deterministic for fixed argv.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import counting, lattice, tl, verify
from .bijection import diagram_to_fc, fc_to_diagram
from .diagram import Diagram, diagram_from_json, parse_diagram
from .errors import FCDiagramError
from .fc import FCElement, enumerate_fc, parse_fc
from .svg import diagram_to_svg


def _cmd_enum(args) -> int:
    for w in enumerate_fc(args.n):
        if args.size is not None and w.size != args.size:
            continue
        print(json.dumps(w.to_json()) if args.json else w.to_text())
    return 0


def _cmd_count(args) -> int:
    n = args.n
    if args.narayana:
        values = [counting.narayana(n, p) for p in range(n + 1)]
    elif args.triangle:
        values = [counting.triangle_start(n, i) for i in range(n + 1)]
    else:
        values = [counting.catalan(n + 1)]
    if args.json:
        print(json.dumps(values))
    else:
        print(" ".join(str(v) for v in values))
    return 0


def _table_rows(kind: str, n: int):
    if kind == "narayana":
        header = ["n\\p"] + [str(p) for p in range(n + 1)]
        rows = [[str(m)] + [str(counting.narayana(m, p)) for p in range(n + 1)] for m in range(n + 1)]
    elif kind == "triangle":
        header = ["n\\i"] + [str(i) for i in range(n + 1)]
        rows = [[str(m)] + [str(counting.triangle_start(m, i)) for i in range(n + 1)] for m in range(n + 1)]
    elif kind == "first-block":
        header = ["i\\j"] + [str(j) for j in range(1, n + 1)]
        rows = [
            [str(i)] + [str(counting.count_first_block(n, i, j)) for j in range(1, n + 1)]
            for i in range(1, n + 1)
        ]
    elif kind == "last-block":
        header = ["i\\j"] + [str(j) for j in range(1, n + 1)]
        rows = [
            [str(i)] + [str(counting.count_last_block(n, i, j)) for j in range(1, n + 1)]
            for i in range(1, n + 1)
        ]
    elif kind == "start-size":
        header = ["i\\p"] + [str(p) for p in range(1, n + 1)]
        rows = [
            [str(i)] + [str(counting.count_start_size(n, i, p)) for p in range(1, n + 1)]
            for i in range(1, n + 1)
        ]
    elif kind == "size-end":
        header = ["p\\j"] + [str(j) for j in range(1, n + 1)]
        rows = [
            [str(p)] + [str(counting.count_size_end(n, p, j)) for j in range(1, n + 1)]
            for p in range(1, n + 1)
        ]
    elif kind == "start-end":
        header = ["i\\j"] + [str(j) for j in range(1, n + 1)]
        rows = []
        for i in range(1, n + 1):
            row = [str(i)]
            for j in range(1, n + 1):
                value, closed = counting.count_start_end(n, i, j)
                row.append(str(value) if closed else f"{value}*")
            rows.append(row)
    else:  # pragma: no cover - argparse restricts choices
        raise AssertionError(kind)
    return header, rows


def _cmd_table(args) -> int:
    header, rows = _table_rows(args.kind, args.n)
    if args.format == "json":
        print(json.dumps({"header": header, "rows": rows}))
    elif args.format == "csv":
        print(",".join(header))
        for row in rows:
            print(",".join(row))
    else:
        widths = [max(len(r[c]) for r in [header] + rows) for c in range(len(header))]
        for row in [header] + rows:
            print("  ".join(cell.rjust(width) for cell, width in zip(row, widths)))
    if args.kind == "start-end" and args.format == "text":
        print("(* = no closed form; value obtained by enumeration)")
    return 0


def _cmd_to_diagram(args) -> int:
    w = parse_fc(args.element)
    diagram, trace = fc_to_diagram(w)
    if args.json:
        out = {"diagram": diagram.to_json()}
        if args.trace:
            out["trace"] = trace.to_json()
        print(json.dumps(out))
    else:
        print(diagram.to_text())
        if args.trace:
            print(json.dumps(trace.to_json()))
    return 0


def _cmd_to_fc(args) -> int:
    diagram = parse_diagram(args.diagram)
    w = diagram_to_fc(diagram)
    print(json.dumps(w.to_json()) if args.json else w.to_text())
    return 0


def _cmd_mul(args) -> int:
    w1, w2 = parse_fc(args.left), parse_fc(args.right)
    w3, m = tl.monomial_product(w1, w2)
    if args.json:
        print(json.dumps({"delta_exponent": m, "result": w3.to_json()}))
    else:
        print(f"delta^{m} * {w3.to_text()}")
    return 0


_CONVERT_PARSERS = {
    "fc": parse_fc,
    "dyck": lattice.parse_dyck,
    "ballot": lattice.parse_ballot,
    "diagram": parse_diagram,
}


def _cmd_convert(args, parser: argparse.ArgumentParser) -> int:
    src, dst = args.source, args.target
    value = _CONVERT_PARSERS[src](args.input)

    if src == "diagram" and dst == "ballot":
        print(lattice.diagram_to_ballot(value).to_text())
        return 0
    if src == "ballot" and dst == "diagram":
        parser.error("ballot -> diagram is not supported (the tail/head reading has no direct inverse)")

    # everything else goes through the FC element
    if src == "dyck":
        w = lattice.dyck_to_fc(value)
    elif src == "ballot":
        w = lattice.dyck_to_fc(lattice.ballot_to_dyck(value))
    elif src == "diagram":
        w = diagram_to_fc(value)
    else:
        w = value

    if dst == "fc":
        print(w.to_text())
    elif dst == "dyck":
        print(lattice.fc_to_dyck(w).to_text())
    elif dst == "ballot":
        print(lattice.fc_to_ballot(w).to_text())
    else:
        print(fc_to_diagram(w)[0].to_text())
    return 0


def _cmd_render(args) -> int:
    text = args.input.strip()
    if text.startswith("strings="):
        diagram = parse_diagram(text)
    else:
        diagram = fc_to_diagram(parse_fc(text))[0]
    svg = diagram_to_svg(diagram)
    with open(args.svg, "w", encoding="utf-8") as handle:
        handle.write(svg)
    print(args.svg)
    return 0


def _cmd_census(args) -> int:
    classes = tl.census(args.n, args.p)
    strings = args.n + 1
    if args.json:
        print(
            json.dumps(
                [
                    {"key": tl.key_to_text(key, strings), "size": size}
                    for key, size in classes
                ]
            )
        )
    else:
        for key, size in classes:
            print(f"{tl.key_to_text(key, strings)}\t{size}")
    return 0


def _cmd_verify(args, parser: argparse.ArgumentParser) -> int:
    unknown = [s for s in args.suites if s not in verify.SUITES]
    if unknown:
        parser.error(
            f"unknown suite(s) {', '.join(unknown)}; choose from {', '.join(sorted(verify.SUITES))}"
        )
    names = sorted(verify.SUITES) if (args.all or not args.suites) else args.suites
    results = verify.run_suites(names, args.max_n)
    failed = 0
    for r in results:
        if r.ok:
            print(f"PASS {r.suite}.{r.name}")
        else:
            failed += 1
            print(f"FAIL {r.suite}.{r.name}: {r.detail}")
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fcdiag",
        description="Fully commutative elements, non-crossing diagrams, and "
        "Temperley-Lieb monomial arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enum", help="list all FC elements of a rank")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--size", type=int, default=None, help="restrict to one size")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_enum)

    p = sub.add_parser("count", help="closed-form counts for one rank")
    p.add_argument("--n", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--narayana", action="store_true", help="row of counts by size")
    group.add_argument("--triangle", action="store_true", help="row of counts by first generator")
    group.add_argument("--catalan", action="store_true", help="total count (default)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("table", help="print an enumeration table")
    p.add_argument(
        "kind",
        choices=[
            "narayana",
            "triangle",
            "first-block",
            "last-block",
            "start-size",
            "size-end",
            "start-end",
        ],
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("to-diagram", help="draw the diagram of an FC element")
    p.add_argument("element", help="text form, e.g. n=5:[4,5][3,3][1,1]")
    p.add_argument("--trace", action="store_true", help="also dump the drawing trace")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_to_diagram)

    p = sub.add_parser("to-fc", help="read the FC element off a diagram")
    p.add_argument("diagram", help="text form, e.g. strings=2;1-2,1'-2'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_to_fc)

    p = sub.add_parser("mul", help="multiply two basis monomials")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_mul)

    p = sub.add_parser(
        "convert",
        help="convert between fc, dyck, ballot, and diagram forms",
        description="Conversions route through the FC element, except "
        "diagram -> ballot which uses the tail/head reading directly. "
        "ballot -> diagram is not supported.",
    )
    p.add_argument("--from", dest="source", required=True, choices=list(_CONVERT_PARSERS))
    p.add_argument("--to", dest="target", required=True, choices=list(_CONVERT_PARSERS))
    p.add_argument("input")
    p.set_defaults(func=lambda args: _cmd_convert(args, parser))

    p = sub.add_parser("render", help="render a diagram (or an element's diagram) as SVG")
    p.add_argument("input", help="diagram or FC element text form")
    p.add_argument("--svg", required=True, metavar="PATH", help="output file")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("census", help="cross-arrow equivalence classes and their sizes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("verify", help="run property sweeps")
    p.add_argument(
        "suites",
        nargs="*",
        metavar="SUITE",
        help=f"suites to run (default: all): {', '.join(sorted(verify.SUITES))}",
    )
    p.add_argument("--all", action="store_true", help="run every suite")
    p.add_argument("--max-n", type=int, default=8, help="cap enumeration sweeps at this rank")
    p.set_defaults(func=lambda args: _cmd_verify(args, parser))

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FCDiagramError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
