"""Command-line entry point.

Exit codes: 0 success (whatever the verdict), 1 usage error, 2 input or parse
error, 3 resource refusal (brute-force budget exceeded).
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path
from typing import Sequence

from . import formats
from .algebra import (
    DihedralGroup,
    FiniteQuandle,
    QuandleTableError,
    cayley_table,
    conjugation_quandle,
    parse_quandle_table,
    verify_quandle_axioms,
)
from .diagram import (
    BUILTIN_NAMES,
    DiagramDataMissing,
    DiagramError,
    LinkDiagram,
    allen_swenberg,
    builtin,
    parse_diagram,
    serialize_diagram,
)
from .invariants import compare_reports, invariant_report
from .solver import DEFAULT_BUDGET, BudgetExceeded

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits 2 by default; usage errors are 1 here
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_group(sel: str) -> DihedralGroup:
    m = re.fullmatch(r"[Dd](\d+)", sel)
    if not m:
        raise UsageError(f"group selector must look like D<n>, got {sel!r}")
    n = int(m.group(1))
    if n < 3:
        raise UsageError(f"dihedral group D{n} not supported: n must be at least 3")
    return DihedralGroup(n)


def resolve_quandle(sel: str) -> FiniteQuandle:
    """``D<n>`` gives Conj(D_n); anything else is read as a quandle table file."""
    if re.fullmatch(r"[Dd]\d+", sel):
        return conjugation_quandle(parse_group(sel))
    path = Path(sel)
    if not path.is_file():
        raise UsageError(f"{sel!r} is neither D<n> nor a readable quandle file")
    try:
        rows = parse_quandle_table(path.read_text(encoding="utf-8"))
        return FiniteQuandle.from_table(rows, name=path.stem)
    except QuandleTableError as exc:
        raise InputError(f"{sel}: {exc}") from None


def resolve_link(sel: str) -> LinkDiagram:
    """Builtin name, ``as:<k>`` for the k-th Allen-Swenberg link, or a diagram file path."""
    if sel in BUILTIN_NAMES:
        return builtin(sel)
    m = re.fullmatch(r"as:(\d+)", sel)
    if m:
        k = int(m.group(1))
        if k < 1:
            raise UsageError("as:<k> needs k >= 1")
        return allen_swenberg(k)
    path = Path(sel)
    if not path.is_file():
        raise UsageError(
            f"{sel!r} is not a builtin ({', '.join(BUILTIN_NAMES)}), as:<k>, or a file"
        )
    try:
        return parse_diagram(path.read_text(encoding="utf-8"))
    except DiagramError as exc:
        raise InputError(f"{sel}: {exc}") from None


def _report_kwargs(args) -> dict:
    if args.oracle:
        return {"oracle": True, "budget": args.budget}
    return {"workers": args.threads}


def cmd_table(args) -> int:
    g = parse_group(args.group)
    table = cayley_table(g)
    if args.machine:
        doc = {"version": formats.VERSION, "group": g.name, "table": table}
        formats.validate(doc, formats.TABLE_SCHEMA)
        sys.stdout.write(formats.dump(doc))
        return EXIT_OK
    width = len(str(g.order() - 1))
    for row in table:
        print(" ".join(str(v).rjust(width) for v in row))
    return EXIT_OK


def cmd_check(args) -> int:
    path = Path(args.file)
    if not path.is_file():
        raise InputError(f"cannot read {args.file!r}")
    try:
        rows = parse_quandle_table(path.read_text(encoding="utf-8"))
    except QuandleTableError as exc:
        raise InputError(f"{args.file}: {exc}") from None
    violations = verify_quandle_axioms(rows)
    if args.machine:
        doc = {
            "version": formats.VERSION,
            "source": args.file,
            "valid": not violations,
            "violations": [
                {"axiom": v.axiom, "witness": list(v.witness), "detail": v.detail}
                for v in violations
            ],
        }
        formats.validate(doc, formats.CHECK_SCHEMA)
        sys.stdout.write(formats.dump(doc))
    elif violations:
        for v in violations:
            print(v)
    else:
        print("quandle")
    return EXIT_OK if not violations else EXIT_INPUT


def cmd_color(args) -> int:
    d = resolve_link(args.link)
    q = resolve_quandle(args.group)
    r = invariant_report(d, q, **_report_kwargs(args))
    if args.machine:
        doc = formats.ReportDocument.from_reports(q.name, [r])
        sys.stdout.write(formats.serialize_report(doc))
    else:
        print(f"{r.total}; {r.polynomial}")
    return EXIT_OK


def cmd_compare(args) -> int:
    da, db = resolve_link(args.link_a), resolve_link(args.link_b)
    q = resolve_quandle(args.group)
    kw = _report_kwargs(args)
    ra, rb = invariant_report(da, q, **kw), invariant_report(db, q, **kw)
    verdict = compare_reports(ra, rb)
    if args.machine:
        doc = formats.ReportDocument.from_reports(
            q.name, [ra, rb], [(ra.link, rb.link, verdict)]
        )
        sys.stdout.write(formats.serialize_report(doc))
    else:
        print(verdict)
        for r in (ra, rb):
            print(f"  {r.link}: {r.total}; {r.polynomial}")
    return EXIT_OK


def cmd_report(args) -> int:
    d = resolve_link(args.link)
    ref = builtin("hopf_sum")
    quandles = [resolve_quandle(g) for g in args.groups]
    kw = _report_kwargs(args)
    rows = []
    for q in quandles:
        a, b = invariant_report(d, q, **kw), invariant_report(ref, q, **kw)
        rows.append((q, a, b, compare_reports(a, b)))
    if args.machine:
        docs = [
            formats.ReportDocument.from_reports(q.name, [a, b], [(a.link, b.link, v)]).to_json()
            for q, a, b, v in rows
        ]
        formats.validate(docs, formats.REPORT_LIST_SCHEMA)
        sys.stdout.write(formats.dump(docs))
        return EXIT_OK
    header = ("quandle", f"{d.name} total", f"{d.name} polynomial",
              f"{ref.name} total", f"{ref.name} polynomial", "verdict")
    body = [
        (q.name, str(a.total), str(a.polynomial), str(b.total), str(b.polynomial), str(v))
        for q, a, b, v in rows
    ]
    widths = [max(len(r[i]) for r in [header, *body]) for i in range(len(header))]
    for r in [header, tuple("-" * w for w in widths), *body]:
        print("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.k < 1:
        raise UsageError("gen needs k >= 1")
    out = args.out or args.path
    if not out:
        raise UsageError("gen needs an output path")
    d = allen_swenberg(args.k)
    try:
        Path(out).write_text(serialize_diagram(d), encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot write {out}: {exc.strerror}") from None
    if args.machine:
        doc = {
            "version": formats.VERSION,
            "name": d.name,
            "arcs": d.arc_count,
            "crossings": d.crossing_count,
            "path": str(out),
        }
        formats.validate(doc, formats.GEN_SCHEMA)
        sys.stdout.write(formats.dump(doc))
    else:
        print(f"wrote {out}: {d}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="dquandle", description="Quandle coloring invariants of link diagrams.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, solve: bool = False):
        sp.add_argument("--machine", action="store_true", help="emit JSON")
        if solve:
            sp.add_argument("--oracle", action="store_true", help="use the brute-force oracle")
            sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                            help="oracle budget in assignments (default %(default)s)")
            sp.add_argument("--threads", type=int, default=1,
                            help="worker processes for the search (output unchanged)")

    sp = sub.add_parser("table", help="print the Cayley table of D<n>")
    sp.add_argument("group")
    common(sp)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("check", help="verify the quandle axioms for a table file")
    sp.add_argument("file")
    common(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("color", help="counting invariant and enhanced polynomial")
    sp.add_argument("--link", required=True)
    sp.add_argument("--group", required=True, help="D<n> or quandle table file")
    common(sp, solve=True)
    sp.set_defaults(func=cmd_color)

    sp = sub.add_parser("compare", help="decide whether a quandle distinguishes two links")
    sp.add_argument("link_a")
    sp.add_argument("link_b")
    sp.add_argument("--group", required=True)
    common(sp, solve=True)
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("report", help="compare a link with hopf_sum over several groups")
    sp.add_argument("link")
    sp.add_argument("groups", nargs="+")
    common(sp, solve=True)
    sp.set_defaults(func=cmd_report)

    sp = sub.add_parser("gen", help="write the k-th Allen-Swenberg diagram")
    sp.add_argument("k", type=int)
    sp.add_argument("path", nargs="?")
    sp.add_argument("--out")
    common(sp)
    sp.set_defaults(func=cmd_gen)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InputError, DiagramError, DiagramDataMissing, QuandleTableError,
            formats.ReportFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
