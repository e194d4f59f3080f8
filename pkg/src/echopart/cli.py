"""Command-line surface.

Subcommands: expand, verify, table, remark-check, bfile-export,
bfile-compare.  Identical invocations produce byte-identical output;
`verify` exits nonzero iff any coefficient mismatch exists.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import Sequence

from . import families, seqcompare
from .families import Family, VerificationReport
from .partitions import DEFAULT_ENUMERATION_CAP, Partition
from .qproducts import GeometricSpec, PochhammerSpec, geometric, pochhammer
from .series import TruncatedSeries

OEIS_CROSS_REFERENCE = {
    Family.PLAIN: "A000065",
    Family.DISTINCT: "A111133",
    Family.ODD: "A357456",
    Family.ODD_DISTINCT: "A357457",
    Family.MOD3: "-",
    Family.MOD6: "-",
}

ODD_DISTINCT_TABLE_NOTE = (
    "note: for the odd-distinct family, a published tabulation lists the "
    "value 2 at n=10 beside the single partition 4+3+1, which is a "
    "partition of 8, not 10; the counts above come from direct enumeration "
    "(odd-distinct: n=8 -> 1, n=10 -> 0)."
)

_GEOMETRIC_EXPR = re.compile(r"q(?:\^(\d+))?/\(1-q(?:\^(\d+))?\)")
_POCHHAMMER_EXPR = re.compile(r"(1/)?\(([^;()]+);q(?:\^(\d+))?\)")
_POCHHAMMER_TERM = re.compile(r"(-)?q(?:\^(\d+))?")


def _parse_expression(text: str, order: int) -> TruncatedSeries:
    """A family token, a Pochhammer symbol, or a geometric term.

    Accepted forms besides the six family names:
      (q^2;q^2)          product of (1 - q^(2+2j))
      1/(q^2;q^4)        its reciprocal
      (-q^2,-q^4;q^6)    multi-parameter, '-' turns a factor into (1 + ...)
      q^2/(1-q^4)        geometric comb
    """
    compact = text.strip().replace(" ", "")
    try:
        family = Family.from_token(compact)
    except ValueError:
        pass
    else:
        return families.genfun_series(family, order)

    m = _GEOMETRIC_EXPR.fullmatch(compact)
    if m is not None:
        numerator = int(m.group(1) or 1)
        period = int(m.group(2) or 1)
        return geometric(GeometricSpec(numerator, period), order)

    m = _POCHHAMMER_EXPR.fullmatch(compact)
    if m is not None:
        inverted, terms, step = m.group(1), m.group(2), int(m.group(3) or 1)
        factors = []
        for term in terms.split(","):
            t = _POCHHAMMER_TERM.fullmatch(term)
            if t is None:
                raise ValueError(f"bad factor {term!r} in {text!r}")
            sign = -1 if t.group(1) else 1
            offset = int(t.group(2) or 1)
            factors.append((sign, offset, step))
        product = pochhammer(PochhammerSpec(tuple(factors)), order)
        return product.invert() if inverted else product

    known = ", ".join(f.value for f in Family)
    raise ValueError(
        f"cannot parse {text!r}: expected a family ({known}), a Pochhammer "
        "symbol like (q^2;q^2) or 1/(-q^2,-q^4;q^6), or a geometric term "
        "like q^2/(1-q^4)"
    )


def _format_partition(p: Partition) -> str:
    return "+".join(str(part) for part in p)


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8")


def _json_text(obj: object) -> str:
    return json.dumps(obj, indent=2) + "\n"


# -- expand ---------------------------------------------------------------


def cmd_expand(args: argparse.Namespace) -> int:
    if args.order < 0:
        raise ValueError(f"order must be non-negative, got {args.order}")
    series = _parse_expression(args.expression, args.order)
    rows = [(n, series.coefficient(n)) for n in range(args.order + 1)]
    if args.format == "text":
        text = "".join(f"{n} {value}\n" for n, value in rows)
    elif args.format == "csv":
        text = "n,value\n" + "".join(f"{n},{value}\n" for n, value in rows)
    else:
        text = _json_text(
            {
                "name": args.expression.strip(),
                "order": args.order,
                "coefficients": [[n, value] for n, value in rows],
            }
        )
    _emit(text, args.output)
    return 0


# -- verify ---------------------------------------------------------------


def _report_line(report: VerificationReport) -> str:
    total = len(report.records)
    if report.all_equal:
        return (
            f"{report.family.value}: order {report.order}: "
            f"all {total} coefficients agree"
        )
    first = report.first_mismatch()
    return (
        f"{report.family.value}: order {report.order}: "
        f"{len(report.mismatches)} of {total} coefficients disagree, "
        f"first at n={first.n} (genfun {first.genfun}, direct {first.direct})"
    )


def cmd_verify(args: argparse.Namespace) -> int:
    if args.family == "all":
        selected = list(Family)
    else:
        selected = [Family.from_token(args.family)]
    reports = [families.verify(family, args.order) for family in selected]
    all_equal = all(r.all_equal for r in reports)
    if args.format == "text":
        lines = [_report_line(r) for r in reports]
        disagreeing = sum(1 for r in reports if not r.all_equal)
        if disagreeing:
            lines.append(f"RESULT: {disagreeing} of {len(reports)} families disagree")
        else:
            lines.append(
                "RESULT: all families agree"
                if len(reports) > 1
                else "RESULT: family agrees"
            )
        text = "".join(line + "\n" for line in lines)
    elif len(reports) == 1:
        text = _json_text(reports[0].to_json_dict())
    else:
        text = _json_text(
            {"reports": [r.to_json_dict() for r in reports], "all_equal": all_equal}
        )
    _emit(text, args.output)
    return 0 if all_equal else 1


# -- table ----------------------------------------------------------------


def cmd_table(args: argparse.Namespace) -> int:
    n = args.n
    if n % 2 == 1:
        raise ValueError(f"totals are always even; there is no table for n={n}")
    header = (
        f"partitions of n = {n} with a unique largest part equal "
        "to the sum of the rest"
    )
    lines = [header, ""]
    name_width = max(len(f.value) for f in Family)
    rows = []
    for family in Family:
        value = families.direct_count(family, n)
        witnesses = families.list_partitions(family, n)
        shown = (
            ", ".join(_format_partition(p) for p in witnesses)
            if witnesses
            else "(none)"
        )
        rows.append((family.value, value, OEIS_CROSS_REFERENCE[family], shown))
    count_width = max(5, max(len(str(v)) for _, v, _, _ in rows))
    oeis_width = max(4, max(len(x) for _, _, x, _ in rows))
    lines.append(
        f"{'family':<{name_width}}  {'count':>{count_width}}  "
        f"{'oeis':<{oeis_width}}  partitions"
    )
    for name, value, oeis, shown in rows:
        lines.append(
            f"{name:<{name_width}}  {value:>{count_width}}  "
            f"{oeis:<{oeis_width}}  {shown}"
        )
    lines.append("")
    lines.append(ODD_DISTINCT_TABLE_NOTE)
    _emit("".join(line + "\n" for line in lines), args.output)
    return 0


# -- remark-check ---------------------------------------------------------


def _comparison_text(comparison: seqcompare.SequenceComparison) -> list[str]:
    lines = [comparison.name]
    for hyp in comparison.hypotheses:
        lines.append(f"  {hyp.label}: {hyp.description}")
        lines.append(
            f"  verdict: {hyp.verdict} "
            f"({hyp.covered} of {hyp.total_terms} terms covered)"
        )
        if hyp.records:
            lines.append("  term  n    reference  computed  match")
            for r in hyp.records:
                lines.append(
                    f"  {r.position:<4}  {r.n:<3}  {r.reference:<9}  "
                    f"{r.computed:<8}  {'yes' if r.match else 'NO'}"
                )
        lines.append("")
    return lines


def cmd_remark_check(args: argparse.Namespace) -> int:
    comparisons = seqcompare.remark_comparisons(args.order)
    if args.format == "json":
        text = _json_text(
            {
                "order": args.order,
                "comparisons": [c.to_json_dict() for c in comparisons],
            }
        )
    else:
        lines = []
        for comparison in comparisons:
            lines.extend(_comparison_text(comparison))
        text = "".join(line + "\n" for line in lines)
    _emit(text, args.output)
    return 0


# -- b-files --------------------------------------------------------------


def cmd_bfile_export(args: argparse.Namespace) -> int:
    family = Family.from_token(args.family)
    coefficients = families.direct_counts_upto(family, args.order)
    if args.mode == "even":
        bfile = seqcompare.BFile(
            offset=0, values=tuple(coefficients[n] for n in range(0, args.order + 1, 2))
        )
    elif args.mode == "all":
        bfile = seqcompare.BFile(offset=0, values=tuple(coefficients))
    else:  # nonzero
        values = tuple(c for c in coefficients if c != 0)
        if not values:
            raise ValueError(
                f"no nonzero coefficients for {family.value} at order {args.order}"
            )
        bfile = seqcompare.BFile(offset=1, values=values)
    _emit(seqcompare.render_bfile(bfile), args.output)
    return 0


def cmd_bfile_compare(args: argparse.Namespace) -> int:
    family = Family.from_token(args.family)
    bfile = seqcompare.read_bfile(args.path)
    coefficients = families.direct_counts_upto(family, args.order)
    name = f"{Path(args.path).name} vs {family.value} (order {args.order})"
    comparison = seqcompare.compare_bfile(name, bfile, coefficients)
    if args.format == "json":
        text = _json_text(comparison.to_json_dict())
    else:
        lines = [comparison.name]
        for hyp in comparison.hypotheses:
            lines.append(f"  {hyp.label}: {hyp.description}")
            lines.append(
                f"  verdict: {hyp.verdict} "
                f"({hyp.covered} of {hyp.total_terms} terms covered)"
            )
            first = next((r for r in hyp.records if not r.match), None)
            if first is not None:
                lines.append(
                    f"  first divergence: term {first.position} at n={first.n} "
                    f"(reference {first.reference}, computed {first.computed})"
                )
            lines.append("")
        text = "".join(line + "\n" for line in lines)
    _emit(text, args.output)
    return 0


# -- wiring ---------------------------------------------------------------


def _add_common_flags(sub: argparse.ArgumentParser, formats: tuple[str, ...]) -> None:
    if formats:
        sub.add_argument(
            "--format", choices=formats, default=formats[0], help="output format"
        )
    sub.add_argument("--output", metavar="PATH", help="write to a file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="echopart",
        description=(
            "Count partitions whose unique largest part equals the sum of the "
            "remaining parts, by generating functions and by direct enumeration."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)
    family_tokens = ", ".join(f.value for f in Family)

    p = sub.add_parser(
        "expand",
        help="print the coefficients of a family or q-expression",
    )
    p.add_argument(
        "expression",
        help=f"family ({family_tokens}) or expression like 1/(q^2;q^2) or q^2/(1-q^4)",
    )
    p.add_argument("order", type=int, help="truncation order N")
    _add_common_flags(p, ("text", "csv", "json"))
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser(
        "verify",
        help="compare generating-function coefficients against direct counts",
    )
    p.add_argument(
        "family", nargs="?", default="all", help=f"{family_tokens}, or 'all'"
    )
    p.add_argument("order", nargs="?", type=int, default=200, help="truncation order")
    _add_common_flags(p, ("text", "json"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser(
        "table",
        help="counts and witness partitions for all six families at one n",
    )
    p.add_argument("n", type=int, help=f"even total, at most {DEFAULT_ENUMERATION_CAP}")
    _add_common_flags(p, ())
    p.set_defaults(func=cmd_table)

    p = sub.add_parser(
        "remark-check",
        help="compare the two published 25-term sequences under both "
        "alignment hypotheses",
    )
    p.add_argument(
        "order", nargs="?", type=int, default=120, help="truncation order (>= 120)"
    )
    _add_common_flags(p, ("text", "json"))
    p.set_defaults(func=cmd_remark_check)

    p = sub.add_parser("bfile-export", help="write a family's sequence as a b-file")
    p.add_argument("family", help=family_tokens)
    p.add_argument("--order", type=int, default=200, help="truncation order")
    p.add_argument(
        "--mode",
        choices=("even", "all", "nonzero"),
        default="even",
        help="even: index i holds the coefficient at n=2i; all: index n; "
        "nonzero: nonzero coefficients reindexed from 1",
    )
    _add_common_flags(p, ())
    p.set_defaults(func=cmd_bfile_export)

    p = sub.add_parser(
        "bfile-compare",
        help="compare a local b-file against a family's computed sequence",
    )
    p.add_argument("path", help="local b-file path")
    p.add_argument("family", help=family_tokens)
    p.add_argument("--order", type=int, default=200, help="truncation order")
    _add_common_flags(p, ("text", "json"))
    p.set_defaults(func=cmd_bfile_compare)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
