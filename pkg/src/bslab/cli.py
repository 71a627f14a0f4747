"""Command line interface.

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors
(including malformed tableau JSON).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import degeneration3
from .errors import BasisFailure, BSLabError, NonPolynomialGrowthError, NotRationalOfClaimedFormError
from .lattice_points import gt_pattern_of_contra, point_of_tableau
from .section_ring import dim_sections, hilbert_table, straighten, verify_basis
from .tableaux import Tableau, enumerate_row_standard, enumerate_straight, is_contra, is_skew
from .word import Shape, Word, column_sets, is_row_convex, longest_word


class UsageError(Exception):
    pass


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _shape(args) -> Shape:
    if args.m is None:
        raise UsageError("--m is required")
    return Shape(longest_word(args.n), args.m)


def _load_tableau(text: str) -> Tableau:
    if text.startswith("@"):
        text = Path(text[1:]).read_text(encoding="utf-8")
    try:
        return Tableau.from_json(json.loads(text))
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed tableau JSON: {exc}") from exc


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    return int(os.environ.get("BSLAB_SEED", "0"))


def cmd_column_sets(args):
    word = Word(args.n, args.word) if args.word else longest_word(args.n)
    sets = column_sets(word)
    if args.format == "json":
        return 0, {"word": word.to_json(), **sets.to_json(), "rowConvex": is_row_convex(sets)}
    lines = [f"C^({k}) = {{{', '.join(map(str, s))}}}" for k, s in enumerate(sets, start=1)]
    return 0, "\n".join(lines)


def cmd_enumerate(args):
    shape = _shape(args)
    tableaux = enumerate_row_standard(shape) if args.row_standard else enumerate_straight(shape)
    kind = "row-standard" if args.row_standard else "straight"
    if args.format == "json":
        return 0, {"shape": shape.to_json(), "kind": kind, "count": len(tableaux),
                   "tableaux": [t.to_json() for t in tableaux]}
    blocks = [f"{len(tableaux)} {kind} tableaux"] + [t.render() for t in tableaux]
    return 0, "\n\n".join(blocks)


def cmd_dim(args):
    shape = _shape(args)
    dim = dim_sections(shape)
    if args.format == "json":
        return 0, {"shape": shape.to_json(), "dim": dim}
    return 0, str(dim)


def cmd_hilbert(args):
    table = hilbert_table(_shape(args), args.dmax, args.degree)
    if args.format == "json":
        return 0, table.to_json()
    lines = [f"{d}\t{v}" for d, v in enumerate(table.entries)]
    if table.interpolated is not None:
        lines.append(f"HP(d) = {table.polynomial_text()}")
    return 0, "\n".join(lines)


def cmd_straighten(args):
    t = _load_tableau(args.tableau)
    if t.shape is None:
        raise UsageError("tableau JSON must carry a shape reference")
    coeffs = straighten(t)
    if args.format == "json":
        return 0, {
            "tableau": t.to_json(),
            "terms": [{"coeff": str(c), "tableau": s.to_json()} for s, c in coeffs.items()],
        }
    blocks = [f"{c:+d} *\n{s.render()}" for s, c in coeffs.items()]
    return 0, "\n\n".join(blocks)


def _point_record(t: Tableau) -> dict:
    point = point_of_tableau(t)
    record = {"tableau": t.to_json(), "point": point.to_json(), "pattern": point.pattern().to_json()}
    # the contra conversion is only comparable when the rows end in column n
    if is_skew(t) and all(row.columns[-1] == t.n for row in t.rows) and is_contra(t):
        record["gtFromContra"] = gt_pattern_of_contra(t).to_json()
    return record


def cmd_points(args):
    if args.tableau:
        tableaux = [_load_tableau(args.tableau)]
    else:
        tableaux = enumerate_straight(_shape(args))
    records = [_point_record(t) for t in tableaux]
    if args.format == "json":
        return 0, {"count": len(records), "points": records}
    blocks = []
    for t in tableaux:
        blocks.append(t.render() + "\n->\n" + point_of_tableau(t).pattern().render())
    return 0, "\n\n".join(blocks)


def cmd_verify_example3(args):
    report = degeneration3.verify_example3(args.dmax)
    status = 0 if report.passed else 1
    if args.format == "json" or not report.passed:
        return status, report.to_json() if report.passed else {
            "passed": False, "discrepancies": [c.to_json() for c in report.failures()]}
    lines = []
    for c in report.checks:
        deg = "" if c.degree is None else f" [d={c.degree}]"
        lines.append(f"{'PASS' if c.passed else 'FAIL'} {c.name}{deg}: {c.computed}")
    return status, "\n".join(lines)


def cmd_basis_report(args):
    report = verify_basis(_shape(args), precheck=args.precheck, seed=_seed(args))
    status = 0 if report.ok else 1
    if args.format == "json" or not report.ok:
        return status, report.to_json()
    lines = [
        f"straight tableaux: {report.straight_count}",
        f"symbolic rank: {report.symbolic_rank}",
        f"row-standard tableaux in span: {report.span_verified} ({report.row_standard_count} checked)",
    ]
    if report.evaluation_rank is not None:
        lines.append(f"evaluation rank: {report.evaluation_rank}")
    return status, "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bslab", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--output", type=Path, help="write output to this file")
    common.add_argument("--seed", type=int, help="seed for the evaluation pre-check (default: $BSLAB_SEED or 0)")

    shaped = argparse.ArgumentParser(add_help=False)
    shaped.add_argument("--n", type=int, required=True)
    shaped.add_argument("--m", type=_int_list, help="comma-separated multiplicities")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("column-sets", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--word", type=_int_list, help="override the canonical word")
    p.set_defaults(func=cmd_column_sets)

    p = sub.add_parser("enumerate", parents=[common, shaped])
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--straight", action="store_true", default=True)
    kind.add_argument("--row-standard", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("dim", parents=[common, shaped])
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("hilbert", parents=[common, shaped])
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--degree", type=int, help="upper bound on the Hilbert polynomial degree")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("straighten", parents=[common])
    p.add_argument("--tableau", required=True, help="tableau JSON, or @path to a JSON file")
    p.set_defaults(func=cmd_straighten)

    p = sub.add_parser("points", parents=[common])
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=_int_list)
    p.add_argument("--tableau", help="tableau JSON, or @path; default is every straight tableau of the shape")
    p.set_defaults(func=cmd_points)

    p = sub.add_parser("verify-example3", parents=[common])
    p.add_argument("--dmax", type=int, default=4)
    p.set_defaults(func=cmd_verify_example3)

    p = sub.add_parser("basis-report", parents=[common, shaped])
    p.add_argument("--precheck", action="store_true", help="also report the rank of random evaluations")
    p.set_defaults(func=cmd_basis_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "points" and not args.tableau and (args.n is None or args.m is None):
        parser.error("points needs --tableau or both --n and --m")
    try:
        status, payload = args.func(args)
    except (BasisFailure, NonPolynomialGrowthError, NotRationalOfClaimedFormError) as exc:
        print(f"bslab {args.command}: verification failed: {exc}", file=sys.stderr)
        status, payload = 1, {"passed": False, "discrepancies": [{"error": type(exc).__name__, "message": str(exc)}]}
    except (UsageError, BSLabError, ValueError) as exc:
        print(f"bslab {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if isinstance(payload, str):
        text = payload + "\n"
    else:
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if args.output:
        args.output.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
