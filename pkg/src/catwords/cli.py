"""Command-line front end.

Exit codes: 0 success, 1 a verification or conformance check failed, 2 bad
input (pair token, word, path, or a word outside a map's source class), 3 the
enumeration cap was exceeded, 4 the requested computation is not available for
the family.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import bijections, conformance, families, oracle, schemas
from .families import NotAvailable, NonContractive
from .patterns import RelationPair
from .series import BivariateSeries, _rat_str
from .words import (
    MalformedPath,
    NotCatalan,
    ResourceLimit,
    count_dyck_avoiding_factor,
    descent_count,
    format_word,
    from_dyck,
    parse_word,
    to_dyck,
)

MAX_ORDER = 64
FORMATS = ("plain", "json", "csv", "md")


class UsageError(ValueError):
    """Bad user input; mapped to exit code 2."""


def _pair(text: str) -> RelationPair:
    try:
        return RelationPair.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _word(text: str):
    try:
        return parse_word(text)
    except (ValueError, NotCatalan) as exc:
        raise UsageError(f"bad word {text!r}: {exc}") from None


def _order(value: int) -> int:
    if not 1 <= value <= MAX_ORDER:
        raise UsageError(f"order must lie in 1..{MAX_ORDER}, got {value}")
    return value


def _json(obj, schema: str) -> str:
    schemas.validate(obj, schema)
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _md(header, rows) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines += ["| " + " | ".join(str(c) for c in row) + " |" for row in rows]
    return "\n".join(lines)


# commands -------------------------------------------------------------------

def cmd_enumerate(args) -> tuple[str, int]:
    p = _pair(args.avoid)
    words = list(oracle.enumerate_avoiding(p, args.length, unsafe=args.unsafe_cap))
    rows = [(format_word(w, compact=True), descent_count(w)) for w in words]
    if args.format == "json":
        obj = {"pair": p.token, "n": args.length, "count": len(words),
               "words": [{"word": list(w), "descents": descent_count(w)} for w in words]}
        return _json(obj, "words"), 0
    if args.format == "csv":
        return _csv(["word", "descents"], rows), 0
    if args.format == "md":
        return _md(["word", "descents"], rows), 0
    return "\n".join(r[0] for r in rows), 0


def cmd_count(args) -> tuple[str, int]:
    p = _pair(args.avoid)
    lo = args.start
    if args.by_descents:
        table = oracle.distribution(p, args.to, unsafe=args.unsafe_cap)
        rows = [(n, k, c) for (n, k), c in sorted(table.entries.items()) if n >= lo]
        if args.format == "json":
            return _json([r for r in table.to_json_rows() if r["n"] >= lo], "distribution"), 0
        if args.format == "csv":
            return _csv(["n", "k", "count"], rows), 0
        if args.format == "md":
            return _md(["n", "k", "count"], rows), 0
        lines = []
        for n in range(lo, args.to + 1):
            row = table.row(n)
            lines.append(f"{n}: " + " ".join(f"{k}:{c}" for k, c in sorted(row.items())))
        return "\n".join(lines), 0
    counts = [(n, oracle.count_avoiding(p, n, unsafe=args.unsafe_cap)) for n in range(lo, args.to + 1)]
    if args.format == "json":
        return _json({"pair": p.token, "counts": [{"n": n, "count": c} for n, c in counts]}, "counts"), 0
    if args.format == "csv":
        return _csv(["n", "count"], counts), 0
    if args.format == "md":
        return _md(["n", "count"], counts), 0
    return ",".join(str(c) for _, c in counts), 0


def _series_for(record, what: str, method: str, order: int) -> tuple[BivariateSeries, str]:
    """One series for ``method`` in {closed, fixpoint}; returns it with the method actually used."""
    fid = record.family_id
    if what == "bivariate":
        return families.bivariate_series(fid, order, method), method
    if what == "descent-total":
        if not record.bivariate:
            raise NotAvailable(f"family {fid} carries no descent information")
        return BivariateSeries.from_univariate(families.descent_total_series(fid, order, method), order), method
    # univariate
    if record.bivariate:
        return BivariateSeries.from_univariate(families.univariate_series(fid, order, method), order), method
    if method == "fixpoint":
        raise NotAvailable(f"family {fid} has no functional equation")
    if fid in families.UNIVARIATE_FORMS:
        return BivariateSeries.from_univariate(families.univariate_closed_form(fid, order), order), method
    values = [families.count_formula(fid, n) for n in range(order + 1)]
    return BivariateSeries.from_univariate(values, order), "formula"


def cmd_series(args) -> tuple[str, int]:
    p = _pair(args.avoid)
    order = _order(args.order)
    record = families.classify(p)
    status = None
    if args.method == "both":
        closed, _ = _series_for(record, args.what, "closed", order)
        fixed, _ = _series_for(record, args.what, "fixpoint", order)
        agree = closed == fixed
        s, used = closed, "both"
        status = (f"closed form and fixed point agree to order {order}" if agree
                  else f"closed form and fixed point DISAGREE at order {order}")
    else:
        s, used = _series_for(record, args.what, args.method, order)
    code = 0 if status is None or agree else 1
    coeffs = [list(s.ypoly(n)) for n in range(order + 1)]
    if args.format == "json":
        obj = {"pair": p.token, "family": record.family_id, "what": args.what, "method": used,
               "order": order, "coefficients": [[_int_or_str(c) for c in row] for row in coeffs]}
        if status is not None:
            obj["agree"] = code == 0
        return _json(obj, "series"), code
    rows = [(n, k, _rat_str(c)) for n, row in enumerate(coeffs) for k, c in enumerate(row) if c != 0]
    if args.format == "csv":
        body = _csv(["n", "k", "coefficient"], rows)
    elif args.format == "md":
        body = _md(["n", "k", "coefficient"], rows)
    else:
        body = s.pretty(show_order=False)
    if status is not None:
        body += "\n" + status
    return body, code


def _int_or_str(c):
    text = _rat_str(c)
    return int(text) if "/" not in text else text


def cmd_bijection(args) -> tuple[str, int]:
    try:
        spec = bijections.get(args.name)
    except KeyError:
        raise UsageError(f"unknown bijection {args.name!r}; choose from {', '.join(bijections.BIJECTIONS)}") from None
    if args.apply is not None:
        w = _word(args.apply)
        try:
            image = bijections.apply(spec, w, strict=args.strict)
        except bijections.SourceViolation as exc:
            raise UsageError(str(exc)) from None
        if args.format == "json":
            return _json({"name": spec.name, "input": list(w), "output": list(image)}, "mapped"), 0
        compact = "," not in args.apply
        return format_word(image, compact=compact), 0
    if args.to is None:
        raise UsageError("bijection needs --apply WORD or --verify --to N")
    report = bijections.verify(spec, args.to, strict=args.strict, unsafe=args.unsafe_cap)
    code = 0 if report.passed else 1
    if args.format == "json":
        return _json(report.to_json_obj(), "verification"), code
    rows = [(r.n, r.source_count, r.target_count, *("ok" if r.checks[c] else "FAIL" for c in bijections.CHECKS))
            for r in report.rows]
    header = ["n", "source", "target", *bijections.CHECKS]
    if args.format == "csv":
        return _csv(header, rows), code
    if args.format == "md":
        return _md(header, rows), code
    verdict = "all checks pass" if report.passed else "some checks FAIL"
    lines = [report.summary(), f"{spec.name}: {verdict} for n <= {args.to}"]
    for ex in report.counterexamples:
        lines.append(f"  {ex['check']}: n={ex['n']} {ex['word']} -> {ex['image']}")
    return "\n".join(lines), code


def cmd_dyck(args) -> tuple[str, int]:
    if args.word is not None:
        w = _word(args.word)
        path = to_dyck(w)
        if args.format == "json":
            return _json({"word": list(w), "path": path}, "dyck"), 0
        return path, 0
    if args.path is not None:
        try:
            w = from_dyck(args.path.strip().upper())
        except MalformedPath as exc:
            raise UsageError(str(exc)) from None
        if args.format == "json":
            return _json({"word": list(w), "path": to_dyck(w)}, "dyck"), 0
        return format_word(w, compact=True), 0
    if args.avoid_factor is None or args.to is None:
        raise UsageError("dyck needs --word, --path, or --avoid-factor with --to")
    factor = args.avoid_factor.strip().upper()
    if not factor or set(factor) - {"U", "D"}:
        raise UsageError(f"factor must be a nonempty string over U and D, got {args.avoid_factor!r}")
    counts = [(n, count_dyck_avoiding_factor(n, factor, unsafe=args.unsafe_cap)) for n in range(args.to + 1)]
    if args.format == "json":
        return _json({"factor": factor, "counts": [{"n": n, "count": c} for n, c in counts]}, "dyck"), 0
    if args.format == "csv":
        return _csv(["n", "count"], counts), 0
    if args.format == "md":
        return _md(["n", "count"], counts), 0
    return ",".join(str(c) for _, c in counts), 0


def cmd_conformance(args) -> tuple[str, int]:
    order = _order(args.order)
    report = conformance.run(n_max=args.to, order=order)
    code = 0 if report.passed else 1
    if args.format == "json":
        return _json(report.to_json_obj(), "conformance"), code
    return report.to_markdown().rstrip("\n"), code


def cmd_families(args) -> tuple[str, int]:
    objs = [r.to_json_obj() for r in families.records()]
    if args.format == "json":
        return _json(objs, "registry"), 0
    rows = [(o["pair"], o["family_id"], o["oeis_tag"] or "", " ".join(o["equivalent_pairs"])) for o in objs]
    header = ["pair", "family", "oeis", "equivalent"]
    if args.format == "csv":
        return _csv(header, rows), 0
    if args.format == "md":
        return _md(header, rows), 0
    return "\n".join(f"{a:<7} {b:<8} {c:<8} {d}".rstrip() for a, b, c, d in rows), 0


# parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="plain", help="output format (default plain)")
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    common.add_argument("--unsafe-cap", action="store_true",
                        help="allow lengths above the enumeration cap (CATALAN_AVOID_CAP, default 20)")

    parser = argparse.ArgumentParser(
        prog="catwords",
        description="Catalan words avoiding a pair of consecutive relations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list the avoiding words of one length")
    p.add_argument("--avoid", required=True, metavar="PAIR", help='relation pair such as "!=,>"')
    p.add_argument("--length", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", parents=[common], help="count avoiding words by length")
    p.add_argument("--avoid", required=True, metavar="PAIR")
    p.add_argument("--to", type=int, required=True, help="largest length")
    p.add_argument("--from", dest="start", type=int, default=1, help="smallest length (default 1)")
    p.add_argument("--by-descents", action="store_true", help="split each count by number of descents")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("series", parents=[common], help="print a truncated generating function")
    p.add_argument("--avoid", required=True, metavar="PAIR")
    p.add_argument("--order", type=int, default=12, help=f"truncation order, at most {MAX_ORDER}")
    p.add_argument("--what", choices=("bivariate", "univariate", "descent-total"), default="bivariate")
    p.add_argument("--method", choices=("closed", "fixpoint", "both"), default="closed")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("bijection", parents=[common], help="apply or verify a descent-preserving map")
    p.add_argument("--name", required=True, help="one of: " + ", ".join(bijections.BIJECTIONS))
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--apply", metavar="WORD", help="word as 0,1,2 or 012")
    group.add_argument("--verify", action="store_true", help="check the map exhaustively up to --to")
    p.add_argument("--to", type=int)
    p.add_argument("--strict", action="store_true", help="use the maps exactly as stated, without completions")
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("dyck", parents=[common], help="convert words and Dyck paths, count factor avoiders")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--word", help="Catalan word to convert to a U/D path")
    group.add_argument("--path", help="U/D path to convert to a Catalan word")
    group.add_argument("--avoid-factor", metavar="FACTOR", help="count paths without this run of steps")
    p.add_argument("--to", type=int, help="largest semilength for --avoid-factor")
    p.set_defaults(func=cmd_dyck)

    p = sub.add_parser("conformance", parents=[common], help="run every cross-check and print the report")
    p.add_argument("--to", type=int, default=10, help="largest length for exhaustive checks (default 10)")
    p.add_argument("--order", type=int, default=12, help="series order for table checks (default 12)")
    p.set_defaults(func=cmd_conformance)

    p = sub.add_parser("families", parents=[common], help="export the family registry")
    p.set_defaults(func=cmd_families)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("length", "to", "start"):
        value = getattr(args, name, None)
        if value is not None and value < 0:
            print(f"error: --{name} must be nonnegative", file=sys.stderr)
            return 2
    try:
        text, code = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except NotAvailable as exc:
        print(f"error: not available: {exc}", file=sys.stderr)
        return 4
    except NonContractive as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
