"""Full conformance run: every computed object against every other and against the published values.

Checks compare independent computations (oracle, closed forms, fixed points,
counting formulas, bijections).  Published values that disagree with the
computations are collected as errata; they do not make the run fail.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from . import bijections, families, reference
from .oracle import count_avoiding, descent_polynomial, distribution, enumerate_avoiding
from .patterns import ALL_PAIRS, RelationPair, avoids_pair, avoids_patterns, format_pattern_set, \
    pair_to_pattern_set
from .sequences import binom, motzkin, motzkin_printed_sum
from .series import _ypoly_str
from .words import count_dyck_avoiding_factor, format_word, generate_all, parse_word


@dataclass
class Check:
    suite: str
    name: str
    passed: bool
    detail: str = ""


@dataclass
class Erratum:
    topic: str
    printed: str
    computed: str
    note: str = ""


@dataclass
class TableRow:
    pair: str
    entry: str
    oeis: str
    family: str
    computed: list[int]
    passed: bool


@dataclass
class ConformanceReport:
    n_max: int
    order: int
    table1: list[TableRow] = field(default_factory=list)
    table2: list[TableRow] = field(default_factory=list)
    checks: list[Check] = field(default_factory=list)
    errata: list[Erratum] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks) and all(r.passed for r in self.table1 + self.table2)

    def add(self, suite: str, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(suite, name, bool(passed), detail))

    def to_json_obj(self) -> dict:
        return {
            "n_max": self.n_max,
            "order": self.order,
            "passed": self.passed,
            "table1": [asdict(r) for r in self.table1],
            "table2": [asdict(r) for r in self.table2],
            "checks": [asdict(c) for c in self.checks],
            "errata": [asdict(e) for e in self.errata],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2, ensure_ascii=False)

    def to_markdown(self) -> str:
        out = ["# Conformance report", ""]
        n_fail = sum(not c.passed for c in self.checks)
        out.append(f"Lengths up to n = {self.n_max}, series to order {self.order}.  "
                   f"{len(self.checks)} checks, {n_fail} failed; {len(self.errata)} errata.  "
                   f"Overall: {'PASS' if self.passed else 'FAIL'}.")
        for title, rows in (("Constant and periodic classes", self.table1),
                            ("Counting sequences", self.table2)):
            out += ["", f"## {title}", "",
                    "| Pair | Sequence | OEIS | Family | Computed (n = 1, 2, ...) | Status |",
                    "|---|---|---|---|---|---|"]
            for r in rows:
                seq = ", ".join(str(c) for c in r.computed)
                out.append(f"| {r.pair} | {r.entry} | {r.oeis} | {r.family} | {seq} | "
                           f"{'pass' if r.passed else 'FAIL'} |")
        out += ["", "## Checks", "", "| Suite | Check | Status | Detail |", "|---|---|---|---|"]
        for c in self.checks:
            out.append(f"| {c.suite} | {c.name} | {'pass' if c.passed else 'FAIL'} | {c.detail} |")
        out += ["", "## Errata in the published values", ""]
        if not self.errata:
            out.append("None detected.")
        for e in self.errata:
            line = f"- **{e.topic}**: printed `{e.printed}`, computed `{e.computed}`."
            if e.note:
                line += f" {e.note}"
            out.append(line)
        return "\n".join(out) + "\n"


def _table_rows(report: ConformanceReport, n_max: int, order: int) -> None:
    for table, target in ((reference.TABLE_CONSTANT, report.table1), (reference.TABLE_MAIN, report.table2)):
        for token, (entry, prefix, tag) in table.items():
            rec = families.classify(token)
            oracle = [count_avoiding(token, n) for n in range(n_max + 1)]
            ok = True
            if prefix is not None:
                m = min(len(prefix), n_max)
                ok &= list(prefix[:m]) == oracle[1:m + 1]
            try:
                series = families.univariate_series(rec, max(order, 1))
                m = min(order, n_max)
                ok &= series[:m + 1] == oracle[:m + 1]
            except families.NotAvailable:
                pass
            try:
                ok &= all(families.count_formula(rec, n) == oracle[n] for n in range(n_max + 1))
            except families.NotAvailable:
                pass
            target.append(TableRow(str(rec.pair), entry, tag or "", rec.family_id, oracle[1:], ok))


def _bivariate_checks(report: ConformanceReport, n_max: int, order: int) -> None:
    for fid in families.bivariate_family_ids():
        cf = families.closed_form_series(fid, max(order, 6))
        printed = reference.BIVARIATE_EXPANSIONS.get(fid)
        if printed:
            bad = [n for n, p in sorted(printed.items()) if cf.ypoly(n) != p]
            report.add("bivariate", f"{fid} closed form vs printed expansion", not bad,
                       f"mismatch at x^{bad}" if bad else f"x^0..x^{max(printed)}")
        if fid in families.FUNCTIONAL_EQUATIONS:
            for strategy in families.strategies(fid):
                fe = families.functional_equation_series(fid, order, strategy)
                report.add("bivariate", f"{fid} fixed point ({strategy}) vs closed form",
                           fe == cf.truncate(order), f"order {order}")
        tokens = list(families.FAMILY_MEMBERS[fid])
        for token in list(tokens):
            tokens += [q.token for q in families.classify(token).equivalent_pairs if q.token not in tokens]
        m = min(n_max, order)
        for token in tokens:
            bad = [n for n in range(m + 1) if descent_polynomial(token, n) != (cf.ypoly(n) or [0])]
            report.add("bivariate", f"{fid} series vs oracle for {RelationPair.parse(token)}", not bad,
                       f"n <= {m}" + (f"; mismatch at n = {bad}" if bad else ""))


def _descent_checks(report: ConformanceReport, order: int) -> None:
    N = max(order, 9)
    for fid in families.bivariate_family_ids():
        d = families.descent_total_series(fid, N)
        printed = reference.DESCENT_EXPANSIONS.get(fid)
        if printed:
            bad = [n for n, v in printed.items() if d[n] != v]
            report.add("descents", f"{fid} d/dy at y=1 vs printed expansion", not bad,
                       f"mismatch at x^{bad}" if bad else f"x^{min(printed)}..x^{max(printed)}")
        closed = families.descent_total_closed_form(fid, N)
        report.add("descents", f"{fid} closed form vs d/dy at y=1", closed == d, f"order {N}")


def _count_checks(report: ConformanceReport, n_max: int) -> None:
    for fid, formula_owner in ((fid, families.FAMILY_MEMBERS[fid][0]) for fid in families.FAMILY_ORDER):
        if fid not in families.COUNT_FORMULAS:
            continue
        bad = [n for n in range(n_max + 1)
               if families.count_formula(fid, n) != count_avoiding(formula_owner, n)]
        report.add("counts", f"{fid} counting formula vs oracle", not bad,
                   f"n <= {n_max}" + (f"; mismatch at n = {bad}" if bad else ""))


def _equivalence_checks(report: ConformanceReport, n_max: int) -> None:
    for fid, tokens in families.FAMILY_MEMBERS.items():
        for token in tokens[1:]:
            same = all(count_avoiding(token, n) == count_avoiding(tokens[0], n) for n in range(n_max + 1))
            report.add("equivalence", f"{fid}: counts of {RelationPair.parse(token)} = "
                       f"{RelationPair.parse(tokens[0])}", same, f"n <= {n_max}")
    for rec in families.records():
        for q in rec.equivalent_pairs:
            if q.token < rec.pair.token:
                continue
            same = distribution(rec.pair, n_max).entries == distribution(q, n_max).entries
            report.add("equivalence", f"distribution of {rec.pair} = {q}", same, f"n <= {n_max}")
    n5 = min(5, n_max)
    a, b = distribution(">=,<", n5), distribution("<=,>", n5)
    report.add("equivalence", "(≥,<) and (≤,>): equal counts, different distributions",
               a.totals() == b.totals() and (n5 < 3 or a.row(n5) != b.row(n5)),
               f"n = {n5}: {a.row(n5)} vs {b.row(n5)}")
    n4 = min(4, n_max)
    differ = any(descent_polynomial("<,>", n) != descent_polynomial("<,=", n) for n in range(n4 + 1))
    report.add("equivalence", "(<,>) and (<,=): equal counts, different distributions",
               all(count_avoiding("<,>", n) == count_avoiding("<,=", n) == count_avoiding("=,<", n)
                   for n in range(n_max + 1)) and (differ or n4 < 4), f"n <= {n_max}")


def _identity_checks(report: ConformanceReport, order: int) -> None:
    c8 = families.closed_form_series("C8", order)
    ok = all(c8.coeff(n, k) == binom(n, 2 * k + 1) for n in range(1, order + 1) for k in range(n + 1))
    report.add("identities", "C8 coefficient of x^n y^k = binom(n, 2k+1)", ok, f"n <= {order}")
    c15 = families.closed_form_series("C15", order)
    c16 = families.closed_form_series("C16", order)
    report.add("identities", "C16(x, y) = C15(x, xy)", c15.subs_y_monomial(1) == c16, f"order {order}")


def _bijection_checks(report: ConformanceReport, n_max: int) -> None:
    for name in bijections.BIJECTIONS:
        r = bijections.verify(name, n_max)
        failed = [c for c, ok in r.checks.items() if not ok]
        report.add("bijections", f"{name} is a descent-preserving bijection", r.passed,
                   f"n <= {n_max}" + (f"; failing: {failed}" if failed else ""))


def _pattern_checks(report: ConformanceReport, n_max: int) -> None:
    m = min(n_max, 9)
    for p in ALL_PAIRS:
        pats = pair_to_pattern_set(p)
        ok = True
        for n in range(m + 1):
            if any(avoids_pair(w, p) != avoids_patterns(w, pats) for w in generate_all(n)):
                ok = False
                break
        report.add("patterns", f"{p} equivalent to avoiding {format_pattern_set(pats)}", ok, f"n <= {m}")


def _misc_checks(report: ConformanceReport, n_max: int) -> None:
    dyck = [count_dyck_avoiding_factor(n, "DUDU") for n in range(n_max + 1)]
    words = [count_avoiding("=,>=", n) for n in range(n_max + 1)]
    report.add("dyck", "Dyck paths avoiding DUDU counted like (=,≥)", dyck == words, f"n <= {n_max}")
    mz = [motzkin(n) for n in range(n_max + 1)]
    report.add("sequences", "Motzkin recurrence vs oracle for (≥,≥)",
               mz == [count_avoiding(">=,>=", n) for n in range(n_max + 1)], f"n <= {n_max}")


# errata --------------------------------------------------------------------------


def _pattern_errata(report: ConformanceReport) -> None:
    for token, printed, where in reference.PATTERN_LISTINGS:
        computed = {str(q) for q in pair_to_pattern_set(RelationPair.parse(token))}
        if computed != printed:
            missing = sorted(computed - printed)
            extra = sorted(printed - computed)
            note = []
            if missing:
                note.append(f"missing {', '.join(missing)}")
            if extra:
                note.append(f"spurious {', '.join(extra)}")
            report.errata.append(Erratum(
                f"pattern set of {RelationPair.parse(token)} ({where})",
                "{" + ", ".join(sorted(printed)) + "}",
                "{" + ", ".join(sorted(computed)) + "}",
                "; ".join(note) + "."))


def _series_errata(report: ConformanceReport, order: int) -> None:
    N = max(order, 8)
    for fid in families.PRINTED_FUNCTIONAL_EQUATIONS:
        printed = families.functional_equation_series(fid, N, printed=True)
        closed = families.closed_form_series(fid, N)
        n = next(i for i in range(N + 1) if printed.ypoly(i) != closed.ypoly(i))
        report.errata.append(Erratum(
            f"functional equation for {fid}",
            f"fixed point has x^{n} coefficient {_poly(printed.ypoly(n))}",
            f"closed form has {_poly(closed.ypoly(n))}",
            {"C7": "The last summand should multiply C - 1, not C (the tail after 01^j is nonempty).",
             "C15": "The last summand should be quadratic in C; with C^2 the fixed point matches the "
                    "closed form."}.get(fid, "")))
    for fid in families.PRINTED_DESCENT_FORMS:
        printed = families.descent_total_closed_form(fid, N, printed=True)
        correct = families.descent_total_series(fid, N)
        report.errata.append(Erratum(
            f"descent-total closed form for {fid}",
            ", ".join(map(str, printed[:10])),
            ", ".join(map(str, correct[:10])),
            "The x^6 term of the polynomial part of the numerator needs a plus sign; the printed "
            "expansion itself is right."))
    for fid, fn in families.PRINTED_COUNT_FORMULAS.items():
        token = families.FAMILY_MEMBERS[fid][0]
        vals = [fn(n) for n in range(1, 9)]
        oracle = [count_avoiding(token, n) for n in range(1, 9)]
        report.errata.append(Erratum(
            f"counting formula for {RelationPair.parse(token)}",
            ", ".join(map(str, vals)), ", ".join(map(str, oracle)),
            {"C10": "With P_0 = 0 and P_1 = 1 the counts are P_n, not P_{n+1}.",
             "C15": "The first binomial should be binom(n-k+1, k)."}.get(fid, "")))
    printed = [motzkin_printed_sum(n) for n in range(8)]
    report.errata.append(Erratum(
        "Motzkin binomial-Catalan sum", ", ".join(map(str, printed)),
        ", ".join(str(motzkin(n)) for n in range(8)),
        "The sum over binom(2n, k) C_k is not m_n; sum over binom(n, 2k) C_k is."))
    for fid in families.COUNT_FORMULAS:
        if fid.startswith("CONST"):
            continue
        try:
            v = families.count_formula(fid, 0, literal=True)
        except ZeroDivisionError:
            v = "undefined"
        if v != 1:
            report.errata.append(Erratum(
                f"counting formula for {RelationPair.parse(families.FAMILY_MEMBERS[fid][0])} at n = 0",
                str(v), "1", "Boundary value; the formula is used for n >= 1 only."))


def _poly(p) -> str:
    return _ypoly_str(p) if p else "0"


def _bijection_errata(report: ConformanceReport) -> None:
    for name, src, printed in reference.WORKED_EXAMPLES:
        try:
            got = format_word(bijections.apply(name, parse_word(src)), compact=True)
        except bijections.SourceViolation as exc:
            report.errata.append(Erratum(f"worked example for {name}", f"{src} -> {printed}", str(exc),
                                         "The input is outside the source class."))
            continue
        if got != printed:
            note = {
                "psi_geq_gt": "The printed trace evaluates psi(01) as 00, which is also psi(00); the "
                              "case for w = 0(u+1) gives psi(01) = 01.",
                "phi_leq_lt": "With a closing 0 in the last case the printed map sends 01101101111011 "
                              "and 01101101111101 to the same word; the invertible variant closes "
                              "with j-1.",
            }.get(name, "")
            report.errata.append(Erratum(f"worked example for {name}", f"{src} -> {printed}",
                                         f"{src} -> {got}", note))
    r = bijections.verify("phi_geq_geq", 6, strict=True)
    missing = [c["word"] for c in r.counterexamples if c["check"] == "totality"]
    if missing:
        report.errata.append(Erratum("case analysis of phi_geq_geq", "four cases",
                                     f"no case for {', '.join(missing[:3])}",
                                     "Words 00(va+1)v' with v' nonempty need a fifth case; "
                                     "00(va+1)v' -> 01(phi(v)+1)phi(0v') completes the bijection."))
    collision = _first_collision(bijections.phi_leq_lt_printed, RelationPair.parse("<=,<"), 8)
    if collision:
        a, b, img = collision
        report.errata.append(Erratum("case analysis of phi_leq_lt", "0^j -> 01^(j-1)",
                                     f"{a} and {b} both map to {img}",
                                     "The all-zero word goes to the staircase 012...(j-1) instead."))


def _first_collision(fn, pair, n_max):
    for n in range(n_max + 1):
        seen = {}
        for w in enumerate_avoiding(pair, n):
            img = fn(w)
            if img in seen:
                return (format_word(seen[img], True), format_word(w, True), format_word(img, True))
            seen[img] = w
    return None


def run(n_max: int = 10, order: int = 12) -> ConformanceReport:
    if n_max < 0 or order < 1:
        raise ValueError("need n_max >= 0 and order >= 1")
    report = ConformanceReport(n_max, order)
    _table_rows(report, n_max, order)
    _bivariate_checks(report, n_max, order)
    _descent_checks(report, order)
    _count_checks(report, n_max)
    _equivalence_checks(report, n_max)
    _identity_checks(report, order)
    _bijection_checks(report, n_max)
    _pattern_checks(report, n_max)
    _misc_checks(report, n_max)
    _pattern_errata(report)
    _series_errata(report, order)
    _bijection_errata(report)
    return report

