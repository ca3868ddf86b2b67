from __future__ import annotations

from fractions import Fraction

import pytest

from catwords import families as F, oracle, reference
from catwords.patterns import ALL_PAIRS
from catwords.series import BivariateSeries
from catwords.sequences import binom

N_ORACLE = 9
BIVARIATE = F.bivariate_family_ids()
WITH_FE = [f for f in BIVARIATE if f in F.FUNCTIONAL_EQUATIONS]


def oracle_series(pair, n_max=N_ORACLE):
    table = oracle.distribution(pair, n_max)
    rows = [table.row(n) for n in range(n_max + 1)]
    return BivariateSeries([[row.get(k, 0) for k in range(max(row) + 1)] for row in rows], n_max)


def test_registry_covers_every_pair_once():
    assert {r.pair for r in F.records()} == set(ALL_PAIRS)
    assert len(F.records()) == 36
    assert len(BIVARIATE) == 17
    assert sum(1 for r in F.records() if r.bivariate) == 25


@pytest.mark.parametrize("pair,fid", [
    ("=,>=", "C1"), (">=,=", "C1"), ("<,>", "C3"), (">=,>=", "C5"), (">,<", "C6"), ("<,<=", "C7"),
    (">=,<", "C8"), ("<=,>", "C8b"), (">,!=", "C11"), ("!=,!=", "C16"), ("<=,>=", "CONST1"), ("<,<", "UNIVAR6"),
])
def test_classify(pair, fid):
    assert F.classify(pair).family_id == fid


def test_equivalent_pairs_share_distributions():
    for r in F.records():
        for q in r.equivalent_pairs:
            assert oracle.distribution(r.pair, 8).entries == oracle.distribution(q, 8).entries


def test_methods():
    assert F.classify(">=,>=").methods == {"closed_form", "count_formula"}
    assert F.classify("<,!=").methods == {"closed_form", "functional_equation"}
    assert F.classify("<=,<=").methods == {"constant_formula"}
    assert F.classify("=,=").methods == {"count_formula"}


@pytest.mark.parametrize("fid", BIVARIATE)
def test_closed_form_matches_oracle(fid):
    pair = F.FAMILY_MEMBERS[fid][0]
    assert F.closed_form_series(fid, N_ORACLE) == oracle_series(pair)


@pytest.mark.parametrize("fid", WITH_FE)
def test_every_strategy_matches_closed_form(fid):
    closed = F.closed_form_series(fid, 16)
    for strategy in F.strategies(fid):
        assert F.functional_equation_series(fid, 16, strategy) == closed, strategy


def test_c5_has_no_functional_equation():
    with pytest.raises(F.NotAvailable):
        F.functional_equation_series("C5", 8)
    with pytest.raises(F.NotAvailable):
        F.strategies("C5")


def test_fixed_point_cap_raises():
    with pytest.raises(F.NonContractive):
        F.functional_equation_series("C1", 12, strategy="coiterate", max_iter=3)


def test_fixed_point_rejects_noncontractive_map():
    seeds = {"C": BivariateSeries.const(1, 4)}
    with pytest.raises(F.NonContractive):
        F.fixed_point(lambda s: {"C": s["C"] + 1}, seeds)


@pytest.mark.parametrize("fid", ["C7", "C15"])
def test_printed_equations_differ(fid):
    closed = F.closed_form_series(fid, 8)
    assert F.functional_equation_series(fid, 8, printed=True) != closed
    assert F.functional_equation_series(fid, 8) == closed


@pytest.mark.parametrize("fid", sorted(reference.BIVARIATE_EXPANSIONS))
def test_printed_bivariate_expansions(fid):
    s = F.closed_form_series(fid, 6)
    for n, poly in reference.BIVARIATE_EXPANSIONS[fid].items():
        assert s.ypoly(n) == poly


@pytest.mark.parametrize("fid", BIVARIATE)
def test_descent_total_closed_form_matches_derivative(fid):
    assert F.descent_total_closed_form(fid, 14) == F.descent_total_series(fid, 14)


@pytest.mark.parametrize("fid", BIVARIATE)
def test_descent_totals_match_oracle(fid):
    pair = F.FAMILY_MEMBERS[fid][0]
    assert F.descent_total_series(fid, N_ORACLE) == oracle.distribution(pair, N_ORACLE).descent_totals()


def test_printed_c13_descent_form_is_off():
    printed = F.descent_total_closed_form("C13", 9, printed=True)
    assert printed == [0, 0, 0, 0, 0, 4, 10, 32, 89, 244]
    assert F.descent_total_closed_form("C13", 9) == [0, 0, 0, 0, 1, 4, 12, 35, 97, 262]


@pytest.mark.parametrize("fid", sorted(F.UNIVARIATE_FORMS))
def test_univariate_forms_match_oracle(fid):
    pair = F.FAMILY_MEMBERS[fid][0]
    assert F.univariate_closed_form(fid, N_ORACLE) == [oracle.count_avoiding(pair, n) for n in range(N_ORACLE + 1)]


@pytest.mark.parametrize("fid", sorted(F.COUNT_FORMULAS))
def test_count_formulas_match_oracle(fid):
    pair = F.FAMILY_MEMBERS[fid][0]
    for n in range(11):
        value = F.count_formula(fid, n)
        assert isinstance(value, int)
        assert value == oracle.count_avoiding(pair, n)


@pytest.mark.parametrize("fid", ["C11", "C13", "C14"])
def test_families_without_count_formula(fid):
    with pytest.raises(F.NotAvailable):
        F.count_formula(fid, 5)


def test_printed_count_formulas_are_shifted():
    assert [F.count_formula("C10", n, printed=True) for n in range(1, 6)] == [2, 5, 12, 29, 70]
    assert [F.count_formula("C10", n) for n in range(1, 6)] == [1, 2, 5, 12, 29]
    assert [F.count_formula("C15", n, printed=True) for n in range(1, 5)] == [2, 4, 7, 13]


@pytest.mark.parametrize("fid,value", [("C8", Fraction(1, 2)), ("C12", 0), ("C9", 1)])
def test_literal_boundary_values(fid, value):
    assert F.count_formula(fid, 0, literal=True) == value


@pytest.mark.parametrize("fid", ["C1", "UNIVAR7"])
def test_literal_boundary_undefined(fid):
    with pytest.raises(ZeroDivisionError):
        F.count_formula(fid, 0, literal=True)


def test_binomial_identity_for_c8():
    s = F.closed_form_series("C8", 16)
    for n in range(1, 17):
        for k in range(n):
            assert s.coeff(n, k) == binom(n, 2 * k + 1)


def test_c16_is_c15_with_y_replaced():
    assert F.closed_form_series("C16", 20) == F.closed_form_series("C15", 20).subs_y_monomial(1)


def test_order_guard():
    with pytest.raises(ValueError):
        F.closed_form_series("C1", 0)


def test_registry_json_lists_all_records():
    import json
    objs = json.loads(F.registry_json())
    assert len(objs) == 36
    assert objs[0]["family_id"] == "CONST1"
