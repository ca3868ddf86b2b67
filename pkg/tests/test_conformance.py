from __future__ import annotations

import json

import pytest

from catwords import conformance, schemas


@pytest.fixture(scope="module")
def small_report():
    return conformance.run(n_max=5, order=8)


def test_small_run_passes(small_report):
    failed = [c for c in small_report.checks if not c.passed]
    assert failed == []
    assert small_report.passed


def test_suites_present(small_report):
    assert {c.suite for c in small_report.checks} >= {
        "bivariate", "descents", "counts", "equivalence", "identities", "bijections", "patterns", "dyck"}


def test_tables_cover_all_pairs(small_report):
    assert len(small_report.table1) == 4
    assert len(small_report.table2) == 32
    row = next(r for r in small_report.table2 if r.pair == "(≥,≤)")
    assert row.entry == "F_{n+1} (Fibonacci number)"
    assert row.computed[:5] == [1, 2, 3, 5, 8]


def test_errata_list_pattern_discrepancies(small_report):
    topics = [e.topic for e in small_report.errata]
    for pair in ("(≠,≥)", "(≥,<)", "(≥,≠)", "(≠,<)", "(≠,≠)"):
        assert any(t.startswith("pattern set of " + pair) for t in topics), pair


def test_errata_list_worked_examples(small_report):
    topics = {e.topic for e in small_report.errata}
    assert {"worked example for rewrite_110_100", "worked example for psi_geq_gt",
            "worked example for phi_leq_lt"} <= topics
    assert "worked example for phi_geq_geq" not in topics
    assert "worked example for rewrite_eqne" not in topics


def test_json_validates(small_report):
    obj = json.loads(small_report.to_json())
    schemas.validate(obj, "conformance")


def test_markdown_layout(small_report):
    md = small_report.to_markdown()
    assert md.startswith("# Conformance report")
    assert "| Pair | Sequence | OEIS | Family | Computed (n = 1, 2, ...) | Status |" in md
    assert "## Errata in the published values" in md


def test_tiny_run():
    report = conformance.run(n_max=3, order=6)
    assert report.passed


def test_run_is_deterministic():
    assert conformance.run(n_max=3, order=6).to_json() == conformance.run(n_max=3, order=6).to_json()
