from __future__ import annotations

import pytest

from catwords import oracle
from catwords.patterns import ALL_PAIRS, avoids_pair
from catwords.words import ResourceLimit, descent_count, generate_all


def filtered(pair, n):
    """Independent oracle: filter all Catalan words."""
    return [w for w in generate_all(n) if avoids_pair(w, pair)]


@pytest.mark.parametrize("pair", ALL_PAIRS, ids=lambda p: p.token)
def test_pruned_enumeration_equals_filter(pair):
    for n in range(9):
        assert list(oracle.enumerate_avoiding(pair, n)) == filtered(pair, n)


@pytest.mark.parametrize("pair", ALL_PAIRS, ids=lambda p: p.token)
def test_memoized_descent_polynomial_equals_filter(pair):
    for n in range(9):
        poly = [0] * n if n else [0]
        for w in filtered(pair, n):
            poly[descent_count(w)] += 1
        while len(poly) > 1 and poly[-1] == 0:
            poly.pop()
        assert oracle.descent_polynomial(pair, n) == poly


@pytest.mark.parametrize("pair,n,count", [
    ("!=,>", 4, 9),
    ("<=,>=", 5, 2),
    ("=,>=", 0, 1),
    (">,!=", 10, 5073),
    ("!=,<", 10, 978),
    ("<=,<=", 7, 1),
])
def test_counts(pair, n, count):
    assert oracle.count_avoiding(pair, n) == count


def test_empty_word_avoids_everything():
    for pair in ALL_PAIRS:
        assert list(oracle.enumerate_avoiding(pair, 0)) == [()]


def test_distribution_table():
    t = oracle.distribution(">=,<", 5)
    assert t.row(5) == {0: 5, 1: 10, 2: 1}
    assert t.totals() == [1, 1, 2, 4, 8, 16]
    assert t[(5, 1)] == 10
    assert t.to_csv().splitlines()[0] == "n,k,count"
    assert t.to_json_rows()[5] == {"pair": ">=,<", "n": 5, "counts": {"0": 5, "1": 10, "2": 1}}


def test_descent_totals():
    t = oracle.distribution(">=,!=", 9)
    assert t.descent_totals()[3:] == [1, 3, 6, 10, 15, 21, 28]


def test_cap(monkeypatch):
    monkeypatch.setenv("CATALAN_AVOID_CAP", "5")
    with pytest.raises(ResourceLimit):
        oracle.count_avoiding("=,=", 6)
    assert oracle.count_avoiding("=,=", 6, unsafe=True) > 0
