from __future__ import annotations

import operator

import pytest

from catwords.patterns import (
    ALL_PAIRS,
    ConsecutivePattern,
    Relation,
    RelationPair,
    avoids_pair,
    avoids_patterns,
    order_type,
    pair_occurrences,
    pair_to_pattern_set,
    pattern_occurrences,
)
from catwords.words import generate_all

OPS = {"<": operator.lt, ">": operator.gt, "<=": operator.le, ">=": operator.ge, "=": operator.eq,
       "!=": operator.ne}


def test_there_are_36_pairs():
    assert len(ALL_PAIRS) == 36
    assert len({p.token for p in ALL_PAIRS}) == 36


@pytest.mark.parametrize("token", ["<", ">", "<=", ">=", "=", "!="])
def test_relation_predicates(token):
    rel = Relation.parse(token)
    for a in range(4):
        for b in range(4):
            assert rel.holds(a, b) == OPS[token](a, b)


@pytest.mark.parametrize("alias,token", [("≤", "<="), ("≥", ">="), ("≠", "!=")])
def test_unicode_aliases(alias, token):
    assert Relation.parse(alias) is Relation.parse(token)
    assert RelationPair.parse(f"{alias},<").token == f"{token},<"


@pytest.mark.parametrize("bad", ["", "<", "<,<,<", "x,<", "=>,<"])
def test_bad_pair_tokens(bad):
    with pytest.raises(ValueError):
        RelationPair.parse(bad)


@pytest.mark.parametrize("w,pair,occ", [
    ((0, 1, 2, 1, 0), "<,>", [2]),
    ((0, 1, 2, 1, 0), ">,>", [3]),
    ((0, 0, 0, 0), "=,=", [1, 2]),
    ((0, 1, 0, 1), "!=,!=", [1, 2]),
])
def test_pair_occurrences(w, pair, occ):
    assert pair_occurrences(w, RelationPair.parse(pair)) == occ
    assert avoids_pair(w, RelationPair.parse(pair)) == (not occ)


def test_order_type():
    assert order_type((3, 7, 3)) == (0, 1, 0)
    assert order_type((5, 2, 9)) == (1, 0, 2)


def test_pattern_occurrences():
    q = ConsecutivePattern.parse("010")
    assert pattern_occurrences((0, 1, 0, 1, 2, 1), q) == [1, 4]


@pytest.mark.parametrize("text", ["0", "02", "113"])
def test_pattern_must_be_reduced(text):
    with pytest.raises(ValueError):
        ConsecutivePattern.parse(text)


@pytest.mark.parametrize("pair,expected", [
    ("<,<", {"012"}),
    ("=,>=", {"000", "110"}),
    (">=,<", {"001", "101", "201"}),
    ("!=,>", {"010", "120", "210"}),
    ("!=,!=", {"010", "012", "101", "120", "201", "210"}),
])
def test_pattern_set_examples(pair, expected):
    assert {str(q) for q in pair_to_pattern_set(RelationPair.parse(pair))} == expected


@pytest.mark.parametrize("pair", ALL_PAIRS, ids=lambda p: p.token)
def test_pattern_set_equivalence_through_length_8(pair):
    patterns = pair_to_pattern_set(pair)
    for n in range(9):
        for w in generate_all(n):
            assert avoids_pair(w, pair) == avoids_patterns(w, patterns)
