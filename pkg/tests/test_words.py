from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from catwords import words as W
from catwords.sequences import catalan


def naive_catalan_words(n):
    """Independent oracle: filter every sequence over 0..n-1."""
    out = []
    for seq in itertools.product(range(max(n, 1)), repeat=n):
        if n and seq[0] != 0:
            continue
        if all(b <= a + 1 for a, b in zip(seq, seq[1:])):
            out.append(seq)
    return out


catalan_word = st.integers(min_value=0, max_value=14).flatmap(
    lambda n: st.lists(st.integers(min_value=0, max_value=1), min_size=n, max_size=n)
).map(lambda steps: _word_from_choices(steps))


def _word_from_choices(choices):
    # 1 means climb one level, 0 means drop to a level chosen deterministically
    w = []
    for i, c in enumerate(choices):
        if not w:
            w.append(0)
        elif c:
            w.append(w[-1] + 1)
        else:
            w.append((w[-1] * (i + 1)) % (w[-1] + 1))
    return tuple(w)


@pytest.mark.parametrize("n", range(0, 8))
def test_generate_all_matches_naive_filter(n):
    assert list(W.generate_all(n)) == naive_catalan_words(n)


@pytest.mark.parametrize("n", range(0, 12))
def test_generate_all_counts_are_catalan_numbers(n):
    assert sum(1 for _ in W.generate_all(n)) == catalan(n)


@pytest.mark.parametrize("seq,index", [
    ((1,), 0),
    ((0, 2), 1),
    ((0, 1, 3), 2),
    ((0, -1), 1),
])
def test_validate_reports_first_bad_index(seq, index):
    with pytest.raises(W.NotCatalan) as exc:
        W.validate(seq)
    assert exc.value.index == index


def test_empty_word_is_valid():
    assert W.validate(()) == ()


@pytest.mark.parametrize("w,des", [
    ((), 0),
    ((0, 1, 2, 1, 0), 2),
    ((0, 1, 0, 1, 0), 2),
    ((0, 0, 0), 0),
    ((0, 1, 2, 3, 0), 1),
])
def test_descent_count(w, des):
    assert W.descent_count(w) == des


@pytest.mark.parametrize("w,inner,rest", [
    ((0,), (), ()),
    ((0, 1, 2, 0, 1), (0, 1), (0, 1)),
    ((0, 0), (), (0,)),
    ((0, 1, 1, 2), (0, 0, 1), ()),
])
def test_first_return_decompose(w, inner, rest):
    assert W.first_return_decompose(w) == (inner, rest)
    assert W.recompose(inner, rest) == w


def test_first_return_decompose_rejects_empty():
    with pytest.raises(W.EmptyWord):
        W.first_return_decompose(())


@given(catalan_word)
def test_decomposition_round_trip(w):
    if w:
        assert W.recompose(*W.first_return_decompose(w)) == w


@given(catalan_word)
def test_dyck_round_trip(w):
    path = W.to_dyck(w)
    assert len(path) == 2 * len(w)
    assert W.is_dyck(path)
    assert W.from_dyck(path) == w


@pytest.mark.parametrize("w,path", [
    ((), ""),
    ((0,), "UD"),
    ((0, 0), "UDUD"),
    ((0, 1), "UUDD"),
    ((0, 1, 2, 1), "UUUDDUDD"),
])
def test_to_dyck_examples(w, path):
    assert W.to_dyck(w) == path


@pytest.mark.parametrize("path", ["D", "UDD", "UUD", "UXD", "DU"])
def test_from_dyck_rejects_malformed(path):
    with pytest.raises(W.MalformedPath):
        W.from_dyck(path)


@pytest.mark.parametrize("text,w", [
    ("", ()),
    ("0", (0,)),
    ("0,1,0", (0, 1, 0)),
    ("0,1,2,3,4,5,6,7,8,9,10", tuple(range(11))),
    ("0122", (0, 1, 2, 2)),
])
def test_parse_word(text, w):
    assert W.parse_word(text) == w


def test_format_word_switches_to_commas_for_big_letters():
    w = tuple(range(11))
    assert W.format_word(w, compact=True) == ",".join(map(str, w))
    assert W.format_word((0, 1, 1), compact=True) == "011"


def test_cap_guards_generation(monkeypatch):
    monkeypatch.setenv(W.CAP_ENV, "3")
    with pytest.raises(W.ResourceLimit):
        list(W.generate_all(4))
    assert sum(1 for _ in W.generate_all(4, unsafe=True)) == 14


@pytest.mark.parametrize("n,count", list(enumerate([1, 1, 2, 4, 10, 26, 72, 206, 606, 1820, 5558])))
def test_dudu_avoiding_paths(n, count):
    assert W.count_dyck_avoiding_factor(n, "DUDU") == count
