"""Brute-force ground truth: pruned depth-first generation of avoiding words.

Every constraint here is a window of width three, so a partial word only has
to be checked on its last three letters when it is extended.  Counting walks
the same tree but memoizes on ``(second-to-last, last, letters left)``, which
fully determines the subtree below a node.
"""

from __future__ import annotations

import csv
import io
import json
from functools import lru_cache
from typing import Iterator

from .patterns import RelationPair, as_pair
from .words import Word, check_cap


def enumerate_avoiding(p: RelationPair | str, n: int, unsafe: bool = False) -> Iterator[Word]:
    p = as_pair(p)
    check_cap(n, unsafe)
    if n == 0:
        yield ()
        return
    word = [0] * n

    def extend(i: int) -> Iterator[Word]:
        if i == n:
            yield tuple(word)
            return
        for a in range(word[i - 1] + 2):
            if i >= 2 and p.matches(word[i - 2], word[i - 1], a):
                continue
            word[i] = a
            yield from extend(i + 1)

    yield from extend(1)


@lru_cache(maxsize=None)
def _subtree(p: RelationPair, prev: int, last: int, left: int) -> tuple[int, ...]:
    """Descent polynomial (coefficient list in y) of all completions with ``left`` letters to add."""
    if left == 0:
        return (1,)
    acc: list[int] = []
    for a in range(last + 2):
        if prev >= 0 and p.matches(prev, last, a):
            continue
        sub = _subtree(p, last, a, left - 1)
        off = 1 if last > a else 0
        if len(acc) < len(sub) + off:
            acc.extend([0] * (len(sub) + off - len(acc)))
        for k, c in enumerate(sub):
            acc[k + off] += c
    return tuple(acc)


def descent_polynomial(p: RelationPair | str, n: int, unsafe: bool = False) -> list[int]:
    """``[c_p(n, 0), c_p(n, 1), ...]`` with trailing zeros stripped."""
    p = as_pair(p)
    check_cap(n, unsafe)
    if n == 0:
        return [1]
    poly = list(_subtree(p, -1, 0, n - 1))
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return poly


def count_avoiding(p: RelationPair | str, n: int, unsafe: bool = False) -> int:
    return sum(descent_polynomial(p, n, unsafe))


class DistributionTable:
    """Exact counts ``c_p(n, k)`` for ``n <= n_max``."""

    def __init__(self, pair: RelationPair, entries: dict[tuple[int, int], int]):
        self.pair = pair
        self.entries = dict(entries)

    @property
    def n_max(self) -> int:
        return max(n for n, _ in self.entries)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def row(self, n: int) -> dict[int, int]:
        return {k: c for (m, k), c in sorted(self.entries.items()) if m == n}

    def total(self, n: int) -> int:
        return sum(self.row(n).values())

    def totals(self) -> list[int]:
        return [self.total(n) for n in range(self.n_max + 1)]

    def descent_totals(self) -> list[int]:
        return [sum(k * c for k, c in self.row(n).items()) for n in range(self.n_max + 1)]

    def __eq__(self, other) -> bool:
        return isinstance(other, DistributionTable) and self.entries == other.entries

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "k", "count"])
        for (n, k), c in sorted(self.entries.items()):
            writer.writerow([n, k, c])
        return buf.getvalue()

    def to_json_rows(self) -> list[dict]:
        return [
            {"pair": self.pair.token, "n": n, "counts": {str(k): c for k, c in self.row(n).items()}}
            for n in range(self.n_max + 1)
        ]

    def to_json(self) -> str:
        return json.dumps(self.to_json_rows(), indent=2)


def distribution(p: RelationPair | str, n_max: int, unsafe: bool = False) -> DistributionTable:
    p = as_pair(p)
    entries = {}
    for n in range(n_max + 1):
        for k, c in enumerate(descent_polynomial(p, n, unsafe)):
            if c:
                entries[(n, k)] = c
    return DistributionTable(p, entries)
