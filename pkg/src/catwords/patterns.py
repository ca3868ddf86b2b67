"""Ordered pairs of relations and consecutive patterns on Catalan words."""

from __future__ import annotations

import enum
import itertools
import operator
from dataclasses import dataclass
from typing import Callable, Sequence


class Relation(enum.Enum):
    LT = "<"
    GT = ">"
    LE = "<="
    GE = ">="
    EQ = "="
    NE = "!="

    @property
    def predicate(self) -> Callable[[int, int], bool]:
        return _PREDICATES[self]

    def holds(self, a: int, b: int) -> bool:
        return _PREDICATES[self](a, b)

    @property
    def symbol(self) -> str:
        return _UNICODE[self]

    @classmethod
    def parse(cls, token: str) -> "Relation":
        token = token.strip()
        rel = _TOKENS.get(token)
        if rel is None:
            raise ValueError(f"unknown relation token {token!r}")
        return rel


_PREDICATES = {
    Relation.LT: operator.lt,
    Relation.GT: operator.gt,
    Relation.LE: operator.le,
    Relation.GE: operator.ge,
    Relation.EQ: operator.eq,
    Relation.NE: operator.ne,
}
_UNICODE = {
    Relation.LT: "<",
    Relation.GT: ">",
    Relation.LE: "≤",
    Relation.GE: "≥",
    Relation.EQ: "=",
    Relation.NE: "≠",
}
_TOKENS = {r.value: r for r in Relation}
_TOKENS.update({"≤": Relation.LE, "≥": Relation.GE, "≠": Relation.NE, "==": Relation.EQ, "<>": Relation.NE})

# canonical listing order used for tables and registry export
RELATION_ORDER = (Relation.EQ, Relation.LT, Relation.GT, Relation.LE, Relation.GE, Relation.NE)


@dataclass(frozen=True)
class RelationPair:
    first: Relation
    second: Relation

    @classmethod
    def parse(cls, text: str) -> "RelationPair":
        parts = text.split(",")
        if len(parts) != 2:
            raise ValueError(f"a relation pair is written 'X,Y', got {text!r}")
        return cls(Relation.parse(parts[0]), Relation.parse(parts[1]))

    def matches(self, a: int, b: int, c: int) -> bool:
        return self.first.holds(a, b) and self.second.holds(b, c)

    @property
    def token(self) -> str:
        return f"{self.first.value},{self.second.value}"

    def __str__(self) -> str:
        return f"({self.first.symbol},{self.second.symbol})"


ALL_PAIRS: tuple[RelationPair, ...] = tuple(
    RelationPair(x, y) for x, y in itertools.product(RELATION_ORDER, repeat=2)
)


def as_pair(p: RelationPair | str) -> RelationPair:
    return p if isinstance(p, RelationPair) else RelationPair.parse(p)


@dataclass(frozen=True)
class ConsecutivePattern:
    letters: tuple[int, ...]

    def __post_init__(self):
        if len(self.letters) < 2:
            raise ValueError("a consecutive pattern has length at least 2")
        present = set(self.letters)
        if min(present) != 0 or present != set(range(max(present) + 1)):
            raise ValueError(f"pattern {self.letters} skips a value")

    @classmethod
    def parse(cls, text: str) -> "ConsecutivePattern":
        return cls(tuple(int(ch) for ch in text.strip()))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "".join(str(a) for a in self.letters)


def order_type(seq: Sequence[int]) -> tuple[int, ...]:
    """Replace each letter by the rank of its value among the distinct values."""
    ranks = {v: i for i, v in enumerate(sorted(set(seq)))}
    return tuple(ranks[v] for v in seq)


def pair_occurrences(w: Sequence[int], p: RelationPair) -> list[int]:
    """1-based start indices of the windows ``w_i w_{i+1} w_{i+2}`` realizing ``p``."""
    return [i + 1 for i in range(len(w) - 2) if p.matches(w[i], w[i + 1], w[i + 2])]


def avoids_pair(w: Sequence[int], p: RelationPair) -> bool:
    return not any(p.matches(w[i], w[i + 1], w[i + 2]) for i in range(len(w) - 2))


def pattern_occurrences(w: Sequence[int], q: ConsecutivePattern) -> list[int]:
    r = len(q)
    return [i + 1 for i in range(len(w) - r + 1) if order_type(w[i:i + r]) == q.letters]


def avoids_patterns(w: Sequence[int], patterns) -> bool:
    wanted = {q.letters for q in patterns}
    if not wanted:
        return True
    r = len(next(iter(patterns)))
    return all(order_type(w[i:i + r]) not in wanted for i in range(len(w) - r + 1))


def catalan_triples(max_value: int = 3):
    """Triples ``(a, b, c)`` that occur as a window of some Catalan word."""
    for a in range(max_value + 1):
        for b in range(a + 2):
            for c in range(b + 2):
                yield a, b, c


def pair_to_pattern_set(p: RelationPair) -> frozenset[ConsecutivePattern]:
    # any window (a,b,c) with b <= a+1, c <= b+1 is reached after the prefix 0 1 ... a
    return frozenset(
        ConsecutivePattern(order_type(t)) for t in catalan_triples() if p.matches(*t)
    )


def format_pattern_set(patterns) -> str:
    return "{" + ", ".join(sorted(str(q) for q in patterns)) + "}"
