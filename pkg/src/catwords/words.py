"""Catalan words, descents, exhaustive generation and the Dyck path correspondence.

A Catalan word is a sequence ``w`` of nonnegative integers with ``w[0] == 0``
(when nonempty) and ``w[i] <= w[i-1] + 1``.  Words are plain tuples of ints
throughout the package; :func:`validate` is the single gatekeeper.
"""

from __future__ import annotations

import os
from typing import Iterable, Iterator, Sequence

Word = tuple[int, ...]

DEFAULT_CAP = 20
CAP_ENV = "CATALAN_AVOID_CAP"


class NotCatalan(ValueError):
    """Raised when a sequence violates the growth rule; ``index`` is the first bad position."""

    def __init__(self, index: int, seq: Sequence[int]):
        self.index = index
        self.seq = tuple(seq)
        super().__init__(f"not a Catalan word: violation at index {index} in {format_word(self.seq)!r}")


class EmptyWord(ValueError):
    pass


class MalformedPath(ValueError):
    pass


class ResourceLimit(RuntimeError):
    pass


def enumeration_cap() -> int:
    value = os.environ.get(CAP_ENV)
    if value is None or value == "":
        return DEFAULT_CAP
    return int(value)


def check_cap(n: int, unsafe: bool = False) -> None:
    if n < 0:
        raise ValueError("length must be nonnegative")
    cap = enumeration_cap()
    if not unsafe and n > cap:
        raise ResourceLimit(f"length {n} exceeds enumeration cap {cap} (raise {CAP_ENV} or use the unsafe override)")


def validate(seq: Iterable[int]) -> Word:
    w = tuple(int(a) for a in seq)
    prev = -1
    for i, a in enumerate(w):
        if a < 0 or (i == 0 and a != 0) or a > prev + 1:
            raise NotCatalan(i, w)
        prev = a
    return w


def is_catalan(seq: Sequence[int]) -> bool:
    try:
        validate(seq)
    except NotCatalan:
        return False
    return True


def descent_count(w: Sequence[int]) -> int:
    return sum(1 for a, b in zip(w, w[1:]) if a > b)


def generate_all(n: int, unsafe: bool = False) -> Iterator[Word]:
    """Yield every Catalan word of length ``n`` in lexicographic order."""
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
            word[i] = a
            yield from extend(i + 1)

    yield from extend(1)


def shift(w: Sequence[int], k: int = 1) -> Word:
    return tuple(a + k for a in w)


def first_return_decompose(w: Sequence[int]) -> tuple[Word, Word]:
    """Split ``w = 0 (w'+1) w''`` at the first return to level 0.

    Returns ``(w', w'')``; both are Catalan words.
    """
    if not w:
        raise EmptyWord("first return decomposition needs a nonempty word")
    w = tuple(w)
    j = 1
    while j < len(w) and w[j] != 0:
        j += 1
    return shift(w[1:j], -1), w[j:]


def recompose(inner: Sequence[int], rest: Sequence[int]) -> Word:
    return (0,) + shift(inner) + tuple(rest)


def to_dyck(w: Sequence[int]) -> str:
    """Dyck path whose up steps start at the heights listed in ``w``."""
    steps = []
    for i, a in enumerate(w):
        steps.append("U")
        nxt = w[i + 1] if i + 1 < len(w) else 0
        steps.append("D" * (a + 1 - nxt))
    return "".join(steps)


def from_dyck(path: str) -> Word:
    height = 0
    letters = []
    downs = ups = 0
    for step in path:
        if step == "U":
            letters.append(height)
            height += 1
            ups += 1
        elif step == "D":
            height -= 1
            downs += 1
            if height < 0:
                raise MalformedPath(f"path goes below the axis at step {ups + downs}")
        else:
            raise MalformedPath(f"unknown step {step!r}")
    if height != 0:
        raise MalformedPath("path does not return to the axis")
    return tuple(letters)


def is_dyck(path: str) -> bool:
    try:
        from_dyck(path)
    except MalformedPath:
        return False
    return True


def format_word(w: Sequence[int], compact: bool = False) -> str:
    if compact and all(a < 10 for a in w):
        return "".join(str(a) for a in w)
    return ",".join(str(a) for a in w)


def parse_word(text: str) -> Word:
    """Parse ``"0,1,2,2"`` or the compact ``"0122"`` (levels below 10) and validate."""
    text = text.strip()
    if text in ("", "ε", "eps"):
        return ()
    if "," in text:
        seq = [int(tok) for tok in text.split(",")]
    elif text.isdigit():
        seq = [int(ch) for ch in text]
    else:
        raise ValueError(f"cannot parse word {text!r}")
    return validate(seq)


def count_dyck_avoiding_factor(n: int, factor: str, unsafe: bool = False) -> int:
    """Dyck paths of semilength ``n`` not containing ``factor`` as a run of consecutive steps."""
    return sum(1 for w in generate_all(n, unsafe) if factor not in to_dyck(w))
