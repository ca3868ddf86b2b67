"""Descent-preserving bijections between avoidance classes, and an exhaustive checker.

Three maps rewrite factors of the word in place; the other three are
recursions on the first return decomposition ``w = 0(w'+1)w''``.  Every
recursive call is made on a strictly shorter word, which is asserted.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .oracle import enumerate_avoiding
from .patterns import RelationPair, avoids_pair
from .words import Word, descent_count, first_return_decompose, format_word, shift, validate


class SourceViolation(ValueError):
    """The input word does not avoid the source pair of the map."""


class MapIncomplete(LookupError):
    """No case of a recursive definition applies to the input."""


def _recurse(fn: Callable[[Word], Word], w: Word, parent: Word) -> Word:
    assert len(w) < len(parent), "recursive call must shorten the word"
    return fn(w)


# factor rewriting -------------------------------------------------------------


def _run_end(w: Sequence[int], i: int) -> int:
    """Index just past the maximal run of ``w[i]`` starting at ``i``."""
    r = i
    while r < len(w) and w[r] == w[i]:
        r += 1
    return r


def rewrite_110_100(w: Word) -> Word:
    """Left to right, replace each maximal factor ``k^j (k-l)`` (``j >= 2``, ``l >= 1``) by ``k (k-l)^j``."""
    out = list(w)
    i = 0
    while i < len(out):
        r = _run_end(out, i)
        j = r - i
        if j >= 2 and r < len(out) and out[r] < out[i]:
            out[i:r + 1] = [out[i]] + [out[r]] * j
            i += 1
        else:
            i = r
    return tuple(out)


def rewrite_011_001(w: Word) -> Word:
    """Left to right, replace each factor ``k^j (k+1)`` (``j >= 2``) by ``k (k+1)^j``."""
    out = list(w)
    i = 0
    while i < len(out):
        r = _run_end(out, i)
        j = r - i
        if j >= 2 and r < len(out) and out[r] == out[i] + 1:
            out[i:r + 1] = [out[i]] + [out[r]] * j
            i += 1
        else:
            i = r
    return tuple(out)


def rewrite_eqne(w: Word) -> Word:
    """Right to left, replace ``k (k+1)^j`` by ``k^j (k+1)`` and ``k (k-l)^j`` by ``k^j (k-l)``, ``j >= 2``."""
    out = list(w)
    for p in range(len(out) - 2, -1, -1):
        r = _run_end(out, p + 1)
        j = r - (p + 1)
        b = out[p + 1]
        if j >= 2 and (b == out[p] + 1 or b < out[p]):
            out[p:r] = [out[p]] * j + [b]
    return tuple(out)


# recursive maps ---------------------------------------------------------------


def _ends_with_ascent(w: Word) -> bool:
    return len(w) >= 2 and w[-2] < w[-1]


def phi_geq_geq(w: Word, strict: bool = False) -> Word:
    """Map from words avoiding (>=,>=) to words avoiding (<,<).

    The published four cases leave words such as ``0010`` (first return
    right after the initial letter, followed by a nonempty tail) without an
    image.  They are handled by ``00(va+1)v' -> 01(phi(v)+1) phi(0 v')``,
    the same rule as the fourth case applied to ``0v'``; ``strict=True``
    raises :class:`MapIncomplete` instead.
    """
    if not w:
        return ()
    rec = lambda u: _recurse(lambda t: phi_geq_geq(t, strict), u, w)  # noqa: E731
    inner, rest = first_return_decompose(w)
    if not rest:
        return (0,) + rec(inner)
    if not inner:
        inner2, rest2 = first_return_decompose(rest)
        if not rest2:
            return (0, 1) + shift(rec(inner2), 1)
        if strict:
            raise MapIncomplete(f"no case applies to {format_word(w, compact=True)}")
        v = inner2[:-1]
        return (0, 1) + shift(rec(v), 1) + rec((0,) + rest2)
    if len(rest) >= 2 and rest[1] == 0:
        raise MapIncomplete(f"tail of {format_word(w, compact=True)} starts with 00")
    if len(inner) >= 2 and not _ends_with_ascent(inner):
        raise MapIncomplete(f"{format_word(w, compact=True)} has a factor outside the source class")
    v = inner[:-1]
    return (0, 1) + shift(rec(v), 1) + rec(rest)


def psi_geq_gt(w: Word, strict: bool = False) -> Word:
    """Map from words avoiding (>=,>) to words avoiding (>,<).

    Cases, tried in this order on ``w = 0(w'+1)w''``: empty word; ``w'``
    empty (``w = 0u``); ``w''`` empty (``w = 0(u+1)``); ``w' = ua(a+1)``
    ending with an ascent; ``w' = 0`` (``w = 01v``).
    """
    if not w:
        return ()
    rec = lambda u: _recurse(lambda t: psi_geq_gt(t, strict), u, w)  # noqa: E731
    inner, rest = first_return_decompose(w)
    if not inner:
        return (0,) + rec(rest)
    if not rest:
        return (0,) + shift(rec(inner), 1)
    if _ends_with_ascent(inner):
        ua = inner[:-1]
        return (0,) + shift(rec(ua), 1) + (0,) + rec(rest)
    if inner == (0,):
        return (0,) + shift(rec(rest), 1) + (0,)
    raise MapIncomplete(f"no case applies to {format_word(w, compact=True)}")


def _phi_leq_lt(w: Word, printed: bool) -> Word:
    if not w:
        return ()
    n = len(w)
    if all(a == 0 for a in w):
        return (0,) + (1,) * (n - 1) if printed else tuple(range(n))
    j = 0
    while 1 + j < n and w[1 + j] == 1:
        j += 1
    if j == 0 or (1 + j < n and w[1 + j] != 0):
        raise MapIncomplete(f"no case applies to {format_word(w, compact=True)}")
    if 1 + j == n:
        return tuple(range(j)) + (j - 1,)
    image = _recurse(lambda t: _phi_leq_lt(t, printed), w[1 + j:], w)
    return tuple(range(j)) + shift(image, j) + ((0,) if printed else (j - 1,))


def phi_leq_lt(w: Word, strict: bool = False) -> Word:
    """Map from words avoiding (<=,<) to words avoiding (>=,<=).

    Cases: ``0^j -> 012...(j-1)``; ``01^j -> 012...(j-1)(j-1)``;
    ``01^j w' -> 012...(j-1) (phi(w')+j) (j-1)`` for nonempty ``w'``.
    Closing the last case with ``j-1`` rather than ``0`` keeps ``j``
    recoverable from the image (the image ends with a strict descent onto
    ``j-1``), which makes the map invertible.
    """
    return _phi_leq_lt(w, printed=False)


def phi_leq_lt_printed(w: Word) -> Word:
    """The recursion exactly as published: ``0^j -> 01^(j-1)`` and a closing ``0`` in the last case.

    Not injective: ``011`` and ``000`` share an image, and so do
    ``01101101111011`` and ``01101101111101``.
    """
    return _phi_leq_lt(w, printed=True)


def _strictless(fn):
    return lambda w, strict=False: fn(w)


@dataclass(frozen=True)
class BijectionSpec:
    name: str
    source_pair: RelationPair
    target_pair: RelationPair
    preserves_descents: bool
    direction_note: str
    func: Callable = field(compare=False, repr=False)


BIJECTIONS: dict[str, BijectionSpec] = {
    b.name: b
    for b in (
        BijectionSpec("rewrite_110_100", RelationPair.parse(">=,="), RelationPair.parse("=,>="), True,
                      "left to right, k^j(k-l) -> k(k-l)^j", _strictless(rewrite_110_100)),
        BijectionSpec("rewrite_011_001", RelationPair.parse("<=,="), RelationPair.parse("=,<="), True,
                      "left to right, k^j(k+1) -> k(k+1)^j", _strictless(rewrite_011_001)),
        BijectionSpec("rewrite_eqne", RelationPair.parse("=,!="), RelationPair.parse("!=,="), True,
                      "right to left, k(k+1)^j -> k^j(k+1) and k(k-l)^j -> k^j(k-l)",
                      _strictless(rewrite_eqne)),
        BijectionSpec("phi_geq_geq", RelationPair.parse(">=,>="), RelationPair.parse("<,<"), True,
                      "recursion on the first return decomposition", phi_geq_geq),
        BijectionSpec("psi_geq_gt", RelationPair.parse(">=,>"), RelationPair.parse(">,<"), True,
                      "recursion on the first return decomposition", psi_geq_gt),
        BijectionSpec("phi_leq_lt", RelationPair.parse("<=,<"), RelationPair.parse(">=,<="), True,
                      "recursion on the leading block 01^j", phi_leq_lt),
    )
}


def get(name: str) -> BijectionSpec:
    try:
        return BIJECTIONS[name]
    except KeyError:
        raise KeyError(f"unknown bijection {name!r}; choose from {sorted(BIJECTIONS)}") from None


def apply(b: BijectionSpec | str, w: Sequence[int], strict: bool = False) -> Word:
    if isinstance(b, str):
        b = get(b)
    w = validate(w)
    if not avoids_pair(w, b.source_pair):
        raise SourceViolation(f"{format_word(w, compact=True)} contains {b.source_pair}")
    image = b.func(w, strict)
    assert len(image) == len(w), "maps preserve length"
    return image


CHECKS = ("totality", "image", "injective", "surjective", "descents")


@dataclass
class LengthResult:
    n: int
    source_count: int
    target_count: int
    checks: dict[str, bool]
    counterexamples: list[dict]


@dataclass
class VerificationReport:
    name: str
    n_max: int
    rows: list[LengthResult]

    @property
    def checks(self) -> dict[str, bool]:
        return {c: all(r.checks[c] for r in self.rows) for c in CHECKS}

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    @property
    def counterexamples(self) -> list[dict]:
        return [dict(c, n=r.n) for r in self.rows for c in r.counterexamples]

    def to_json_obj(self) -> dict:
        return {
            "name": self.name,
            "n": self.n_max,
            "checks": self.checks,
            "counterexamples": self.counterexamples,
            "by_length": [
                {"n": r.n, "source_count": r.source_count, "target_count": r.target_count,
                 "checks": r.checks}
                for r in self.rows
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2)

    def summary(self) -> str:
        lines = [f"{self.name}: n <= {self.n_max}"]
        for r in self.rows:
            status = " ".join(f"{c}={'ok' if r.checks[c] else 'FAIL'}" for c in CHECKS)
            lines.append(f"  n={r.n} |source|={r.source_count} |target|={r.target_count} {status}")
        lines.append("all checks pass" if self.passed else "some checks FAIL")
        return "\n".join(lines)


def verify(b: BijectionSpec | str, n_max: int, strict: bool = False, max_examples: int = 5,
           unsafe: bool = False) -> VerificationReport:
    if isinstance(b, str):
        b = get(b)
    rows = []
    for n in range(n_max + 1):
        sources = list(enumerate_avoiding(b.source_pair, n, unsafe))
        target_count = sum(1 for _ in enumerate_avoiding(b.target_pair, n, unsafe))
        bad: list[dict] = []
        images: dict[Word, Word] = {}
        ok = dict.fromkeys(CHECKS, True)

        def note(check, w, image=None):
            ok[check] = False
            if sum(1 for e in bad if e["check"] == check) < max_examples:
                bad.append({"check": check, "word": format_word(w, compact=True),
                            "image": None if image is None else format_word(image, compact=True)})

        for w in sources:
            try:
                image = b.func(w, strict)
            except (MapIncomplete, AssertionError, IndexError, ValueError):
                note("totality", w)
                continue
            if len(image) != n or not _is_target(image, b.target_pair):
                note("image", w, image)
            if image in images:
                note("injective", w, image)
            images[image] = w
            if b.preserves_descents and descent_count(image) != descent_count(w):
                note("descents", w, image)
        if len(images) != target_count:
            ok["surjective"] = False
            bad.append({"check": "surjective", "word": "",
                        "image": f"{len(images)} distinct images for {target_count} target words"})
        rows.append(LengthResult(n, len(sources), target_count, ok, bad))
    return VerificationReport(b.name, n_max, rows)


def _is_target(w: Word, pair: RelationPair) -> bool:
    try:
        validate(w)
    except ValueError:
        return False
    return avoids_pair(w, pair)


def descent_multisets_agree(b: BijectionSpec | str, n: int) -> bool:
    """Whether source and target classes of length ``n`` have the same descent multiset."""
    if isinstance(b, str):
        b = get(b)
    src = Counter(descent_count(w) for w in enumerate_avoiding(b.source_pair, n))
    tgt = Counter(descent_count(w) for w in enumerate_avoiding(b.target_pair, n))
    return src == tgt
