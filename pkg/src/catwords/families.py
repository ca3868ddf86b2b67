"""Registry of the 36 relation pairs and the generating-function machinery per family.

Each pair belongs to exactly one family.  The sixteen ``C`` families carry a
bivariate closed form (x marks length, y marks descents) and, except for C5,
a functional equation solved by x-adic iteration.  The ``UNIVAR`` families
only have a univariate count and the ``CONST`` families are eventually
constant or periodic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import reference
from .patterns import ALL_PAIRS, RelationPair, as_pair
from .sequences import binom, fibonacci, motzkin, pell
from .series import BivariateSeries, sqrt

CLOSED_FORM = "closed_form"
FUNCTIONAL_EQUATION = "functional_equation"
COUNT_FORMULA = "count_formula"
CONSTANT_FORMULA = "constant_formula"

# extra working precision for closed forms; monomial divisions eat up to x^4
_GUARD = 6


class NotAvailable(LookupError):
    """The requested object is not provided for this family."""


class NonContractive(RuntimeError):
    """A fixed-point iteration did not stabilize: the map is not an x-adic contraction."""


@dataclass(frozen=True)
class FamilyRecord:
    pair: RelationPair
    family_id: str
    methods: frozenset
    equivalent_pairs: tuple[RelationPair, ...]
    oeis_tag: str | None
    printed_prefix: tuple[int, ...] | None
    table_entry: str = field(default="", compare=False)

    @property
    def bivariate(self) -> bool:
        return CLOSED_FORM in self.methods

    def to_json_obj(self) -> dict:
        return {
            "pair": self.pair.token,
            "family_id": self.family_id,
            "methods": sorted(self.methods),
            "equivalent_pairs": [q.token for q in self.equivalent_pairs],
            "oeis_tag": self.oeis_tag,
            "printed_prefix": list(self.printed_prefix) if self.printed_prefix is not None else None,
            "table_entry": self.table_entry,
        }


# family id -> member pairs (pairs with identical counts at every length)
FAMILY_MEMBERS: dict[str, tuple[str, ...]] = {
    "CONST1": ("<=,>=",),
    "CONST2": ("<=,!=",),
    "CONST3": ("<=,<=",),
    "CONST4": ("!=,<=",),
    "UNIVAR1": ("=,=",),
    "UNIVAR2": ("=,>",),
    "UNIVAR3": (">,=",),
    "UNIVAR4": ("=,<",),
    "UNIVAR5": ("<,=",),
    "UNIVAR6": ("<,<",),
    "UNIVAR7": (">,>",),
    "C1": ("=,>=", ">=,="),
    "C2": ("=,<=", "<=,="),
    "C3": ("<,>",),
    "C4": ("=,!=", "!=,="),
    "C5": (">=,>=",),
    "C6": (">=,>", ">,>=", ">,<"),
    "C7": (">=,<=", "<=,<", "<,<="),
    "C8": (">=,<",),
    "C8b": ("<=,>",),
    "C9": (">=,!=",),
    "C10": (">,<=",),
    "C11": (">,!=",),
    "C12": ("<,>=", "!=,>="),
    "C13": ("<,!=",),
    "C14": ("!=,>",),
    "C15": ("!=,<",),
    "C16": ("!=,!=",),
}

# classes with the same descent distribution (possibly across family ids)
_BIVARIATE_CLASSES: tuple[tuple[str, ...], ...] = (
    ("=,>=", ">=,="),
    ("=,<=", "<=,="),
    ("=,!=", "!=,="),
    (">=,>=", "<,<"),
    (">=,>", ">,>=", ">,<"),
    (">=,<=", "<=,<", "<,<="),
    ("<,>=", "!=,>="),
    ("=,>", ">,="),
    ("=,<", "<,="),
)

_NO_FUNCTIONAL_EQUATION = {"C5"}
_NO_COUNT_FORMULA = {"C11", "C13", "C14"}

FAMILY_ORDER = tuple(FAMILY_MEMBERS)


def _family_sort_key(fid: str) -> int:
    return FAMILY_ORDER.index(fid)


def _build_registry() -> dict[RelationPair, FamilyRecord]:
    classes = {}
    for group in _BIVARIATE_CLASSES:
        for token in group:
            classes[token] = group
    registry = {}
    for fid, tokens in FAMILY_MEMBERS.items():
        for token in tokens:
            if fid.startswith("C") and not fid.startswith("CONST"):
                methods = {CLOSED_FORM}
                if fid not in _NO_FUNCTIONAL_EQUATION:
                    methods.add(FUNCTIONAL_EQUATION)
                if fid not in _NO_COUNT_FORMULA:
                    methods.add(COUNT_FORMULA)
            elif fid.startswith("CONST"):
                methods = {CONSTANT_FORMULA}
            else:
                methods = {COUNT_FORMULA}
            if token in reference.TABLE_MAIN:
                entry, prefix, tag = reference.TABLE_MAIN[token]
            else:
                entry, prefix, tag = reference.TABLE_CONSTANT[token]
            same = tuple(RelationPair.parse(t) for t in classes.get(token, (token,)) if t != token)
            pair = RelationPair.parse(token)
            registry[pair] = FamilyRecord(
                pair=pair,
                family_id=fid,
                methods=frozenset(methods),
                equivalent_pairs=same,
                oeis_tag=tag,
                printed_prefix=tuple(prefix) if prefix is not None else None,
                table_entry=entry,
            )
    assert set(registry) == set(ALL_PAIRS), "registry must cover all 36 pairs"
    return registry


REGISTRY: dict[RelationPair, FamilyRecord] = _build_registry()


def classify(p: RelationPair | str) -> FamilyRecord:
    return REGISTRY[as_pair(p)]


def records() -> list[FamilyRecord]:
    """All records, ordered by family id and then by listing order."""
    return sorted(REGISTRY.values(), key=lambda r: (_family_sort_key(r.family_id),
                                                     FAMILY_MEMBERS[r.family_id].index(r.pair.token)))


def family_ids(prefix: str = "") -> list[str]:
    return [fid for fid in FAMILY_ORDER if fid.startswith(prefix)]


def bivariate_family_ids() -> list[str]:
    return [fid for fid in FAMILY_ORDER if fid.startswith("C") and not fid.startswith("CONST")]


def registry_json() -> str:
    return json.dumps([r.to_json_obj() for r in records()], indent=2, ensure_ascii=False)


def _fid(f: FamilyRecord | str) -> str:
    if isinstance(f, FamilyRecord):
        return f.family_id
    if f in FAMILY_MEMBERS:
        return f
    return classify(f).family_id


def _check_order(N: int) -> None:
    if N < 1:
        raise ValueError("series order must be at least 1")


# closed forms -------------------------------------------------------------


def _gens(order: int):
    X = BivariateSeries.monomial(1, 0, 1, order)
    Y = BivariateSeries.monomial(0, 1, 1, order)
    return X, Y


def _cf_C1(X, Y):
    P = 1 - X - X**2 + 2 * X * Y
    return (P - sqrt(P**2 - 4 * X * Y * (1 + X * Y))).div_monomial(1, 1, 2)


def _cf_C2(X, Y):
    R = 1 - 2 * X + X**2 - 4 * X**2 * Y - 4 * X**3 * Y
    return (1 - X + 2 * X * Y - sqrt(R)).div_monomial(1, 1, 2)


def _cf_C3(X, Y):
    R = 1 - 4 * X + 4 * X**2 - 2 * X**2 * Y + X**4 * Y**2
    return (1 - 2 * X + 2 * X * Y - X**2 * Y - sqrt(R)).div_monomial(1, 1, 2) / (1 - X)


def _cf_C4(X, Y):
    R = 1 - 2 * X + X**2 - 4 * X**2 * Y
    return (1 - X + 2 * X * Y - 2 * X**2 * Y - sqrt(R)).div_monomial(1, 1, 2) / (1 - X)


def _cf_C5(X, Y):
    Q = 1 - X - X**2 * (1 + Y)
    R = Q**2 - 4 * X**3 * (1 + X) * Y
    return (1 - X - X**2 + X**2 * Y - sqrt(R)).div_monomial(2, 1, 2)


def _cf_C6(X, Y):
    R = 1 - 4 * X + 4 * X**2 - 2 * X**2 * Y + X**4 * Y**2
    return (1 - 2 * X + X**2 * Y - sqrt(R)).div_monomial(2, 1, 2)


def _cf_C7(X, Y):
    return (1 + X**2 - X**2 * Y) / (1 - X - X**2 * Y)


def _cf_C8(X, Y):
    return (1 - X + X**2 - X**2 * Y) / (1 - 2 * X + X**2 - X**2 * Y)


def _cf_C8b(X, Y):
    return (1 - X) / (1 - 2 * X)


def _cf_C9(X, Y):
    return (1 - 2 * X + 2 * X**2 - X**3 + X**3 * Y) / (1 - X) ** 3


def _cf_C10(X, Y):
    return (1 - X - X**2 * Y) / (1 - 2 * X - X**2 * Y)


def _cf_C11(X, Y):
    R = 1 - 4 * X + 4 * X**2 - 4 * X**3 * Y
    return ((1 - 2 * X - sqrt(R)) * (1 - X)).div_monomial(3, 1, 2)


def _cf_C12(X, Y):
    return (1 - X + X**2) / (1 - X) ** 2


def _cf_C13(X, Y):
    R = 1 - 2 * X - X**2 + 2 * X**3 + X**4 - 4 * X**3 * Y
    return (1 - 2 * X**2 - X**3 + 2 * X**2 * Y - (1 + X) * sqrt(R)).div_monomial(2, 1, 2)


def _cf_C14(X, Y):
    R = 1 - 4 * X + 4 * X**2 - 4 * X**3 * Y
    return (1 - 2 * X + 2 * X**2 * Y - sqrt(R)).div_monomial(2, 1, 2)


def _cf_C15(X, Y):
    Q = 1 - X - X**2
    return (Q - sqrt(Q**2 - 4 * X**3 * Y)).div_monomial(3, 1, 2)


def _cf_C16(X, Y):
    Q = 1 - X - X**2
    return (Q - sqrt(Q**2 - 4 * X**4 * Y)).div_monomial(4, 1, 2)


CLOSED_FORMS: dict[str, Callable] = {
    "C1": _cf_C1, "C2": _cf_C2, "C3": _cf_C3, "C4": _cf_C4, "C5": _cf_C5, "C6": _cf_C6,
    "C7": _cf_C7, "C8": _cf_C8, "C8b": _cf_C8b, "C9": _cf_C9, "C10": _cf_C10, "C11": _cf_C11,
    "C12": _cf_C12, "C13": _cf_C13, "C14": _cf_C14, "C15": _cf_C15, "C16": _cf_C16,
}


def closed_form_series(f: FamilyRecord | str, N: int = 24) -> BivariateSeries:
    _check_order(N)
    fid = _fid(f)
    try:
        build = CLOSED_FORMS[fid]
    except KeyError:
        raise NotAvailable(f"no bivariate closed form for family {fid}") from None
    X, Y = _gens(N + _GUARD)
    return build(X, Y).truncate(N)


# functional equations ----------------------------------------------------


def fixed_point(step: Callable[[dict], dict], seeds: dict[str, BivariateSeries],
                max_iter: int | None = None) -> tuple[dict[str, BivariateSeries], int]:
    """Iterate ``state -> step(state)`` from ``seeds`` until nothing changes.

    Returns the fixed point and the number of iterations used.  The default
    cap allows one order of accuracy per unknown per step with a margin.
    """
    order = min(s.order for s in seeds.values())
    if max_iter is None:
        max_iter = 2 * (order + 2) * len(seeds) + 5
    state = dict(seeds)
    for i in range(1, max_iter + 1):
        new = step(state)
        if all(new[k] == state[k] for k in state):
            return new, i
        state = new
    raise NonContractive(f"no fixed point after {max_iter} iterations")


# Each system maps (state, X, Y) to the next state.  Unknown C is seeded
# with 1 and auxiliary series with 0.

def _fe_C1_coiterate(s, X, Y):
    C, A, B, E = s["C"], s["A"], s["B"], s["E"]
    return {
        "A": C - 1 - (X**2 * C + X**2 * Y * (C - 1 - B) * (C - 1)),
        "B": X * (C - 1 - B),
        "E": X * Y * (C - 1 - B) * (C - 1),
        "C": 1 + X * C + X * A + E,
    }


def _fe_C1_eliminate(s, X, Y):
    C = s["C"]
    B = X * (C - 1) / (1 + X)
    A = C - 1 - (X**2 * C + X**2 * Y * (C - 1 - B) * (C - 1))
    E = X * Y * (C - 1 - B) * (C - 1)
    return {"C": 1 + X * C + X * A + E}


def _fe_C2(s, X, Y):
    C = s["C"]
    return {"C": 1 + X * C + X**2 + X * Y * (C - 1) ** 2}


def _fe_C3_coiterate(s, X, Y):
    C, B = s["C"], s["B"]
    return {
        "B": X * (C - 1),
        "C": 1 + X * C + X * (C - 1) + X * Y * (C - 1 - X - B) * (C - 1),
    }


def _fe_C3_eliminate(s, X, Y):
    C = s["C"]
    B = X * (C - 1)
    return {"C": 1 + X * C + X * (C - 1) + X * Y * (C - 1 - X - B) * (C - 1)}


def _fe_C4_coiterate(s, X, Y):
    C, B = s["C"], s["B"]
    return {
        "B": X * (C - 1),
        "C": 1 + X * C + X**2 / (1 - X) + X * Y * (C - 1 - B) * (C - 1),
    }


def _fe_C4_eliminate(s, X, Y):
    C = s["C"]
    B = X * (C - 1)
    return {"C": 1 + X * C + X**2 / (1 - X) + X * Y * (C - 1 - B) * (C - 1)}


def _fe_C6(s, X, Y):
    C = s["C"]
    return {"C": 1 + X * C + X * (C - 1) + X * Y * X * (C - 1) + X * Y * X * (C - 1) * (C - 1)}


def _fe_C7(s, X, Y):
    # the last summand counts 01^j w' with w' nonempty, hence C - 1
    C = s["C"]
    return {"C": 1 + X / (1 - X) + X**2 / (1 - X) + X**2 * Y / (1 - X) * (C - 1)}


def _fe_C7_printed(s, X, Y):
    C = s["C"]
    return {"C": 1 + X / (1 - X) + X**2 / (1 - X) + X**2 * Y / (1 - X) * C}


def _fe_C8(s, X, Y):
    C = s["C"]
    return {"C": 1 / (1 - X) + X * (C - 1) + X**2 * Y / (1 - X) * (C - 1)}


def _fe_C8b(s, X, Y):
    C = s["C"]
    return {"C": 1 + X * C + X * (C - 1)}


def _fe_C9(s, X, Y):
    C = s["C"]
    return {"C": 1 + X * C + X**2 / (1 - X) + Y * X**3 / (1 - X) ** 2}


def _fe_C10(s, X, Y):
    C = s["C"]
    return {"C": 1 + X * C + X * (C - 1) + X**2 * Y * (C - 1)}


def _fe_C11(s, X, Y):
    C = s["C"]
    return {"C": 1 + X * C + X * (C - 1) + Y * X**2 * (X / (1 - X)) * C**2}


def _fe_C12(s, X, Y):
    C = s["C"]
    return {"C": 1 + X * C + X**2 / (1 - X)}


def _c13_rest(C, B, X, Y):
    return 1 + X * C + X**2 * C + X**3 * Y * (C - 1) + X**3 * Y * (C - 1) ** 2 + X**2 * Y * B * (C - 1)


def _fe_C13_coiterate(s, X, Y):
    C, B = s["C"], s["B"]
    return {
        "B": C - 1 - X - X * B - X * (C - 1) - X**2 * C,
        "C": _c13_rest(C, B, X, Y),
    }


def _fe_C13_eliminate(s, X, Y):
    C = s["C"]
    B = (C - 1 - X - X * (C - 1) - X**2 * C) / (1 + X)
    return {"C": _c13_rest(C, B, X, Y)}


def _fe_C14(s, X, Y):
    C = s["C"]
    return {"C": 1 + X * C + X * (C - 1) + X**2 * Y * (C - 1) ** 2}


def _fe_C15(s, X, Y):
    C = s["C"]
    return {"C": 1 + X + X**2 * C + X * (C - 1) + X**3 * Y * C**2}


def _fe_C15_printed(s, X, Y):
    C = s["C"]
    return {"C": 1 + X + X**2 * C + X * (C - 1) + X**3 * Y * C}


def _fe_C16(s, X, Y):
    C = s["C"]
    return {"C": 1 + X + X**2 * C + X * (C - 1) + X * Y * (X**2 * C) * (X * C)}


# family id -> {strategy: (step, auxiliary unknowns)}
FUNCTIONAL_EQUATIONS: dict[str, dict[str, tuple[Callable, tuple[str, ...]]]] = {
    "C1": {"eliminate": (_fe_C1_eliminate, ()), "coiterate": (_fe_C1_coiterate, ("A", "B", "E"))},
    "C2": {"direct": (_fe_C2, ())},
    "C3": {"eliminate": (_fe_C3_eliminate, ()), "coiterate": (_fe_C3_coiterate, ("B",))},
    "C4": {"eliminate": (_fe_C4_eliminate, ()), "coiterate": (_fe_C4_coiterate, ("B",))},
    "C6": {"direct": (_fe_C6, ())},
    "C7": {"direct": (_fe_C7, ())},
    "C8": {"direct": (_fe_C8, ())},
    "C8b": {"direct": (_fe_C8b, ())},
    "C9": {"direct": (_fe_C9, ())},
    "C10": {"direct": (_fe_C10, ())},
    "C11": {"direct": (_fe_C11, ())},
    "C12": {"direct": (_fe_C12, ())},
    "C13": {"eliminate": (_fe_C13_eliminate, ()), "coiterate": (_fe_C13_coiterate, ("B",))},
    "C14": {"direct": (_fe_C14, ())},
    "C15": {"direct": (_fe_C15, ())},
    "C16": {"direct": (_fe_C16, ())},
}


# Equations as printed where they differ from the ones above; kept so that
# the discrepancy can be demonstrated rather than asserted.
PRINTED_FUNCTIONAL_EQUATIONS: dict[str, Callable] = {
    "C7": _fe_C7_printed,
    "C15": _fe_C15_printed,
}


def strategies(f: FamilyRecord | str) -> list[str]:
    fid = _fid(f)
    if fid not in FUNCTIONAL_EQUATIONS:
        raise NotAvailable(f"no functional equation for family {fid}")
    return list(FUNCTIONAL_EQUATIONS[fid])


def functional_equation_series(f: FamilyRecord | str, N: int = 24, strategy: str | None = None,
                               max_iter: int | None = None, printed: bool = False) -> BivariateSeries:
    """Fixed point of the family's equation, iterated from the seed series 1.

    ``printed=True`` selects the equation exactly as published for the
    families listed in :data:`PRINTED_FUNCTIONAL_EQUATIONS`.
    """
    _check_order(N)
    fid = _fid(f)
    options = FUNCTIONAL_EQUATIONS.get(fid)
    if options is None:
        raise NotAvailable(f"no functional equation for family {fid}")
    if strategy is None:
        strategy = next(iter(options))
    if strategy not in options:
        raise ValueError(f"family {fid} supports strategies {sorted(options)}")
    step, aux = options[strategy]
    if printed and fid in PRINTED_FUNCTIONAL_EQUATIONS:
        step = PRINTED_FUNCTIONAL_EQUATIONS[fid]
    X, Y = _gens(N)
    seeds = {"C": BivariateSeries.const(1, N)}
    seeds.update({name: BivariateSeries.zero(N) for name in aux})
    solution, _ = fixed_point(lambda s: step(s, X, Y), seeds, max_iter)
    return solution["C"]


def bivariate_series(f: FamilyRecord | str, N: int = 24, method: str = "closed") -> BivariateSeries:
    if method == "closed":
        return closed_form_series(f, N)
    if method == "fixpoint":
        return functional_equation_series(f, N)
    raise ValueError("method must be 'closed' or 'fixpoint'")


# univariate corollaries ----------------------------------------------------


def _ucf_C1(X):
    return (1 + X - X**2 - sqrt(1 - 2 * X - 5 * X**2 - 2 * X**3 + X**4)).div_monomial(1, 0, 2)


def _ucf_C2(X):
    return (1 + X - sqrt(1 - 2 * X - 3 * X**2 - 4 * X**3)).div_monomial(1, 0, 2)


def _ucf_C3(X):
    return (1 - X**2 - sqrt(1 - 4 * X + 2 * X**2 + X**4)).div_monomial(1, 0, 2) / (1 - X)


def _ucf_C4(X):
    return (1 + X - 2 * X**2 - sqrt(1 - 2 * X - 3 * X**2)).div_monomial(1, 0, 2) / (1 - X)


def _ucf_C5(X):
    return (1 - X - sqrt(1 - 2 * X - 3 * X**2)).div_monomial(2, 0, 2)


def _ucf_C6(X):
    return (1 - 2 * X + X**2 - sqrt(1 - 4 * X + 2 * X**2 + X**4)).div_monomial(2, 0, 2)


def _ucf_C11(X):
    return ((1 - 2 * X - sqrt(1 - 4 * X + 4 * X**2 - 4 * X**3)) * (1 - X)).div_monomial(3, 0, 2)


def _ucf_C13(X):
    R = 1 - 2 * X - X**2 - 2 * X**3 + X**4
    return (1 - X**3 - (1 + X) * sqrt(R)).div_monomial(2, 0, 2)


def _ucf_C14(X):
    return (1 - 2 * X + 2 * X**2 - sqrt(1 - 4 * X + 4 * X**2 - 4 * X**3)).div_monomial(2, 0, 2)


def _ucf_C15(X):
    R = 1 - 2 * X - X**2 - 2 * X**3 + X**4
    return (1 - X - X**2 - sqrt(R)).div_monomial(3, 0, 2)


def _ucf_C16(X):
    R = 1 - 2 * X - X**2 + 2 * X**3 - 3 * X**4
    return (1 - X - X**2 - sqrt(R)).div_monomial(4, 0, 2)


def _ucf_univar_eq_gt(X):
    return (1 - 2 * X**2 - sqrt(1 - 4 * X + 4 * X**3)).div_monomial(1, 0, 2) / (1 - X)


UNIVARIATE_FORMS: dict[str, Callable] = {
    "C1": _ucf_C1, "C2": _ucf_C2, "C3": _ucf_C3, "C4": _ucf_C4, "C5": _ucf_C5, "C6": _ucf_C6,
    "C7": lambda X: 1 / (1 - X - X**2),
    "C8": lambda X: (1 - X) / (1 - 2 * X),
    "C8b": lambda X: (1 - X) / (1 - 2 * X),
    "C9": lambda X: (1 - 2 * X + 2 * X**2) / (1 - X) ** 3,
    "C10": lambda X: (1 - X - X**2) / (1 - 2 * X - X**2),
    "C11": _ucf_C11,
    "C12": lambda X: (1 - X + X**2) / (1 - X) ** 2,
    "C13": _ucf_C13, "C14": _ucf_C14, "C15": _ucf_C15, "C16": _ucf_C16,
    "UNIVAR2": _ucf_univar_eq_gt,
    "UNIVAR3": _ucf_univar_eq_gt,
}


def univariate_closed_form(f: FamilyRecord | str, N: int = 24) -> list[int]:
    """Coefficients of the printed univariate generating function, ``x^0..x^N``."""
    _check_order(N)
    fid = _fid(f)
    try:
        build = UNIVARIATE_FORMS[fid]
    except KeyError:
        raise NotAvailable(f"no univariate closed form for family {fid}") from None
    X, _ = _gens(N + _GUARD)
    return build(X).truncate(N).univariate()


def univariate_series(f: FamilyRecord | str, N: int = 24, method: str = "closed") -> list[int]:
    """``C_p(x, 1)``: from the bivariate series when available, else the univariate form."""
    fid = _fid(f)
    if fid in CLOSED_FORMS:
        return bivariate_series(fid, N, method).at_y1().univariate()
    if fid in UNIVARIATE_FORMS:
        return univariate_closed_form(fid, N)
    raise NotAvailable(f"no univariate series for family {fid}; use the counting formula")


# descent totals -------------------------------------------------------------


def _dcf(numerator: Callable, radicand: Callable | None, shift: int, extra_den: Callable | None = None):
    """Build ``numerator(X, sqrt(S)) / (2 x^shift * extra_den * sqrt(S))``."""

    def build(X):
        if radicand is None:
            return numerator(X, None)
        root = sqrt(radicand(X))
        num = numerator(X, root).div_monomial(shift, 0, 2)
        den = root if extra_den is None else root * extra_den(X)
        return num / den

    return build


def _S(*cs):
    return lambda X: sum((c * X**i for i, c in enumerate(cs)), BivariateSeries.zero(X.order))


DESCENT_FORMS: dict[str, Callable] = {
    "C1": _dcf(lambda X, r: 1 - 2 * X - 3 * X**2 + X**4 - (1 - X - X**2) * r, _S(1, -2, -5, -2, 1), 1),
    "C2": _dcf(lambda X, r: 1 - 2 * X - X**2 - 2 * X**3 - (1 - X) * r, _S(1, -2, -3, -4), 1),
    "C3": _dcf(lambda X, r: 1 - 4 * X + 3 * X**2 - (1 - 2 * X) * r, _S(1, -4, 2, 0, 1), 1, lambda X: 1 - X),
    "C4": _dcf(lambda X, r: 1 - 2 * X - X**2 - (1 - X) * r, _S(1, -2, -3), 1, lambda X: 1 - X),
    "C5": _dcf(lambda X, r: 1 - 2 * X - 2 * X**2 + X**3 - (1 - X - X**2) * r, _S(1, -2, -3), 2),
    "C6": _dcf(lambda X, r: 1 - 4 * X + 3 * X**2 - (1 - 2 * X) * r, _S(1, -4, 2, 0, 1), 2),
    "C7": _dcf(lambda X, r: X**3 * (1 + X) / (1 - X - X**2) ** 2, None, 0),
    "C8": _dcf(lambda X, r: X**3 / (1 - 2 * X) ** 2, None, 0),
    "C8b": _dcf(lambda X, r: BivariateSeries.zero(X.order), None, 0),
    "C9": _dcf(lambda X, r: X**3 / (1 - X) ** 3, None, 0),
    "C10": _dcf(lambda X, r: X**3 / (1 - 2 * X - X**2) ** 2, None, 0),
    "C11": _dcf(lambda X, r: (1 - X) * (1 - 4 * X + 4 * X**2 - 2 * X**3 - (1 - 2 * X) * r),
                _S(1, -4, 4, -4), 3),
    "C12": _dcf(lambda X, r: BivariateSeries.zero(X.order), None, 0),
    "C13": _dcf(lambda X, r: 1 - 4 * X**2 - 4 * X**3 + 2 * X**5 + X**6
                - (1 + X) * (1 - 2 * X**2 - X**3) * r, _S(1, -2, -1, -2, 1), 2, lambda X: 1 + X),
    "C14": _dcf(lambda X, r: 1 - 4 * X + 4 * X**2 - 2 * X**3 - (1 - 2 * X) * r, _S(1, -4, 4, -4), 2),
    "C15": _dcf(lambda X, r: 1 - 2 * X - X**2 + X**4 - (1 - X - X**2) * r, _S(1, -2, -1, -2, 1), 3),
    "C16": _dcf(lambda X, r: 1 - 2 * X - X**2 + 2 * X**3 - X**4 - (1 - X - X**2) * r,
                _S(1, -2, -1, 2, -3), 4),
}


# Descent-total forms as printed where they differ from the ones above.
PRINTED_DESCENT_FORMS: dict[str, Callable] = {
    "C13": _dcf(lambda X, r: 1 - 4 * X**2 - 4 * X**3 + 2 * X**5 - X**6
                - (1 + X) * (1 - 2 * X**2 - X**3) * r, _S(1, -2, -1, -2, 1), 2, lambda X: 1 + X),
}


def descent_total_series(f: FamilyRecord | str, N: int = 24, method: str = "closed") -> list[int]:
    """``d/dy C_p(x, y)`` at ``y = 1``: total descents over words of each length."""
    _check_order(N)
    fid = _fid(f)
    if fid not in CLOSED_FORMS:
        raise NotAvailable(f"no bivariate series for family {fid}")
    return bivariate_series(fid, N, method).dy().at_y1().univariate()


def descent_total_closed_form(f: FamilyRecord | str, N: int = 24, printed: bool = False) -> list[int]:
    """Closed form for the descent totals, evaluated independently of the bivariate series."""
    _check_order(N)
    fid = _fid(f)
    try:
        build = DESCENT_FORMS[fid]
    except KeyError:
        raise NotAvailable(f"no descent-total closed form for family {fid}") from None
    if printed:
        build = PRINTED_DESCENT_FORMS.get(fid, build)
    X, _ = _gens(N + _GUARD)
    return build(X).truncate(N).univariate()


# counting formulas ------------------------------------------------------------


def _integral(total: Fraction) -> int:
    if total.denominator != 1:
        raise ArithmeticError(f"counting formula produced a non-integer {total}")
    return total.numerator


def _count_C1(n):
    total = Fraction(0)
    for j in range(n // 2 + 1):
        inner = sum(binom(n - 2 * j, i) * binom(j + i, n - 2 * j - i + 1) for i in range(n - 2 * j + 1))
        total += Fraction(binom(n - j, j) * inner, n - j)
    return _integral(total)


def _count_C2(n):
    total = Fraction(0)
    for i in range(n + 1):
        for k in range(1, n - i + 2):
            total += Fraction(binom(i - 1, k - 1) * binom(k, n - k - i + 1) * binom(k + i - 2, i - 1), k)
    return _integral(total)


def _count_A105633(n):
    total = Fraction(0)
    for k in range((n - 1) // 2 + 1):
        total += Fraction((-1) ** k * binom(n - k, k) * binom(2 * n - 3 * k, n - 2 * k - 1), n - k)
    return _integral(total)


def _count_C6(n):
    total = Fraction(0)
    for k in range(n + 1):
        for j in range(n - k + 1):
            total += Fraction(binom(n - k - 1, j) * binom(k, j) * binom(k + j + 2, j), j + 1)
    return _integral(total)


def _count_C15(n):
    # the generating function is (M(x/(1+x^2))/(1+x^2) - 1)/x with M the Motzkin series
    return sum((-1) ** k * binom(n - k + 1, k) * motzkin(n + 1 - 2 * k) for k in range((n + 1) // 2 + 1))


def _count_C15_printed(n):
    return sum((-1) ** k * binom(n - k - 1, k) * motzkin(n + 1 - 2 * k) for k in range((n + 1) // 2 + 1))


def _count_C16(n):
    return sum(binom(n - k, k) * motzkin(k) for k in range((n + 1) // 2 + 1))


def _count_eq_eq(n):
    return sum(binom(k, n - k) * motzkin(k - 1) for k in range(1, n + 1))


def _count_gt_gt(n):
    total = Fraction(0)
    for k in range(n // 2 + 1):
        total += Fraction(binom(n - k, k) * binom(n - k, k + 1), n - k) * Fraction(2) ** (n - 2 * k - 1)
    return _integral(total)


def _pow2(e):
    return 2**e if e >= 0 else Fraction(1, 2 ** -e)


def _count_univariate(fid):
    def count(n):
        return univariate_closed_form(fid, max(n, 1))[n]
    return count


def _count_const1(n):
    return 1 if n <= 1 else 2


def _count_const3(n):
    return 1 if n % 2 == 1 else 2


def _count_const4(n):
    return min(n, 3)


COUNT_FORMULAS: dict[str, Callable[[int], int]] = {
    "C1": _count_C1,
    "C2": _count_C2,
    "C3": _count_A105633,
    "UNIVAR4": _count_A105633,
    "UNIVAR5": _count_A105633,
    "C4": lambda n: sum(motzkin(j) for j in range(n)),
    "C5": motzkin,
    "UNIVAR6": motzkin,
    "C6": _count_C6,
    "C7": lambda n: fibonacci(n + 1),
    "C8": lambda n: _pow2(n - 1),
    "C8b": lambda n: _pow2(n - 1),
    "C9": lambda n: 1 + binom(n, 2),
    # coefficients of (1 - x - x^2)/(1 - 2x - x^2) with P_0 = 0, P_1 = 1
    "C10": lambda n: pell(n),
    "C12": lambda n: n,
    "C15": _count_C15,
    "C16": _count_C16,
    "UNIVAR1": _count_eq_eq,
    "UNIVAR2": _count_univariate("UNIVAR2"),
    "UNIVAR3": _count_univariate("UNIVAR3"),
    "UNIVAR7": _count_gt_gt,
    "CONST1": _count_const1,
    "CONST2": _count_const1,
    "CONST3": _count_const3,
    "CONST4": _count_const4,
}


# Counting formulas as printed where they differ from the ones above.
PRINTED_COUNT_FORMULAS: dict[str, Callable] = {
    "C10": lambda n: pell(n + 1),
    "C15": _count_C15_printed,
}


def count_formula(f: FamilyRecord | str, n: int, literal: bool = False, printed: bool = False):
    """Number of words of length ``n`` from the family's explicit formula.

    The formulas are stated for ``n >= 1``; ``n = 0`` gives 1 (the empty word)
    unless ``literal`` is set, in which case the raw expression is evaluated
    so boundary behaviour can be inspected (it may then be a fraction or
    raise ``ZeroDivisionError``).  ``printed=True`` uses the published
    expression for the families in :data:`PRINTED_COUNT_FORMULAS`.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    fid = _fid(f)
    try:
        formula = COUNT_FORMULAS[fid]
    except KeyError:
        raise NotAvailable(f"family {fid} has no explicit counting formula") from None
    if printed:
        formula = PRINTED_COUNT_FORMULAS.get(fid, formula)
    if n == 0 and not literal:
        return 1
    return formula(n)
