"""Exact truncated bivariate power series.

A :class:`BivariateSeries` holds the coefficients of ``x^0 .. x^order``; each
coefficient is a dense polynomial in ``y`` (a list, index = power of y) over
the rationals.  Coefficients are Python ints whenever they are integral and
:class:`fractions.Fraction` otherwise, so the common all-integer case runs at
integer speed while ``sqrt`` (which halves) stays exact.
"""

from __future__ import annotations

import json
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

DEFAULT_ORDER = 24

YPoly = list  # list of int | Fraction, index = power of y


class SeriesError(ArithmeticError):
    pass


class NonInvertibleLeadingCoefficient(SeriesError):
    pass


class BadConstantTerm(SeriesError):
    pass


class OrderExceeded(SeriesError, IndexError):
    pass


class NonExactMonomialDivision(SeriesError):
    pass


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _trim(p: YPoly) -> YPoly:
    while p and p[-1] == 0:
        p.pop()
    return p


def _padd(a: YPoly, b: YPoly, sign: int = 1) -> YPoly:
    n = max(len(a), len(b))
    out = []
    for k in range(n):
        u = a[k] if k < len(a) else 0
        v = b[k] if k < len(b) else 0
        out.append(_norm(u + sign * v))
    return _trim(out)


def _pmul(a: YPoly, b: YPoly) -> YPoly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u == 0:
            continue
        for j, v in enumerate(b):
            out[i + j] += u * v
    return _trim([_norm(c) for c in out])


def _pscale(a: YPoly, c) -> YPoly:
    return _trim([_norm(u * c) for u in a])


class BivariateSeries:
    """Power series in ``x`` truncated after ``x^order``, with polynomial-in-``y`` coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[Sequence], order: int):
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = [_trim([_norm(Fraction(c) if not isinstance(c, int) else c) for c in p]) for p in coeffs]
        cs = cs[: order + 1]
        cs.extend([] for _ in range(order + 1 - len(cs)))
        self.order = order
        self.coeffs = cs

    # constructors -----------------------------------------------------

    @classmethod
    def _raw(cls, coeffs: list, order: int) -> "BivariateSeries":
        s = cls.__new__(cls)
        s.order = order
        s.coeffs = coeffs
        return s

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> "BivariateSeries":
        return cls._raw([[] for _ in range(order + 1)], order)

    @classmethod
    def const(cls, c, order: int = DEFAULT_ORDER) -> "BivariateSeries":
        s = cls.zero(order)
        s.coeffs[0] = _trim([_norm(Fraction(c))])
        return s

    @classmethod
    def monomial(cls, n: int, k: int = 0, c=1, order: int = DEFAULT_ORDER) -> "BivariateSeries":
        s = cls.zero(order)
        if n <= order:
            s.coeffs[n] = _trim([0] * k + [_norm(Fraction(c))])
        return s

    @classmethod
    def from_terms(cls, terms: dict[tuple[int, int], object], order: int = DEFAULT_ORDER) -> "BivariateSeries":
        s = cls.zero(order)
        for (n, k), c in terms.items():
            if n > order:
                continue
            p = s.coeffs[n]
            if len(p) <= k:
                p.extend([0] * (k + 1 - len(p)))
            p[k] = _norm(p[k] + Fraction(c))
            _trim(p)
        return s

    @classmethod
    def from_univariate(cls, values: Sequence, order: int | None = None) -> "BivariateSeries":
        if order is None:
            order = len(values) - 1
        return cls([[v] for v in values], order)

    # basic protocol ---------------------------------------------------

    def _coerce(self, other) -> "BivariateSeries":
        if isinstance(other, BivariateSeries):
            return other
        if isinstance(other, (int, Rational)):
            return BivariateSeries.const(other, self.order)
        return NotImplemented

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def __repr__(self) -> str:
        return f"BivariateSeries({self.pretty()}, order={self.order})"

    def truncate(self, order: int) -> "BivariateSeries":
        order = min(order, self.order)
        return BivariateSeries._raw([list(p) for p in self.coeffs[: order + 1]], order)

    def coeff(self, n: int, k: int = 0):
        if n < 0 or n > self.order:
            raise OrderExceeded(f"x^{n} is beyond the truncation order {self.order}")
        p = self.coeffs[n]
        return p[k] if 0 <= k < len(p) else 0

    def ypoly(self, n: int) -> list:
        if n < 0 or n > self.order:
            raise OrderExceeded(f"x^{n} is beyond the truncation order {self.order}")
        return list(self.coeffs[n])

    def valuation(self) -> int | None:
        for n, p in enumerate(self.coeffs):
            if p:
                return n
        return None

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for p in self.coeffs for c in p)

    def y_degree(self, n: int) -> int:
        return len(self.coeffs[n]) - 1

    # ring operations --------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return BivariateSeries._raw([_padd(self.coeffs[i], other.coeffs[i]) for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return BivariateSeries._raw([[-c for c in p] for p in self.coeffs], self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return BivariateSeries._raw([_padd(self.coeffs[i], other.coeffs[i], -1) for i in range(n + 1)], n)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return BivariateSeries._raw([_pscale(p, other) for p in self.coeffs], self.order)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [[] for _ in range(n + 1)]
        for i in range(n + 1):
            if not a[i]:
                continue
            for j in range(n + 1 - i):
                if b[j]:
                    out[i + j] = _padd(out[i + j], _pmul(a[i], b[j]))
        return BivariateSeries._raw(out, n)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = BivariateSeries.const(1, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            if other == 0:
                raise ZeroDivisionError("division of a series by zero")
            return self * (Fraction(1) / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return div(self, other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return div(other, self)

    # y-calculus -------------------------------------------------------

    def dy(self) -> "BivariateSeries":
        return BivariateSeries._raw(
            [_trim([_norm(k * c) for k, c in enumerate(p)][1:]) for p in self.coeffs], self.order
        )

    def at_y1(self) -> "BivariateSeries":
        return BivariateSeries._raw([_trim([_norm(sum(p, 0))]) for p in self.coeffs], self.order)

    def subs_y_monomial(self, n_shift: int, k_shift: int = 1) -> "BivariateSeries":
        """Substitute ``y -> x^n_shift * y^k_shift``."""
        out = [[] for _ in range(self.order + 1)]
        for n, p in enumerate(self.coeffs):
            for k, c in enumerate(p):
                if c == 0:
                    continue
                m = n + k * n_shift
                if m > self.order:
                    continue
                q = out[m]
                e = k * k_shift
                if len(q) <= e:
                    q.extend([0] * (e + 1 - len(q)))
                q[e] = _norm(q[e] + c)
        return BivariateSeries._raw([_trim(q) for q in out], self.order)

    def div_monomial(self, n: int, k: int = 0, c=1) -> "BivariateSeries":
        """Exact division by ``c * x^n * y^k``; the result loses ``n`` orders of accuracy."""
        if self.order < n:
            raise NonExactMonomialDivision("not enough terms to divide by x^%d" % n)
        for i in range(n):
            if self.coeffs[i]:
                raise NonExactMonomialDivision(f"coefficient of x^{i} is nonzero")
        inv = Fraction(1) / Fraction(c)
        out = []
        for p in self.coeffs[n:]:
            if any(p[:k]):
                raise NonExactMonomialDivision(f"not divisible by y^{k}")
            out.append(_pscale(p[k:], inv))
        return BivariateSeries._raw(out, self.order - n)

    def mul_monomial(self, n: int, k: int = 0) -> "BivariateSeries":
        out = [[] for _ in range(n)] + [([0] * k + p) if p else [] for p in self.coeffs]
        return BivariateSeries._raw(out[: self.order + 1], self.order)

    # output -----------------------------------------------------------

    def univariate(self) -> list:
        """Coefficient list in ``x``; only valid when no ``y`` appears."""
        vals = []
        for n, p in enumerate(self.coeffs):
            if len(p) > 1:
                raise ValueError(f"coefficient of x^{n} depends on y")
            vals.append(p[0] if p else 0)
        return vals

    def to_json_obj(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [[_rat_str(c) for c in p] for p in self.coeffs],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> "BivariateSeries":
        return cls([[Fraction(c) for c in p] for p in obj["coeffs"]], obj["order"])

    def pretty(self, show_order: bool = True) -> str:
        terms = []
        for n, p in enumerate(self.coeffs):
            if not p:
                continue
            poly = _ypoly_str(p)
            nonzero = sum(1 for c in p if c != 0)
            if n == 0:
                terms.append(poly if nonzero == 1 else f"({poly})")
                continue
            xs = "x" if n == 1 else f"x^{n}"
            if nonzero == 1 and poly in ("1",):
                terms.append(xs)
            elif nonzero == 1 and poly == "-1":
                terms.append("-" + xs)
            elif nonzero == 1:
                terms.append(f"{poly} {xs}")
            else:
                terms.append(f"({poly}) {xs}")
        body = " + ".join(terms) if terms else "0"
        body = body.replace("+ -", "- ")
        if show_order:
            body += f" + O(x^{self.order + 1})"
        return body


def _rat_str(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _ypoly_str(p: YPoly) -> str:
    parts = []
    for k, c in enumerate(p):
        if c == 0:
            continue
        cs = _rat_str(c)
        if k == 0:
            parts.append(cs)
            continue
        ys = "y" if k == 1 else f"y^{k}"
        if cs == "1":
            parts.append(ys)
        elif cs == "-1":
            parts.append("-" + ys)
        else:
            parts.append(f"{cs}{ys}")
    return " + ".join(parts).replace("+ -", "- ")


def _const_of(s: BivariateSeries):
    p = s.coeffs[0]
    if len(p) != 1 or p[0] == 0:
        return None
    return p[0]


def div(a: BivariateSeries, b: BivariateSeries) -> BivariateSeries:
    """``q`` with ``q * b == a`` to the common order; ``b`` needs a nonzero scalar constant term."""
    c0 = _const_of(b)
    if c0 is None:
        raise NonInvertibleLeadingCoefficient("divisor needs a nonzero y-free constant term")
    n = min(a.order, b.order)
    inv = Fraction(1) / Fraction(c0)
    q: list = []
    for m in range(n + 1):
        acc = list(a.coeffs[m])
        for j in range(1, m + 1):
            if b.coeffs[j] and q[m - j]:
                acc = _padd(acc, _pmul(b.coeffs[j], q[m - j]), -1)
        q.append(_pscale(acc, inv))
    return BivariateSeries._raw(q, n)


def sqrt(a: BivariateSeries) -> BivariateSeries:
    """Square root with constant term 1, by the coefficient recursion ``2 s_m = a_m - sum s_i s_{m-i}``."""
    if a.coeffs[0] != [1]:
        raise BadConstantTerm("square root needs constant term exactly 1")
    half = Fraction(1, 2)
    s: list = [[1]]
    for m in range(1, a.order + 1):
        acc = list(a.coeffs[m])
        for i in range(1, m):
            if s[i] and s[m - i]:
                acc = _padd(acc, _pmul(s[i], s[m - i]), -1)
        s.append(_pscale(acc, half))
    return BivariateSeries._raw(s, a.order)


def x(order: int = DEFAULT_ORDER) -> BivariateSeries:
    return BivariateSeries.monomial(1, 0, 1, order)


def y(order: int = DEFAULT_ORDER) -> BivariateSeries:
    return BivariateSeries.monomial(0, 1, 1, order)


def add(a, b):
    return a + b


def sub(a, b):
    return a - b


def mul(a, b):
    return a * b


def dy(a: BivariateSeries) -> BivariateSeries:
    return a.dy()


def at_y1(a: BivariateSeries) -> BivariateSeries:
    return a.at_y1()


def coeff(a: BivariateSeries, n: int, k: int = 0):
    return a.coeff(n, k)
