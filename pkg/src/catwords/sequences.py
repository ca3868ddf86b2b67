"""Classical integer sequences and the binomial convention used by the counting formulas."""

from __future__ import annotations

import math
from functools import lru_cache


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero when ``b < 0``, ``b > a`` or ``a < 0``."""
    if a < 0 or b < 0 or b > a:
        return 0
    return math.comb(a, b)


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    return sum(catalan(i) * catalan(n - 1 - i) for i in range(n))


@lru_cache(maxsize=None)
def motzkin(n: int) -> int:
    """m_0 = m_1 = 1, m_{n+1} = m_n + sum_{k=0}^{n-1} m_k m_{n-1-k}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n <= 1:
        return 1
    return motzkin(n - 1) + sum(motzkin(k) * motzkin(n - 2 - k) for k in range(n - 1))


def motzkin_printed_sum(n: int) -> int:
    """The binomial-Catalan sum with ``binom(2n, k)``, kept to expose its mismatch with m_n."""
    return sum(binom(2 * n, k) * catalan(k) for k in range(n // 2 + 1))


def motzkin_binomial_sum(n: int) -> int:
    """Standard identity m_n = sum_k binom(n, 2k) C_k."""
    return sum(binom(n, 2 * k) * catalan(k) for k in range(n // 2 + 1))


@lru_cache(maxsize=None)
def fibonacci(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@lru_cache(maxsize=None)
def pell(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, 2 * b + a
    return a


SPECIAL = {
    "catalan": catalan,
    "motzkin": motzkin,
    "fibonacci": fibonacci,
    "pell": pell,
}


def special(kind: str, n: int) -> int:
    try:
        fn = SPECIAL[kind]
    except KeyError:
        raise ValueError(f"unknown sequence {kind!r}; choose from {sorted(SPECIAL)}") from None
    return fn(n)
