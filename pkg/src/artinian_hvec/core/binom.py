"""Arbitrary-precision binomial calculus.

N(r, d), i-binomial expansions, the shift operator on expansions, and the
Macaulay growth / lower bounds built on top of them. Everything here works on
plain Python ints, so nothing overflows.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from artinian_hvec.core.errors import InvalidInputError
from artinian_hvec.core.models import BinExpansion


def binomial(n: int, k: int) -> int:
    """C(n, k) with C(n, k) = 0 when k > n."""
    if n < 0 or k < 0:
        raise InvalidInputError(f"binomial needs non-negative arguments, got ({n}, {k})")
    return comb(n, k)


def dim_poly(r: int, d: int) -> int:
    """N(r, d): number of degree-d monomials in r variables."""
    if r < 1:
        raise InvalidInputError(f"r must be at least 1, got {r}")
    if d < 0:
        return 0
    return comb(r - 1 + d, d)


def _largest_top(value: int, k: int) -> int:
    """Largest top with C(top, k) <= value (value >= 1)."""
    if k == 1:
        return value
    top = k
    while comb(top + 1, k) <= value:
        top += 1
    return top


@lru_cache(maxsize=65536)
def expand(n: int, i: int) -> BinExpansion:
    """Greedy i-binomial expansion of n.

    n = C(n_i, i) + C(n_{i-1}, i-1) + ... + C(n_j, j) with n_i > ... > n_j >= j >= 1.
    """
    if n < 1 or i < 1:
        raise InvalidInputError(f"expand needs n >= 1 and i >= 1, got ({n}, {i})")
    terms: list[tuple[int, int]] = []
    remaining = n
    k = i
    while remaining > 0:
        top = _largest_top(remaining, k)
        terms.append((top, k))
        remaining -= comb(top, k)
        k -= 1
    return BinExpansion(i=i, terms=tuple(terms))


def shift(exp: BinExpansion, a: int) -> int:
    """Sum of C(top + a, bottom + a) over the terms of ``exp``.

    A term whose bottom + a = 0 contributes 1 when top + a >= 0, else 0.
    """
    total = 0
    for top, bottom in exp.terms:
        m, j = top + a, bottom + a
        if j < 0:
            raise InvalidInputError(f"shift by {a} makes the bottom of C({top},{bottom}) negative")
        if m < j:
            continue
        total += 1 if j == 0 else comb(m, j)
    return total


def macaulay_growth(h: int, d: int) -> int:
    """Maximal h_{d+1} allowed after h_d = h (Macaulay)."""
    if h < 1 or d < 1:
        raise InvalidInputError(f"macaulay_growth needs h >= 1 and d >= 1, got ({h}, {d})")
    return shift(expand(h, d), 1)


def growth_or_zero(h: int, d: int) -> int:
    """Macaulay growth extended by 0 -> 0, for difference sequences that reach zero."""
    if h == 0:
        return 0
    return macaulay_growth(h, d)


def macaulay_lower(a: int, b: int) -> int:
    """Smallest s with a <= macaulay_growth(s, b - 1) (Bigatti-Geramita)."""
    if a < 1 or b < 2:
        raise InvalidInputError(f"macaulay_lower needs a >= 1 and b >= 2, got ({a}, {b})")
    return shift(expand(a, b), -1)
