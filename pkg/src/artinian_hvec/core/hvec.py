"""Predicates on h-vectors: O-sequences, differences, symmetry, partial order."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence

from artinian_hvec.core.binom import growth_or_zero
from artinian_hvec.core.errors import InvalidInputError
from artinian_hvec.core.models import Comparison, HVector

_log = logging.getLogger(__name__)


def is_o_sequence(h: HVector | Sequence[int]) -> bool:
    """True iff h_{d+1} <= macaulay_growth(h_d, d) for 1 <= d <= e - 1.

    Plain integer sequences are accepted so that first differences can be
    tested directly: they must start with 1, stay non-negative, and once an
    entry is 0 every later entry must be 0.
    """
    values = list(h)
    if not values or values[0] != 1 or any(v < 0 for v in values):
        return False
    for d in range(1, len(values) - 1):
        if values[d + 1] > growth_or_zero(values[d], d):
            return False
    return True


def first_difference(v: HVector | Sequence[int]) -> list[int]:
    """(1, v_1 - v_0, ..., v_e - v_{e-1})."""
    values = list(v)
    return [1] + [values[i] - values[i - 1] for i in range(1, len(values))]


def is_differentiable(v: HVector | Sequence[int]) -> bool:
    delta = first_difference(v)
    if any(x < 0 for x in delta):
        return False
    return is_o_sequence(delta)


def is_symmetric(h: HVector | Sequence[int]) -> bool:
    values = list(h)
    return values == values[::-1]


def is_unimodal(h: HVector | Sequence[int]) -> bool:
    values = list(h)
    i = 0
    while i + 1 < len(values) and values[i] <= values[i + 1]:
        i += 1
    while i + 1 < len(values) and values[i] >= values[i + 1]:
        i += 1
    return i == len(values) - 1


def first_half(h: HVector) -> HVector:
    """(h_0, ..., h_{floor(e/2)})."""
    return HVector(h.entries[: h.socle_degree // 2 + 1])


def compare(h: HVector, g: HVector) -> Comparison:
    """Entrywise partial order on h-vectors of the same length."""
    if len(h) != len(g):
        raise InvalidInputError(
            f"only vectors of the same length are comparable: {h} vs {g}"
        )
    ge = all(a >= b for a, b in zip(h, g))
    le = all(a <= b for a, b in zip(h, g))
    if ge and le:
        return Comparison.EQUAL
    if ge:
        return Comparison.GREATER_OR_EQUAL
    if le:
        return Comparison.LESS_OR_EQUAL
    return Comparison.INCOMPARABLE


def dominates(h: Sequence[int], g: Sequence[int]) -> bool:
    """h >= g entrywise (same length assumed)."""
    return all(a >= b for a, b in zip(h, g))


def maximal_elements(vectors: Iterable[HVector]) -> list[HVector]:
    """Pareto frontier of ``vectors`` under the entrywise order, sorted lexicographically."""
    unique = {v.entries: v for v in vectors}
    if not unique:
        return []
    lengths = {len(k) for k in unique}
    if len(lengths) > 1:
        raise InvalidInputError("maximal_elements needs vectors of equal length")

    # A vector can only be dominated by one with a strictly larger sum, so a
    # single pass in decreasing-sum order only compares against the frontier.
    ordered = sorted(unique, key=lambda k: (-sum(k), k))
    frontier: list[tuple[int, ...]] = []
    for candidate in ordered:
        if not any(dominates(kept, candidate) for kept in frontier):
            frontier.append(candidate)
    _log.debug("maximal_elements: %d inputs, %d maxima", len(unique), len(frontier))
    return [unique[k] for k in sorted(frontier)]
