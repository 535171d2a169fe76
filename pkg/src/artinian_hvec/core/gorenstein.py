"""Gorenstein h-vector checks and enumeration in embedding dimension at most 3.

In codimension 3 the Gorenstein h-vectors are exactly the SI-sequences:
symmetric, with a differentiable first half. In higher codimension that shape
is only sufficient.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from functools import lru_cache

from artinian_hvec.core.binom import growth_or_zero
from artinian_hvec.core.errors import InvalidInputError
from artinian_hvec.core.hvec import first_difference, first_half, is_differentiable, is_symmetric
from artinian_hvec.core.models import HVector

_log = logging.getLogger(__name__)

MAX_CODIMENSION = 3


def ci_check(h: HVector) -> bool:
    """Symmetric with differentiable first half: sufficient for Gorenstein in any codimension."""
    return is_symmetric(h) and is_differentiable(first_half(h))


def stanley_check(h: HVector) -> bool:
    """Exact Gorenstein test for h_1 <= 3."""
    if len(h) > 1 and h[1] > MAX_CODIMENSION:
        raise InvalidInputError(
            f"the SI characterization needs h_1 <= {MAX_CODIMENSION}, got h_1 = {h[1]}"
        )
    return ci_check(h)


def si_max_growth(prefix: HVector) -> int:
    """Largest v such that prefix + (v,) is still differentiable."""
    if len(prefix) < 2:
        raise InvalidInputError("si_max_growth needs a prefix of length at least 2")
    if not is_differentiable(prefix):
        raise InvalidInputError(f"prefix {prefix} is not differentiable")
    delta = first_difference(prefix)
    last = len(prefix) - 1
    return prefix[last] + growth_or_zero(delta[last], last)


def _limits(e: int, caps: Sequence[int | None] | None) -> list[int | None]:
    """Per-degree limit on the first half, folding caps_i and caps_{e-i} together."""
    half = e // 2
    if caps is None:
        return [None] * (half + 1)
    if len(caps) != e + 1:
        raise InvalidInputError(f"caps must have {e + 1} entries, got {len(caps)}")
    limits: list[int | None] = []
    for i in range(half + 1):
        pair = [c for c in (caps[i], caps[e - i]) if c is not None]
        limits.append(min(pair) if pair else None)
    return limits


def enumerate_gorenstein3(e: int, caps: Sequence[int | None] | None = None) -> list[HVector]:
    """All SI-sequences of socle degree e with h_1 <= 3 and h_i <= caps_i.

    ``None`` in ``caps`` means no cap in that degree. Output is sorted lexicographically.
    """
    if e < 0:
        raise InvalidInputError(f"socle degree must be non-negative, got {e}")
    limits = _limits(e, caps)
    if caps is not None and any(c is not None and c < 1 for c in caps):
        raise InvalidInputError("caps must be at least 1")
    found = _enumerate(e, tuple(limits))
    _log.debug("enumerate_gorenstein3(e=%d): %d vectors", e, len(found))
    return [HVector(v) for v in found]


@lru_cache(maxsize=4096)
def _enumerate(e: int, limits: tuple[int | None, ...]) -> tuple[tuple[int, ...], ...]:
    half = e // 2
    results: list[tuple[int, ...]] = []

    def mirror(prefix: list[int]) -> tuple[int, ...]:
        return tuple(prefix[i] if i <= half else prefix[e - i] for i in range(e + 1))

    def extend(prefix: list[int], delta: list[int]) -> None:
        d = len(prefix)
        if d > half:
            results.append(mirror(prefix))
            return
        low = prefix[-1]
        if d == 1:
            high = 1 + 2  # h_1 <= 3
        else:
            high = prefix[-1] + growth_or_zero(delta[-1], d - 1)
        limit = limits[d]
        if limit is not None:
            high = min(high, limit)
        for value in range(low, high + 1):
            prefix.append(value)
            delta.append(value - low)
            extend(prefix, delta)
            prefix.pop()
            delta.pop()

    if limits[0] is None or limits[0] >= 1:
        extend([1], [1])
    return tuple(sorted(results))
