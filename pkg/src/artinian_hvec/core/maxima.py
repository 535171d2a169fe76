"""Relative maxima and existence for two-entry socles in embedding dimension 3.

Every admissible h-vector for the socle (s_p at p, s_e = 1) is read off a
Gorenstein h-vector g of socle degree e (the "tail") plus s_p extra generators
of degree p. ``relative_maxima`` walks all such tails, builds the candidate for
each, and keeps the Pareto frontier. ``classify_existence`` answers the same
uniqueness question in closed form, and ``non_existence_witnesses`` produces two
incomparable admissible vectors whenever it answers no.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any

from artinian_hvec.core.binom import dim_poly
from artinian_hvec.core.bounds import generalized_compressed_hvector
from artinian_hvec.core.errors import BudgetExceededError, InfeasiblePairError, InvalidInputError
from artinian_hvec.core.gorenstein import enumerate_gorenstein3, stanley_check
from artinian_hvec.core.hvec import compare, maximal_elements
from artinian_hvec.core.models import Comparison, HVector, MaximaReport, TwoEntrySocle

_log = logging.getLogger(__name__)

R = 3


def _n(d: int) -> int:
    return dim_poly(R, d)


# ---------------------------------------------------------------------------
# Closed-form existence classifier
# ---------------------------------------------------------------------------


class ExistenceBranch(str, Enum):
    """Which condition of the classifier decided the pair."""

    HIGH_DEGREE = "p ≥ ⌊e/2⌋"
    SMALL_SOCLE = "s_p ≤ 2"
    LARGE_SOCLE = "s_p ≥ N(3,p)-p"
    NON_EXISTENCE = "3 ≤ s_p < N(3,p)-p"

    @property
    def exists(self) -> bool:
        return self is not ExistenceBranch.NON_EXISTENCE


def existence_branch(ts: TwoEntrySocle) -> ExistenceBranch:
    if ts.p >= ts.e // 2:
        return ExistenceBranch.HIGH_DEGREE
    if ts.s_p <= 2:
        return ExistenceBranch.SMALL_SOCLE
    if ts.s_p >= _n(ts.p) - ts.p:
        return ExistenceBranch.LARGE_SOCLE
    return ExistenceBranch.NON_EXISTENCE


def classify_existence(ts: TwoEntrySocle) -> bool:
    """True iff a generalized compressed algebra exists for (3, ts)."""
    return existence_branch(ts).exists


# ---------------------------------------------------------------------------
# Tail candidates
# ---------------------------------------------------------------------------


def _tail_cap(ts: TwoEntrySocle) -> int:
    cap = _n(ts.p) - ts.s_p
    if cap < 1:
        raise InfeasiblePairError(
            f"s_p = {ts.s_p} >= N(3,{ts.p}) leaves nothing above degree {ts.p}",
            degree=ts.p + 1,
        )
    return cap


def candidate_from_tail(g: HVector, ts: TwoEntrySocle) -> HVector:
    """h-vector obtained from the Gorenstein tail g by adding s_p generators in degree p.

    Above p the vector is g; at p it grows by s_p; below p it is filled by the
    estimate min{N(3,i), g_i + s_p * N(3,p-i)}.
    """
    if len(g) != ts.e + 1:
        raise InvalidInputError(f"tail {g} must have socle degree {ts.e}")
    if not stanley_check(g):
        raise InvalidInputError(f"tail {g} is not a Gorenstein h-vector")
    cap = _n(ts.p) - ts.s_p
    if g[ts.p] > cap:
        raise InvalidInputError(f"g_{ts.p} = {g[ts.p]} exceeds N(3,{ts.p}) - s_p = {cap}")
    h = list(g)
    h[ts.p] = g[ts.p] + ts.s_p
    for i in range(ts.p):
        h[i] = min(_n(i), g[i] + ts.s_p * _n(ts.p - i))
    return HVector(tuple(h))


def gorenstein_tail(h: HVector, ts: TwoEntrySocle) -> HVector:
    """The Gorenstein vector behind a candidate: h above p, h_p - s_p at p, mirrored below."""
    if len(h) != ts.e + 1:
        raise InvalidInputError(f"{h} must have socle degree {ts.e}")
    g = [0] * (ts.e + 1)
    for i in range(ts.e + 1):
        if i > ts.p:
            g[i] = h[i]
        elif i == ts.p:
            g[i] = h[i] - ts.s_p
        else:
            g[i] = h[ts.e - i]
    return HVector(tuple(g))


def _budget(budget: int | None) -> int:
    if budget is not None:
        return budget
    from artinian_hvec.core.settings import load_settings

    return load_settings().max_socle_degree


def relative_maxima(ts: TwoEntrySocle, budget: int | None = None) -> MaximaReport:
    """Pareto maxima of the tail-candidate family for (3, ts).

    ``budget`` caps the socle degree that may be enumerated; ``None`` reads it
    from the settings.
    """
    limit = _budget(budget)
    if ts.e > limit:
        raise BudgetExceededError(requested=ts.e, limit=limit)
    cap = _tail_cap(ts)
    caps: list[int | None] = [None] * (ts.e + 1)
    # g is symmetric, so g_{e-p} = g_p
    caps[ts.p] = caps[ts.e - ts.p] = cap

    tails = enumerate_gorenstein3(ts.e, caps)
    candidates = [candidate_from_tail(g, ts) for g in tails]
    candidates = [h for h in candidates if h[1] == R]
    maxima = maximal_elements(candidates)
    _log.debug(
        "relative_maxima(%s): %d tails, %d candidates, %d maxima",
        ts.to_dict(),
        len(tails),
        len(candidates),
        len(maxima),
    )
    return MaximaReport(pair=ts, candidates_examined=len(tails), maxima=tuple(maxima))


def dominant_tail(ts: TwoEntrySocle) -> HVector:
    """Largest Gorenstein tail with g_p <= N(3,p) - s_p.

    Compressed when the cap does not bite at e-p; otherwise the first half is
    min{N(3,j), cap}, which is flat once it reaches the cap.
    """
    cap = _tail_cap(ts)
    e = ts.e
    capped = cap < _n(e - ts.p)
    half = [min(_n(j), cap) if capped else _n(j) for j in range(e // 2 + 1)]
    return HVector(tuple(half[min(i, e - i)] for i in range(e + 1)))


def existence_maximum(ts: TwoEntrySocle) -> HVector:
    """Closed form of the unique maximum when ``classify_existence`` holds."""
    branch = existence_branch(ts)
    if branch is ExistenceBranch.NON_EXISTENCE:
        raise InvalidInputError(f"no unique maximum for {ts.to_dict()}: {branch.value}")
    _tail_cap(ts)
    if branch is ExistenceBranch.SMALL_SOCLE:
        return generalized_compressed_hvector(R, ts.p, ts.s_p, ts.e)
    return candidate_from_tail(dominant_tail(ts), ts)


# ---------------------------------------------------------------------------
# Families with many maxima
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ManyMaximaFamily:
    """Socle (p=2n-1, s_p=2n+1, e=4n) together with the n maxima predicted for it."""

    n: int
    socle: TwoEntrySocle
    predicted: tuple[HVector, ...]

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "pair": self.socle.to_dict(),
            "predicted": [h.to_list() for h in self.predicted],
        }


def many_maxima_family(n: int) -> ManyMaximaFamily:
    if n < 2:
        raise InvalidInputError(f"the family needs n >= 2, got {n}")
    p, e = 2 * n - 1, 4 * n
    ts = TwoEntrySocle(p=p, s_p=2 * n + 1, e=e)
    base = _n(2 * n - 2)
    predicted = []
    for k in range(1, n + 1):
        middle = (base + k - 2, base - 1, base - k)
        h = [_n(i) for i in range(p + 1)]
        h.extend(middle)
        h.extend(_n(e - i) for i in range(2 * n + 3, e + 1))
        predicted.append(HVector(tuple(h)))
    return ManyMaximaFamily(n=n, socle=ts, predicted=tuple(sorted(predicted, key=tuple)))


def verify_many_maxima(n: int, budget: int | None = None) -> bool:
    """Every predicted vector is a relative maximum and there are at least n maxima."""
    family = many_maxima_family(n)
    report = relative_maxima(family.socle, budget=budget)
    found = set(report.maxima)
    missing = [h for h in family.predicted if h not in found]
    if missing:
        _log.debug("family n=%d: predicted maxima not found: %s", n, [str(h) for h in missing])
    return not missing and len(report.maxima) >= n


# ---------------------------------------------------------------------------
# Non-existence witnesses
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WitnessPair:
    """Two incomparable admissible h-vectors; ``q`` is set only when slope < 0."""

    h: HVector
    h_prime: HVector
    slope: int
    q: int | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "h": self.h.to_list(),
            "h_prime": self.h_prime.to_list(),
            "slope": self.slope,
            "q": self.q,
        }


def _mirror_middle(h: list[int], p: int, e: int) -> None:
    for i in range(p + 1, e // 2 + 1):
        h[i] = h[e - i]


def _rising_tail(p: int, e: int, cap: int, slope: int, bump: int) -> list[int]:
    """Generic up to p, N(3,e-i) from e-p+1 on, cap + slope*j going down from e-p."""
    h = [0] * (e + 1)
    for i in range(p + 1):
        h[i] = _n(i)
    for i in range(e - p + 1, e + 1):
        h[i] = _n(e - i)
    h[e - p + 1] -= bump
    for j in range(e // 2 - p + 1):
        h[e - p - j] = cap + slope * j
    _mirror_middle(h, p, e)
    return h


def _q_index(p: int, cap: int) -> int:
    q = next(q for q in range(p + 1) if cap - q >= _n(p - q))
    if not 2 <= q <= p:
        raise AssertionError(f"q = {q} outside [2, {p}]")
    middle = cap - q + 1 - _n(p - q)
    if not p - q + 2 >= middle >= 1:
        raise AssertionError(f"q = {q}: {p - q + 2} >= {middle} >= 1 fails")
    return q


def non_existence_witnesses(ts: TwoEntrySocle) -> WitnessPair:
    """Two incomparable admissible vectors for a pair in the non-existence regime."""
    if existence_branch(ts) is not ExistenceBranch.NON_EXISTENCE:
        raise InvalidInputError(
            f"{ts.to_dict()} is not in the non-existence regime 3 <= s_p < N(3,p)-p, p < e/2"
        )
    p, e = ts.p, ts.e
    cap = _n(p) - ts.s_p
    slope = p + 1 - ts.s_p

    if slope >= 0:
        h = _rising_tail(p, e, cap, slope, bump=0)
        h_prime = _rising_tail(p, e, cap, slope + 1, bump=1)
        q = None
    else:
        h = [_n(i) if i <= p else min(cap, _n(e - i)) for i in range(e + 1)]
        h_prime = [0] * (e + 1)
        for i in range(p + 1):
            h_prime[i] = _n(i)
        for j in range(p + 1):
            h_prime[e - p + j] = min(cap - j, _n(p - j))
        for j in range(e // 2 - p + 1):
            h_prime[e - p - j] = cap + j
        _mirror_middle(h_prime, p, e)
        q = _q_index(p, cap)

    pair = WitnessPair(h=HVector(tuple(h)), h_prime=HVector(tuple(h_prime)), slope=slope, q=q)
    if compare(pair.h, pair.h_prime) is not Comparison.INCOMPARABLE:
        raise AssertionError(f"witnesses {pair.h} and {pair.h_prime} are comparable")
    return pair
