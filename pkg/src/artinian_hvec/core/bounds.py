"""Everything keyed to a pair (r, s).

The r_d numbers and the switch index b, the Froberg-Laksov bound, the
recursive socle bound, the criterion for the two to coincide, the indices c
and t, the admissibility predicates, and the generalized compressed h-vector
for two-entry socles.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from artinian_hvec.core.binom import dim_poly, expand, macaulay_growth, shift
from artinian_hvec.core.errors import InfeasiblePairError, InvalidInputError
from artinian_hvec.core.models import BoundCase, BoundProfile, HVector, PairRS, TwoEntrySocle

_log = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# r_d numbers and index b
# ---------------------------------------------------------------------------


def r_numbers(pair: PairRS) -> tuple[int, ...]:
    """r_d = N(r,d) - sum_{i=d..e} N(r, i-d) s_i for d = 0..e."""
    r, s, e = pair.r, pair.socle.entries, pair.e
    return tuple(
        dim_poly(r, d) - sum(dim_poly(r, i - d) * s[i] for i in range(d, e + 1))
        for d in range(e + 1)
    )


def b_index(pair: PairRS) -> int:
    """The unique b in [1, e] with r_b >= 0 and r_{b-1} < 0."""
    values = r_numbers(pair)
    for d in range(1, pair.e + 1):
        if values[d] >= 0 and values[d - 1] < 0:
            return d
    raise InfeasiblePairError(
        f"s_e = {pair.socle[pair.e]} exceeds N({pair.r},{pair.e}); no index b exists",
        degree=pair.e,
    )


def capacity_violations(pair: PairRS) -> list[int]:
    """Degrees where s_i > N(r, i).

    Such a socle cannot live in r variables; this flags (but does not decide)
    r < min.emb.dim(s).
    """
    return [
        i for i, s_i in enumerate(pair.socle.entries) if s_i > dim_poly(pair.r, i)
    ]


# ---------------------------------------------------------------------------
# Upper bounds
# ---------------------------------------------------------------------------


def fl_bound(pair: PairRS) -> HVector:
    """h_i = min{N(r,i) - r_i, N(r,i)}."""
    values = r_numbers(pair)
    return HVector(
        tuple(min(dim_poly(pair.r, i) - values[i], dim_poly(pair.r, i)) for i in range(pair.e + 1))
    )


def recursive_bound(pair: PairRS) -> HVector:
    """h_0 = 1, h_1 = r, h_i = min{((h_{i-1} - s_{i-1})_(i-1))^{+1}_{+1}, N(r,i) - r_i}.

    Raises InfeasiblePairError when h_{i-1} - s_{i-1} <= 0 for some i <= e,
    or when h_e < s_e.
    """
    r, s, e = pair.r, pair.socle.entries, pair.e
    values = r_numbers(pair)
    h = [1, r]
    for i in range(2, e + 1):
        free = h[i - 1] - s[i - 1]
        if free <= 0:
            raise InfeasiblePairError(
                f"socle consumes the algebra: h_{i - 1} - s_{i - 1} = {free}", degree=i
            )
        h.append(min(macaulay_growth(free, i - 1), dim_poly(r, i) - values[i]))
    if h[e] < s[e]:
        raise InfeasiblePairError(
            f"socle exceeds the top degree: h_{e} = {h[e]} < s_{e} = {s[e]}", degree=e
        )
    return HVector(tuple(h[: e + 1]))


def bounds_coincide(pair: PairRS) -> bool:
    """s_0 = ... = s_{b-2} = 0 and s_{b-1} <= N(r,b-1) - ((N(r,b) - r_b)_(b))^{-1}_{-1}."""
    s = pair.socle.entries
    b = b_index(pair)
    if any(s[i] for i in range(0, b - 1)):
        return False
    top = dim_poly(pair.r, b) - r_numbers(pair)[b]
    return s[b - 1] <= dim_poly(pair.r, b - 1) - shift(expand(top, b), -1)


def low_socle_admissible(pair: PairRS) -> bool:
    """s_0 = ... = s_{b-2} = 0 and s_{b-1} <= max{N(r,b-1) - (N(r,b) - r_b), 0}.

    When this holds the Froberg-Laksov bound is admissible for the pair.
    """
    s = pair.socle.entries
    b = b_index(pair)
    if any(s[i] for i in range(0, b - 1)):
        return False
    top = dim_poly(pair.r, b) - r_numbers(pair)[b]
    return s[b - 1] <= max(dim_poly(pair.r, b - 1) - top, 0)


# ---------------------------------------------------------------------------
# Indices c, t and the admissibility cases
# ---------------------------------------------------------------------------


def _growth_term(pair: PairRS, h: HVector, i: int) -> int:
    # degree-0 term is 1 and (1_(0))^{+1}_{+1} = r by convention
    if i == 0:
        return 1
    if i == 1:
        return pair.r
    return macaulay_growth(h[i - 1] - pair.socle[i - 1], i - 1)


def c_t_indices(pair: PairRS) -> tuple[int, int]:
    """(c, t) for the recursive bound h.

    c is the largest i with h_i = N(r,i); t is the largest i where the growth
    branch strictly wins: h_t = growth term < N(r,t) - r_t.
    """
    h = recursive_bound(pair)
    values = r_numbers(pair)
    r = pair.r
    c = max(i for i in range(pair.e + 1) if h[i] == dim_poly(r, i))
    t = max(
        i
        for i in range(pair.e + 1)
        if h[i] == _growth_term(pair, h, i) < dim_poly(r, i) - values[i]
    )
    return c, t


def admissibility_case(pair: PairRS) -> BoundCase:
    """First sufficient condition under which the recursive bound is admissible."""
    h = recursive_bound(pair)
    c, t = c_t_indices(pair)
    s_c = pair.socle[c]
    n_c = dim_poly(pair.r, c)
    if c == t + 1:
        return BoundCase.GENERIC_STEP
    if c == t:
        h_next = h[c + 1] if c < pair.e else 0
        if s_c <= max(n_c - h_next, 0):
            return BoundCase.TIGHT_STEP
    if c <= t - 1 and s_c >= n_c - c:
        return BoundCase.SATURATED_SOCLE
    return BoundCase.NONE


def bound_profile(pair: PairRS) -> BoundProfile:
    recursive = recursive_bound(pair)
    c, t = c_t_indices(pair)
    return BoundProfile(
        pair=pair,
        r_values=r_numbers(pair),
        b=b_index(pair),
        fl=fl_bound(pair),
        recursive=recursive,
        c=c,
        t=t,
        coincide=bounds_coincide(pair),
    )


# ---------------------------------------------------------------------------
# Two-entry socles: generalized compressed vector and symmetric bound
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SymmetricBound:
    """Symmetric upper bound; ``known_admissible`` is False when s_p >= r."""

    hvector: HVector
    known_admissible: bool


def _two_entry_pair(r: int, p: int, s_p: int, e: int) -> PairRS:
    return TwoEntrySocle(p=p, s_p=s_p, e=e).pair(r)


def _symmetric_tail_vector(r: int, p: int, s_p: int, e: int) -> HVector:
    # generic through p, Macaulay growth of N(r,p) - s_p up to the middle, mirrored after
    top = dim_poly(r, p) - s_p
    if top < 1:
        raise InfeasiblePairError(f"s_p = {s_p} fills N({r},{p})", degree=p + 1)
    half = e // 2
    h = [0] * (e + 1)
    for i in range(p + 1):
        h[i] = dim_poly(r, i)
    exp = expand(top, p)
    for a in range(1, half - p + 1):
        h[p + a] = shift(exp, a)
    for i in range(half + 1, e + 1):
        h[i] = top if i == e - p else h[e - i]
    return HVector(tuple(h))


def generalized_compressed_hvector(r: int, p: int, s_p: int, e: int) -> HVector:
    """Unique maximal h-vector for the socle (s_p at p, s_e = 1) when 1 <= s_p <= r - 1.

    For p >= e/2 this is the Froberg-Laksov bound of the pair; for p < e/2 it is
    generic through p, grows by Macaulay from N(r,p) - s_p, and is symmetric after
    the middle with h_{e-p} = N(r,p) - s_p.
    """
    if not 1 <= s_p <= r - 1:
        raise InvalidInputError(f"need 1 <= s_p <= r - 1, got s_p={s_p}, r={r}")
    pair = _two_entry_pair(r, p, s_p, e)
    if 2 * p >= e:
        return fl_bound(pair)
    return _symmetric_tail_vector(r, p, s_p, e)


def symmetric_upper_bound(r: int, p: int, s_p: int, e: int) -> SymmetricBound:
    """Same construction as the p < e/2 generalized compressed vector, without the s_p cap."""
    _two_entry_pair(r, p, s_p, e)  # validates r, p and e
    if 2 * p >= e:
        raise InvalidInputError(f"the symmetric bound needs p < e/2, got p={p}, e={e}")
    hvector = _symmetric_tail_vector(r, p, s_p, e)
    known = s_p <= r - 1
    if not known:
        _log.debug("symmetric bound for s_p=%d >= r=%d: admissibility unknown", s_p, r)
    return SymmetricBound(hvector=hvector, known_admissible=known)


# ---------------------------------------------------------------------------
# Existence of a generalized compressed algebra
# ---------------------------------------------------------------------------


def generalized_compressed_exists(pair: PairRS) -> bool | None:
    """True when a known sufficient condition guarantees a unique maximum; None if undecided."""
    s = pair.socle
    over = capacity_violations(pair)
    if over:
        raise InfeasiblePairError(f"socle exceeds N(r,i) at degrees {over}", degree=over[0])
    recursive_bound(pair)  # raises when the socle swallows the algebra
    if pair.r == 2 or s.socle_type <= 2 or s.nonzero_degrees() == [pair.e]:
        return True
    two = s.two_entry()
    if s.socle_type == 3 and two is not None and two.s_p == 2:
        return True
    if two is not None and pair.r == 3:
        from artinian_hvec.core.maxima import classify_existence

        return classify_existence(two)
    if low_socle_admissible(pair) or admissibility_case(pair) is not BoundCase.NONE:
        return True
    return None
