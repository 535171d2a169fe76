"""Core data model dataclasses.

All other modules import from here. Keep this module free of side-effects and
heavy imports (no sympy, no pandas) so it stays usable from every layer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from math import comb
from typing import Any, Iterator

from artinian_hvec.core.errors import InvalidInputError

# ---------------------------------------------------------------------------
# Enums
# ---------------------------------------------------------------------------


class Comparison(str, Enum):
    EQUAL = "equal"
    GREATER_OR_EQUAL = "greater-or-equal"
    LESS_OR_EQUAL = "less-or-equal"
    INCOMPARABLE = "incomparable"


class BoundCase(str, Enum):
    """Which sufficient condition makes the recursive bound admissible."""

    GENERIC_STEP = "generic-step"  # c = t + 1
    TIGHT_STEP = "tight-step"  # c = t, small s_c
    SATURATED_SOCLE = "saturated-socle"  # c <= t - 1, large s_c
    NONE = "none"


class CheckStatus(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    INCONCLUSIVE = "INCONCLUSIVE"
    SKIPPED = "SKIPPED"


# ---------------------------------------------------------------------------
# Canonical vector text form
# ---------------------------------------------------------------------------


def parse_int_vector(text: str) -> tuple[int, ...]:
    """Parse ``"(1, 3,6)"`` into ``(1, 3, 6)``. Whitespace is optional."""
    stripped = text.strip()
    if len(stripped) < 2 or stripped[0] != "(" or stripped[-1] != ")":
        raise InvalidInputError(f"vector must be written as (a,b,...): {text!r}")
    body = stripped[1:-1].strip()
    if not body:
        raise InvalidInputError(f"empty vector: {text!r}")
    try:
        return tuple(int(part) for part in body.split(","))
    except ValueError:
        raise InvalidInputError(f"vector entries must be integers: {text!r}") from None


def format_vector(entries: Any) -> str:
    return "(" + ",".join(str(int(v)) for v in entries) + ")"


# ---------------------------------------------------------------------------
# Sequences
# ---------------------------------------------------------------------------


class _IntSequence:
    """Tuple-like behaviour shared by HVector and SocleVector."""

    entries: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, index):  # int or slice
        return self.entries[index]

    def __str__(self) -> str:
        return format_vector(self.entries)

    @property
    def socle_degree(self) -> int:
        return len(self.entries) - 1

    def to_list(self) -> list[int]:
        return list(self.entries)


@dataclass(frozen=True)
class HVector(_IntSequence):
    """Hilbert function of an artinian algebra: leading 1, every entry positive."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(int(v) for v in self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries or entries[0] != 1:
            raise InvalidInputError(f"an h-vector starts with 1: {format_vector(entries)}")
        if any(v < 1 for v in entries):
            raise InvalidInputError(
                f"h-vector entries must be positive: {format_vector(entries)}"
            )

    @classmethod
    def parse(cls, text: str) -> HVector:
        return cls(parse_int_vector(text))


@dataclass(frozen=True)
class SocleVector(_IntSequence):
    """Socle dimensions by degree: s_0 = 0, last entry positive, e > 1."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(int(v) for v in self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) < 3:
            raise InvalidInputError(
                f"a socle-vector needs socle degree at least 2: {format_vector(entries)}"
            )
        if entries[0] != 0:
            raise InvalidInputError(f"s_0 must be 0: {format_vector(entries)}")
        if entries[-1] <= 0:
            raise InvalidInputError(f"last socle entry must be positive: {format_vector(entries)}")
        if any(v < 0 for v in entries):
            raise InvalidInputError(
                f"socle entries must be non-negative: {format_vector(entries)}"
            )

    @classmethod
    def parse(cls, text: str) -> SocleVector:
        return cls(parse_int_vector(text))

    @property
    def socle_type(self) -> int:
        return sum(self.entries[1:])

    def nonzero_degrees(self) -> list[int]:
        return [i for i, v in enumerate(self.entries) if v]

    def two_entry(self) -> TwoEntrySocle | None:
        """Return the (p, s_p, e) view when s_e = 1 and exactly one other entry is nonzero."""
        e = self.socle_degree
        degrees = self.nonzero_degrees()
        if self.entries[e] != 1 or len(degrees) != 2:
            return None
        p = degrees[0]
        return TwoEntrySocle(p=p, s_p=self.entries[p], e=e)


@dataclass(frozen=True)
class PairRS:
    """Embedding dimension r together with a socle-vector."""

    r: int
    socle: SocleVector

    def __post_init__(self) -> None:
        if self.r < 2:
            raise InvalidInputError(f"embedding dimension must be at least 2, got {self.r}")

    @property
    def e(self) -> int:
        return self.socle.socle_degree

    def to_dict(self) -> dict[str, Any]:
        return {"r": self.r, "socle": self.socle.to_list()}


# ---------------------------------------------------------------------------
# Binomial expansion
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BinExpansion:
    """i-binomial expansion: terms (top, bottom) with bottoms i, i-1, ..., j >= 1."""

    i: int
    terms: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        return sum(comb(top, bottom) for top, bottom in self.terms)

    def __str__(self) -> str:
        return "+".join(f"C({top},{bottom})" for top, bottom in self.terms)


# ---------------------------------------------------------------------------
# Two-entry socle and reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TwoEntrySocle:
    """Socle-vector with s_p at degree p and s_e = 1 (no cap on s_p)."""

    p: int
    s_p: int
    e: int

    def __post_init__(self) -> None:
        if not 1 <= self.p < self.e:
            raise InvalidInputError(f"need 1 <= p < e, got p={self.p}, e={self.e}")
        if self.s_p < 1:
            raise InvalidInputError(f"s_p must be positive, got {self.s_p}")

    def socle_vector(self) -> SocleVector:
        entries = [0] * (self.e + 1)
        entries[self.p] = self.s_p
        entries[self.e] = 1
        return SocleVector(tuple(entries))

    def pair(self, r: int = 3) -> PairRS:
        return PairRS(r=r, socle=self.socle_vector())

    def to_dict(self) -> dict[str, int]:
        return {"p": self.p, "s_p": self.s_p, "e": self.e}


@dataclass(frozen=True)
class BoundProfile:
    """Everything keyed to one pair (r, s)."""

    pair: PairRS
    r_values: tuple[int, ...]
    b: int
    fl: HVector
    recursive: HVector
    c: int
    t: int
    coincide: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "r_values": list(self.r_values),
            "b": self.b,
            "c": self.c,
            "t": self.t,
            "fl": self.fl.to_list(),
            "zanello": self.recursive.to_list(),
            "coincide": self.coincide,
        }


@dataclass(frozen=True)
class MaximaReport:
    """Relative maxima inside the tail-candidate family of one two-entry socle."""

    pair: TwoEntrySocle
    candidates_examined: int
    maxima: tuple[HVector, ...]
    family: str = "tail-candidate"
    heuristic_prefix: bool = True

    @property
    def unique(self) -> bool:
        return len(self.maxima) == 1

    def to_dict(self) -> dict[str, Any]:
        return {
            "pair": self.pair.to_dict(),
            "maxima": [h.to_list() for h in self.maxima],
            "unique": self.unique,
            "candidates_examined": self.candidates_examined,
            "family": self.family,
            "heuristic_prefix": self.heuristic_prefix,
        }


# ---------------------------------------------------------------------------
# Check findings
# ---------------------------------------------------------------------------


@dataclass
class Finding:
    """Outcome of one registered check on one h-vector."""

    check_id: str
    status: CheckStatus
    message: str
    extra: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "check_id": self.check_id,
            "status": self.status.value,
            "message": self.message,
            "extra": self.extra,
        }
