"""Inverse systems: the h-vector and socle-vector of R/Ann(M) from derivative ranks.

M is a finitely generated submodule of S = Q[y1, ..., yr] under partial
differentiation. Its degree-d piece is spanned by the order-(deg F - d)
derivatives of every generator F with deg F >= d, so

    h_d = rank of those derivatives on the degree-d monomial basis,
    s_d = h_d - rank of the first partials of the degree-(d+1) piece.

Witness construction for generalized compressed algebras also lives here.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from pathlib import Path

import chardet

from artinian_hvec.core.binom import dim_poly
from artinian_hvec.core.bounds import generalized_compressed_hvector
from artinian_hvec.core.errors import FormParseError, HVecError, InvalidInputError
from artinian_hvec.core.forms import (
    Form,
    derivative,
    format_form,
    linear_form,
    monomials,
    parse_form,
    power_sum,
    random_form,
)
from artinian_hvec.core.hvec import first_difference, is_differentiable
from artinian_hvec.core.linalg import rank
from artinian_hvec.core.models import HVector, SocleVector, TwoEntrySocle

_log = logging.getLogger(__name__)


@dataclass(frozen=True)
class InverseSystem:
    """Generators of M, all in the same r variables."""

    r: int
    generators: tuple[Form, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "generators", tuple(self.generators))
        for f in self.generators:
            if f.r != self.r:
                raise InvalidInputError(f"generator in {f.r} variables, system has {self.r}")
            if f.is_zero:
                raise InvalidInputError("the zero form cannot generate an inverse system")

    @property
    def socle_degree(self) -> int:
        if not self.generators:
            raise InvalidInputError("empty inverse system")
        return max(f.degree for f in self.generators)

    def __len__(self) -> int:
        return len(self.generators)


# ---------------------------------------------------------------------------
# Ranks
# ---------------------------------------------------------------------------


def _derivative_rows(forms: Iterable[Form], d: int, min_order: int = 0) -> list[list]:
    """Coefficients of the order-(deg F - d) derivatives, for each F with deg F - d >= min_order."""
    rows = []
    for f in forms:
        order = f.degree - d
        if order < min_order:
            continue
        basis = monomials(f.r, d)
        for operator in monomials(f.r, order):
            rows.append(derivative(f, operator).coefficient_vector(basis))
    return rows


def graded_piece_dim(system: InverseSystem, d: int) -> int:
    """dim_Q of the degree-d piece of M."""
    if d < 0:
        return 0
    return rank(_derivative_rows(system.generators, d))


def hvector_of(system: InverseSystem) -> HVector:
    e = system.socle_degree
    return HVector(tuple(graded_piece_dim(system, d) for d in range(e + 1)))


def socle_of(system: InverseSystem) -> SocleVector:
    """Minimal generator counts of M, degree by degree."""
    e = system.socle_degree
    entries = []
    for d in range(e + 1):
        piece = graded_piece_dim(system, d)
        from_above = rank(_derivative_rows(system.generators, d, min_order=1))
        entries.append(piece - from_above)
    return SocleVector(tuple(entries))


def add_generators(system: InverseSystem, forms: Sequence[Form]) -> InverseSystem:
    """M + <forms>; every added form must have the same degree."""
    if not forms:
        return system
    degrees = {f.degree for f in forms}
    if len(degrees) != 1:
        raise InvalidInputError(f"added forms must share one degree, got {sorted(degrees)}")
    return InverseSystem(r=system.r, generators=system.generators + tuple(forms))


def random_forms(r: int, d: int, count: int, seed: int, bound: int = 99) -> list[Form]:
    """``count`` seeded random forms; form k uses seed ``seed * 1000 + k``."""
    return [random_form(r, d, seed * 1000 + k, bound) for k in range(count)]


# ---------------------------------------------------------------------------
# Witnesses
# ---------------------------------------------------------------------------


def _order_ideal(delta: Sequence[int], n_vars: int) -> list[tuple[int, ...]]:
    """Lex-last monomials: in degree j keep the delta_j smallest, in n_vars variables."""
    if n_vars == 0:
        if any(delta[1:]):
            raise InvalidInputError(f"first difference {tuple(delta)} needs more variables")
        return [()]
    points: list[tuple[int, ...]] = []
    for j, count in enumerate(delta):
        basis = monomials(n_vars, j)
        if count > len(basis):
            raise InvalidInputError(
                f"first difference {tuple(delta)} exceeds N({n_vars},{j}) in degree {j}"
            )
        if count:
            points.extend(basis[len(basis) - count :])
    return points


def gorenstein_witness(first_half: HVector, e: int, r: int | None = None) -> Form:
    """A form F of degree e with hvector_of({F}) = the SI-sequence of ``first_half``.

    F is the sum of e-th powers of y1 + a_1*y2 + ... + a_{r-1}*yr over the
    lattice points a of an order ideal with h-vector first_difference(first_half).
    """
    half = e // 2
    if len(first_half) != half + 1:
        raise InvalidInputError(f"first half {first_half} must have {half + 1} entries for e = {e}")
    if not is_differentiable(first_half):
        raise InvalidInputError(f"first half {first_half} is not differentiable")
    h_1 = first_half[1] if len(first_half) > 1 else 1
    if r is None:
        r = h_1
    if h_1 > r:
        raise InvalidInputError(f"h_1 = {first_half[1]} needs more than {r} variables")

    delta = first_difference(first_half)
    points = _order_ideal(delta, r - 1)
    lines = [linear_form((1, *point)) for point in points]
    f = power_sum(lines, e)

    expected = HVector(tuple(first_half[min(i, e - i)] for i in range(e + 1)))
    observed = hvector_of(InverseSystem(r=r, generators=(f,)))
    if observed != expected:
        raise HVecError(f"witness for {first_half} has h-vector {observed}, expected {expected}")
    _log.debug("gorenstein witness for %s: %d points", first_half, len(points))
    return f


def _tail_first_half(r: int, p: int, s_p: int, e: int) -> HVector:
    """First half of the Gorenstein vector g behind the target when 2p <= e.

    g is generic below p, N(r,p) - s_p at p, and agrees with the target above p.
    """
    values = [dim_poly(r, i) for i in range(p)] + [dim_poly(r, p) - s_p]
    if 2 * p < e:
        target = generalized_compressed_hvector(r, p, s_p, e)
        values.extend(target[i] for i in range(p + 1, e // 2 + 1))
    return HVector(tuple(values))


def generalized_compressed_witness(
    r: int,
    p: int,
    s_p: int,
    e: int,
    seed: int = 0,
    bound: int = 99,
    attempts: int = 3,
) -> InverseSystem:
    """An inverse system realizing the generalized compressed vector of (r, s_p at p, s_e = 1).

    For 2p <= e the degree-e generator is the Gorenstein witness whose tail is
    the target vector; otherwise it is a random form. s_p random forms of
    degree p are added on top. Up to ``attempts`` further seeds are tried.
    """
    target = generalized_compressed_hvector(r, p, s_p, e)
    socle = TwoEntrySocle(p=p, s_p=s_p, e=e).socle_vector()
    top = gorenstein_witness(_tail_first_half(r, p, s_p, e), e, r) if 2 * p <= e else None

    for attempt in range(attempts + 1):
        current = seed + attempt
        f = top if top is not None else random_form(r, e, current, bound)
        system = add_generators(
            InverseSystem(r=r, generators=(f,)), random_forms(r, p, s_p, current, bound)
        )
        if hvector_of(system) == target and socle_of(system) == socle:
            return system
        _log.warning(
            "witness (r=%d, p=%d, s_p=%d, e=%d) failed with seed %d; reseeding",
            r,
            p,
            s_p,
            e,
            current,
        )
    raise HVecError(
        f"no witness for (r={r}, p={p}, s_p={s_p}, e={e}) after {attempts + 1} seeds"
    )


# ---------------------------------------------------------------------------
# Files
# ---------------------------------------------------------------------------


def parse_system(text: str, r: int | None = None) -> InverseSystem:
    """One form per line; blank lines and lines starting with '#' are skipped."""
    parsed: list[tuple[int, Form]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parsed.append((number, parse_form(line, r=r, line=number)))
    if not parsed:
        raise FormParseError("no forms found")
    width = r if r is not None else max(f.r for _, f in parsed)
    forms = []
    for number, f in parsed:
        if f.r != width:
            # re-read in the common variable count
            f = parse_form(text.splitlines()[number - 1], r=width, line=number)
        forms.append(f)
    return InverseSystem(r=width, generators=tuple(forms))


def _decode(raw: bytes, path: Path) -> str:
    """UTF-8 when possible, else the chardet guess; undecodable bytes become U+FFFD."""
    try:
        return raw.decode("utf-8-sig")
    except UnicodeDecodeError:
        pass
    result = chardet.detect(raw[:32768])
    encoding = result.get("encoding") or "utf-8"
    # low confidence: stay on utf-8
    if (result.get("confidence") or 0.0) < 0.7:
        encoding = "utf-8"
    _log.warning("%s is not valid UTF-8, reading it as %s", path, encoding)
    try:
        return raw.decode(encoding, errors="replace")
    except LookupError:
        return raw.decode("utf-8", errors="replace")


def load_system(path: Path, r: int | None = None) -> InverseSystem:
    return parse_system(_decode(path.read_bytes(), path), r=r)


def dump_system(system: InverseSystem) -> str:
    return "".join(format_form(f) + "\n" for f in system.generators)
