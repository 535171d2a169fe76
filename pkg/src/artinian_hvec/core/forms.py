"""Homogeneous forms with exact rational coefficients.

A Form lives in S = Q[y1, ..., yr]. Arithmetic (differentiation, powers of
linear forms) is delegated to sympy ``Poly`` over QQ; the Form itself only keeps
the canonical term list so it can be compared, hashed and printed.

Text format, one form per line::

    3*y1^2*y2 - 1/2*y2^3 + y1*y2*y3

Terms are printed as ``c*y1^a*y2^b`` in lex-descending order with variables of
exponent 0 omitted; ``c`` is an integer or ``n/d``.
"""

from __future__ import annotations

import logging
import random
import re
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

import sympy
from sympy import QQ, Poly
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from artinian_hvec.core.errors import FormParseError, InvalidInputError

_log = logging.getLogger(__name__)

Monomial = tuple[int, ...]

_ALLOWED = re.compile(r"^[0-9y\s+\-*/^()]+$")
_VARIABLE = re.compile(r"y(\d+)")
_TRANSFORMS = standard_transformations + (convert_xor,)


@lru_cache(maxsize=64)
def variables(r: int) -> tuple[sympy.Symbol, ...]:
    """(y1, ..., yr) as sympy symbols."""
    if r < 1:
        raise InvalidInputError(f"need at least one variable, got r={r}")
    return tuple(sympy.symbols(f"y1:{r + 1}"))


@lru_cache(maxsize=1024)
def monomials(r: int, d: int) -> tuple[Monomial, ...]:
    """Exponent vectors of the degree-d monomials in r variables, lex-descending."""
    if d < 0:
        return ()
    if r == 1:
        return ((d,),)
    return tuple((a,) + rest for a in range(d, -1, -1) for rest in monomials(r - 1, d - a))


# ---------------------------------------------------------------------------
# Form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Form:
    """Homogeneous polynomial; ``terms`` holds only nonzero coefficients, lex-descending."""

    r: int
    degree: int
    terms: tuple[tuple[Monomial, Fraction], ...]

    def __post_init__(self) -> None:
        if self.r < 1:
            raise InvalidInputError(f"a form needs at least one variable, got r={self.r}")
        if self.degree < 0:
            raise InvalidInputError(f"form degree must be non-negative, got {self.degree}")
        for monomial, coeff in self.terms:
            if len(monomial) != self.r or sum(monomial) != self.degree:
                raise InvalidInputError(
                    f"monomial {monomial} does not have degree {self.degree} in {self.r} variables"
                )
            if coeff == 0:
                raise InvalidInputError("zero coefficients are not stored")

    @classmethod
    def from_mapping(
        cls, r: int, degree: int, coefficients: Mapping[Monomial, Fraction | int]
    ) -> Form:
        terms = tuple(
            sorted(
                ((tuple(m), Fraction(c)) for m, c in coefficients.items() if c != 0),
                reverse=True,
            )
        )
        return cls(r=r, degree=degree, terms=terms)

    @classmethod
    def from_poly(cls, poly: Poly, r: int, degree: int) -> Form:
        coefficients = {
            monomial: Fraction(int(c.p), int(c.q))
            for monomial, c in poly.as_dict().items()
            if c != 0
        }
        return cls.from_mapping(r, degree, coefficients)

    @cached_property
    def poly(self) -> Poly:
        rep = {m: sympy.Rational(c.numerator, c.denominator) for m, c in self.terms}
        return Poly.from_dict(rep, *variables(self.r), domain=QQ)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, monomial: Monomial) -> Fraction:
        return dict(self.terms).get(tuple(monomial), Fraction(0))

    def coefficient_vector(self, basis: Sequence[Monomial] | None = None) -> list[Fraction]:
        """Coefficients on ``basis`` (default: all degree-d monomials, lex-descending)."""
        lookup = dict(self.terms)
        basis = monomials(self.r, self.degree) if basis is None else basis
        return [lookup.get(m, Fraction(0)) for m in basis]

    def __str__(self) -> str:
        return format_form(self)


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------


def linear_form(coefficients: Sequence[Fraction | int]) -> Form:
    """c1*y1 + ... + cr*yr."""
    r = len(coefficients)
    mapping = {}
    for i, c in enumerate(coefficients):
        exponent = [0] * r
        exponent[i] = 1
        mapping[tuple(exponent)] = c
    return Form.from_mapping(r, 1, mapping)


def power_sum(linear_forms: Iterable[Form], d: int) -> Form:
    """Sum of L^d over the given linear forms, expanded exactly."""
    forms = list(linear_forms)
    if not forms:
        raise InvalidInputError("power_sum needs at least one linear form")
    r = forms[0].r
    total = Poly(0, *variables(r), domain=QQ)
    for form in forms:
        if form.degree != 1 or form.r != r:
            raise InvalidInputError(f"power_sum needs linear forms in {r} variables, got {form}")
        total = total + form.poly**d
    return Form.from_poly(total, r, d)


def random_form(r: int, d: int, seed: int, bound: int = 99) -> Form:
    """Dense form with coefficients drawn from [-bound, bound] without 0."""
    if bound < 1:
        raise InvalidInputError(f"coefficient bound must be positive, got {bound}")
    rng = random.Random(seed)
    mapping: dict[Monomial, int] = {}
    for monomial in monomials(r, d):
        c = 0
        while c == 0:
            c = rng.randint(-bound, bound)
        mapping[monomial] = c
    return Form.from_mapping(r, d, mapping)


# ---------------------------------------------------------------------------
# Differentiation
# ---------------------------------------------------------------------------


def differentiate(f: Form, var: int) -> Form:
    """Partial derivative with respect to y_{var+1} (``var`` is 0-based)."""
    if not 0 <= var < f.r:
        raise InvalidInputError(f"variable index {var} out of range for r={f.r}")
    if f.degree == 0:
        return Form(r=f.r, degree=0, terms=())
    return Form.from_poly(f.poly.diff((variables(f.r)[var], 1)), f.r, f.degree - 1)


def derivative(f: Form, operator: Monomial) -> Form:
    """Apply d^a = prod (d/dy_i)^{a_i}; the empty operator returns f itself."""
    order = sum(operator)
    if order == 0:
        return f
    if order > f.degree:
        return Form(r=f.r, degree=0, terms=())
    gens = variables(f.r)
    specs = [(gens[i], a) for i, a in enumerate(operator) if a]
    return Form.from_poly(f.poly.diff(*specs), f.r, f.degree - order)


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------


def _format_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _format_term(monomial: Monomial, c: Fraction) -> str:
    factors = [_format_coefficient(c)]
    factors.extend(f"y{i + 1}^{a}" for i, a in enumerate(monomial) if a)
    return "*".join(factors)


def format_form(f: Form) -> str:
    if f.is_zero:
        return "0"
    parts: list[str] = []
    for index, (monomial, c) in enumerate(f.terms):
        term = _format_term(monomial, abs(c))
        if index == 0:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {term}")
    return " ".join(parts)


def parse_form(text: str, r: int | None = None, line: int | None = None) -> Form:
    """Parse one homogeneous form.

    ``r`` is the declared variable count; when omitted it is the largest index
    used. A variable y_k with k > r is an error.
    """
    stripped = text.strip()
    if not stripped:
        raise FormParseError("empty form", line=line)
    if not _ALLOWED.match(stripped):
        raise FormParseError(f"unexpected characters in {stripped!r}", line=line)
    indices = [int(k) for k in _VARIABLE.findall(stripped)]
    if any(k < 1 for k in indices):
        raise FormParseError("variables are numbered from y1", line=line)
    used = max(indices, default=1)
    if r is None:
        r = used
    elif used > r:
        raise FormParseError(f"y{used} used but only {r} variables declared", line=line)

    gens = variables(r)
    local = {str(g): g for g in gens}
    try:
        expr = parse_expr(stripped, local_dict=local, transformations=_TRANSFORMS)
        poly = Poly(expr, *gens, domain=QQ)
    except Exception as exc:
        raise FormParseError(f"cannot parse {stripped!r}: {exc}", line=line) from None

    if poly.is_zero:
        raise FormParseError("the zero polynomial is not a form", line=line)
    if not poly.is_homogeneous:
        raise FormParseError(f"{stripped!r} is not homogeneous", line=line)
    return Form.from_poly(poly, r, poly.total_degree())
