"""Shape checks on a single h-vector."""

from __future__ import annotations

from artinian_hvec.core.binom import growth_or_zero
from artinian_hvec.core.check_base import Check, registry
from artinian_hvec.core.hvec import first_difference, is_o_sequence, is_symmetric, is_unimodal
from artinian_hvec.core.models import CheckStatus, Finding, HVector, format_vector


def _first_growth_violation(values: list[int]) -> int | None:
    """Smallest d with values[d+1] > growth of values[d] in degree d."""
    for d in range(1, len(values) - 1):
        if values[d + 1] > growth_or_zero(values[d], d):
            return d + 1
    return None


@registry.register
class OSequenceCheck(Check):
    check_id = "hvec.o_sequence"
    name = "Macaulay O-sequence"

    def run(self, h: HVector) -> Finding:
        if is_o_sequence(h):
            return Finding(self.check_id, CheckStatus.PASS, "every step within Macaulay growth")
        degree = _first_growth_violation(list(h))
        return Finding(
            self.check_id,
            CheckStatus.FAIL,
            f"h_{degree} = {h[degree]} exceeds the Macaulay growth of h_{degree - 1}",
            {"degree": degree},
        )


@registry.register
class DifferentiableCheck(Check):
    check_id = "hvec.differentiable"
    name = "differentiable"

    def run(self, h: HVector) -> Finding:
        delta = first_difference(h)
        text = format_vector(delta)
        if any(v < 0 for v in delta):
            return Finding(
                self.check_id, CheckStatus.FAIL, f"first difference {text} is negative somewhere"
            )
        if not is_o_sequence(delta):
            return Finding(
                self.check_id,
                CheckStatus.FAIL,
                f"first difference {text} is not an O-sequence",
                {"degree": _first_growth_violation(delta)},
            )
        return Finding(self.check_id, CheckStatus.PASS, f"first difference {text} is an O-sequence")


@registry.register
class SymmetricCheck(Check):
    check_id = "hvec.symmetric"
    name = "symmetric"

    def run(self, h: HVector) -> Finding:
        if is_symmetric(h):
            return Finding(self.check_id, CheckStatus.PASS, "h_i = h_{e-i} for all i")
        e = h.socle_degree
        i = next(i for i in range(e + 1) if h[i] != h[e - i])
        return Finding(
            self.check_id, CheckStatus.FAIL, f"h_{i} = {h[i]} but h_{e - i} = {h[e - i]}"
        )


@registry.register
class UnimodalCheck(Check):
    check_id = "hvec.unimodal"
    name = "unimodal"

    def run(self, h: HVector) -> Finding:
        if is_unimodal(h):
            return Finding(self.check_id, CheckStatus.PASS, "non-decreasing, then non-increasing")
        return Finding(self.check_id, CheckStatus.FAIL, "rises again after a descent")
