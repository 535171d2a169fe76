"""Gorenstein checks: exact for h_1 <= 3, sufficient-only above."""

from __future__ import annotations

from artinian_hvec.core.check_base import Check, registry
from artinian_hvec.core.gorenstein import MAX_CODIMENSION, ci_check, stanley_check
from artinian_hvec.core.models import CheckStatus, Finding, HVector


@registry.register
class StanleyCheck(Check):
    check_id = "gorenstein.stanley"
    name = "Gorenstein (codimension <= 3)"

    def run(self, h: HVector) -> Finding:
        if len(h) > 1 and h[1] > MAX_CODIMENSION:
            return Finding(
                self.check_id,
                CheckStatus.SKIPPED,
                f"exact characterization needs h_1 <= {MAX_CODIMENSION}",
            )
        if stanley_check(h):
            return Finding(self.check_id, CheckStatus.PASS, "Gorenstein h-vector")
        return Finding(self.check_id, CheckStatus.FAIL, "not a Gorenstein h-vector")


@registry.register
class SufficientGorensteinCheck(Check):
    check_id = "gorenstein.sufficient"
    name = "Gorenstein (sufficient condition)"

    def run(self, h: HVector) -> Finding:
        if ci_check(h):
            return Finding(
                self.check_id,
                CheckStatus.PASS,
                "symmetric with differentiable first half: Gorenstein (sufficient condition)",
            )
        if len(h) > 1 and h[1] > MAX_CODIMENSION:
            return Finding(
                self.check_id,
                CheckStatus.INCONCLUSIVE,
                "sufficient condition fails; inconclusive for h_1 >= 4",
            )
        return Finding(self.check_id, CheckStatus.FAIL, "not a Gorenstein h-vector")
