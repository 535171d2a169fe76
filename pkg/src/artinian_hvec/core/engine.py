"""CheckEngine: runs every enabled registered check against one h-vector.

The engine is stateless; it returns a CheckResult and never prints.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

_log = logging.getLogger(__name__)

# Import checks module to trigger all @registry.register decorators
import artinian_hvec.core.checks  # noqa: E402, F401
from artinian_hvec.core.check_base import CheckRegistry, registry  # noqa: E402
from artinian_hvec.core.models import CheckStatus, Finding, HVector  # noqa: E402
from artinian_hvec.core.settings import Settings  # noqa: E402


@dataclass(frozen=True)
class CheckFailure:
    """A check raised an exception (recorded instead of crashing)."""

    check_id: str
    exception_message: str = ""


@dataclass
class CheckResult:
    """Outcome of :meth:`CheckEngine.run`."""

    findings: list[Finding] = field(default_factory=list)
    failures: list[CheckFailure] = field(default_factory=list)

    @property
    def failed(self) -> bool:
        """True when some check returned FAIL or raised."""
        return bool(self.failures) or any(f.status is CheckStatus.FAIL for f in self.findings)


class CheckEngine:
    """Usage::

        engine = CheckEngine()
        result = engine.run(HVector.parse("(1,3,6,7,8,7,6,3,1)"))
    """

    def __init__(self, check_registry: CheckRegistry | None = None) -> None:
        self._registry = registry if check_registry is None else check_registry

    def run(self, h: HVector, settings: Settings | None = None) -> CheckResult:
        result = CheckResult()
        for check_cls in self._registry.all_checks():
            check = check_cls()
            if settings is not None and not settings.is_enabled(check.check_id):
                continue
            try:
                finding = check.run(h)
            except Exception as exc:
                _log.exception("Check %s failed on %s: %s", check.check_id, h, exc)
                result.failures.append(
                    CheckFailure(check_id=check.check_id, exception_message=str(exc)[:500])
                )
                continue
            result.findings.append(finding)
        return result
