"""Check base class and the module-level registry the check modules decorate into."""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, ClassVar

if TYPE_CHECKING:
    from artinian_hvec.core.models import Finding, HVector


class Check(ABC):
    """One verdict on one h-vector. Subclasses set ``check_id`` (e.g. "hvec.o_sequence")."""

    check_id: ClassVar[str]
    name: ClassVar[str] = ""

    @abstractmethod
    def run(self, h: HVector) -> Finding:
        """Return exactly one Finding for ``h``."""


def _origin(check_cls: type) -> str:
    return f"{check_cls.__module__}.{check_cls.__qualname__}"


class CheckRegistry:
    """Check classes keyed by ``check_id``, handed out in id order."""

    def __init__(self) -> None:
        self._by_id: dict[str, type[Check]] = {}

    def register(self, check_cls: type[Check]) -> type[Check]:
        """Class decorator. A check_id may be claimed by one class only."""
        check_id = getattr(check_cls, "check_id", "")
        if not check_id:
            raise TypeError(f"{check_cls.__qualname__} does not set check_id")
        known = self._by_id.setdefault(check_id, check_cls)
        # a re-imported module brings a new class object with the same origin
        if _origin(known) != _origin(check_cls):
            raise ValueError(f"check_id {check_id!r} already belongs to {_origin(known)}")
        self._by_id[check_id] = check_cls
        return check_cls

    def get(self, check_id: str) -> type[Check] | None:
        return self._by_id.get(check_id)

    def all_ids(self) -> list[str]:
        return sorted(self._by_id)

    def all_checks(self) -> list[type[Check]]:
        return [self._by_id[check_id] for check_id in self.all_ids()]

    def __len__(self) -> int:
        return len(self._by_id)


registry = CheckRegistry()
