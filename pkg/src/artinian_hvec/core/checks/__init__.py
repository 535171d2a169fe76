"""Auto-import all check modules so their @registry.register decorators fire."""

from artinian_hvec.core.checks import gorenstein, sequence  # noqa: F401
