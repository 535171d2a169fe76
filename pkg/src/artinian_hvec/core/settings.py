"""Configuration: built-in YAML defaults, optional overlay, environment overrides."""

from __future__ import annotations

import logging
import os
from copy import deepcopy
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import yaml

from artinian_hvec.core.errors import InvalidInputError
from artinian_hvec.core.resources import get_defaults_path

_log = logging.getLogger(__name__)

ENV_BUDGET = "ARTINIAN_HVEC_BUDGET"
ENV_COEFF_BOUND = "ARTINIAN_HVEC_COEFF_BOUND"
ENV_RESEED = "ARTINIAN_HVEC_RESEED"


def deep_merge(base: dict, overlay: dict, _where: str = "") -> dict:
    """Overlay on top of base, returned as a new dict.

    Sections (nested mappings) merge key by key; any other value, lists
    included, is replaced. A null in the overlay keeps the base value, and a
    section in base cannot be replaced by a scalar.
    """
    merged: dict = {}
    for key in base | overlay:
        here = f"{_where}{key}"
        below, above = base.get(key), overlay.get(key)
        if above is None:
            merged[key] = deepcopy(below)
        elif isinstance(below, dict):
            if not isinstance(above, dict):
                raise InvalidInputError(f"{here} must be a mapping, got {above!r}")
            merged[key] = deep_merge(below, above, f"{here}.")
        else:
            merged[key] = deepcopy(above)
    return merged


@dataclass(frozen=True)
class Settings:
    max_socle_degree: int = 14
    coefficient_bound: int = 99
    reseed_attempts: int = 3
    checks: dict[str, bool] = field(default_factory=dict)

    def is_enabled(self, check_id: str) -> bool:
        return self.checks.get(check_id, True)


def _read_yaml(path: Path) -> dict:
    try:
        data = yaml.safe_load(path.read_text(encoding="utf-8")) or {}
    except yaml.YAMLError as exc:
        raise InvalidInputError(f"{path}: invalid YAML: {exc}") from exc
    if not isinstance(data, dict):
        raise InvalidInputError(f"{path}: expected a mapping at the top level")
    return data


def _positive(value: Any, key: str, minimum: int = 1) -> int:
    try:
        number = int(value)
    except (TypeError, ValueError):
        raise InvalidInputError(f"{key} must be an integer, got {value!r}") from None
    if number < minimum:
        raise InvalidInputError(f"{key} must be at least {minimum}, got {number}")
    return number


def _env_override(config: dict, env_name: str, section: str, key: str) -> None:
    raw = os.environ.get(env_name)
    if raw is None or not raw.strip():
        return
    try:
        value = int(raw.strip())
    except ValueError:
        _log.warning("ignoring %s=%r: not an integer", env_name, raw)
        return
    config.setdefault(section, {})[key] = value


def load_settings(config_path: Path | None = None) -> Settings:
    """Defaults, then the overlay at ``config_path``, then the environment."""
    config: dict = {}
    defaults = get_defaults_path()
    if defaults.exists():
        config = _read_yaml(defaults)
    if config_path is not None:
        if not config_path.exists():
            raise InvalidInputError(f"configuration file not found: {config_path}")
        config = deep_merge(config, _read_yaml(config_path))

    _env_override(config, ENV_BUDGET, "enumeration", "max_socle_degree")
    _env_override(config, ENV_COEFF_BOUND, "oracle", "coefficient_bound")
    _env_override(config, ENV_RESEED, "oracle", "reseed_attempts")

    enumeration = config.get("enumeration") or {}
    oracle = config.get("oracle") or {}
    checks_cfg = config.get("checks") or {}
    checks = {
        check_id: bool((cfg or {}).get("enabled", True)) for check_id, cfg in checks_cfg.items()
    }
    return Settings(
        max_socle_degree=_positive(
            enumeration.get("max_socle_degree", 14), "enumeration.max_socle_degree"
        ),
        coefficient_bound=_positive(
            oracle.get("coefficient_bound", 99), "oracle.coefficient_bound"
        ),
        reseed_attempts=_positive(oracle.get("reseed_attempts", 3), "oracle.reseed_attempts", 0),
        checks=checks,
    )
