"""importlib.resources helpers for the packaged configuration files."""

from __future__ import annotations

import importlib.resources as _ir
from pathlib import Path


def get_resources_dir() -> Path:
    """Absolute Path to the ``artinian_hvec/resources`` directory.

    hatchling ships the YAML files as plain data files, so the Traversable is
    always a real directory.
    """
    return Path(str(_ir.files("artinian_hvec.resources")))


def get_defaults_path() -> Path:
    return get_resources_dir() / "defaults.yml"
