"""Pytest fixtures shared across all tests."""

from __future__ import annotations

from pathlib import Path

import pytest

from artinian_hvec.core.forms import Form, linear_form, power_sum
from artinian_hvec.core.inverse import InverseSystem, dump_system
from artinian_hvec.core.settings import ENV_BUDGET, ENV_COEFF_BOUND, ENV_RESEED

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    """Tests never see the caller's ARTINIAN_HVEC_* overrides."""
    for name in (ENV_BUDGET, ENV_COEFF_BOUND, ENV_RESEED):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def monomial_octic_path() -> Path:
    return FIXTURES / "monomial_octic.txt"


@pytest.fixture(scope="session")
def conic_octic() -> Form:
    """Sum of L_t^8 over the nine conic points L_t = y1 + t*y2 + t^2*y3, t = 0..8."""
    return power_sum([linear_form((1, t, t * t)) for t in range(9)], 8)


@pytest.fixture(scope="session")
def conic_system(conic_octic) -> InverseSystem:
    return InverseSystem(r=3, generators=(conic_octic,))


@pytest.fixture
def conic_path(tmp_path, conic_system) -> Path:
    path = tmp_path / "conic_octic.txt"
    path.write_text("# nine points on a conic\n" + dump_system(conic_system), encoding="utf-8")
    return path
