"""One-off generator for tests/fixtures/monomial_octic.txt.

The conic octic is rebuilt in conftest.py at test time and is not committed.
"""

from __future__ import annotations

from pathlib import Path

from artinian_hvec.core.forms import parse_form
from artinian_hvec.core.inverse import InverseSystem, dump_system, hvector_of

OUT = Path("tests/fixtures")


def _write(name: str, system: InverseSystem, comment: str) -> None:
    path = OUT / name
    h = hvector_of(system)
    path.write_text(f"# {comment}: h-vector {h}\n" + dump_system(system), encoding="utf-8")
    print(f"Wrote {path}: {h}")


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    _write(
        "monomial_octic.txt",
        InverseSystem(r=3, generators=(parse_form("y1^4*y2^3*y3"),)),
        "y1^4*y2^3*y3",
    )


if __name__ == "__main__":
    main()
