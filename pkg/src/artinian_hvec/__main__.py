"""Entry point: python -m artinian_hvec"""

from __future__ import annotations

import sys

from artinian_hvec.cli import main

if __name__ == "__main__":
    sys.exit(main())
