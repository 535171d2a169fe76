"""Exact rank of rational matrices by fraction-free (Bareiss) elimination."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from fractions import Fraction
from math import lcm

from artinian_hvec.core.errors import InvalidInputError

_log = logging.getLogger(__name__)


def integer_rows(rows: Sequence[Sequence[Fraction | int]]) -> list[list[int]]:
    """Scale every row by the lcm of its denominators; the row space is unchanged."""
    out: list[list[int]] = []
    for row in rows:
        values = [Fraction(v) for v in row]
        scale = lcm(*(v.denominator for v in values)) if values else 1
        out.append([int(v * scale) for v in values])
    return out


def rank(rows: Sequence[Sequence[Fraction | int]]) -> int:
    """Rank over Q of the matrix given by ``rows`` (all rows of equal length)."""
    matrix = integer_rows(rows)
    n_rows = len(matrix)
    if n_rows == 0:
        return 0
    n_cols = len(matrix[0])
    if any(len(row) != n_cols for row in matrix):
        raise InvalidInputError("rank: rows of unequal length")
    _log.debug("rank: %dx%d matrix", n_rows, n_cols)

    previous = 1
    r = 0
    for col in range(n_cols):
        if r == n_rows:
            break
        pivot = next((i for i in range(r, n_rows) if matrix[i][col] != 0), None)
        if pivot is None:
            continue
        matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        top = matrix[r]
        a = top[col]
        for i in range(r + 1, n_rows):
            row = matrix[i]
            b = row[col]
            # Sylvester's identity: the division by the previous pivot is exact
            matrix[i] = [(a * row[j] - b * top[j]) // previous for j in range(n_cols)]
        previous = a
        r += 1
    return r
