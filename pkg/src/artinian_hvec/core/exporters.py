"""Sweep tables and their exporters: XLSX, CSV (always ;)."""

from __future__ import annotations

import csv
import logging
from pathlib import Path

import pandas as pd

from artinian_hvec.core.binom import dim_poly
from artinian_hvec.core.bounds import generalized_compressed_hvector
from artinian_hvec.core.errors import HVecError
from artinian_hvec.core.inverse import generalized_compressed_witness, hvector_of, socle_of
from artinian_hvec.core.maxima import existence_branch, existence_maximum, relative_maxima
from artinian_hvec.core.models import TwoEntrySocle, format_vector

_log = logging.getLogger(__name__)

SWEEP_COLUMNS = [
    "e",
    "p",
    "s_p",
    "branch",
    "classify",
    "unique",
    "maxima_count",
    "candidates",
    "maximum",
    "agrees",
]

CERTIFY_COLUMNS = [
    "r",
    "p",
    "s_p",
    "e",
    "expected",
    "observed_hvector",
    "observed_socle",
    "passed",
]


# ---------------------------------------------------------------------------
# Table builders
# ---------------------------------------------------------------------------


def existence_sweep(max_e: int, budget: int | None = None) -> pd.DataFrame:
    """Closed-form classifier against relative maxima, for p < e <= max_e and 1 <= s_p < N(3,p)."""
    rows = []
    for e in range(2, max_e + 1):
        for p in range(1, e):
            for s_p in range(1, dim_poly(3, p)):
                ts = TwoEntrySocle(p=p, s_p=s_p, e=e)
                branch = existence_branch(ts)
                report = relative_maxima(ts, budget=budget if budget is not None else max_e)
                maximum = existence_maximum(ts) if branch.exists else None
                agrees = branch.exists == report.unique
                if maximum is not None and agrees:
                    agrees = report.maxima[0] == maximum
                rows.append(
                    {
                        "e": e,
                        "p": p,
                        "s_p": s_p,
                        "branch": branch.value,
                        "classify": branch.exists,
                        "unique": report.unique,
                        "maxima_count": len(report.maxima),
                        "candidates": report.candidates_examined,
                        "maximum": format_vector(maximum) if maximum is not None else "",
                        "agrees": agrees,
                    }
                )
    _log.debug("existence sweep up to e=%d: %d rows", max_e, len(rows))
    return pd.DataFrame(rows, columns=SWEEP_COLUMNS)


def certification_sweep(
    r: int,
    max_e: int,
    seed: int = 0,
    bound: int = 99,
    attempts: int = 3,
) -> pd.DataFrame:
    """Witness systems for every (p, s_p) with p < e <= max_e and 1 <= s_p <= r - 1."""
    rows = []
    for e in range(2, max_e + 1):
        for p in range(1, e):
            for s_p in range(1, r):
                expected = generalized_compressed_hvector(r, p, s_p, e)
                try:
                    system = generalized_compressed_witness(
                        r, p, s_p, e, seed=seed, bound=bound, attempts=attempts
                    )
                except HVecError as exc:
                    _log.warning(
                        "certification failed for (r=%d, p=%d, s_p=%d, e=%d): %s",
                        r,
                        p,
                        s_p,
                        e,
                        exc,
                    )
                    observed_h, observed_s, passed = "", "", False
                else:
                    observed_h = str(hvector_of(system))
                    observed_s = str(socle_of(system))
                    passed = True
                rows.append(
                    {
                        "r": r,
                        "p": p,
                        "s_p": s_p,
                        "e": e,
                        "expected": format_vector(expected),
                        "observed_hvector": observed_h,
                        "observed_socle": observed_s,
                        "passed": passed,
                    }
                )
    return pd.DataFrame(rows, columns=CERTIFY_COLUMNS)


# ---------------------------------------------------------------------------
# XLSX export
# ---------------------------------------------------------------------------


class XLSXExporter:
    """Export a sweep table to a single XLSX sheet with a bold header."""

    def export(self, df: pd.DataFrame, path: Path, sheet: str = "sweep") -> None:
        import openpyxl
        from openpyxl.styles import Font

        path.parent.mkdir(parents=True, exist_ok=True)
        wb = openpyxl.Workbook()
        ws = wb.active
        ws.title = sheet

        header_font = Font(bold=True)
        for col_idx, col_name in enumerate(df.columns, start=1):
            cell = ws.cell(row=1, column=col_idx, value=col_name)
            cell.font = header_font

        for row_idx, row in enumerate(df.itertuples(index=False), start=2):
            for col_idx, val in enumerate(row, start=1):
                if pd.isna(val):
                    val = ""
                elif hasattr(val, "item"):
                    val = val.item()  # numpy scalar
                ws.cell(row=row_idx, column=col_idx, value=val)

        wb.save(path)


# ---------------------------------------------------------------------------
# CSV export
# ---------------------------------------------------------------------------


class CSVExporter:
    """Write a sweep table as ``;``-separated CSV (vector cells contain commas).

    ``bom`` prefixes a UTF-8 byte order mark.
    """

    delimiter = ";"

    def export(self, df: pd.DataFrame, path: Path, bom: bool = False) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        df.to_csv(
            path,
            sep=self.delimiter,
            index=False,
            na_rep="",
            quoting=csv.QUOTE_MINIMAL,
            lineterminator="\n",
            encoding="utf-8-sig" if bom else "utf-8",
        )
        _log.debug("wrote %d rows to %s (bom=%s)", len(df), path, bom)


def export_table(df: pd.DataFrame, path: Path, bom: bool = False) -> None:
    """Pick the exporter from the file suffix (.xlsx, otherwise CSV).

    ``bom`` only applies to CSV.
    """
    if path.suffix.lower() == ".xlsx":
        if bom:
            _log.warning("byte order mark ignored for %s", path)
        XLSXExporter().export(df, path)
    else:
        CSVExporter().export(df, path, bom=bom)
