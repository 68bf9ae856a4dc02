"""Trace CSV serialization.

One row per recorded RO with a fixed header and fixed 6-decimal precision
for power values, so identical runs serialize to byte-identical files.
Booleans are written as 0/1 and the UE power field is empty on ROs
without an attempt. The last column carries the analytic threshold
predictor evaluated on the same scenario for side-by-side plotting.
"""

from __future__ import annotations

import csv
from pathlib import Path

from .sim import TraceRecord

__all__ = ["TRACE_CSV_HEADER", "TraceCsvError", "write_trace_csv", "read_trace_csv"]

TRACE_CSV_HEADER = [
    "ro",
    "measured_db",
    "threshold_db",
    "attacker_tx",
    "ue_attempt",
    "ue_power_db",
    "detected",
    "analytic_threshold_db",
]


class TraceCsvError(ValueError):
    """A trace CSV failed to parse against the fixed format."""


def _fmt(value: float) -> str:
    return f"{value:.6f}"


def write_trace_csv(path, records: list[TraceRecord], analytic: list[float]) -> None:
    """Write a trace and its analytic threshold column to ``path``.

    The two sequences must be equally long; rows appear in trace order.
    """
    if len(records) != len(analytic):
        raise ValueError(
            f"trace and analytic column must have equal length, got {len(records)} and {len(analytic)}"
        )
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(TRACE_CSV_HEADER)
        for rec, ana in zip(records, analytic):
            writer.writerow(
                [
                    rec.ro,
                    _fmt(rec.measured_db),
                    _fmt(rec.threshold_db),
                    int(rec.attacker_tx),
                    int(rec.ue_attempt),
                    "" if rec.ue_power_db is None else _fmt(rec.ue_power_db),
                    int(rec.detected),
                    _fmt(ana),
                ]
            )


def _parse_int(row_no: int, name: str, text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise TraceCsvError(f"row {row_no}: {name} is not an integer: {text!r}") from None


def _parse_float(row_no: int, name: str, text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise TraceCsvError(f"row {row_no}: {name} is not a number: {text!r}") from None


def _parse_bool(row_no: int, name: str, text: str) -> bool:
    if text not in ("0", "1"):
        raise TraceCsvError(f"row {row_no}: {name} must be 0 or 1, got {text!r}")
    return text == "1"


def read_trace_csv(path) -> tuple[list[TraceRecord], list[float]]:
    """Parse a trace CSV back into records plus the analytic column.

    Values round-trip exactly at the written 6-decimal precision.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise TraceCsvError(f"cannot read trace CSV {path}: {e}") from None

    rows = list(csv.reader(text.splitlines()))
    if not rows:
        raise TraceCsvError("trace CSV is empty")
    if rows[0] != TRACE_CSV_HEADER:
        raise TraceCsvError(
            f"unexpected header {rows[0]!r}; expected {TRACE_CSV_HEADER!r}"
        )

    records: list[TraceRecord] = []
    analytic: list[float] = []
    for row_no, row in enumerate(rows[1:], start=2):
        if len(row) != len(TRACE_CSV_HEADER):
            raise TraceCsvError(
                f"row {row_no}: expected {len(TRACE_CSV_HEADER)} fields, got {len(row)}"
            )
        ro, measured, threshold, attacker_tx, ue_attempt, ue_power, detected, ana = row
        records.append(
            TraceRecord(
                ro=_parse_int(row_no, "ro", ro),
                measured_db=_parse_float(row_no, "measured_db", measured),
                threshold_db=_parse_float(row_no, "threshold_db", threshold),
                attacker_tx=_parse_bool(row_no, "attacker_tx", attacker_tx),
                ue_attempt=_parse_bool(row_no, "ue_attempt", ue_attempt),
                ue_power_db=None if ue_power == "" else _parse_float(row_no, "ue_power_db", ue_power),
                detected=_parse_bool(row_no, "detected", detected),
            )
        )
        analytic.append(_parse_float(row_no, "analytic_threshold_db", ana))
    if not records:
        raise TraceCsvError("trace CSV has a header but no data rows")
    return records, analytic
