"""Wide CSV format: a ``date`` column followed by one column of closes per index.

Dates are ISO ``YYYY-MM`` or ``YYYY-MM-DD`` (the day is ignored). Blank
cells are gaps and are not imputed. A file listed newest-first is
accepted and reversed; any other ordering problem is an error.
"""

from __future__ import annotations

import csv
import math
from typing import Iterable, TextIO

from .errors import FormatError, InvalidInputError
from .series import PriceSeries, month_index, month_of


def ingest_csv(stream: TextIO, *, date_column: str = "date") -> list[PriceSeries]:
    reader = csv.reader(stream)
    try:
        header = next(reader)
    except StopIteration:
        raise FormatError("empty CSV input") from None
    header = [h.strip() for h in header]
    if header and header[0].startswith("\ufeff"):
        header[0] = header[0][1:]
    if not header or header[0].lower() != date_column:
        raise FormatError(f"first column must be named {date_column!r}, got {header[:1]}")
    labels = header[1:]
    if not labels:
        raise FormatError("no index columns after the date column")
    if len(set(labels)) != len(labels):
        raise FormatError("duplicate column names in header")

    rows = []
    for line_no, row in enumerate(reader, start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) > len(header):
            raise FormatError(f"row {line_no}: {len(row)} cells for {len(header)} columns")
        try:
            month = month_of(row[0])
        except InvalidInputError as exc:
            raise FormatError(f"row {line_no}: {exc}") from None
        cells = list(row[1:]) + [""] * (len(labels) - (len(row) - 1))
        rows.append((line_no, month, cells))

    if len(rows) >= 2 and all(month_index(a[1]) > month_index(b[1]) for a, b in zip(rows, rows[1:])):
        rows.reverse()
    for prev, cur in zip(rows, rows[1:]):
        if month_index(cur[1]) <= month_index(prev[1]):
            raise FormatError(
                f"row {cur[0]}: date {cur[1]:%Y-%m} does not follow {prev[1]:%Y-%m}"
                " (dates must be strictly increasing months)"
            )

    out = []
    for j, label in enumerate(labels):
        dates, closes = [], []
        for line_no, month, cells in rows:
            text = cells[j].strip()
            if not text:
                continue
            try:
                value = float(text)
            except ValueError:
                raise FormatError(f"row {line_no}, column {label!r}: not a number: {text!r}") from None
            if not (math.isfinite(value) and value > 0):
                raise FormatError(f"row {line_no}, column {label!r}: non-positive price {text}")
            dates.append(month)
            closes.append(value)
        if len(closes) < 3:
            raise InvalidInputError(f"column {label!r}: {len(closes)} usable rows, need at least 3")
        out.append(PriceSeries(label, tuple(dates), tuple(closes)))
    return out


def write_csv(series: Iterable[PriceSeries], stream: TextIO) -> None:
    """Write series in the wide format ``ingest_csv`` reads, full float precision."""
    series = list(series)
    if not series:
        raise InvalidInputError("nothing to write")
    by_label = [dict(zip(s.dates, s.closes)) for s in series]
    months = sorted({d for s in series for d in s.dates}, key=month_index)
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["date"] + [s.label for s in series])
    for m in months:
        writer.writerow([f"{m:%Y-%m}"] + [repr(col[m]) if m in col else "" for col in by_label])
