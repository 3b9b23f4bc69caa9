"""Writers for JSON, CSV and text output."""

from __future__ import annotations

from collections.abc import Mapping, Sequence
import csv
from enum import StrEnum
import io
import json
from pathlib import Path
import sys
from typing import Any


class OutputFormat(StrEnum):
    """Supported output formats."""

    JSON = "json"
    CSV = "csv"
    TEXT = "text"


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, list | dict):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def render(
    payload: Mapping[str, Any],
    fmt: OutputFormat,
    rows: Sequence[Mapping[str, Any]] | None = None,
) -> str:
    """Render a payload.

    CSV writes rows when given and a single row of the payload otherwise.
    """
    if fmt is OutputFormat.JSON:
        return json.dumps(payload, indent=2) + "\n"
    if fmt is OutputFormat.CSV:
        table = list(rows) if rows is not None else [payload]
        buffer = io.StringIO()
        if table:
            writer = csv.DictWriter(
                buffer, fieldnames=list(table[0]), lineterminator="\n"
            )
            writer.writeheader()
            for row in table:
                writer.writerow({key: _cell(value) for key, value in row.items()})
        return buffer.getvalue()
    lines = [f"{key}: {_cell(value)}" for key, value in payload.items()]
    return "\n".join(lines) + "\n"


def write_output(
    payload: Mapping[str, Any],
    fmt: OutputFormat,
    out: Path | None = None,
    rows: Sequence[Mapping[str, Any]] | None = None,
) -> None:
    """Write a rendered payload to out or stdout."""
    text = render(payload, fmt, rows)
    if out is None:
        sys.stdout.write(text)
        return
    with out.open("w", encoding="utf-8", newline="") as handle:
        handle.write(text)
