"""Rendering of command payloads: canonical JSON or a plain table."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any


def to_json(payload: dict[str, Any]) -> str:
    """Sorted keys and fixed indentation: equal payloads give identical bytes."""
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _cell(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    return str(value)


def to_table(payload: dict[str, Any]) -> str:
    """``key: value`` lines; a list of records under ``cases`` or ``rows`` becomes columns."""
    lines = []
    records = None
    for key in sorted(payload):
        value = payload[key]
        if key in ("cases", "rows") and isinstance(value, list):
            records = value
            continue
        lines.append(f"{key}: {_cell(value)}")
    if records:
        columns = sorted({column for record in records for column in record})
        rows = [[_cell(record.get(column, "")) for column in columns] for record in records]
        widths = [max(len(column), *(len(row[i]) for row in rows)) for i, column in enumerate(columns)]
        lines.append("  ".join(column.ljust(width) for column, width in zip(columns, widths)).rstrip())
        for row in rows:
            lines.append("  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def render(payload: dict[str, Any], fmt: str) -> str:
    return to_json(payload) if fmt == "json" else to_table(payload)


def emit(text: str, out: str | None, stream: Any) -> None:
    if out:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    else:
        stream.write(text)

