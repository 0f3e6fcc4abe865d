"""CSV and JSON emission of result tables."""

import csv
import io
import json
import math
import sys
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Optional, Sequence

from loguru import logger

from src.exceptions import NonFiniteValueError
from src.orchestrator.run_config import OutputFormat

Row = Dict[str, Any]
CONFIG_PREFIX = "# config="


def _check_finite(column: str, value: float) -> None:
    if not math.isfinite(value):
        raise NonFiniteValueError(column, value)


def format_cell(column: str, value: Any) -> str:
    """17 significant digits for floats, true/false for flags, empty for missing values."""
    if value is None:
        return ""
    if isinstance(value, Enum):
        return str(value.value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        _check_finite(column, value)
        return f"{value:.17g}"
    return str(value)


def _json_value(column: str, value: Any) -> Any:
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, float):
        _check_finite(column, value)
    return value


def render_csv(rows: Sequence[Row], columns: Sequence[str], config: Dict[str, Any]) -> str:
    """Header row, data rows, then one trailing "# config=" line echoing the parameters."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_cell(column, row.get(column)) for column in columns])
    buffer.write(f"{CONFIG_PREFIX}{json.dumps(config, sort_keys=True)}\n")
    return buffer.getvalue()


def render_json(rows: Sequence[Row], columns: Sequence[str], config: Dict[str, Any]) -> str:
    payload = {
        "config": config,
        "rows": [
            {column: _json_value(column, row.get(column)) for column in columns} for row in rows
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=False, allow_nan=False) + "\n"


def write_table(
    rows: Sequence[Row],
    columns: Sequence[str],
    config: Dict[str, Any],
    fmt: OutputFormat,
    out: Optional[Path] = None,
) -> None:
    """
    Render the table completely, then write it to out (or stdout).

    Nothing is written when rendering fails, so a failed run leaves no file.
    """
    text = render_csv(rows, columns, config) if fmt is OutputFormat.CSV else render_json(
        rows, columns, config
    )
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    out.write_text(text, encoding="utf-8", newline="\n")
    logger.info(f"Wrote {len(rows)} rows to {out}")
