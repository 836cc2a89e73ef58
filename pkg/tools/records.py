"""
=============================================================================
RECORDS.PY - Command Output as Tables, CSV and JSON
=============================================================================

Every command builds one OutputRecord: a named list of columns, rows of
already-rendered strings, and a map of exact values (integers and "p/q"
rationals as strings). render() turns it into one of three formats:

    table   pandas DataFrame.to_string, for people
    csv     header row, LF line endings, no index; parses back losslessly
    json    {"command", "params", "rows": [...], "exact": {...}}

Cells are strings from the start, so no format applies locale rules or
float formatting of its own.
=============================================================================
"""

import io
import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import pandas as pd

import config
from core.errors import DomainError


@dataclass(frozen=True)
class OutputRecord:
    command: str
    params: Dict[str, str]
    columns: Tuple[str, ...]
    rows: Tuple[Tuple[str, ...], ...]
    exact: Dict[str, str] = field(default_factory=dict)

    def frame(self) -> pd.DataFrame:
        return pd.DataFrame(list(self.rows), columns=list(self.columns), dtype=str)


def new_record(
    command: str,
    params: Dict[str, object],
    columns: Sequence[str],
    rows: Sequence[Sequence[object]],
    exact: Optional[Dict[str, object]] = None,
) -> OutputRecord:
    """Build a record, converting every cell and value to str."""
    width = len(columns)
    for row in rows:
        if len(row) != width:
            raise DomainError(f"row {list(row)} has {len(row)} cells, expected {width}")
    return OutputRecord(
        command=command,
        params={key: str(value) for key, value in params.items()},
        columns=tuple(columns),
        rows=tuple(tuple(str(cell) for cell in row) for row in rows),
        exact={key: str(value) for key, value in (exact or {}).items()},
    )


def render(record: OutputRecord, fmt: str = config.DEFAULT_FORMAT) -> str:
    """Render a record in one of config.OUTPUT_FORMATS."""
    if fmt == "table":
        if not record.rows:
            return "  ".join(record.columns) + "\n"
        return record.frame().to_string(index=False) + "\n"
    if fmt == "csv":
        return record.frame().to_csv(index=False, lineterminator="\n")
    if fmt == "json":
        payload = {
            "command": record.command,
            "params": record.params,
            "rows": [dict(zip(record.columns, row)) for row in record.rows],
            "exact": record.exact,
        }
        return json.dumps(payload, indent=2) + "\n"
    raise DomainError(f"unknown output format {fmt!r}; choose one of {', '.join(config.OUTPUT_FORMATS)}")


def rows_from_csv(text: str) -> Tuple[List[str], List[List[str]]]:
    """Parse rendered CSV back into (columns, rows), keeping every cell a string."""
    frame = pd.read_csv(io.StringIO(text), dtype=str, keep_default_na=False)
    return list(frame.columns), frame.values.tolist()
