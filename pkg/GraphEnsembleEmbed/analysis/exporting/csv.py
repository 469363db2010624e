"""CSV export helpers for result tables.

Tables are built as polars DataFrames with an explicit schema so that
empty tables still carry their header and values read back with the same
types. Output uses ``,`` separators, ``.`` decimals, ``\\n`` line ends and
shortest round-trip float formatting; missing values are empty fields.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any, Dict, List, Mapping, Sequence, Union

import polars as pl


def rows_to_frame(rows: Sequence[Mapping[str, Any]], schema: Mapping[str, pl.DataType]) -> pl.DataFrame:
    """Build a DataFrame with exactly the columns of ``schema``, in order."""
    columns = list(schema.keys())
    data = {c: [r.get(c) for r in rows] for c in columns}
    return pl.DataFrame(data, schema=dict(schema))


def table_to_csv(rows: Sequence[Mapping[str, Any]], schema: Mapping[str, pl.DataType]) -> str:
    """Render rows as CSV text with a header line."""
    return rows_to_frame(rows, schema).write_csv(line_terminator="\n")


def write_table_csv(
    rows: Sequence[Mapping[str, Any]], schema: Mapping[str, pl.DataType], path: Union[str, Path]
) -> Path:
    """Write rows to ``path`` as CSV; returns the path."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    rows_to_frame(rows, schema).write_csv(path, line_terminator="\n")
    return path


def read_table_csv(path: Union[str, Path], schema: Mapping[str, pl.DataType]) -> List[Dict[str, Any]]:
    """Read a CSV written by :func:`write_table_csv` back into row dicts."""
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"CSV file not found: {path}")
    df = pl.read_csv(path, schema=dict(schema))
    return df.to_dicts()
