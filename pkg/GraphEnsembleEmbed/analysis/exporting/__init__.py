"""CSV export utilities for result tables.

This module provides functions to turn row dictionaries into CSV text or
files and to read them back with a fixed schema.
"""

from .csv import (
    rows_to_frame,
    table_to_csv,
    write_table_csv,
    read_table_csv,
)

__all__ = [
    "rows_to_frame",
    "table_to_csv",
    "write_table_csv",
    "read_table_csv",
]
