"""Sweep report model and its files.

Three files are written to the output directory:

- ``rank_sweep.csv``: ``rank,accuracy,nmi,views_used``; infeasible ranks
  have empty metric fields. A rank that excludes every view has
  ``views_used = 0``; a rank above N keeps its count of views with D_m >= R.
- ``method_comparison.csv``: ``method,dim_or_rank,accuracy,nmi`` with one
  ``deepwalk`` row per view dimension followed by one ``ensemble`` row per
  feasible rank.
- ``run_meta.json``: flat key/value provenance (config hash, seed, dropped
  views and fit details per rank).
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import numpy as np
import polars as pl

from ..analysis.exporting import read_table_csv, write_table_csv
from ..core.constants import METHOD_COMPARISON_CSV, RANK_SWEEP_CSV, RUN_META_JSON

logger = logging.getLogger(__name__)

RANK_SWEEP_SCHEMA = {"rank": pl.Int64, "accuracy": pl.Float64, "nmi": pl.Float64, "views_used": pl.Int64}
METHOD_COMPARISON_SCHEMA = {"method": pl.Utf8, "dim_or_rank": pl.Int64, "accuracy": pl.Float64, "nmi": pl.Float64}

METHOD_DEEPWALK = "deepwalk"
METHOD_ENSEMBLE = "ensemble"


@dataclass
class RankRow:
    """One rank of the sweep; metrics are None when the rank is infeasible."""

    rank: int
    accuracy: Optional[float]
    nmi: Optional[float]
    views_used: int

    @property
    def feasible(self) -> bool:
        return self.accuracy is not None


@dataclass
class ViewRow:
    """Single-view DeepWalk baseline."""

    dim: int
    accuracy: float
    nmi: float
    labels: Optional[np.ndarray] = field(default=None, compare=False, repr=False)


@dataclass
class SweepReport:
    """Rank sweep, single-view baselines and flat provenance."""

    rank_rows: List[RankRow] = field(default_factory=list)
    view_rows: List[ViewRow] = field(default_factory=list)
    provenance: Dict[str, Any] = field(default_factory=dict)

    def best_rank_row(self) -> Optional[RankRow]:
        """Feasible rank with the highest accuracy; NMI, then the lower rank, break ties."""
        rows = [r for r in self.rank_rows if r.feasible]
        if not rows:
            return None
        return max(rows, key=lambda r: (r.accuracy, r.nmi, -r.rank))

    def best_view_row(self) -> Optional[ViewRow]:
        if not self.view_rows:
            return None
        return max(self.view_rows, key=lambda r: (r.accuracy, r.nmi, -r.dim))


def _rank_rows_to_dicts(report: SweepReport) -> List[Dict[str, Any]]:
    return [
        {"rank": r.rank, "accuracy": r.accuracy, "nmi": r.nmi, "views_used": r.views_used} for r in report.rank_rows
    ]


def _method_rows_to_dicts(report: SweepReport) -> List[Dict[str, Any]]:
    rows = [
        {"method": METHOD_DEEPWALK, "dim_or_rank": v.dim, "accuracy": v.accuracy, "nmi": v.nmi}
        for v in report.view_rows
    ]
    rows += [
        {"method": METHOD_ENSEMBLE, "dim_or_rank": r.rank, "accuracy": r.accuracy, "nmi": r.nmi}
        for r in report.rank_rows
        if r.feasible
    ]
    return rows


def emit_reports(report: SweepReport, output_dir: Union[str, Path]) -> List[Path]:
    """Write the CSV tables and the provenance file.

    Args:
        report: Sweep results.
        output_dir: Target directory (created when missing).

    Returns:
        Paths of the written files.

    Raises:
        OSError: If the directory or files cannot be written.
    """
    output_dir = Path(output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)

    paths = [
        write_table_csv(_rank_rows_to_dicts(report), RANK_SWEEP_SCHEMA, output_dir / RANK_SWEEP_CSV),
        write_table_csv(_method_rows_to_dicts(report), METHOD_COMPARISON_SCHEMA, output_dir / METHOD_COMPARISON_CSV),
    ]

    meta_path = output_dir / RUN_META_JSON
    with open(meta_path, "w", encoding="utf-8", newline="\n") as f:
        f.write(json.dumps(report.provenance, ensure_ascii=False, indent=2, separators=(",", ": "), sort_keys=True))
        f.write("\n")
    paths.append(meta_path)

    logger.info("Wrote reports to %s", output_dir)
    return paths


def read_reports(output_dir: Union[str, Path]) -> SweepReport:
    """Parse the files written by :func:`emit_reports` back into a report."""
    output_dir = Path(output_dir)
    rank_rows = [
        RankRow(rank=r["rank"], accuracy=r["accuracy"], nmi=r["nmi"], views_used=r["views_used"])
        for r in read_table_csv(output_dir / RANK_SWEEP_CSV, RANK_SWEEP_SCHEMA)
    ]
    view_rows = [
        ViewRow(dim=r["dim_or_rank"], accuracy=r["accuracy"], nmi=r["nmi"])
        for r in read_table_csv(output_dir / METHOD_COMPARISON_CSV, METHOD_COMPARISON_SCHEMA)
        if r["method"] == METHOD_DEEPWALK
    ]
    provenance: Dict[str, Any] = {}
    meta_path = output_dir / RUN_META_JSON
    if meta_path.exists():
        with open(meta_path, "r", encoding="utf-8") as f:
            provenance = json.load(f)
    return SweepReport(rank_rows=rank_rows, view_rows=view_rows, provenance=provenance)
