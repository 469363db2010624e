"""Experiment pipeline: configuration, rank sweep and report files."""

from .config import CONFIG_KEYS, PipelineConfig, default_config, load_config, parse_config_text
from .reports import RankRow, SweepReport, ViewRow, emit_reports, read_reports
from .runner import build_views, load_inputs, resolve_k, run_ensemble_sweep, run_single_views

__all__ = [
    "CONFIG_KEYS",
    "PipelineConfig",
    "default_config",
    "load_config",
    "parse_config_text",
    "RankRow",
    "ViewRow",
    "SweepReport",
    "emit_reports",
    "read_reports",
    "load_inputs",
    "resolve_k",
    "build_views",
    "run_single_views",
    "run_ensemble_sweep",
]
