"""End-to-end experiment: DeepWalk views, PARAFAC2 fusion, K-means, metrics.

Stages run sequentially and every stage seed is derived from the master
seed, so identical configurations give identical reports.
"""

from __future__ import annotations

import logging
from dataclasses import replace
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .. import __version__
from ..analysis.clustering import KmeansParams, kmeans
from ..analysis.metrics import score
from ..core.errors import ConfigError
from ..core.graph import Graph
from ..core.graph_io import load_edge_list, load_labels
from ..core.seeding import derive_seed
from ..embedding.skipgram import EmbeddingView
from ..embedding.views import make_views
from ..tensor.parafac2 import FitOptions, ViewSet, extract_embedding, feasible_views, parafac2_fit
from .config import PipelineConfig
from .reports import RankRow, SweepReport, ViewRow, emit_reports

logger = logging.getLogger(__name__)


def load_inputs(config: PipelineConfig) -> Tuple[Graph, np.ndarray]:
    """Load the configured graph and ground-truth labels.

    Raises:
        ConfigError: If no label file is configured.
    """
    graph = load_edge_list(config.graph_path)
    if config.labels_path is None:
        raise ConfigError("a ground-truth label file is required for scoring", "labels")
    truth = load_labels(config.labels_path, graph.num_nodes)
    return graph, truth


def resolve_k(config: PipelineConfig, truth: np.ndarray) -> int:
    """K-means cluster count: the configured value or the number of truth classes."""
    return config.kmeans_k if config.kmeans_k is not None else int(np.unique(truth).size)


def build_views(config: PipelineConfig, graph: Graph) -> List[EmbeddingView]:
    """Train one DeepWalk view per configured dimension."""
    walks = replace(config.walks, seed=derive_seed(config.master_seed, "walks"))
    sgns = replace(config.sgns, seed=derive_seed(config.master_seed, "sgns"))
    logger.info("Building %d DeepWalk views (dims %s)", len(config.view_dims), list(config.view_dims))
    return make_views(graph, config.view_dims, walks, sgns)


def _kmeans_params(config: PipelineConfig, k: int, stage: str, index: int) -> KmeansParams:
    return KmeansParams(
        k=k,
        restarts=config.kmeans_restarts,
        max_iters=config.kmeans_max_iters,
        seed=derive_seed(config.master_seed, stage, index),
    )


def run_single_views(
    config: PipelineConfig,
    views: Optional[Sequence[EmbeddingView]] = None,
    graph: Optional[Graph] = None,
    truth: Optional[np.ndarray] = None,
) -> List[ViewRow]:
    """Cluster every DeepWalk view directly and score it.

    Args:
        config: Experiment configuration.
        views: Pre-built views (built from ``config`` when omitted).
        graph: Pre-loaded graph (loaded from ``config`` when omitted).
        truth: Pre-loaded labels (loaded from ``config`` when omitted).

    Returns:
        One row per view dimension, in configuration order.
    """
    if graph is None or truth is None:
        graph, truth = load_inputs(config)
    if views is None:
        views = build_views(config, graph)
    k = resolve_k(config, truth)

    rows: List[ViewRow] = []
    for m, view in enumerate(views):
        labels = kmeans(view.matrix, _kmeans_params(config, k, "kmeans-view", m))
        rep = score(labels, truth)
        rows.append(ViewRow(dim=view.dim, accuracy=rep.accuracy, nmi=rep.nmi, labels=labels))
        logger.info("DeepWalk d=%d: accuracy %.4f, NMI %.4f", view.dim, rep.accuracy, rep.nmi)
    return rows


def _fmt_list(values) -> str:
    return ",".join(str(v) for v in values)


def run_ensemble_sweep(
    config: PipelineConfig,
    views: Optional[Sequence[EmbeddingView]] = None,
    graph: Optional[Graph] = None,
    truth: Optional[np.ndarray] = None,
    write: bool = True,
) -> SweepReport:
    """Fuse the views with PARAFAC2 at every rank of the sweep and score the result.

    Views with ``D_m < R`` are excluded at rank R and recorded; a rank that
    excludes every view yields an infeasible row and the sweep continues.

    Args:
        config: Experiment configuration.
        views, graph, truth: Optional pre-built inputs, as in :func:`run_single_views`.
        write: Emit the report files to ``config.output_dir``.

    Returns:
        SweepReport: Rank rows, single-view baselines and provenance.
    """
    if graph is None or truth is None:
        graph, truth = load_inputs(config)
    if views is None:
        views = build_views(config, graph)
    k = resolve_k(config, truth)
    dims = [v.dim for v in views]

    provenance: Dict[str, Any] = {
        "config_hash": config.config_hash(),
        "master_seed": int(config.master_seed),
        "version": __version__,
        "graph": str(config.graph_path),
        "num_nodes": graph.num_nodes,
        "num_edges": graph.num_edges,
        "view_dims": _fmt_list(dims),
        "rank_sweep": f"{config.rank_min}..{config.rank_max} step {config.rank_step}",
        "kmeans_k": k,
    }

    view_rows = run_single_views(config, views=views, graph=graph, truth=truth)

    rank_rows: List[RankRow] = []
    for rank in config.rank_sweep():
        used = feasible_views(dims, rank)
        dropped = [d for m, d in enumerate(dims) if m not in used]
        provenance[f"rank_{rank}_dropped_dims"] = _fmt_list(dropped)
        if dropped:
            logger.warning("R=%d: excluding view(s) with D_m < R: %s", rank, dropped)
        if not used:
            logger.warning("R=%d: no feasible view, row marked infeasible", rank)
            provenance[f"rank_{rank}_infeasible"] = "no view with D_m >= R"
            rank_rows.append(RankRow(rank=rank, accuracy=None, nmi=None, views_used=0))
            continue
        if rank > graph.num_nodes:
            logger.warning("R=%d exceeds N=%d, row marked infeasible", rank, graph.num_nodes)
            provenance[f"rank_{rank}_infeasible"] = f"R exceeds N={graph.num_nodes}"
            rank_rows.append(RankRow(rank=rank, accuracy=None, nmi=None, views_used=len(used)))
            continue

        data = ViewSet([views[m].matrix for m in used])
        opts = FitOptions(
            max_sweeps=config.max_sweeps,
            rel_tol=config.rel_tol,
            seed=derive_seed(config.master_seed, "parafac2", rank),
        )
        model, trace = parafac2_fit(data, rank, opts)
        embedding = extract_embedding(model)
        labels = kmeans(embedding, _kmeans_params(config, k, "kmeans-rank", rank))
        rep = score(labels, truth)
        rank_rows.append(RankRow(rank=rank, accuracy=rep.accuracy, nmi=rep.nmi, views_used=len(used)))

        total = data.total_sum_of_squares()
        provenance[f"rank_{rank}_relative_error"] = trace[-1] / total if total > 0 else 0.0
        provenance[f"rank_{rank}_sweeps"] = model.sweeps
        provenance[f"rank_{rank}_view_weights"] = _fmt_list(f"{w:.6g}" for w in model.S.mean(axis=1))
        logger.info("Ensemble R=%d (%d views): accuracy %.4f, NMI %.4f", rank, len(used), rep.accuracy, rep.nmi)

    report = SweepReport(rank_rows=rank_rows, view_rows=view_rows, provenance=provenance)
    best = report.best_rank_row()
    if best is not None:
        provenance["best_rank"] = best.rank
        provenance["best_rank_accuracy"] = best.accuracy
        provenance["best_rank_nmi"] = best.nmi

    if write:
        emit_reports(report, config.output_dir)
    return report
