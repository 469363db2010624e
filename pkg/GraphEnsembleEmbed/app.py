"""Application entry point.

This module provides the main() function behind the command-line interface.

Usage:
    python main.py sweep [--config FILE] [--seed N] [--out DIR] [-v]
    python main.py views [--config FILE] [--seed N] [--out DIR]
    python main.py fit --rank R [--views DIR] [--config FILE] [--seed N] [--out DIR]
    python main.py eval --pred FILE [--config FILE]

    # Or as a module:
    python -m GraphEnsembleEmbed.app sweep

Without ``--config`` the bundled karate club experiment is used.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from .analysis.clustering import KmeansParams, kmeans
from .analysis.metrics import score
from .core.constants import VIEWS_SUBDIR
from .core.errors import RankError
from .core.graph_io import dump_labels, load_edge_list, load_labels
from .core.seeding import derive_seed
from .embedding.skipgram import EmbeddingView
from .embedding.views import dump_view, load_views, save_views
from .pipeline.config import PipelineConfig, default_config, load_config
from .pipeline.runner import build_views, resolve_k, run_ensemble_sweep
from .tensor.model_io import dump_model
from .tensor.parafac2 import FitOptions, ViewSet, extract_embedding, feasible_views, parafac2_fit

logger = logging.getLogger(__name__)

MODEL_FILE = "parafac2_model.txt"
EMBEDDING_FILE = "ensemble_embedding.txt"
PREDICTED_LABELS_FILE = "predicted_labels.txt"


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="Experiment config file (key = value lines)")
    common.add_argument("--seed", type=int, help="Master seed, overrides the config file")
    common.add_argument("--out", type=Path, help="Output directory, overrides the config file")
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging")

    p = argparse.ArgumentParser(prog="GraphEnsembleEmbed", description="DeepWalk views fused with PARAFAC2")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("views", parents=[common], help="Build and dump DeepWalk views")
    fit = sub.add_parser("fit", parents=[common], help="Fit PARAFAC2 on dumped views")
    fit.add_argument("--rank", type=int, required=True, help="PARAFAC2 rank R")
    fit.add_argument("--views", type=Path, help="Directory of view_d*.txt files (default <out>/views)")
    sub.add_parser("sweep", parents=[common], help="Run the full rank-sweep experiment")
    ev = sub.add_parser("eval", parents=[common], help="Score a predicted-labels file")
    ev.add_argument("--pred", type=Path, required=True, help="Predicted labels (node_id label lines)")
    return p


def _load_config(args: argparse.Namespace) -> PipelineConfig:
    config = load_config(args.config) if args.config is not None else default_config()
    return config.with_overrides(seed=args.seed, out=args.out)


def _cmd_views(config: PipelineConfig) -> None:
    graph = load_edge_list(config.graph_path)
    views = build_views(config, graph)
    paths = save_views(views, config.output_dir / VIEWS_SUBDIR)
    print(f"Wrote {len(paths)} views to {config.output_dir / VIEWS_SUBDIR}")


def _cmd_fit(config: PipelineConfig, rank: int, views_dir: Optional[Path]) -> None:
    views = load_views(views_dir if views_dir is not None else config.output_dir / VIEWS_SUBDIR)
    dims = [v.dim for v in views]
    used = feasible_views(dims, rank)
    if not used:
        raise RankError(f"rank {rank} exceeds every view dimension {dims}")
    if len(used) < len(views):
        logger.warning("R=%d: excluding view(s) with D_m < R: %s", rank, [d for m, d in enumerate(dims) if m not in used])

    opts = FitOptions(
        max_sweeps=config.max_sweeps,
        rel_tol=config.rel_tol,
        seed=derive_seed(config.master_seed, "parafac2", rank),
    )
    model, _ = parafac2_fit(ViewSet([views[m].matrix for m in used]), rank, opts)
    out = config.output_dir
    dump_model(model, out / MODEL_FILE)
    embedding = extract_embedding(model)
    dump_view(EmbeddingView(embedding), out / EMBEDDING_FILE)
    print(f"Fitted R={rank} on {len(used)} view(s) in {model.sweeps} sweeps -> {out / MODEL_FILE}")

    if config.labels_path is None:
        return
    truth = load_labels(config.labels_path, embedding.shape[0])
    params = KmeansParams(
        k=resolve_k(config, truth),
        restarts=config.kmeans_restarts,
        max_iters=config.kmeans_max_iters,
        seed=derive_seed(config.master_seed, "kmeans-rank", rank),
    )
    labels = kmeans(embedding, params)
    dump_labels(labels, out / PREDICTED_LABELS_FILE)
    rep = score(labels, truth)
    print(f"accuracy={rep.accuracy:.4f} nmi={rep.nmi:.4f}")


def _cmd_sweep(config: PipelineConfig) -> None:
    report = run_ensemble_sweep(config)
    best = report.best_rank_row()
    if best is not None:
        print(f"best rank R={best.rank}: accuracy={best.accuracy:.4f} nmi={best.nmi:.4f}")
    else:
        print("no feasible rank in the sweep")
    view = report.best_view_row()
    if view is not None:
        print(f"best DeepWalk d={view.dim}: accuracy={view.accuracy:.4f} nmi={view.nmi:.4f}")
    print(f"Reports written to {config.output_dir}")


def _cmd_eval(config: PipelineConfig, pred_path: Path) -> None:
    if config.labels_path is None:
        raise ValueError("no ground-truth labels configured")
    graph = load_edge_list(config.graph_path)
    truth = load_labels(config.labels_path, graph.num_nodes)
    pred = load_labels(pred_path, graph.num_nodes)
    rep = score(pred, truth)
    print(f"accuracy={rep.accuracy:.4f} nmi={rep.nmi:.4f}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command-line interface.

    Args:
        argv: Arguments without the program name (defaults to sys.argv[1:])

    Returns:
        Exit code: 0 on success, 1 on failure, 2 on a usage error.
    """
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as e:
        return int(e.code or 0)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    if not args.verbose:
        logging.getLogger("gensim").setLevel(logging.WARNING)

    try:
        config = _load_config(args)
        if args.command == "views":
            _cmd_views(config)
        elif args.command == "fit":
            _cmd_fit(config, args.rank, args.views)
        elif args.command == "sweep":
            _cmd_sweep(config)
        elif args.command == "eval":
            _cmd_eval(config, args.pred)
    except Exception as e:
        logger.debug("Command failed", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
