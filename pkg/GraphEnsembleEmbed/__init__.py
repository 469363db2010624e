"""GraphEnsembleEmbed - Ensemble node embeddings fused with PARAFAC2.

This package builds several DeepWalk embeddings of one graph at different
dimensions, fuses them into a single node embedding with a PARAFAC2
decomposition, and scores K-means clusterings of every embedding against
ground-truth communities.

Graph:
    - Edge-list and label-file parsing with line-numbered errors
    - Bundled Zachary karate club data

Embedding:
    - Truncated uniform random walks
    - Skip-gram with negative sampling trained by gensim Word2Vec
    - Multi-dimension views and the view dump format

Tensor:
    - PARAFAC2 alternating least squares (Procrustes + CP inner step)
    - Model dump format, reconstruction and per-view importance

Analysis:
    - K-means++ with restarts
    - Matched clustering accuracy and NMI
    - CSV export of result tables

Package Structure:
    - core/: graph model, parsing, seeds, constants, errors
    - embedding/: walks, skip-gram, views
    - tensor/: linear-algebra kernels and PARAFAC2
    - analysis/: clustering, metrics, exporting
    - pipeline/: configuration, experiment runner, reports

Quick Start:
    python main.py sweep --out results

Dependencies:
    - numpy: Array operations
    - scipy: SVD, assignment, NNLS
    - gensim: skip-gram training
    - polars: CSV reports
"""

__version__ = "0.1.0"

from .app import main
from .core import Graph, derive_seed, load_edge_list, load_karate, load_labels
from .embedding import EmbeddingView, make_views
from .tensor import Parafac2Model, extract_embedding, parafac2_fit
from .analysis import clustering_accuracy, kmeans, nmi
from .pipeline import PipelineConfig, SweepReport, run_ensemble_sweep, run_single_views

__all__ = [
    "main",
    "Graph",
    "derive_seed",
    "load_edge_list",
    "load_karate",
    "load_labels",
    "EmbeddingView",
    "make_views",
    "Parafac2Model",
    "parafac2_fit",
    "extract_embedding",
    "kmeans",
    "clustering_accuracy",
    "nmi",
    "PipelineConfig",
    "SweepReport",
    "run_single_views",
    "run_ensemble_sweep",
]
