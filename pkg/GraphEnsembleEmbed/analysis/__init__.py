"""Clustering and evaluation of node embeddings (Qt-free, numpy only)."""

from .clustering import KmeansParams, KmeansResult, kmeans, kmeans_fit, kmeans_plusplus
from .metrics import ClusterReport, clustering_accuracy, contingency_matrix, nmi, score

__all__ = [
    "KmeansParams",
    "KmeansResult",
    "kmeans",
    "kmeans_fit",
    "kmeans_plusplus",
    "ClusterReport",
    "clustering_accuracy",
    "contingency_matrix",
    "nmi",
    "score",
]
