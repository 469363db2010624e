"""K-means with k-means++ seeding and restarts (Qt-free numpy code).

Distances are squared Euclidean on the points as given; no row
normalization is applied.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List

import numpy as np

from ..core.constants import DEFAULT_KMEANS_MAX_ITERS, DEFAULT_KMEANS_RESTARTS
from ..core.seeding import make_rng

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KmeansParams:
    k: int
    restarts: int = DEFAULT_KMEANS_RESTARTS
    max_iters: int = DEFAULT_KMEANS_MAX_ITERS
    seed: int = 0

    def __post_init__(self):
        for name in ("k", "restarts", "max_iters"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1, got {getattr(self, name)}")


@dataclass
class KmeansResult:
    """Best run over all restarts.

    Attributes:
        labels: Cluster id per point, in ``[0, k)``.
        centers: k x p centroids.
        wcss: Within-cluster sum of squared distances of the best run.
        restart_wcss: Final WCSS of every restart, in restart order.
        history: WCSS after every assignment step of the best run.
    """

    labels: np.ndarray
    centers: np.ndarray
    wcss: float
    restart_wcss: List[float] = field(default_factory=list)
    history: List[float] = field(default_factory=list)


def _sq_dists(points: np.ndarray, centers: np.ndarray) -> np.ndarray:
    diff = points[:, None, :] - centers[None, :, :]
    return np.einsum("nkp,nkp->nk", diff, diff)


def kmeans_plusplus(points: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    """k-means++ seeding: each new center drawn with probability proportional to D^2."""
    n = points.shape[0]
    chosen = [int(rng.integers(n))]
    closest = _sq_dists(points, points[chosen])[:, 0]
    for _ in range(1, k):
        total = closest.sum()
        if total > 0:
            idx = int(rng.choice(n, p=closest / total))
        else:
            # fewer distinct points than k
            idx = int(rng.integers(n))
        chosen.append(idx)
        np.minimum(closest, _sq_dists(points, points[idx : idx + 1])[:, 0], out=closest)
    return points[chosen].copy()


def _lloyd(points: np.ndarray, centers: np.ndarray, max_iters: int):
    k = centers.shape[0]
    history: List[float] = []
    labels = None
    for _ in range(max_iters):
        dist = _sq_dists(points, centers)
        new_labels = np.argmin(dist, axis=1)
        point_cost = dist[np.arange(points.shape[0]), new_labels]
        history.append(float(point_cost.sum()))
        if labels is not None and np.array_equal(new_labels, labels):
            break
        labels = new_labels

        counts = np.bincount(labels, minlength=k)
        sums = np.zeros_like(centers)
        np.add.at(sums, labels, points)
        nonempty = counts > 0
        centers = centers.copy()
        centers[nonempty] = sums[nonempty] / counts[nonempty, None]
        if not np.all(nonempty):
            # reseed each empty cluster on the point farthest from its centroid
            cost = point_cost.copy()
            for j in np.flatnonzero(~nonempty):
                far = int(np.argmax(cost))
                if cost[far] <= 0:
                    break
                centers[j] = points[far]
                cost[far] = -1.0
                labels = None  # force another assignment pass
    dist = _sq_dists(points, centers)
    labels = np.argmin(dist, axis=1)
    wcss = float(dist[np.arange(points.shape[0]), labels].sum())
    return labels, centers, wcss, history


def kmeans_fit(points: np.ndarray, params: KmeansParams) -> KmeansResult:
    """Run ``params.restarts`` seeded K-means runs and keep the lowest-WCSS one.

    Ties between restarts go to the lowest restart index.

    Args:
        points: N x p matrix (a 1-D array is treated as one column).
        params: Clustering parameters.

    Returns:
        KmeansResult: The best run.

    Raises:
        ValueError: If ``k`` exceeds N or the points are not finite.
    """
    x = np.asarray(points, dtype=np.float64)
    if x.ndim == 1:
        x = x[:, None]
    if x.ndim != 2:
        raise ValueError(f"points must be a 2-D matrix, got shape {x.shape}")
    n = x.shape[0]
    if params.k > n:
        raise ValueError(f"k={params.k} exceeds the number of points {n}")
    if not np.all(np.isfinite(x)):
        raise ValueError("K-means input contains non-finite entries")

    best = None
    restart_wcss: List[float] = []
    for restart in range(params.restarts):
        rng = make_rng(params.seed, restart)
        labels, centers, wcss, history = _lloyd(x, kmeans_plusplus(x, params.k, rng), params.max_iters)
        restart_wcss.append(wcss)
        if best is None or wcss < best.wcss:
            best = KmeansResult(labels=labels, centers=centers, wcss=wcss, history=history)
    best.restart_wcss = restart_wcss
    logger.debug("K-means k=%d: best WCSS %.6g over %d restarts", params.k, best.wcss, params.restarts)
    return best


def kmeans(points: np.ndarray, params: KmeansParams) -> np.ndarray:
    """Cluster labels of the best of ``params.restarts`` K-means runs."""
    return kmeans_fit(points, params).labels
