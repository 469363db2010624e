"""External clustering quality: matched accuracy and NMI.

Both metrics only look at the partition, so any bijective renaming of
either label vector leaves them unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np
from scipy.optimize import linear_sum_assignment


@dataclass
class ClusterReport:
    """Predicted labels scored against ground truth."""

    predicted: np.ndarray
    truth: np.ndarray
    accuracy: float
    nmi: float


def _check_pair(pred, truth) -> Tuple[np.ndarray, np.ndarray]:
    p = np.asarray(pred).ravel()
    t = np.asarray(truth).ravel()
    if p.shape != t.shape:
        raise ValueError(f"label vectors differ in length: {p.shape[0]} vs {t.shape[0]}")
    if p.size == 0:
        raise ValueError("label vectors must be non-empty")
    return p, t


def contingency_matrix(pred, truth) -> np.ndarray:
    """Counts ``C[i, j]`` of points in predicted cluster i and true class j.

    Rows and columns follow the sorted distinct label values.
    """
    p, t = _check_pair(pred, truth)
    _, pi = np.unique(p, return_inverse=True)
    _, ti = np.unique(t, return_inverse=True)
    table = np.zeros((pi.max() + 1, ti.max() + 1), dtype=np.int64)
    np.add.at(table, (pi.ravel(), ti.ravel()), 1)
    return table


def clustering_accuracy(pred, truth) -> float:
    """Fraction of points matched under the best injective cluster-to-class map.

    The map is the optimal assignment on the contingency matrix; clusters
    left without a class contribute no matches.

    Raises:
        ValueError: If the vectors are empty or differ in length.
    """
    table = contingency_matrix(pred, truth)
    rows, cols = linear_sum_assignment(table, maximize=True)
    return float(table[rows, cols].sum()) / float(table.sum())


def _entropy(counts: np.ndarray, n: int) -> float:
    p = counts[counts > 0] / n
    return float(-(p * np.log(p)).sum())


def nmi(pred, truth) -> float:
    """Mutual information over the arithmetic mean of the two entropies.

    Returns 1.0 when both labelings are constant and 0.0 when the mutual
    information vanishes.

    Raises:
        ValueError: If the vectors are empty or differ in length.
    """
    table = contingency_matrix(pred, truth).astype(np.float64)
    n = table.sum()
    h_pred = _entropy(table.sum(axis=1), n)
    h_truth = _entropy(table.sum(axis=0), n)
    if h_pred == 0.0 and h_truth == 0.0:
        return 1.0

    joint = table / n
    outer = np.outer(table.sum(axis=1), table.sum(axis=0)) / (n * n)
    nz = joint > 0
    mi = float((joint[nz] * np.log(joint[nz] / outer[nz])).sum())
    if mi <= 0.0:
        return 0.0
    return float(min(1.0, mi / ((h_pred + h_truth) / 2.0)))


def score(pred, truth) -> ClusterReport:
    """Bundle both metrics for one prediction."""
    p, t = _check_pair(pred, truth)
    return ClusterReport(predicted=p, truth=t, accuracy=clustering_accuracy(p, t), nmi=nmi(p, t))
