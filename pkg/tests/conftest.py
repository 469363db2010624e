"""Shared fixtures: planted graphs, input files and synthetic PARAFAC2 data."""

from __future__ import annotations

from pathlib import Path
from typing import Callable, List, Sequence, Tuple

import numpy as np
import pytest

from GraphEnsembleEmbed.core.graph import Graph


def clique_pairs(num_cliques: int, size: int) -> List[Tuple[int, int]]:
    pairs = []
    for c in range(num_cliques):
        base = c * size
        pairs += [(base + i, base + j) for i in range(size) for j in range(i + 1, size)]
    return pairs


def synthetic_parafac2(
    rng: np.random.Generator, n: int, dims: Sequence[int], rank: int, noise: float = 0.0
) -> Tuple[List[np.ndarray], np.ndarray]:
    """Views ``X_m = V diag(s_m) H^T Q_m^T (+ noise)`` and the generating V."""
    v = rng.standard_normal((n, rank))
    h = rng.standard_normal((rank, rank))
    views = []
    for d in dims:
        q, _ = np.linalg.qr(rng.standard_normal((d, rank)))
        s = rng.uniform(0.5, 1.5, size=rank)
        x = ((v * s) @ h.T) @ q.T
        if noise:
            x = x + noise * rng.standard_normal(x.shape)
        views.append(x)
    return views, v


@pytest.fixture
def write_text(tmp_path: Path) -> Callable[[str, str], Path]:
    def _write(name: str, text: str) -> Path:
        path = tmp_path / name
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        return path

    return _write


@pytest.fixture
def two_cliques() -> Tuple[Graph, np.ndarray]:
    """Two disjoint 10-cliques and their membership labels."""
    g = Graph.from_edges(20, clique_pairs(2, 10))
    return g, np.repeat(np.arange(2), 10)


@pytest.fixture
def clique_files(write_text) -> Tuple[Path, Path]:
    edges = "N 20\n" + "".join(f"{u} {v}\n" for u, v in clique_pairs(2, 10))
    labels = "".join(f"{u} {u // 10}\n" for u in range(20))
    return write_text("cliques/edges.txt", edges), write_text("cliques/labels.txt", labels)


@pytest.fixture
def clique_config(clique_files, write_text) -> Path:
    """Small, fast experiment on the two-clique graph."""
    text = """\
# two planted 10-cliques
graph = cliques/edges.txt
labels = cliques/labels.txt
dims = 4, 8
walks_per_node = 10
walk_length = 20
window = 3
epochs = 3
rank_min = 2
rank_max = 2
kmeans_restarts = 5
seed = 7
out = results
"""
    return write_text("experiment.cfg", text)
