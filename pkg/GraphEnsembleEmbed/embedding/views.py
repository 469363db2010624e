"""Multi-dimension DeepWalk views and the view dump format.

A view file holds a header line ``N D`` followed by N rows of D
space-separated decimal floats, written with 17 significant digits so the
values read back bit-exactly.
"""

from __future__ import annotations

import logging
from dataclasses import replace
from pathlib import Path
from typing import List, Sequence, Union

import numpy as np

from ..core.errors import DimensionMismatchError
from ..core.graph import Graph
from ..core.seeding import derive_seed
from .skipgram import EmbeddingView, SgnsParams, train_skipgram
from .walks import WalkParams, generate_walks

logger = logging.getLogger(__name__)

VIEW_FILE_PATTERN = "view_d{dim}.txt"


def make_views(g: Graph, dims: Sequence[int], p: WalkParams, base: SgnsParams) -> List[EmbeddingView]:
    """Run DeepWalk once per requested dimension.

    View ``m`` uses its own walk corpus and SGNS seed, both derived from the
    base seeds and ``m``.

    Args:
        g: Input graph.
        dims: Embedding dimensions, one view each, in order.
        p: Walk parameters (``p.seed`` is the base walk seed).
        base: SGNS parameters; ``dim`` and ``seed`` are replaced per view.

    Returns:
        List of views, view ``m`` having ``dims[m]`` columns.

    Raises:
        ValueError: If ``dims`` is empty or holds a value below 1.
    """
    dims = [int(d) for d in dims]
    if not dims:
        raise ValueError("at least one view dimension is required")
    bad = [d for d in dims if d < 1]
    if bad:
        raise ValueError(f"view dimensions must be >= 1, got {bad}")

    views: List[EmbeddingView] = []
    for m, dim in enumerate(dims):
        walk_params = replace(p, seed=derive_seed(p.seed, "walks", m))
        sgns_params = replace(base, dim=dim, seed=derive_seed(base.seed, "sgns", m))
        walks = generate_walks(g, walk_params)
        views.append(train_skipgram(walks, g, sgns_params, p.window))
        logger.info("Trained DeepWalk view %d/%d (d=%d)", m + 1, len(dims), dim)
    return views


def dump_view(view: EmbeddingView, path: Union[str, Path]) -> None:
    """Write one view in the dump format."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    n, d = view.matrix.shape
    np.savetxt(path, view.matrix, fmt="%.17g", delimiter=" ", header=f"{n} {d}", comments="")


def load_view(path: Union[str, Path]) -> EmbeddingView:
    """Read a view written by :func:`dump_view`.

    Raises:
        FileNotFoundError: If the file does not exist.
        DimensionMismatchError: If the body disagrees with the ``N D`` header.
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"View file not found: {path}")
    with open(path, "r", encoding="utf-8") as f:
        header = f.readline().split()
    if len(header) != 2:
        raise DimensionMismatchError(f"{path}: header must be 'N D'")
    n, d = int(header[0]), int(header[1])
    matrix = np.loadtxt(path, skiprows=1, ndmin=2, dtype=np.float64)
    if matrix.shape != (n, d):
        raise DimensionMismatchError(f"{path}: header says {n}x{d}, body is {matrix.shape[0]}x{matrix.shape[1]}")
    return EmbeddingView(matrix)


def save_views(views: Sequence[EmbeddingView], directory: Union[str, Path]) -> List[Path]:
    """Dump every view to ``directory/view_d<dim>.txt``; returns the paths."""
    directory = Path(directory)
    paths = []
    for view in views:
        path = directory / VIEW_FILE_PATTERN.format(dim=view.dim)
        dump_view(view, path)
        paths.append(path)
    return paths


def load_views(directory: Union[str, Path]) -> List[EmbeddingView]:
    """Load all ``view_d*.txt`` files of a directory in increasing dimension order."""
    directory = Path(directory)
    files = sorted(directory.glob("view_d*.txt"), key=lambda f: int(f.stem.split("_d", 1)[1]))
    if not files:
        raise FileNotFoundError(f"No view files in {directory}")
    return [load_view(f) for f in files]
