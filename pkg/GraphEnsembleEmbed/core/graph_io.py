"""Graph and label file I/O.

This module provides functions for:
- Parsing whitespace-separated edge lists (``#`` comments, optional
  ``N <count>`` header line)
- Parsing and writing ``node_id label`` label files
- Loading the bundled Zachary karate club data

Parse errors carry the file path and 1-based line number.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Tuple, Union

import numpy as np

from .errors import GraphFormatError, SelfLoopError
from .graph import Graph, validate_labels

logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).resolve().parent.parent / "data"
KARATE_EDGES = DATA_DIR / "karate_edges.txt"
KARATE_LABELS = DATA_DIR / "karate_labels.txt"


def _content_lines(path: Path) -> Iterator[Tuple[int, List[str]]]:
    """Yield (line_no, tokens) for every non-blank, non-comment line."""
    with open(path, "r", encoding="utf-8") as f:
        for line_no, raw in enumerate(f, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            yield line_no, line.split()


def _parse_int(token: str, path: Path, line_no: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise GraphFormatError(f"expected an integer, got {token!r}", path, line_no) from None
    if value < 0:
        raise GraphFormatError(f"negative node id {value}", path, line_no)
    return value


def load_edge_list(path: Union[str, Path]) -> Graph:
    """Load an undirected graph from an edge-list file.

    Each content line holds two integer node ids. The first content line may
    instead be ``N <count>`` to declare the node count; otherwise the count is
    one more than the largest id seen. Repeated and reversed edges collapse.

    Args:
        path: Edge-list file (UTF-8).

    Returns:
        Graph: The parsed graph.

    Raises:
        FileNotFoundError: If the file does not exist.
        GraphFormatError: On a malformed line, an id beyond a declared count,
            or a file without edges or header.
        SelfLoopError: If a line joins a node to itself.
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Edge list not found: {path}")

    declared: Optional[int] = None
    edges = set()
    max_id = -1
    first = True
    for line_no, tokens in _content_lines(path):
        if first and tokens[0] == "N":
            first = False
            if len(tokens) != 2:
                raise GraphFormatError("header must be 'N <count>'", path, line_no)
            declared = _parse_int(tokens[1], path, line_no)
            if declared < 1:
                raise GraphFormatError("declared node count must be positive", path, line_no)
            continue
        first = False
        if len(tokens) != 2:
            raise GraphFormatError(f"expected two node ids, got {len(tokens)} fields", path, line_no)
        u = _parse_int(tokens[0], path, line_no)
        v = _parse_int(tokens[1], path, line_no)
        if u == v:
            raise SelfLoopError(u, path, line_no)
        if declared is not None and max(u, v) >= declared:
            raise GraphFormatError(f"node id {max(u, v)} exceeds declared count {declared}", path, line_no)
        edges.add((min(u, v), max(u, v)))
        max_id = max(max_id, u, v)

    if declared is None and not edges:
        raise GraphFormatError("edge list is empty", path)

    num_nodes = declared if declared is not None else max_id + 1
    g = Graph(num_nodes=num_nodes, edges=frozenset(edges))
    logger.debug("Loaded %s: %d nodes, %d edges", path, g.num_nodes, g.num_edges)
    return g


def load_labels(path: Union[str, Path], num_nodes: int) -> np.ndarray:
    """Load a ground-truth label file of ``node_id label`` lines.

    Every node in ``[0, num_nodes)`` must be labelled exactly once. Raw label
    values are compacted to ``0..k-1`` in increasing order of value.

    Args:
        path: Label file (UTF-8, ``#`` comments allowed).
        num_nodes: Node count of the graph the labels belong to.

    Returns:
        np.ndarray: int64 vector of length ``num_nodes``.

    Raises:
        FileNotFoundError: If the file does not exist.
        GraphFormatError: On malformed, duplicate, out-of-range or missing entries.
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Label file not found: {path}")

    raw: Dict[int, int] = {}
    for line_no, tokens in _content_lines(path):
        if len(tokens) != 2:
            raise GraphFormatError(f"expected 'node_id label', got {len(tokens)} fields", path, line_no)
        node = _parse_int(tokens[0], path, line_no)
        label = _parse_int(tokens[1], path, line_no)
        if node >= num_nodes:
            raise GraphFormatError(f"node id {node} outside [0, {num_nodes})", path, line_no)
        if node in raw:
            raise GraphFormatError(f"node {node} labelled twice", path, line_no)
        raw[node] = label

    missing = [u for u in range(num_nodes) if u not in raw]
    if missing:
        preview = ", ".join(map(str, missing[:5]))
        raise GraphFormatError(f"{len(missing)} node(s) without a label (first: {preview})", path)

    values = np.array([raw[u] for u in range(num_nodes)], dtype=np.int64)
    _, compact = np.unique(values, return_inverse=True)
    return validate_labels(compact.astype(np.int64), num_nodes)


def load_karate() -> Tuple[Graph, np.ndarray]:
    """Return the bundled Zachary karate club graph and its two-faction labels."""
    g = load_edge_list(KARATE_EDGES)
    return g, load_labels(KARATE_LABELS, g.num_nodes)


def dump_labels(labels: np.ndarray, path: Union[str, Path]) -> Path:
    """Write a label vector as ``node_id label`` lines readable by :func:`load_labels`."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    labels = np.asarray(labels, dtype=np.int64).ravel()
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for node, label in enumerate(labels):
            f.write(f"{node} {label}\n")
    return path
