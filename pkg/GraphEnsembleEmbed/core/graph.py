"""Undirected simple graph and ground-truth label containers.

The graph is immutable after construction and safe to share read-only
between threads. Node ids are the dense integers ``0..num_nodes-1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Tuple

import numpy as np

from .errors import GraphFormatError, SelfLoopError

Edge = Tuple[int, int]


def _normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected graph without self-loops or parallel edges.

    Each edge ``{u, v}`` is stored once as the ordered pair ``(min, max)``.
    Sorted neighbor lists are built once at construction.
    """

    num_nodes: int
    edges: FrozenSet[Edge]
    _neighbors: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.num_nodes < 1:
            raise ValueError(f"num_nodes must be positive, got {self.num_nodes}")
        adj: List[List[int]] = [[] for _ in range(self.num_nodes)]
        for u, v in self.edges:
            if u == v:
                raise SelfLoopError(u)
            if u > v:
                raise ValueError(f"edge ({u}, {v}) is not normalized")
            if u < 0 or v >= self.num_nodes:
                raise ValueError(f"edge ({u}, {v}) outside node range [0, {self.num_nodes})")
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "_neighbors", tuple(tuple(sorted(a)) for a in adj))

    @classmethod
    def from_edges(cls, num_nodes: int, pairs: Iterable[Tuple[int, int]]) -> "Graph":
        """Build a graph from (u, v) pairs in any direction; duplicates collapse.

        Raises:
            SelfLoopError: If a pair has u == v.
        """
        edges = set()
        for u, v in pairs:
            u, v = int(u), int(v)
            if u == v:
                raise SelfLoopError(u)
            edges.add(_normalize_edge(u, v))
        return cls(num_nodes=num_nodes, edges=frozenset(edges))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def neighbor_lists(self) -> Tuple[Tuple[int, ...], ...]:
        """Sorted neighbor tuples of every node, indexed by node id."""
        return self._neighbors

    def neighbors(self, u: int) -> List[int]:
        """Return the sorted neighbors of node ``u``.

        Raises:
            IndexError: If ``u`` is outside ``[0, num_nodes)``.
        """
        if not 0 <= u < self.num_nodes:
            raise IndexError(f"node {u} outside [0, {self.num_nodes})")
        return list(self._neighbors[u])

    def degree(self, u: int) -> int:
        if not 0 <= u < self.num_nodes:
            raise IndexError(f"node {u} outside [0, {self.num_nodes})")
        return len(self._neighbors[u])

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize_edge(u, v) in self.edges


def adjacency(g: Graph) -> np.ndarray:
    """Return the dense binary N x N adjacency matrix (symmetric, zero diagonal)."""
    a = np.zeros((g.num_nodes, g.num_nodes), dtype=np.float64)
    if g.edges:
        idx = np.array(sorted(g.edges), dtype=np.int64)
        a[idx[:, 0], idx[:, 1]] = 1.0
        a[idx[:, 1], idx[:, 0]] = 1.0
    return a


def neighbors(g: Graph, u: int) -> List[int]:
    """Sorted neighbor list of ``u``; see :meth:`Graph.neighbors`."""
    return g.neighbors(u)


def validate_labels(labels: np.ndarray, num_nodes: int) -> np.ndarray:
    """Check a ground-truth label vector and return it as int64.

    Labels must have length ``num_nodes`` and form the contiguous range
    ``0..k-1``.
    """
    arr = np.asarray(labels)
    if arr.ndim != 1 or arr.shape[0] != num_nodes:
        raise GraphFormatError(f"label vector has shape {arr.shape}, expected ({num_nodes},)")
    if not np.issubdtype(arr.dtype, np.integer):
        raise GraphFormatError(f"labels must be integers, got dtype {arr.dtype}")
    arr = arr.astype(np.int64)
    if arr.size and (arr.min() != 0 or not np.array_equal(np.unique(arr), np.arange(arr.max() + 1))):
        raise GraphFormatError("label ids must form a contiguous range 0..k-1")
    return arr
