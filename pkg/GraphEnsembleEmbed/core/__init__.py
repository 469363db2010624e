"""Core utilities: graph model, file parsing, seeds and error types."""

from .errors import ConfigError, DimensionMismatchError, GraphFormatError, RankError, SelfLoopError
from .graph import Graph, adjacency, neighbors, validate_labels
from .graph_io import dump_labels, load_edge_list, load_karate, load_labels
from .seeding import derive_seed, make_rng

__all__ = [
    "Graph",
    "adjacency",
    "neighbors",
    "validate_labels",
    "load_edge_list",
    "load_labels",
    "load_karate",
    "dump_labels",
    "derive_seed",
    "make_rng",
    "GraphFormatError",
    "SelfLoopError",
    "DimensionMismatchError",
    "RankError",
    "ConfigError",
]
