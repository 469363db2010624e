"""Exception types raised by GraphEnsembleEmbed.

Every error refines a built-in exception so callers may catch either the
specific type or the usual ``ValueError``.
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional, Union


class GraphFormatError(ValueError):
    """Malformed line in an edge-list or label file."""

    def __init__(self, message: str, path: Optional[Union[str, Path]] = None, line_no: Optional[int] = None):
        self.path = str(path) if path is not None else None
        self.line_no = line_no
        where = ""
        if self.path is not None:
            where = f"{self.path}"
            if line_no is not None:
                where += f":{line_no}"
            where += ": "
        super().__init__(f"{where}{message}")


class SelfLoopError(GraphFormatError):
    """Edge list contains an edge from a node to itself."""

    def __init__(self, node: int, path: Optional[Union[str, Path]] = None, line_no: Optional[int] = None):
        self.node = node
        super().__init__(f"self-loop on node {node} is not allowed", path=path, line_no=line_no)


class DimensionMismatchError(ValueError):
    """Array shapes disagree."""


class RankError(ValueError):
    """Requested PARAFAC2 rank is not feasible for a view or the data."""


class ConfigError(ValueError):
    """Invalid key or value in a pipeline configuration."""

    def __init__(self, message: str, key: Optional[str] = None):
        self.key = key
        super().__init__(f"{key}: {message}" if key else message)
