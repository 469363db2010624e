"""Truncated uniform random walks over a graph.

The walk schedule is a pure function of the seed: one generator shuffles the
start nodes of every pass, and walk ``i`` draws its steps from its own stream
``(seed, i)``. Walks could therefore be generated in any order or in parallel
without changing the result.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List

import numpy as np

from ..core.constants import DEFAULT_WALK_LENGTH, DEFAULT_WALKS_PER_NODE, DEFAULT_WINDOW
from ..core.graph import Graph
from ..core.seeding import make_rng

logger = logging.getLogger(__name__)

_SCHEDULE_STREAM = 0
_STEP_STREAM = 1


@dataclass(frozen=True)
class WalkParams:
    """Random-walk corpus parameters.

    Attributes:
        walks_per_node: Walks started from every node.
        walk_length: Maximum number of nodes per walk.
        window: Skip-gram half-window in hops; must be below ``walk_length``.
        seed: Seed of the walk schedule.
    """

    walks_per_node: int = DEFAULT_WALKS_PER_NODE
    walk_length: int = DEFAULT_WALK_LENGTH
    window: int = DEFAULT_WINDOW
    seed: int = 0

    def __post_init__(self):
        for name in ("walks_per_node", "walk_length", "window"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1, got {getattr(self, name)}")
        if self.window >= self.walk_length:
            raise ValueError(f"window ({self.window}) must be smaller than walk_length ({self.walk_length})")


def _single_walk(g: Graph, start: int, length: int, rng: np.random.Generator) -> List[int]:
    adj = g.neighbor_lists
    walk = [start]
    draws = rng.random(length - 1)
    cur = start
    for u in draws:
        nbrs = adj[cur]
        if not nbrs:
            break
        cur = nbrs[int(u * len(nbrs))]
        walk.append(cur)
    return walk


def generate_walks(g: Graph, p: WalkParams) -> List[List[int]]:
    """Generate ``walks_per_node * N`` truncated random walks.

    Each pass visits every node once as a start node, in an order shuffled
    per pass. A walk stops early at a node without neighbors, so a walk
    from an isolated node is just ``[start]``.

    Args:
        g: Input graph.
        p: Walk parameters.

    Returns:
        List of walks, each a list of node ids beginning at its start node.
    """
    schedule = make_rng(p.seed, _SCHEDULE_STREAM)
    walks: List[List[int]] = []
    index = 0
    for _ in range(p.walks_per_node):
        for start in schedule.permutation(g.num_nodes):
            rng = make_rng(p.seed, _STEP_STREAM, index)
            walks.append(_single_walk(g, int(start), p.walk_length, rng))
            index += 1
    logger.debug("Generated %d walks (length <= %d) on %d nodes", len(walks), p.walk_length, g.num_nodes)
    return walks
