"""Deterministic seed derivation.

Child seeds are a fixed hash of ``(master_seed, stage, index)`` so adding a
stage never perturbs the seeds of the others.
"""

from __future__ import annotations

import hashlib

import numpy as np

SEED_MASK = (1 << 64) - 1


def derive_seed(master_seed: int, stage: str, index: int = 0) -> int:
    """Return a 64-bit child seed for one pipeline stage.

    Args:
        master_seed: Experiment seed (taken modulo 2**64).
        stage: Stage name, e.g. ``"walks"`` or ``"kmeans"``.
        index: Position within the stage (view index, rank, ...).

    Returns:
        int: Unsigned 64-bit seed.
    """
    key = f"{int(master_seed) & SEED_MASK}/{stage}/{int(index)}".encode("utf-8")
    digest = hashlib.blake2b(key, digest_size=8).digest()
    return int.from_bytes(digest, "little")


def make_rng(seed: int, *stream: int) -> np.random.Generator:
    """Create a PCG64 generator for ``seed`` and an optional integer stream key."""
    return np.random.default_rng([int(seed) & SEED_MASK, *[int(s) for s in stream]])
