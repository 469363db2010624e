"""Skip-gram with negative sampling (SGNS) over random-walk corpora.

Training runs gensim's ``Word2Vec`` in skip-gram mode with negative
sampling only (no hierarchical softmax, no frequent-token downsampling and
a fixed, unshrunk window), so every (center, context) pair of
:func:`walk_pairs` is visited once per epoch. Input vectors start uniform
in ``(-1/d, 1/d)``, output vectors at zero, negatives are drawn from the
corpus unigram distribution raised to the 3/4 power and the learning rate
decays linearly from ``initial_lr`` to ``final_lr``.

With a single worker the trained vectors depend only on the walks and the
parameters. More workers train lock-free and are not reproducible.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, NamedTuple, Sequence, Tuple

import numpy as np
from gensim.models import Word2Vec
from gensim.models.callbacks import CallbackAny2Vec
from scipy.special import expit, log_expit

from ..core.constants import (
    DEFAULT_EPOCHS,
    DEFAULT_FINAL_LR,
    DEFAULT_INITIAL_LR,
    DEFAULT_NEGATIVES,
    UNIGRAM_POWER,
)
from ..core.errors import DimensionMismatchError
from ..core.graph import Graph
from ..core.seeding import make_rng

logger = logging.getLogger(__name__)

_INIT_STREAM = 0
_SEED_MASK = 0xFFFFFFFF  # gensim seeds a legacy RandomState


@dataclass(frozen=True)
class SgnsParams:
    """Skip-gram training parameters.

    Attributes:
        dim: Embedding dimension.
        negatives: Negative samples per (center, context) pair.
        epochs: Passes over the pair corpus.
        initial_lr: Learning rate of the first update.
        final_lr: Learning rate of the last update (``0 < final_lr <= initial_lr``).
        seed: Seed for initialization and negative sampling.
        workers: Training threads; only 1 is deterministic.
    """

    dim: int = 128
    negatives: int = DEFAULT_NEGATIVES
    epochs: int = DEFAULT_EPOCHS
    initial_lr: float = DEFAULT_INITIAL_LR
    final_lr: float = DEFAULT_FINAL_LR
    seed: int = 0
    workers: int = 1

    def __post_init__(self):
        for name in ("dim", "negatives", "epochs", "workers"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1, got {getattr(self, name)}")
        if not 0 < self.final_lr <= self.initial_lr:
            raise ValueError(
                f"learning rates must satisfy 0 < final_lr <= initial_lr, got {self.final_lr}, {self.initial_lr}"
            )


@dataclass
class EmbeddingView:
    """One N x D_m embedding matrix; row i represents node i."""

    matrix: np.ndarray

    def __post_init__(self):
        self.matrix = np.asarray(self.matrix, dtype=np.float64)
        if self.matrix.ndim != 2:
            raise DimensionMismatchError(f"embedding view must be 2-D, got shape {self.matrix.shape}")
        if not np.all(np.isfinite(self.matrix)):
            raise ValueError("embedding view contains non-finite entries")

    @property
    def dim(self) -> int:
        return int(self.matrix.shape[1])

    @property
    def num_nodes(self) -> int:
        return int(self.matrix.shape[0])


@dataclass
class TrainingResult:
    """Trained view plus the mean SGNS loss of every epoch."""

    view: EmbeddingView
    epoch_losses: List[float] = field(default_factory=list)


class SgnsLossGrad(NamedTuple):
    loss: float
    grad_center: np.ndarray
    grad_context: np.ndarray
    grad_negatives: np.ndarray


def sgns_loss_and_grad(
    center_vec: np.ndarray, context_vec: np.ndarray, negative_vecs: Sequence[np.ndarray]
) -> SgnsLossGrad:
    """SGNS loss of one pair and its gradients.

    ``loss = -log s(u.v) - sum_j log s(-u.w_j)`` with ``s`` the logistic function.

    Args:
        center_vec: Center (input) vector ``u``, length d.
        context_vec: Context (output) vector ``v``, length d.
        negative_vecs: Negative output vectors ``w_j``, each length d (may be empty).

    Returns:
        SgnsLossGrad: loss and gradients w.r.t. ``u``, ``v`` and each ``w_j``
        (the latter stacked as a (k, d) array).

    Raises:
        DimensionMismatchError: If vector lengths differ.
        ValueError: If any entry is non-finite.
    """
    u = np.asarray(center_vec, dtype=np.float64)
    v = np.asarray(context_vec, dtype=np.float64)
    if u.ndim != 1 or v.shape != u.shape:
        raise DimensionMismatchError(f"center {u.shape} and context {v.shape} must be equal-length vectors")
    d = u.shape[0]
    w = np.asarray(negative_vecs, dtype=np.float64)
    if w.size == 0:
        w = np.zeros((0, d))
    elif w.ndim != 2 or w.shape[1] != d:
        raise DimensionMismatchError(f"negative vectors must have length {d}, got array of shape {w.shape}")
    if not (np.all(np.isfinite(u)) and np.all(np.isfinite(v)) and np.all(np.isfinite(w))):
        raise ValueError("SGNS inputs must be finite")

    pos = float(u @ v)
    neg = w @ u
    loss = -float(log_expit(pos)) - float(log_expit(-neg).sum())
    g_pos = expit(pos) - 1.0  # dL/d(u.v)
    g_neg = expit(neg)  # dL/d(u.w_j)
    return SgnsLossGrad(
        loss=loss,
        grad_center=g_pos * v + g_neg @ w,
        grad_context=g_pos * u,
        grad_negatives=g_neg[:, None] * u[None, :],
    )


def walk_pairs(walks: Sequence[Sequence[int]], window: int) -> Tuple[np.ndarray, np.ndarray]:
    """Return (centers, contexts) for every pair within ``window`` hops of a walk."""
    centers: List[np.ndarray] = []
    contexts: List[np.ndarray] = []
    for walk in walks:
        w = np.asarray(walk, dtype=np.int64)
        for offset in range(1, min(window, len(w) - 1) + 1):
            centers.append(w[:-offset])
            contexts.append(w[offset:])
            centers.append(w[offset:])
            contexts.append(w[:-offset])
    if not centers:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty
    return np.concatenate(centers), np.concatenate(contexts)


class _EpochLoss(CallbackAny2Vec):
    """Record the mean pair loss of each epoch.

    gensim accumulates its running loss in single precision, so it is reset
    after every epoch.
    """

    def __init__(self, num_pairs: int):
        self.num_pairs = num_pairs
        self.losses: List[float] = []

    def on_epoch_end(self, model):
        self.losses.append(float(model.get_latest_training_loss()) / self.num_pairs)
        model.running_training_loss = 0.0
        logger.debug("SGNS d=%d epoch %d mean loss %.6f", model.vector_size, len(self.losses), self.losses[-1])


def fit_skipgram(walks: Sequence[Sequence[int]], g: Graph, p: SgnsParams, window: int) -> TrainingResult:
    """Train SGNS on a walk corpus and keep the per-epoch loss history.

    See :func:`train_skipgram` for the contract.
    """
    if not walks:
        raise ValueError("walk corpus is empty")
    if window < 1:
        raise ValueError(f"window must be >= 1, got {window}")
    n, d = g.num_nodes, p.dim
    for walk in walks:
        if len(walk) and (min(walk) < 0 or max(walk) >= n):
            raise ValueError(f"walk contains node id outside [0, {n})")

    # nodes missing from the corpus keep a uniform initialization in the same range
    matrix = (make_rng(p.seed, _INIT_STREAM).random((n, d)) * 2.0 - 1.0) / d
    num_pairs = walk_pairs(walks, window)[0].shape[0]
    if num_pairs == 0:
        logger.warning("Walk corpus has no (center, context) pairs; returning the initialization")
        return TrainingResult(EmbeddingView(matrix), [])

    corpus = [[str(u) for u in walk] for walk in walks if len(walk)]
    model = Word2Vec(
        vector_size=d,
        window=window,
        min_count=1,
        sg=1,
        hs=0,
        negative=p.negatives,
        ns_exponent=UNIGRAM_POWER,
        alpha=p.initial_lr,
        min_alpha=p.final_lr,
        sample=0,
        seed=p.seed & _SEED_MASK,
        workers=p.workers,
        epochs=p.epochs,
        shrink_windows=False,
    )
    model.build_vocab(corpus)
    tracker = _EpochLoss(num_pairs)
    model.train(
        corpus,
        total_examples=model.corpus_count,
        epochs=p.epochs,
        compute_loss=True,
        callbacks=[tracker],
    )

    index = model.wv.key_to_index
    present = [u for u in range(n) if str(u) in index]
    matrix[present] = model.wv.vectors[[index[str(u)] for u in present]]
    return TrainingResult(EmbeddingView(matrix), tracker.losses)


def train_skipgram(walks: Sequence[Sequence[int]], g: Graph, p: SgnsParams, window: int) -> EmbeddingView:
    """Train SGNS on random walks and return the input vectors as a view.

    Every (center, context) pair at most ``window`` hops apart within a walk
    is visited once per epoch. Nodes that never occur in a pair (isolated
    nodes) keep their initialization. Context vectors are discarded.

    Args:
        walks: Non-empty walk corpus over the node ids of ``g``.
        g: Graph the walks were drawn from (fixes N).
        p: Training parameters.
        window: Half-window in hops.

    Returns:
        EmbeddingView: N x ``p.dim`` matrix.

    Raises:
        ValueError: On an empty corpus or a node id outside ``[0, N)``.
    """
    return fit_skipgram(walks, g, p, window).view
