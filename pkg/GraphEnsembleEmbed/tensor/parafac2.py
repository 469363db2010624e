"""PARAFAC2 fitted by alternating least squares.

Each view ``X_m`` (N x D_m) is modelled in the node-coupled orientation

    X_m ~ V @ diag(s_m) @ H.T @ Q_m.T,    U_m = Q_m @ H,   Q_m.T @ Q_m = I

so the shared factor V is the N x R node embedding. This is the textbook
``X_m ~ U_m S_m V^T`` model written for the transposed views.

A sweep updates every Q_m by orthogonal Procrustes, projects the views to
``Y_m = X_m @ Q_m`` and runs one CP least-squares pass on the projected
slices. Since ``||X_m - V S_m H^T Q_m^T||^2 = ||X_m||^2 - ||Y_m||^2 +
||Y_m - V S_m H^T||^2`` for column-orthonormal Q_m, both steps decrease the
objective and the trace is monotone.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
import scipy.linalg
from scipy.optimize import nnls

from ..core.constants import DEFAULT_MAX_SWEEPS, DEFAULT_REL_TOL
from ..core.errors import DimensionMismatchError, RankError
from ..core.seeding import make_rng
from .linalg import economy_svd, orthonormal_polar, solve_right_pinv

logger = logging.getLogger(__name__)

# Objective below this fraction of sum ||X_m||^2 is rounding noise
_NUMERICAL_ZERO = 1e-28

INIT_METHODS = ("svd", "random")


@dataclass
class ViewSet:
    """Ordered views sharing the node mode.

    Attributes:
        views: M matrices, view m of shape (N, D_m).
    """

    views: List[np.ndarray]

    def __post_init__(self):
        self.views = [np.asarray(getattr(x, "matrix", x), dtype=np.float64) for x in self.views]
        if not self.views:
            raise ValueError("a ViewSet needs at least one view")
        n = self.views[0].shape[0] if self.views[0].ndim == 2 else -1
        for m, x in enumerate(self.views):
            if x.ndim != 2 or x.shape[0] != n:
                raise DimensionMismatchError(f"view {m} has shape {x.shape}; all views need {n} rows")
            if not np.all(np.isfinite(x)):
                raise ValueError(f"view {m} contains non-finite entries")

    @property
    def num_nodes(self) -> int:
        return int(self.views[0].shape[0])

    @property
    def dims(self) -> List[int]:
        return [int(x.shape[1]) for x in self.views]

    def __len__(self) -> int:
        return len(self.views)

    def total_sum_of_squares(self) -> float:
        return float(sum(np.sum(x * x) for x in self.views))


@dataclass
class FitOptions:
    """Stopping rule and initialization of :func:`parafac2_fit`.

    Attributes:
        max_sweeps: Maximum number of ALS sweeps.
        rel_tol: Stop when the relative objective change of a sweep drops below this.
        seed: Seed for ``init="random"``.
        init: ``"svd"`` (leading left singular vectors of the concatenated
            views) or ``"random"`` (random orthonormal V).
    """

    max_sweeps: int = DEFAULT_MAX_SWEEPS
    rel_tol: float = DEFAULT_REL_TOL
    seed: int = 0
    init: str = "svd"

    def __post_init__(self):
        if self.max_sweeps < 1:
            raise ValueError(f"max_sweeps must be >= 1, got {self.max_sweeps}")
        if not self.rel_tol > 0:
            raise ValueError(f"rel_tol must be positive, got {self.rel_tol}")
        if self.init not in INIT_METHODS:
            raise ValueError(f"init must be one of {INIT_METHODS}, got {self.init!r}")


@dataclass
class Parafac2Model:
    """Fitted PARAFAC2 factors.

    Attributes:
        rank: Number of latent components R.
        Q: Column-orthonormal D_m x R matrices, one per view.
        H: R x R matrix shared by all views (``U_m = Q_m @ H``).
        S: M x R array, row m holding the diagonal of S_m (non-negative).
        V: N x R shared node factor.
    """

    rank: int
    Q: List[np.ndarray]
    H: np.ndarray
    S: np.ndarray
    V: np.ndarray
    sweeps: int = 0
    converged: bool = False
    trace: List[float] = field(default_factory=list, repr=False)

    @property
    def num_views(self) -> int:
        return len(self.Q)

    def U(self, m: int) -> np.ndarray:
        return self.Q[m] @ self.H

    def orthonormality_error(self) -> float:
        """max_m ||Q_m^T Q_m - I||_F."""
        eye = np.eye(self.rank)
        return max(float(np.linalg.norm(q.T @ q - eye)) for q in self.Q)

    def cross_product_error(self) -> float:
        """max_m ||U_m^T U_m - H^T H||_F relative to ||H^T H||_F."""
        hth = self.H.T @ self.H
        scale = float(np.linalg.norm(hth)) or 1.0
        return max(float(np.linalg.norm(self.U(m).T @ self.U(m) - hth)) for m in range(self.num_views)) / scale


def _check_model_data(model: Parafac2Model, data: ViewSet) -> None:
    r = model.rank
    if len(model.Q) != len(data) or model.S.shape != (len(data), r):
        raise DimensionMismatchError(f"model has {len(model.Q)} views / S {model.S.shape}, data has {len(data)} views")
    if model.V.shape != (data.num_nodes, r) or model.H.shape != (r, r):
        raise DimensionMismatchError(f"model V {model.V.shape} / H {model.H.shape} do not match N={data.num_nodes}, R={r}")
    for m, (q, d) in enumerate(zip(model.Q, data.dims)):
        if q.shape != (d, r):
            raise DimensionMismatchError(f"Q_{m} has shape {q.shape}, expected ({d}, {r})")


def _slice_residual(x: np.ndarray, q: np.ndarray, h: np.ndarray, s: np.ndarray, v: np.ndarray) -> float:
    resid = x - ((v * s) @ h.T) @ q.T
    return float(np.sum(resid * resid))


def objective(model: Parafac2Model, data: ViewSet) -> float:
    """Return ``sum_m ||X_m - V S_m H^T Q_m^T||_F^2``.

    Raises:
        DimensionMismatchError: If the model and data shapes disagree.
    """
    _check_model_data(model, data)
    return sum(
        _slice_residual(x, model.Q[m], model.H, model.S[m], model.V) for m, x in enumerate(data.views)
    )


def procrustes_update(
    x: np.ndarray, v: np.ndarray, s: np.ndarray, h: np.ndarray, view_index: Optional[int] = None
) -> np.ndarray:
    """Optimal column-orthonormal Q_m with V, S_m and H held fixed.

    ``Q_m = P @ Z.T`` from the thin SVD of ``X_m^T V S_m H^T``.

    Args:
        x: View ``X_m`` (N x D_m).
        v: Node factor (N x R).
        s: Diagonal of S_m (length R).
        h: Shared R x R factor.
        view_index: Used in error messages only.

    Returns:
        np.ndarray: D_m x R matrix with orthonormal columns.

    Raises:
        RankError: If D_m < R.
    """
    d, r = x.shape[1], v.shape[1]
    if d < r:
        name = f"view {view_index}" if view_index is not None else "view"
        raise RankError(f"{name} has D_m={d} < R={r}; Q_m cannot have orthonormal columns")
    return orthonormal_polar(x.T @ ((v * s) @ h.T))


def _nnls_weights(y: np.ndarray, v: np.ndarray, h: np.ndarray) -> np.ndarray:
    """Diagonal of S_m for ``Y_m ~ V diag(s) H^T`` subject to s >= 0."""
    design = (v[:, None, :] * h[None, :, :]).reshape(-1, v.shape[1])
    s, _ = nnls(design, y.ravel())
    return s


def cp_inner_update(
    y: Sequence[np.ndarray], v: np.ndarray, h: np.ndarray, s: np.ndarray
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """One least-squares pass over V, H and S on slices ``Y_m ~ V S_m H^T``.

    Args:
        y: Projected slices ``Y_m = X_m Q_m``, each N x R.
        v: Current N x R node factor.
        h: Current R x R factor.
        s: Current M x R weights.

    Returns:
        (V, H, S) after the three sub-updates, in that order. Each sub-update
        weakly decreases ``sum_m ||Y_m - V S_m H^T||^2``; S stays non-negative.
    """
    r = v.shape[1]
    s = np.array(s, dtype=np.float64, copy=True)

    num = np.zeros_like(v)
    gram = np.zeros((r, r))
    for m, ym in enumerate(y):
        hs = h * s[m]
        num += ym @ hs
        gram += hs.T @ hs
    v = solve_right_pinv(num, gram)

    num = np.zeros((h.shape[0], r))
    gram = np.zeros((r, r))
    for m, ym in enumerate(y):
        vs = v * s[m]
        num += ym.T @ vs
        gram += vs.T @ vs
    h = solve_right_pinv(num, gram)

    # all views share the normal matrix of the weight sub-problem
    gram = (h.T @ h) * (v.T @ v)
    b = np.stack([np.einsum("nr,nr->r", v, ym @ h) for ym in y])
    s = solve_right_pinv(b, gram)
    for m in np.flatnonzero((s < 0).any(axis=1)):
        # some weight went negative: solve the bound-constrained problem exactly
        s[m] = _nnls_weights(y[m], v, h)
    return v, h, s


def feasible_views(dims: Sequence[int], rank: int) -> List[int]:
    """Indices of views whose dimension admits rank ``rank`` (``D_m >= R``)."""
    return [m for m, d in enumerate(dims) if d >= rank]


def _compress(data: ViewSet) -> Tuple[List[np.ndarray], List[Optional[np.ndarray]]]:
    """Replace wide views (D_m > N) by ``T_m^T`` with ``X_m^T = B_m T_m``.

    Fitting ``T_m^T`` and mapping ``Q_m = B_m Q~_m`` back gives the same
    objective values, since X_m vanishes off the column space of B_m.
    """
    n = data.num_nodes
    small: List[np.ndarray] = []
    bases: List[Optional[np.ndarray]] = []
    for x in data.views:
        if x.shape[1] > n:
            b, t = scipy.linalg.qr(x.T, mode="economic")
            small.append(t.T)
            bases.append(b)
        else:
            small.append(x)
            bases.append(None)
    return small, bases


def _initial_v(views: Sequence[np.ndarray], rank: int, opts: FitOptions) -> np.ndarray:
    if opts.init == "random":
        rng = make_rng(opts.seed)
        q, _ = np.linalg.qr(rng.standard_normal((views[0].shape[0], rank)))
        return q
    p, _, _ = economy_svd(np.hstack(views))
    return p[:, :rank]


def parafac2_fit(data: ViewSet, rank: int, opts: Optional[FitOptions] = None) -> Tuple[Parafac2Model, List[float]]:
    """Fit PARAFAC2 by alternating least squares.

    Args:
        data: Views sharing N rows.
        rank: Number of components R, ``1 <= R <= min(N, min_m D_m)``.
        opts: Stopping rule and initialization; defaults to :class:`FitOptions`.

    Returns:
        (model, trace): fitted model and the objective after every sweep.

    Raises:
        RankError: If the rank is infeasible, before any work is done.
    """
    opts = opts or FitOptions()
    rank = int(rank)
    if rank < 1:
        raise RankError(f"rank must be >= 1, got {rank}")
    if rank > data.num_nodes:
        raise RankError(f"rank {rank} exceeds the number of nodes {data.num_nodes}")
    for m, d in enumerate(data.dims):
        if d < rank:
            raise RankError(f"view {m} has D_m={d} < R={rank}")

    views, bases = _compress(data)
    total = data.total_sum_of_squares()
    num_views = len(views)

    v = _initial_v(views, rank, opts)
    h = np.eye(rank)
    s = np.ones((num_views, rank))
    q: List[np.ndarray] = []

    trace: List[float] = []
    converged = False
    for sweep in range(1, opts.max_sweeps + 1):
        q = [procrustes_update(x, v, s[m], h, m) for m, x in enumerate(views)]
        y = [x @ qm for x, qm in zip(views, q)]
        v, h, s = cp_inner_update(y, v, h, s)
        f = sum(_slice_residual(x, q[m], h, s[m], v) for m, x in enumerate(views))
        trace.append(f)
        logger.debug("PARAFAC2 R=%d sweep %d objective %.12g", rank, sweep, f)

        if f <= _NUMERICAL_ZERO * total:
            converged = True
            break
        if sweep > 1:
            prev = trace[-2]
            if prev == 0 or abs(prev - f) < opts.rel_tol * prev:
                converged = True
                break

    full_q = [b @ qm if b is not None else qm for b, qm in zip(bases, q)]
    model = Parafac2Model(rank=rank, Q=full_q, H=h, S=s, V=v, sweeps=len(trace), converged=converged, trace=trace)
    rel = trace[-1] / total if total > 0 else 0.0
    logger.info(
        "PARAFAC2 R=%d M=%d: %d sweeps, relative error %.3e%s",
        rank,
        num_views,
        len(trace),
        rel,
        "" if converged else " (max_sweeps reached)",
    )
    return model, trace


def extract_embedding(model: Parafac2Model) -> np.ndarray:
    """Return V with every non-zero column scaled to unit Euclidean norm."""
    v = np.array(model.V, dtype=np.float64, copy=True)
    norms = np.linalg.norm(v, axis=0)
    nonzero = norms > 0
    v[:, nonzero] /= norms[nonzero]
    return v


def reconstruct(model: Parafac2Model, m: int) -> np.ndarray:
    """Model approximation of view ``m``: ``V S_m H^T Q_m^T``."""
    return ((model.V * model.S[m]) @ model.H.T) @ model.Q[m].T


def view_importance(model: Parafac2Model) -> np.ndarray:
    """M x R matrix of component weights (the diagonals of S_m)."""
    return np.array(model.S, copy=True)


def relative_error(model: Parafac2Model, data: Union[ViewSet, Sequence[np.ndarray]]) -> float:
    """Objective divided by ``sum_m ||X_m||^2`` (0 for all-zero data)."""
    data = data if isinstance(data, ViewSet) else ViewSet(list(data))
    total = data.total_sum_of_squares()
    return objective(model, data) / total if total > 0 else 0.0
