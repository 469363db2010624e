"""Dense linear-algebra kernels for the PARAFAC2 solver."""

from __future__ import annotations

from typing import Tuple

import numpy as np
import scipy.linalg

from ..core.constants import PINV_RCOND


def economy_svd(a: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Thin SVD ``a = P @ diag(sigma) @ Z.T``.

    Args:
        a: Real p x q matrix with finite entries.

    Returns:
        (P, sigma, Z): P is p x r and Z is q x r with orthonormal columns,
        sigma is non-increasing and non-negative, r = min(p, q).

    Raises:
        ValueError: If ``a`` is not 2-D or has non-finite entries.
    """
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 2:
        raise ValueError(f"economy_svd expects a 2-D matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("economy_svd input contains non-finite entries")
    try:
        p, sigma, zt = scipy.linalg.svd(a, full_matrices=False, lapack_driver="gesdd", check_finite=False)
    except np.linalg.LinAlgError:
        # gesdd occasionally fails to converge where the QR-iteration driver does not
        p, sigma, zt = scipy.linalg.svd(a, full_matrices=False, lapack_driver="gesvd", check_finite=False)
    return p, sigma, zt.T


def solve_right_pinv(b: np.ndarray, gram: np.ndarray) -> np.ndarray:
    """Return ``b @ pinv(gram)`` for a symmetric ``gram``.

    Eigenvalues below ``PINV_RCOND`` times the largest one are discarded, so
    singular normal equations (collinear views, zero factors) never fail.
    """
    return b @ scipy.linalg.pinvh(gram, atol=0.0, rtol=PINV_RCOND, check_finite=False)


def orthonormal_polar(a: np.ndarray) -> np.ndarray:
    """Closest column-orthonormal matrix to ``a`` (orthogonal Procrustes): ``P @ Z.T``."""
    p, _, z = economy_svd(a)
    return p @ z.T
