"""Plain-text dump of a fitted PARAFAC2 model.

Layout::

    N R M
    D_1 D_2 ... D_M
    V      (N rows of R floats)
    H      (R rows of R floats)
    s_1..s_M (M rows of R floats)
    Q_1..Q_M (D_m rows of R floats each)

Floats are written with 17 significant digits.
"""

from __future__ import annotations

from pathlib import Path
from typing import List, Union

import numpy as np

from ..core.errors import DimensionMismatchError
from .parafac2 import Parafac2Model

_FMT = "%.17g"


def dump_model(model: Parafac2Model, path: Union[str, Path]) -> None:
    """Write ``model`` to ``path`` in the dump layout."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    n, r = model.V.shape
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(f"{n} {r} {model.num_views}\n")
        f.write(" ".join(str(q.shape[0]) for q in model.Q) + "\n")
        for block in (model.V, model.H, model.S, *model.Q):
            np.savetxt(f, np.atleast_2d(block), fmt=_FMT, delimiter=" ")


def load_model(path: Union[str, Path]) -> Parafac2Model:
    """Read a model written by :func:`dump_model`.

    Raises:
        FileNotFoundError: If the file does not exist.
        DimensionMismatchError: If the file is truncated or rows have the wrong width.
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Model file not found: {path}")
    with open(path, "r", encoding="utf-8") as f:
        lines = [ln.split() for ln in f if ln.strip()]
    if len(lines) < 2 or len(lines[0]) != 3:
        raise DimensionMismatchError(f"{path}: missing 'N R M' header")
    n, r, m = (int(t) for t in lines[0])
    dims = [int(t) for t in lines[1]]
    if len(dims) != m:
        raise DimensionMismatchError(f"{path}: header announces {m} views, dims line lists {len(dims)}")

    cursor = 2

    def take(rows: int) -> np.ndarray:
        nonlocal cursor
        block = lines[cursor : cursor + rows]
        if len(block) != rows or any(len(row) != r for row in block):
            raise DimensionMismatchError(f"{path}: expected {rows} rows of {r} values at line {cursor + 1}")
        cursor += rows
        return np.array(block, dtype=np.float64).reshape(rows, r)

    v = take(n)
    h = take(r)
    s = take(m)
    q: List[np.ndarray] = [take(d) for d in dims]
    return Parafac2Model(rank=r, Q=q, H=h, S=s, V=v)
