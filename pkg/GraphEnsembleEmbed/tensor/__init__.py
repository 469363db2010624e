"""PARAFAC2 fusion of embedding views."""

from .linalg import economy_svd, orthonormal_polar, solve_right_pinv
from .model_io import dump_model, load_model
from .parafac2 import (
    FitOptions,
    Parafac2Model,
    ViewSet,
    cp_inner_update,
    extract_embedding,
    feasible_views,
    objective,
    parafac2_fit,
    procrustes_update,
    reconstruct,
    relative_error,
    view_importance,
)

__all__ = [
    "economy_svd",
    "orthonormal_polar",
    "solve_right_pinv",
    "ViewSet",
    "FitOptions",
    "Parafac2Model",
    "objective",
    "procrustes_update",
    "cp_inner_update",
    "parafac2_fit",
    "extract_embedding",
    "feasible_views",
    "reconstruct",
    "relative_error",
    "view_importance",
    "dump_model",
    "load_model",
]
