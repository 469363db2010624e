"""DeepWalk views: random walks plus skip-gram with negative sampling."""

from .skipgram import (
    EmbeddingView,
    SgnsLossGrad,
    SgnsParams,
    TrainingResult,
    fit_skipgram,
    sgns_loss_and_grad,
    train_skipgram,
)
from .views import dump_view, load_view, load_views, make_views, save_views
from .walks import WalkParams, generate_walks

__all__ = [
    "WalkParams",
    "generate_walks",
    "SgnsParams",
    "SgnsLossGrad",
    "EmbeddingView",
    "TrainingResult",
    "sgns_loss_and_grad",
    "train_skipgram",
    "fit_skipgram",
    "make_views",
    "dump_view",
    "load_view",
    "save_views",
    "load_views",
]
