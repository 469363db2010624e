"""Application-wide constants for GraphEnsembleEmbed.

This module contains shared defaults used across the package. Walk and
skip-gram defaults follow the usual DeepWalk and word2vec settings.
"""

# Random walks
DEFAULT_WALKS_PER_NODE = 10
DEFAULT_WALK_LENGTH = 40  # nodes per walk
DEFAULT_WINDOW = 5  # half-window in hops

# Skip-gram with negative sampling
DEFAULT_NEGATIVES = 5
DEFAULT_EPOCHS = 5
DEFAULT_INITIAL_LR = 0.025
DEFAULT_FINAL_LR = 0.0001
UNIGRAM_POWER = 0.75

# View dimensions of the Karate experiment
DEFAULT_VIEW_DIMS = (10, 20, 30, 40, 50, 60, 100, 200, 1000)

# PARAFAC2 alternating least squares
DEFAULT_MAX_SWEEPS = 500
DEFAULT_REL_TOL = 1e-8
PINV_RCOND = 1e-12  # relative to the largest singular value

# K-means
DEFAULT_KMEANS_RESTARTS = 20
DEFAULT_KMEANS_MAX_ITERS = 300

# Rank sweep
DEFAULT_RANK_MIN = 2
DEFAULT_RANK_MAX = 20
DEFAULT_RANK_STEP = 1

DEFAULT_MASTER_SEED = 0

# Report file names
RANK_SWEEP_CSV = "rank_sweep.csv"
METHOD_COMPARISON_CSV = "method_comparison.csv"
RUN_META_JSON = "run_meta.json"
VIEWS_SUBDIR = "views"
