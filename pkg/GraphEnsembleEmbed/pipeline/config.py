"""Experiment configuration.

Configuration files are flat UTF-8 ``key = value`` text; ``#`` starts a
comment line and lists are comma-separated. Accepted keys::

    graph, labels, dims, walks_per_node, walk_length, window, negatives,
    epochs, lr_initial, lr_final, rank_min, rank_max, rank_step,
    kmeans_k, kmeans_restarts, seed, out

Relative paths are resolved against the directory of the config file.
Missing keys take the defaults of :func:`default_config`; without ``graph``
and ``labels`` the bundled karate club data is used.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple, Union

from ..core import constants as C
from ..core.errors import ConfigError
from ..core.graph_io import KARATE_EDGES, KARATE_LABELS
from ..embedding.skipgram import SgnsParams
from ..embedding.walks import WalkParams

CONFIG_KEYS = (
    "graph",
    "labels",
    "dims",
    "walks_per_node",
    "walk_length",
    "window",
    "negatives",
    "epochs",
    "lr_initial",
    "lr_final",
    "rank_min",
    "rank_max",
    "rank_step",
    "kmeans_k",
    "kmeans_restarts",
    "seed",
    "out",
)


@dataclass(frozen=True)
class PipelineConfig:
    """Full description of one experiment.

    The seeds inside ``walks`` and ``sgns`` are placeholders; the runner
    derives every stage seed from ``master_seed``.
    """

    graph_path: Path = KARATE_EDGES
    labels_path: Optional[Path] = KARATE_LABELS
    view_dims: Tuple[int, ...] = C.DEFAULT_VIEW_DIMS
    walks: WalkParams = field(default_factory=WalkParams)
    sgns: SgnsParams = field(default_factory=SgnsParams)
    rank_min: int = C.DEFAULT_RANK_MIN
    rank_max: int = C.DEFAULT_RANK_MAX
    rank_step: int = C.DEFAULT_RANK_STEP
    kmeans_k: Optional[int] = None  # None: number of distinct truth labels
    kmeans_restarts: int = C.DEFAULT_KMEANS_RESTARTS
    kmeans_max_iters: int = C.DEFAULT_KMEANS_MAX_ITERS
    max_sweeps: int = C.DEFAULT_MAX_SWEEPS
    rel_tol: float = C.DEFAULT_REL_TOL
    master_seed: int = C.DEFAULT_MASTER_SEED
    output_dir: Path = Path("results")

    def __post_init__(self):
        if not self.view_dims:
            raise ConfigError("at least one view dimension is required", "dims")
        if any(d < 1 for d in self.view_dims):
            raise ConfigError(f"view dimensions must be >= 1, got {list(self.view_dims)}", "dims")
        if self.rank_min < 1:
            raise ConfigError(f"must be >= 1, got {self.rank_min}", "rank_min")
        if self.rank_max < self.rank_min:
            raise ConfigError(f"must be >= rank_min ({self.rank_min}), got {self.rank_max}", "rank_max")
        if self.rank_step < 1:
            raise ConfigError(f"must be >= 1, got {self.rank_step}", "rank_step")
        if self.kmeans_k is not None and self.kmeans_k < 1:
            raise ConfigError(f"must be >= 1 or 'auto', got {self.kmeans_k}", "kmeans_k")
        if self.kmeans_restarts < 1:
            raise ConfigError(f"must be >= 1, got {self.kmeans_restarts}", "kmeans_restarts")

    def rank_sweep(self) -> List[int]:
        """Ranks of the sweep, ``rank_min..rank_max`` inclusive by ``rank_step``."""
        return list(range(self.rank_min, self.rank_max + 1, self.rank_step))

    def with_overrides(self, seed: Optional[int] = None, out: Optional[Union[str, Path]] = None) -> "PipelineConfig":
        """Return a copy with the command-line ``--seed`` / ``--out`` applied."""
        cfg = self
        if seed is not None:
            cfg = replace(cfg, master_seed=int(seed))
        if out is not None:
            cfg = replace(cfg, output_dir=Path(out))
        return cfg

    def to_key_values(self) -> Dict[str, str]:
        """Canonical ``key -> value`` strings in config-file form."""
        return {
            "graph": str(self.graph_path),
            "labels": str(self.labels_path) if self.labels_path is not None else "",
            "dims": ",".join(str(d) for d in self.view_dims),
            "walks_per_node": str(self.walks.walks_per_node),
            "walk_length": str(self.walks.walk_length),
            "window": str(self.walks.window),
            "negatives": str(self.sgns.negatives),
            "epochs": str(self.sgns.epochs),
            "lr_initial": repr(self.sgns.initial_lr),
            "lr_final": repr(self.sgns.final_lr),
            "rank_min": str(self.rank_min),
            "rank_max": str(self.rank_max),
            "rank_step": str(self.rank_step),
            "kmeans_k": "auto" if self.kmeans_k is None else str(self.kmeans_k),
            "kmeans_restarts": str(self.kmeans_restarts),
            "seed": str(self.master_seed),
            "out": str(self.output_dir),
        }

    def config_hash(self) -> str:
        """blake2b digest of the canonical settings (output directory excluded)."""
        items = {k: v for k, v in self.to_key_values().items() if k != "out"}
        text = "\n".join(f"{k} = {items[k]}" for k in CONFIG_KEYS if k in items)
        return hashlib.blake2b(text.encode("utf-8"), digest_size=16).hexdigest()


def default_config() -> PipelineConfig:
    """Karate experiment with the default view dimensions and rank sweep 2..20."""
    return PipelineConfig()


def _as_int(key: str, text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ConfigError(f"expected an integer, got {text!r}", key) from None


def _as_float(key: str, text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise ConfigError(f"expected a number, got {text!r}", key) from None


def _as_int_list(key: str, text: str) -> Tuple[int, ...]:
    parts = [p.strip() for p in text.split(",") if p.strip()]
    return tuple(_as_int(key, p) for p in parts)


def parse_config_text(text: str, base_dir: Union[str, Path] = ".") -> PipelineConfig:
    """Parse config-file text into a :class:`PipelineConfig`.

    Args:
        text: ``key = value`` lines.
        base_dir: Directory relative paths are resolved against.

    Raises:
        ConfigError: On a malformed line, unknown or repeated key, or bad value.
    """
    base_dir = Path(base_dir)
    values: Dict[str, str] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"line {line_no}: expected 'key = value', got {line!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in CONFIG_KEYS:
            raise ConfigError(f"unknown key (line {line_no})", key)
        if key in values:
            raise ConfigError(f"repeated key (line {line_no})", key)
        values[key] = value

    def path_of(key: str) -> Optional[Path]:
        if key not in values or not values[key]:
            return None
        p = Path(values[key])
        return p if p.is_absolute() else base_dir / p

    defaults = default_config()
    graph = path_of("graph")
    labels = path_of("labels")
    if graph is None:
        graph, labels = defaults.graph_path, labels or defaults.labels_path

    def get(key: str, conv: Callable[[str, str], object], fallback):
        return conv(key, values[key]) if key in values else fallback

    try:
        walks = WalkParams(
            walks_per_node=get("walks_per_node", _as_int, defaults.walks.walks_per_node),
            walk_length=get("walk_length", _as_int, defaults.walks.walk_length),
            window=get("window", _as_int, defaults.walks.window),
        )
        sgns = SgnsParams(
            negatives=get("negatives", _as_int, defaults.sgns.negatives),
            epochs=get("epochs", _as_int, defaults.sgns.epochs),
            initial_lr=get("lr_initial", _as_float, defaults.sgns.initial_lr),
            final_lr=get("lr_final", _as_float, defaults.sgns.final_lr),
        )
    except ConfigError:
        raise
    except ValueError as e:
        raise ConfigError(str(e)) from e

    k_text = values.get("kmeans_k", "auto")
    kmeans_k = None if k_text.lower() == "auto" else _as_int("kmeans_k", k_text)

    out = path_of("out") or defaults.output_dir
    return PipelineConfig(
        graph_path=graph,
        labels_path=labels,
        view_dims=get("dims", _as_int_list, defaults.view_dims),
        walks=walks,
        sgns=sgns,
        rank_min=get("rank_min", _as_int, defaults.rank_min),
        rank_max=get("rank_max", _as_int, defaults.rank_max),
        rank_step=get("rank_step", _as_int, defaults.rank_step),
        kmeans_k=kmeans_k,
        kmeans_restarts=get("kmeans_restarts", _as_int, defaults.kmeans_restarts),
        master_seed=get("seed", _as_int, defaults.master_seed),
        output_dir=out,
    )


def load_config(path: Union[str, Path]) -> PipelineConfig:
    """Read and parse a config file.

    Raises:
        FileNotFoundError: If the file does not exist.
        ConfigError: On invalid content.
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Config file not found: {path}")
    with open(path, "r", encoding="utf-8") as f:
        return parse_config_text(f.read(), base_dir=path.parent)
