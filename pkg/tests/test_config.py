from pathlib import Path

import pytest

from GraphEnsembleEmbed.core import ConfigError
from GraphEnsembleEmbed.core.graph_io import KARATE_EDGES, KARATE_LABELS
from GraphEnsembleEmbed.pipeline import PipelineConfig, default_config, load_config, parse_config_text


class TestParseConfig:
    def test_defaults_use_karate(self):
        cfg = parse_config_text("")
        assert cfg.graph_path == KARATE_EDGES
        assert cfg.labels_path == KARATE_LABELS
        assert cfg.view_dims == (10, 20, 30, 40, 50, 60, 100, 200, 1000)
        assert cfg.rank_sweep() == list(range(2, 21))
        assert cfg.kmeans_k is None

    def test_file_values_and_relative_paths(self, clique_config):
        cfg = load_config(clique_config)
        base = clique_config.parent
        assert cfg.graph_path == base / "cliques/edges.txt"
        assert cfg.labels_path == base / "cliques/labels.txt"
        assert cfg.output_dir == base / "results"
        assert cfg.view_dims == (4, 8)
        assert cfg.walks.walk_length == 20
        assert cfg.sgns.epochs == 3
        assert cfg.master_seed == 7
        assert cfg.rank_sweep() == [2]

    def test_kmeans_k(self):
        assert parse_config_text("kmeans_k = auto").kmeans_k is None
        assert parse_config_text("kmeans_k = 3").kmeans_k == 3

    def test_rank_step(self):
        cfg = parse_config_text("rank_min = 2\nrank_max = 9\nrank_step = 3")
        assert cfg.rank_sweep() == [2, 5, 8]

    @pytest.mark.parametrize(
        "text, key",
        [
            ("colour = blue", "colour"),
            ("seed = 1\nseed = 2", "seed"),
            ("epochs = many", "epochs"),
            ("rank_min = 5\nrank_max = 4", "rank_max"),
            ("dims = 10, 0", "dims"),
            ("kmeans_k = 0", "kmeans_k"),
        ],
    )
    def test_errors_name_the_key(self, text, key):
        with pytest.raises(ConfigError) as exc:
            parse_config_text(text)
        assert exc.value.key == key

    def test_line_without_equals(self):
        with pytest.raises(ConfigError):
            parse_config_text("dims 10")

    def test_invalid_walk_settings(self):
        with pytest.raises(ConfigError):
            parse_config_text("walk_length = 4\nwindow = 4")

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_config(tmp_path / "none.cfg")


class TestPipelineConfig:
    def test_overrides(self):
        cfg = default_config().with_overrides(seed=5, out="elsewhere")
        assert cfg.master_seed == 5
        assert cfg.output_dir == Path("elsewhere")
        assert default_config().with_overrides() == default_config()

    def test_hash_ignores_output_dir(self):
        a = default_config()
        assert a.config_hash() == a.with_overrides(out="x").config_hash()
        assert a.config_hash() != a.with_overrides(seed=1).config_hash()

    def test_empty_dims(self):
        with pytest.raises(ConfigError):
            PipelineConfig(view_dims=())
