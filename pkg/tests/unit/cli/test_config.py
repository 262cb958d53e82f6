from __future__ import annotations

from pathlib import Path

import pytest

from graphzip.cli.config import load_config, load_config_with_sources
from graphzip.coders.spec import CoderSpec
from graphzip.exceptions import CoderConfigError
from graphzip.mdl.completion import CompletionMethod
from graphzip.mdl.gaussian import Normalization


class TestDataDirEnvVar:
    def test_data_dir_from_env(
        self, monkeypatch: pytest.MonkeyPatch, tmp_path: Path
    ) -> None:
        monkeypatch.setenv("GRAPHZIP_DATA_DIR", str(tmp_path / "custom"))
        monkeypatch.setenv("GRAPHZIP_CONFIG", str(tmp_path / "nonexistent.toml"))
        cfg = load_config()
        assert cfg.data_dir == tmp_path / "custom"

    def test_data_dir_default_without_env(
        self, monkeypatch: pytest.MonkeyPatch, tmp_path: Path
    ) -> None:
        monkeypatch.delenv("GRAPHZIP_DATA_DIR", raising=False)
        monkeypatch.setenv("GRAPHZIP_CONFIG", str(tmp_path / "nonexistent.toml"))
        cfg = load_config()
        assert cfg.data_dir == Path("./graphzip-data")


class TestConfigFile:
    def test_file_values_and_sources(
        self, isolated_config: Path, monkeypatch: pytest.MonkeyPatch, tmp_path: Path
    ) -> None:
        path = tmp_path / "config.toml"
        path.write_text(
            "[runtime]\nthreads = 4\n"
            "[glasso]\ntol = 1e-6\nmax_iter = 50\n"
            '[mdl]\nnormalization = "unbiased"\nstandardize = true\n'
        )
        monkeypatch.setenv("GRAPHZIP_CONFIG", str(path))
        cfg, sources = load_config_with_sources()
        assert cfg.threads == 4
        assert cfg.glasso_tol == 1e-6
        assert cfg.glasso_max_iter == 50
        assert cfg.covariance_normalization is Normalization.UNBIASED
        assert cfg.standardize is True
        assert sources["threads"] == "file"
        assert sources["data_dir"] == "env"

    def test_env_overrides_file(
        self, isolated_config: Path, monkeypatch: pytest.MonkeyPatch, tmp_path: Path
    ) -> None:
        path = tmp_path / "config.toml"
        path.write_text("[runtime]\nthreads = 4\n")
        monkeypatch.setenv("GRAPHZIP_CONFIG", str(path))
        monkeypatch.setenv("GRAPHZIP_THREADS", "2")
        cfg, sources = load_config_with_sources()
        assert cfg.threads == 2
        assert sources["threads"] == "env"

    @pytest.mark.parametrize(
        "body",
        [
            "[runtime]\nthreads = 0\n",
            '[mdl]\nnormalization = "sideways"\n',
            '[mdl]\nstandardize = "maybe"\n',
            "[runtime\nthreads = 1\n",
        ],
    )
    def test_invalid_values(
        self,
        body: str,
        isolated_config: Path,
        monkeypatch: pytest.MonkeyPatch,
        tmp_path: Path,
    ) -> None:
        path = tmp_path / "config.toml"
        path.write_text(body)
        monkeypatch.setenv("GRAPHZIP_CONFIG", str(path))
        with pytest.raises(CoderConfigError):
            load_config()


class TestDerivedSettings:
    def test_stats_path_is_per_family(self, isolated_config: Path) -> None:
        cfg = load_config()
        spec = CoderSpec.parse("cn/2/learned")
        expected = isolated_config / "stats" / "common-neighbor.json"
        assert cfg.stats_path(spec) == expected

    def test_selection_options_take_overrides(self, isolated_config: Path) -> None:
        cfg = load_config()
        cfg.threads = 3
        options = cfg.selection_options(
            completion=CompletionMethod.IPF, warmup=None
        )
        assert options.threads == 3
        assert options.completion is CompletionMethod.IPF
        assert options.warmup is None
        assert options.normalization is Normalization.BIASED
