from __future__ import annotations

import os
import tomllib
from collections.abc import Callable
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Literal, NamedTuple

from graphzip.coders.spec import CoderSpec
from graphzip.exceptions import CoderConfigError
from graphzip.mdl.gaussian import Normalization
from graphzip.mdl.glasso import DEFAULT_MAX_ITER, DEFAULT_TOL
from graphzip.mdl.selection import SelectionOptions

_DEFAULT_DATA_DIR = Path("./graphzip-data")

ConfigSource = Literal["env", "file", "default"]


def config_path() -> Path:
    env = os.environ.get("GRAPHZIP_CONFIG")
    if env:
        return Path(env).expanduser()
    return Path("~/.config/graphzip").expanduser() / "config.toml"


def _parse_bool(value: Any) -> bool:
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in ("1", "true", "yes", "on"):
        return True
    if text in ("0", "false", "no", "off", ""):
        return False
    raise CoderConfigError(f"expected a boolean, got {value!r}")


def _parse_threads(value: Any) -> int:
    threads = int(value)
    if threads < 1:
        raise CoderConfigError(f"threads must be at least 1, got {threads}")
    return threads


class _FieldSpec(NamedTuple):
    attr: str
    toml_section: str
    toml_key: str
    env_var: str | None
    cast: Callable[[Any], Any] = str


_FIELDS: list[_FieldSpec] = [
    _FieldSpec("threads", "runtime", "threads", "GRAPHZIP_THREADS", _parse_threads),
    _FieldSpec("data_dir", "data", "dir", "GRAPHZIP_DATA_DIR", Path),
    _FieldSpec("glasso_tol", "glasso", "tol", None, float),
    _FieldSpec("glasso_max_iter", "glasso", "max_iter", None, int),
    _FieldSpec(
        "covariance_normalization", "mdl", "normalization", None, Normalization
    ),
    _FieldSpec("standardize", "mdl", "standardize", None, _parse_bool),
]


@dataclass
class Config:
    threads: int = 1
    data_dir: Path = field(default_factory=lambda: _DEFAULT_DATA_DIR)
    glasso_tol: float = DEFAULT_TOL
    glasso_max_iter: int = DEFAULT_MAX_ITER
    covariance_normalization: Normalization = Normalization.BIASED
    standardize: bool = False

    @property
    def stats_dir(self) -> Path:
        return self.data_dir / "stats"

    def stats_path(self, spec: CoderSpec) -> Path:
        """Default location of trained statistics for *spec*'s family."""
        return self.stats_dir / f"{spec.family}.json"

    def selection_options(self, **overrides: Any) -> SelectionOptions:
        values: dict[str, Any] = {
            "glasso_tol": self.glasso_tol,
            "glasso_max_iter": self.glasso_max_iter,
            "normalization": self.covariance_normalization,
            "standardize": self.standardize,
            "threads": self.threads,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return SelectionOptions(**values)


def load_config_with_sources() -> tuple[Config, dict[str, ConfigSource]]:
    """Load config and return it alongside a per-field source map.

    Each key in the returned dict is a :class:`Config` field name; the value is
    one of ``"env"``, ``"file"``, or ``"default"``. Env vars take precedence
    over the file.
    """
    path = config_path()
    cfg = Config()
    sources: dict[str, ConfigSource] = {spec.attr: "default" for spec in _FIELDS}
    toml_data: dict[str, Any] = {}

    if path.exists():
        with open(path, "rb") as f:
            try:
                toml_data = tomllib.load(f)
            except tomllib.TOMLDecodeError as exc:
                raise CoderConfigError(f"{path}: {exc}") from exc

    for spec in _FIELDS:
        section = toml_data.get(spec.toml_section, {})
        try:
            if spec.toml_key in section:
                setattr(cfg, spec.attr, spec.cast(section[spec.toml_key]))
                sources[spec.attr] = "file"
            if spec.env_var and (env_val := os.environ.get(spec.env_var)) is not None:
                setattr(cfg, spec.attr, spec.cast(env_val))
                sources[spec.attr] = "env"
        except ValueError as exc:
            raise CoderConfigError(f"invalid value for {spec.attr}: {exc}") from exc

    return cfg, sources


def load_config() -> Config:
    """Load config from disk, falling back to defaults + env overrides."""
    cfg, _ = load_config_with_sources()
    return cfg
