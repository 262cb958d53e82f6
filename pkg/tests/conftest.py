from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

from graphzip.graph import core
from graphzip.graph.core import Graph
from graphzip.graph.generators import ErdosRenyi, WattsStrogatz, generate


@pytest.fixture()
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture()
def small_graphs() -> list[Graph]:
    return [
        core.empty(3),
        core.complete(4),
        core.path(5),
        core.cycle(6),
        core.star(7),
        generate(ErdosRenyi(11, 0.35), seed=2),
    ]


@pytest.fixture()
def corpus_dir(tmp_path: Path) -> Path:
    """A directory of edge-list files usable as a training corpus."""
    from graphzip.graph.io import write_edge_list

    root = tmp_path / "corpus"
    root.mkdir()
    for seed in range(3):
        g = generate(ErdosRenyi(24, 0.2), seed=seed)
        (root / f"er-{seed}.txt").write_text(write_edge_list(g))
        g = generate(WattsStrogatz(24, 4, 0.1), seed=seed)
        (root / f"ws-{seed}.txt").write_text(write_edge_list(g))
    return root


@pytest.fixture()
def isolated_config(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> Path:
    """Point graphzip at an empty config and a private data dir."""
    monkeypatch.setenv("GRAPHZIP_CONFIG", str(tmp_path / "missing.toml"))
    monkeypatch.setenv("GRAPHZIP_DATA_DIR", str(tmp_path / "data"))
    monkeypatch.delenv("GRAPHZIP_THREADS", raising=False)
    return tmp_path / "data"
