from __future__ import annotations

import os
from pathlib import Path

import pytest

from graphzip.graph.core import Graph
from graphzip.graph.io import read_graph

_DATASET_ENV = "GRAPHZIP_MINNESOTA_EDGES"


@pytest.fixture(scope="session")
def minnesota_road() -> Graph:
    """The Minnesota road network, when downloaded.

    Point ``GRAPHZIP_MINNESOTA_EDGES`` at an edge list of the network.
    """
    path = os.environ.get(_DATASET_ENV)
    if not path or not Path(path).is_file():
        pytest.skip(f"set {_DATASET_ENV} to the Minnesota road edge list")
    return read_graph(path)
