from __future__ import annotations

import numpy as np
import pytest

from graphzip.coders.codec import decode_graph, decode_tree, encode_graph
from graphzip.coders.spec import CoderSpec, Mode, all_specs
from graphzip.coders.stats import CoderStats
from graphzip.coders.training import train_stats
from graphzip.graph.core import Graph
from graphzip.graph.generators import (
    BarabasiAlbert,
    ErdosRenyi,
    WattsStrogatz,
    generate,
)
from graphzip.graph.isomorphism import MAX_EXHAUSTIVE_VERTICES, is_isomorphic_small
from graphzip.tree.transform import graph_to_tree

pytestmark = pytest.mark.integration

FUZZ_GRAPHS = 200


def _fuzz_graphs(count: int, seed: int) -> list[Graph]:
    rng = np.random.default_rng(seed)
    graphs = []
    for i in range(count):
        n = int(rng.integers(2, 129))
        match i % 3:
            case 0:
                model = ErdosRenyi(n, float(rng.uniform(0.02, 0.5)))
            case 1 if n >= 3:
                model = BarabasiAlbert(n, int(rng.integers(1, min(n, 6))))
            case 2 if n >= 5:
                model = WattsStrogatz(n, 4, float(rng.uniform(0.0, 0.3)))
            case _:
                model = ErdosRenyi(n, 0.5)
        graphs.append(generate(model, seed=seed + i))
    return graphs


@pytest.fixture(scope="module")
def fuzz_graphs() -> list[Graph]:
    return _fuzz_graphs(FUZZ_GRAPHS, seed=1000)


@pytest.fixture(scope="module")
def learned_stats() -> dict[CoderSpec, CoderStats]:
    corpus = _fuzz_graphs(6, seed=77)
    return {spec: train_stats(corpus, spec) for spec in all_specs(Mode.LEARNED)}


def _check(g: Graph, spec: CoderSpec, stats: CoderStats | None) -> None:
    stream = encode_graph(g, spec, stats)
    data = stream.to_bytes()
    decoded = decode_graph(data)
    if g.n <= MAX_EXHAUSTIVE_VERTICES:
        assert is_isomorphic_small(decoded, g), (spec.label, g.n)
    else:
        tree = decode_tree(data)
        assert tree == graph_to_tree(g), (spec.label, g.n)
        assert graph_to_tree(decoded) == tree, (spec.label, g.n)


@pytest.mark.parametrize("spec", all_specs(Mode.UNIVERSAL), ids=str)
def test_universal_round_trips(fuzz_graphs: list[Graph], spec: CoderSpec) -> None:
    for g in fuzz_graphs:
        _check(g, spec, None)


@pytest.mark.parametrize("spec", all_specs(Mode.LEARNED), ids=str)
def test_learned_round_trips(
    fuzz_graphs: list[Graph],
    learned_stats: dict[CoderSpec, CoderStats],
    spec: CoderSpec,
) -> None:
    for g in fuzz_graphs:
        _check(g, spec, learned_stats[spec])
