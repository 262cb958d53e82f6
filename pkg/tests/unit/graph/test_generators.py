from __future__ import annotations

import pytest

from graphzip.exceptions import GraphDomainError
from graphzip.graph.generators import (
    BarabasiAlbert,
    Complete,
    Empty,
    ErdosRenyi,
    WattsStrogatz,
    generate,
    parse_model,
)


class TestGenerate:
    def test_same_seed_same_graph(self) -> None:
        a = generate(ErdosRenyi(60, 0.1), seed=4)
        b = generate(ErdosRenyi(60, 0.1), seed=4)
        assert list(a.edges()) == list(b.edges())

    def test_dense_er_uses_same_contract(self) -> None:
        a = generate(ErdosRenyi(30, 0.5), seed=9)
        b = generate(ErdosRenyi(30, 0.5), seed=9)
        assert list(a.edges()) == list(b.edges())
        assert a.n == 30

    def test_ws_without_rewiring_is_a_ring_lattice(self) -> None:
        g = generate(WattsStrogatz(20, 4, 0.0), seed=0)
        assert g.degrees() == [4] * 20
        assert g.edge_count == 40

    def test_ba_edge_count(self) -> None:
        g = generate(BarabasiAlbert(50, 3), seed=1)
        assert g.edge_count == 3 * (50 - 3)

    def test_trivial_models(self) -> None:
        assert generate(Empty(4)).edge_count == 0
        assert generate(Complete(4)).edge_count == 6

    @pytest.mark.parametrize(
        "model",
        [
            ErdosRenyi(10, 1.5),
            BarabasiAlbert(5, 5),
            WattsStrogatz(10, 3, 0.1),
            WattsStrogatz(10, 4, -0.1),
            Empty(-1),
        ],
    )
    def test_invalid_parameters(self, model: object) -> None:
        with pytest.raises(GraphDomainError):
            generate(model, seed=0)  # type: ignore[arg-type]


class TestParseModel:
    @pytest.mark.parametrize(
        ("text", "expected"),
        [
            ("er(1000, 0.02)", ErdosRenyi(1000, 0.02)),
            ("BA(100,3)", BarabasiAlbert(100, 3)),
            ("ws(1000, 20, 0.1)", WattsStrogatz(1000, 20, 0.1)),
            (" empty(5) ", Empty(5)),
            ("complete(7)", Complete(7)),
        ],
    )
    def test_parses(self, text: str, expected: object) -> None:
        assert parse_model(text) == expected

    @pytest.mark.parametrize("text", ["er(10)", "tree(4)", "er 10 0.1", "er(x, 0.1)"])
    def test_rejects(self, text: str) -> None:
        with pytest.raises(GraphDomainError):
            parse_model(text)
