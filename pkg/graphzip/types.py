"""Versioned JSON reports emitted by the command-line tools."""

from __future__ import annotations

import csv
import io

from pydantic import BaseModel, ConfigDict, Field

REPORT_SCHEMA_VERSION = 1


class _Report(BaseModel):
    model_config = ConfigDict(frozen=True)

    schema_version: int = REPORT_SCHEMA_VERSION


class RunItem(BaseModel):
    """One compressed or decompressed artifact."""

    model_config = ConfigDict(frozen=True)

    name: str
    coder: str
    n: int
    edges: int
    total_bits: int
    header_bits: int
    payload_bits: int
    seconds: float
    digest: str


class RunReport(_Report):
    command: list[str]
    items: list[RunItem] = Field(default_factory=list)


class BenchmarkRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    graph: str
    n: int
    edges: int
    labeled_iid_bits: float
    bits: dict[str, int]


class BenchmarkTable(_Report):
    """Total bits per graph (rows) and coder (columns)."""

    specs: list[str]
    rows: list[BenchmarkRow] = Field(default_factory=list)

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["graph", "n", "edges", "labeled_iid", *self.specs])
        for row in self.rows:
            writer.writerow(
                [
                    row.graph,
                    row.n,
                    row.edges,
                    f"{row.labeled_iid_bits:.1f}",
                    *(row.bits[spec] for spec in self.specs),
                ]
            )
        return buffer.getvalue()


class LambdaRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    lam: float
    edges: int | None = None
    graph_bits: int | None = None
    data_bits: float | None = None
    total_bits: float | None = None
    shrunk: bool = False
    status: str = "ok"


class SelectionReport(_Report):
    coder: str
    n_samples: int
    p: int
    lambda_grid: list[float]
    path: list[LambdaRecord]
    selected_lambda: float
    selected_edges: list[tuple[int, int]]
    f1: float | None = None


class ExperimentReport(_Report):
    family: str
    p: int
    n_samples: int
    trials: int
    mean_f1: dict[str, float]
    optimum_f1: float
