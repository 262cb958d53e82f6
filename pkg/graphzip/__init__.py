"""Public API for the graphzip library.

External consumers (the CLI, notebooks) should import from this module.
Tests may reach into sub-packages directly.
"""

from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from graphzip.coders import (
        Bitstream,
        CoderSpec,
        CoderStats,
        decode_graph,
        encode_best,
        encode_graph,
        measure,
        train_stats,
    )
    from graphzip.graph import Graph, load_edge_list, read_graph, write_edge_list
    from graphzip.mdl import (
        Selection,
        dempster_complete,
        f1_score,
        graphical_lasso,
        predictive_mdl,
        select_model,
    )

__all__ = [
    "Bitstream",
    "CoderSpec",
    "CoderStats",
    "Graph",
    "Selection",
    "decode_graph",
    "dempster_complete",
    "encode_best",
    "encode_graph",
    "f1_score",
    "graphical_lasso",
    "load_edge_list",
    "measure",
    "predictive_mdl",
    "read_graph",
    "select_model",
    "train_stats",
    "write_edge_list",
]


def __getattr__(name: str) -> Any:
    if name not in __all__:
        raise AttributeError(f"module {__name__!r} has no attribute {name!r}")

    from graphzip.coders import (
        Bitstream,
        CoderSpec,
        CoderStats,
        decode_graph,
        encode_best,
        encode_graph,
        measure,
        train_stats,
    )
    from graphzip.graph import Graph, load_edge_list, read_graph, write_edge_list
    from graphzip.mdl import (
        Selection,
        dempster_complete,
        f1_score,
        graphical_lasso,
        predictive_mdl,
        select_model,
    )

    exports: dict[str, Any] = {
        "Bitstream": Bitstream,
        "CoderSpec": CoderSpec,
        "CoderStats": CoderStats,
        "Graph": Graph,
        "Selection": Selection,
        "decode_graph": decode_graph,
        "dempster_complete": dempster_complete,
        "encode_best": encode_best,
        "encode_graph": encode_graph,
        "f1_score": f1_score,
        "graphical_lasso": graphical_lasso,
        "load_edge_list": load_edge_list,
        "measure": measure,
        "predictive_mdl": predictive_mdl,
        "read_graph": read_graph,
        "select_model": select_model,
        "train_stats": train_stats,
        "write_edge_list": write_edge_list,
    }

    value = exports[name]
    globals()[name] = value
    return value
