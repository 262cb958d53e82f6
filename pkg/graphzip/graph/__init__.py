from graphzip.graph.core import (
    DegreeDistribution,
    Graph,
    complete,
    cycle,
    degree_histogram,
    empty,
    largest_component,
    path,
    star,
)
from graphzip.graph.generators import (
    BarabasiAlbert,
    Complete,
    Empty,
    ErdosRenyi,
    GraphModel,
    WattsStrogatz,
    generate,
    parse_model,
)
from graphzip.graph.io import load_edge_list, read_graph, write_edge_list
from graphzip.graph.isomorphism import is_isomorphic_small
from graphzip.graph.precision import graph_from_precision

__all__ = [
    "BarabasiAlbert",
    "Complete",
    "DegreeDistribution",
    "Empty",
    "ErdosRenyi",
    "Graph",
    "GraphModel",
    "WattsStrogatz",
    "complete",
    "cycle",
    "degree_histogram",
    "empty",
    "generate",
    "graph_from_precision",
    "is_isomorphic_small",
    "largest_component",
    "load_edge_list",
    "parse_model",
    "path",
    "read_graph",
    "star",
    "write_edge_list",
]
