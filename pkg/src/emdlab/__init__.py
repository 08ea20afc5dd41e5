"""Exact computation of metric, edge metric and domination parameters of small graphs."""

__version__ = "0.1.0"

from .dominant_search import PARAMETERS, compute_parameters
from .families import generate, parse_family
from .formats import parse_edge_list_text, parse_graph6, emit_graph6
from .graph_core import Graph, GraphError, from_edge_list

__all__ = [
    "PARAMETERS",
    "Graph",
    "GraphError",
    "compute_parameters",
    "emit_graph6",
    "from_edge_list",
    "generate",
    "parse_edge_list_text",
    "parse_family",
    "parse_graph6",
]
