"""oced-forge: compile XES event logs into OCED knowledge graphs."""

from ._core import (
    ParseError,
    bgp_query,
    bpic2013_ocedd_turtle,
    check_ocedd,
    convert_xes,
    graph_stats,
    normalize_turtle,
    ocedo_turtle,
    rdfs_closure,
    validate_graph,
)

__all__ = [
    "ParseError",
    "bgp_query",
    "bpic2013_ocedd_turtle",
    "check_ocedd",
    "convert_xes",
    "graph_stats",
    "normalize_turtle",
    "ocedo_turtle",
    "rdfs_closure",
    "validate_graph",
]

__version__ = "0.1.0"
