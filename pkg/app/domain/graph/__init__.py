"""Graph representation helpers, standard families and the pendant augmentation."""

from ._chromatic import DEFAULT_VERTEX_LIMIT, chromatic_number_exact, greedy_dsatur
from ._families import (
    build_cycle,
    build_path,
    build_spider,
    build_star,
    build_wheel,
    from_edge_list,
)
from ._io import format_edge_list, parse_edge_list, read_edge_list, write_edge_list
from ._pendants import add_pendant_edges, new_edge_index, pendant_vertices

__all__ = [
    "DEFAULT_VERTEX_LIMIT",
    "add_pendant_edges",
    "build_cycle",
    "build_path",
    "build_spider",
    "build_star",
    "build_wheel",
    "chromatic_number_exact",
    "format_edge_list",
    "from_edge_list",
    "greedy_dsatur",
    "new_edge_index",
    "parse_edge_list",
    "pendant_vertices",
    "read_edge_list",
    "write_edge_list",
]
