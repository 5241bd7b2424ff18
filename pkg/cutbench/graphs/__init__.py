"""Graph queries and instance I/O."""
from cutbench.graphs.io import (
    parse_edge_list,
    parse_graph6,
    read_graph,
    read_graph6_file,
    write_edge_list,
)
from cutbench.graphs.queries import (
    check_regular,
    check_srg,
    common_neighbors,
    cut_value,
    is_primitive,
    is_triangle_free,
    magnitude_range,
)

__all__ = [
    "check_regular",
    "check_srg",
    "common_neighbors",
    "cut_value",
    "is_primitive",
    "is_triangle_free",
    "magnitude_range",
    "parse_edge_list",
    "parse_graph6",
    "read_graph",
    "read_graph6_file",
    "write_edge_list",
]
