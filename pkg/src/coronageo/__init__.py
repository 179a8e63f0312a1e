"""Exact geodetic, k-geodetic and Steiner invariants of small graphs, with a
corona-product constructor and an executable claim-verification harness."""

from .errors import CapExceeded, DomainError, FormatError
from .formats import (
    encode_graph6,
    format_edge_list,
    parse_edge_list,
    parse_graph6,
    parse_graph6_lines,
)
from .geodesic import (
    GeodeticResult,
    geodetic_number,
    geodetic_number_unpruned,
    interval,
    interval_closure,
    is_geodetic,
    is_geodominated,
    k_geodetic_number,
)
from .graphs import (
    CoronaLayout,
    DistanceMatrix,
    Graph,
    Mask,
    bfs_distances,
    bits,
    complete,
    components,
    corona,
    cycle,
    diameter,
    empty,
    extreme_vertices,
    fan,
    from_edge_list,
    induced_subgraph,
    is_complete,
    is_connected,
    mask_of,
    neighbors_in,
    path,
    reachable_set,
    star,
    vertex_tuple,
    wheel,
)
from .steiner import (
    SteinerResult,
    SteinerTable,
    is_steiner_set,
    oracle_steiner_trees,
    steiner_distance,
    steiner_hull,
    steiner_number,
    steiner_table,
)

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "CoronaLayout",
    "DistanceMatrix",
    "DomainError",
    "FormatError",
    "GeodeticResult",
    "Graph",
    "Mask",
    "SteinerResult",
    "SteinerTable",
    "bfs_distances",
    "bits",
    "complete",
    "components",
    "corona",
    "cycle",
    "diameter",
    "empty",
    "encode_graph6",
    "extreme_vertices",
    "fan",
    "format_edge_list",
    "from_edge_list",
    "geodetic_number",
    "geodetic_number_unpruned",
    "induced_subgraph",
    "interval",
    "interval_closure",
    "is_complete",
    "is_connected",
    "is_geodetic",
    "is_geodominated",
    "is_steiner_set",
    "k_geodetic_number",
    "mask_of",
    "neighbors_in",
    "oracle_steiner_trees",
    "parse_edge_list",
    "parse_graph6",
    "parse_graph6_lines",
    "path",
    "reachable_set",
    "star",
    "steiner_distance",
    "steiner_hull",
    "steiner_number",
    "steiner_table",
    "vertex_tuple",
    "wheel",
]
