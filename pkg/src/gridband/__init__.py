"""Exact bandwidth and bandwidth-reduction toolkit for grids and small graphs."""

from .backend import BACKEND
from .constructions import (
    ConstructionReport,
    StaircaseBoard,
    adjacent_reduction_numbering,
    down_diagonal_lex,
    modified_board_numbering,
    nonadjacent_reduction_numbering,
    vi_example_board,
)
from .graphs import (
    DisconnectedGraphError,
    Graph,
    complete,
    complete_bipartite,
    cycle,
    diameter,
    double_wheel_axis,
    grid,
    path,
    read_edge_list,
    wheel,
    write_edge_list,
)
from .numbering import (
    LengthProfile,
    Numbering,
    bandwidth_of_numbering,
    boundary_profile,
    count_edges_longer_than,
    edge_length,
    length_profile,
)
from .solvers import (
    Budget,
    SearchOutcome,
    Status,
    bandwidth_decision,
    brk_complete_formula,
    density_lower_bound,
    diameter_lower_bound,
    exact_bandwidth,
    min_long_edges,
    reduction_by_deletion,
    reduction_number,
    vertex_isoperimetric,
)

__all__ = [
    "BACKEND",
    "Budget",
    "ConstructionReport",
    "DisconnectedGraphError",
    "Graph",
    "LengthProfile",
    "Numbering",
    "SearchOutcome",
    "StaircaseBoard",
    "Status",
    "adjacent_reduction_numbering",
    "bandwidth_decision",
    "bandwidth_of_numbering",
    "boundary_profile",
    "brk_complete_formula",
    "complete",
    "complete_bipartite",
    "count_edges_longer_than",
    "cycle",
    "density_lower_bound",
    "diameter",
    "diameter_lower_bound",
    "double_wheel_axis",
    "down_diagonal_lex",
    "edge_length",
    "exact_bandwidth",
    "grid",
    "length_profile",
    "min_long_edges",
    "modified_board_numbering",
    "nonadjacent_reduction_numbering",
    "path",
    "read_edge_list",
    "reduction_by_deletion",
    "reduction_number",
    "vertex_isoperimetric",
    "vi_example_board",
    "wheel",
    "write_edge_list",
]
