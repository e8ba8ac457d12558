"""Control hubs of directed networks via maximum matching.

A control hub is a node that sits strictly inside a control path in every
control scheme.  Hubs are found as ``V - H - T`` where ``H`` (possible
heads) and ``T`` (possible tails) come from alternating-path reachability
over one maximum matching of the graph and of its transpose.
"""

__version__ = "0.1.0"

from .drivers import all_possible_drivers, min_driver_count, one_mds
from .errors import ContractViolation, CtrlHubsError, EmptyGraphError, ParameterError, ParseError
from .generators import erdos_renyi_directed, scale_free_directed
from .graph import (
    BipartiteGraph,
    DirectedGraph,
    NodeSet,
    format_edge_list,
    parse_edge_list,
    to_bipartite,
    transpose,
)
from .hubs import HubReport, control_hubs, head_nodes, tail_nodes
from .matching import (
    AlternatingReachability,
    Matching,
    even_alternating_reachability,
    is_maximum,
    maximum_matching,
)
from .oracle import OracleReport, enumerate_maximum_matchings, oracle_hubs
from .paths import ControlScheme, Role, extract_scheme, schemes_differ

__all__ = [
    "AlternatingReachability",
    "BipartiteGraph",
    "ContractViolation",
    "ControlScheme",
    "CtrlHubsError",
    "DirectedGraph",
    "EmptyGraphError",
    "HubReport",
    "Matching",
    "NodeSet",
    "OracleReport",
    "ParameterError",
    "ParseError",
    "Role",
    "all_possible_drivers",
    "control_hubs",
    "enumerate_maximum_matchings",
    "erdos_renyi_directed",
    "even_alternating_reachability",
    "extract_scheme",
    "format_edge_list",
    "head_nodes",
    "is_maximum",
    "maximum_matching",
    "min_driver_count",
    "one_mds",
    "oracle_hubs",
    "parse_edge_list",
    "scale_free_directed",
    "schemes_differ",
    "tail_nodes",
    "to_bipartite",
    "transpose",
]
