"""Head nodes, tail nodes and control hubs (C = V - H - T)."""

from __future__ import annotations

from dataclasses import dataclass

from .drivers import all_possible_drivers
from .graph import DirectedGraph, NodeSet, require_nonempty, to_bipartite, transpose
from .matching import even_alternating_reachability, maximum_matching

__all__ = ["HubReport", "head_nodes", "tail_nodes", "control_hubs"]


@dataclass(frozen=True)
class HubReport:
    heads: NodeSet
    tails: NodeSet
    hubs: NodeSet
    n_d: int
    perfect_matching: bool
    n: int
    edge_count: int


def head_nodes(g: DirectedGraph) -> NodeSet:
    return all_possible_drivers(g)


def tail_nodes(g: DirectedGraph) -> NodeSet:
    """Heads of the transpose network are the tails of ``g``."""
    require_nonempty(g)
    return all_possible_drivers(transpose(g))


def control_hubs(g: DirectedGraph) -> HubReport:
    """Identify every control hub without enumerating control schemes.

    Heads and tails come from two independent matching runs, one on ``g``
    and one on its transpose.  When the maximum matching is perfect both
    sets are empty and every node is reported as a hub; ``perfect_matching``
    flags that regime.
    """
    require_nonempty(g)
    b = to_bipartite(g)
    m = maximum_matching(b)
    heads = even_alternating_reachability(b, m).reachable_right

    bt = to_bipartite(transpose(g))
    mt = maximum_matching(bt)
    tails = even_alternating_reachability(bt, mt).reachable_right

    hubs = (heads | tails).complement()
    return HubReport(
        heads=heads,
        tails=tails,
        hubs=hubs,
        n_d=max(g.n - m.size, 1),
        perfect_matching=m.size == g.n,
        n=g.n,
        edge_count=g.edge_count,
    )
