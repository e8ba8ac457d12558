"""All possible driver nodes, minimum driver count and one minimum driver set."""

from __future__ import annotations

import numpy as np

from .graph import DirectedGraph, NodeSet, require_nonempty, to_bipartite
from .matching import Matching, even_alternating_reachability, maximum_matching

__all__ = ["all_possible_drivers", "min_driver_count", "one_mds", "drivers_from_matching"]


def drivers_from_matching(g: DirectedGraph, m: Matching) -> NodeSet:
    """Driver union computed from a given maximum matching of ``to_bipartite(g)``."""
    return even_alternating_reachability(to_bipartite(g), m).reachable_right


def all_possible_drivers(g: DirectedGraph) -> NodeSet:
    """Every node that is a driver under at least one maximum matching.

    These are the nodes whose in-copy is reachable from a free in-copy by an
    even-length alternating path of an arbitrary maximum matching, which is
    the union of the minimum driver sets over all maximum matchings.
    """
    require_nonempty(g)
    b = to_bipartite(g)
    return even_alternating_reachability(b, maximum_matching(b)).reachable_right


def min_driver_count(g: DirectedGraph) -> int:
    """``max(n - |M|, 1)``: one input is still needed under a perfect matching."""
    require_nonempty(g)
    return max(g.n - maximum_matching(to_bipartite(g)).size, 1)


def one_mds(g: DirectedGraph) -> NodeSet:
    """Unmatched in-copies of the deterministic maximum matching.

    Under a perfect matching the set would be empty; node 0 is returned
    instead so the size always equals :func:`min_driver_count`.
    """
    require_nonempty(g)
    m = maximum_matching(to_bipartite(g))
    mds = m.unmatched_right()
    if not mds:
        mask = np.zeros(g.n, dtype=bool)
        mask[0] = True
        return NodeSet(g.n, mask)
    return mds
