"""Brute-force ground truth for small graphs.

Enumerates every maximum matching, extracts the control scheme of each and
reads heads, tails and hubs straight off the definitions.  The number of
maximum matchings can grow like n!, so enumeration stops once ``limit`` is
exceeded and the result is flagged as truncated.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import BipartiteGraph, DirectedGraph, NodeSet, require_nonempty, to_bipartite
from .matching import Matching, maximum_matching
from .paths import ControlScheme, Role, extract_scheme

__all__ = [
    "OracleReport",
    "enumerate_maximum_matchings",
    "oracle_hubs",
    "report_from_matchings",
    "DEFAULT_LIMIT",
]

DEFAULT_LIMIT = 10**6


class _Truncated(Exception):
    pass


@dataclass(frozen=True)
class OracleReport:
    """Exact head/tail unions over all maximum matchings.

    When ``truncated`` is set every other field is None.
    """

    matching_count: int | None
    head_union: NodeSet | None
    tail_union: NodeSet | None
    theorem_hubs: NodeSet | None
    definitional_hubs: NodeSet | None
    truncated: bool


def enumerate_maximum_matchings(
    b: BipartiteGraph, limit: int = DEFAULT_LIMIT
) -> tuple[list[Matching], bool]:
    """All maximum matchings of ``b`` in lexicographic order of their pair lists.

    Branches on each out-copy in index order: pair it with a free in-copy
    (ascending) or leave it unmatched, pruning branches that can no longer
    reach the maximum size.  Returns ``([], True)`` if more than ``limit``
    matchings exist.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    n = b.n
    target = maximum_matching(b).size
    adj = [b.left_neighbors(u).tolist() for u in range(n)]
    active = [u for u in range(n) if adj[u]]
    used = [False] * n
    cur = [-1] * n
    found: list[list[int]] = []

    def rec(i: int, k: int) -> None:
        if k == target:
            if len(found) >= limit:
                raise _Truncated
            found.append(cur.copy())
            return
        if k + len(active) - i < target:
            return
        u = active[i]
        for v in adj[u]:
            if not used[v]:
                used[v] = True
                cur[u] = v
                rec(i + 1, k + 1)
                cur[u] = -1
                used[v] = False
        rec(i + 1, k)

    try:
        rec(0, 0)
    except _Truncated:
        return [], True

    out = []
    for ml in found:
        left = np.array(ml, dtype=np.int64)
        right = np.full(n, -1, dtype=np.int64)
        idx = np.flatnonzero(left != -1)
        right[left[idx]] = idx
        out.append(Matching(left, right))
    return out, False


def oracle_hubs(g: DirectedGraph, limit: int = DEFAULT_LIMIT) -> OracleReport:
    require_nonempty(g)
    matchings, truncated = enumerate_maximum_matchings(to_bipartite(g), limit)
    if truncated:
        return OracleReport(None, None, None, None, None, truncated=True)
    return report_from_matchings(g, matchings)


def report_from_matchings(
    g: DirectedGraph,
    matchings: list[Matching],
    schemes: list[ControlScheme] | None = None,
) -> OracleReport:
    """Role census over the schemes of an already enumerated matching list.

    ``schemes``, if given, must be the extracted schemes of ``matchings`` in
    the same order; they are used instead of re-extracting.
    """
    if schemes is None:
        schemes = [extract_scheme(g, m, check=False) for m in matchings]
    n = g.n
    head = [False] * n
    tail = [False] * n
    always_middle = [True] * n
    for scheme in schemes:
        for i, r in enumerate(scheme.role_of):
            if r is Role.HEAD:
                head[i] = True
            elif r is Role.TAIL:
                tail[i] = True
            elif r is Role.ISOLATED_DRIVER:
                head[i] = tail[i] = True
            if r is not Role.MIDDLE:
                always_middle[i] = False
    head_union = NodeSet(n, np.array(head))
    tail_union = NodeSet(n, np.array(tail))
    return OracleReport(
        matching_count=len(matchings),
        head_union=head_union,
        tail_union=tail_union,
        theorem_hubs=(head_union | tail_union).complement(),
        definitional_hubs=NodeSet(n, np.array(always_middle)),
        truncated=False,
    )
