"""Maximum bipartite matching (Hopcroft-Karp) and alternating-path reachability.

The hot loops are compiled with numba and operate directly on the CSR
arrays of :class:`~ctrlhubs.graph.BipartiteGraph`.  Unmatched slots are
encoded as ``-1``.  Neighbour lists are scanned in ascending index order
and free vertices are processed in ascending index order, so results are
reproducible for a given graph.
"""

from __future__ import annotations

from dataclasses import dataclass

import numba
import numpy as np

from .errors import ContractViolation
from .graph import BipartiteGraph, NodeSet

__all__ = [
    "Matching",
    "AlternatingReachability",
    "maximum_matching",
    "is_maximum",
    "even_alternating_reachability",
]

_UNMATCHED = -1


@numba.njit(cache=True, nogil=True)
def _hopcroft_karp(n, indptr, indices):  # pragma: no cover - compiled
    match_l = np.full(n, -1, dtype=np.int64)
    match_r = np.full(n, -1, dtype=np.int64)

    # greedy warm start
    for u in range(n):
        for k in range(indptr[u], indptr[u + 1]):
            v = indices[k]
            if match_r[v] == -1:
                match_l[u] = v
                match_r[v] = u
                break

    inf = n + 2
    dist = np.empty(n, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    it = np.empty(n, dtype=np.int64)
    stack = np.empty(n + 1, dtype=np.int64)
    via = np.empty(n + 1, dtype=np.int64)

    while True:
        # layer the graph from all free left vertices
        head = 0
        tail = 0
        for u in range(n):
            if match_l[u] == -1:
                dist[u] = 0
                queue[tail] = u
                tail += 1
            else:
                dist[u] = inf
        limit = inf
        while head < tail:
            u = queue[head]
            head += 1
            if dist[u] + 1 > limit:
                break
            for k in range(indptr[u], indptr[u + 1]):
                w = match_r[indices[k]]
                if w == -1:
                    if limit == inf:
                        limit = dist[u] + 1
                elif dist[w] == inf:
                    dist[w] = dist[u] + 1
                    queue[tail] = w
                    tail += 1
        if limit == inf:
            break

        # vertex-disjoint shortest augmenting paths, iterative DFS
        for u in range(n):
            it[u] = indptr[u]
        for s in range(n):
            if match_l[s] != -1 or dist[s] != 0:
                continue
            top = 0
            stack[0] = s
            while top >= 0:
                u = stack[top]
                found = -1
                pushed = False
                while it[u] < indptr[u + 1]:
                    v = indices[it[u]]
                    it[u] += 1
                    w = match_r[v]
                    if w == -1:
                        if dist[u] + 1 == limit:
                            found = v
                            break
                    elif dist[w] == dist[u] + 1 and dist[w] < limit:
                        via[top] = v
                        top += 1
                        stack[top] = w
                        pushed = True
                        break
                if found != -1:
                    via[top] = found
                    for i in range(top + 1):
                        x = stack[i]
                        y = via[i]
                        match_l[x] = y
                        match_r[y] = x
                        dist[x] = inf
                    break
                if not pushed:
                    dist[u] = inf
                    top -= 1
    return match_l, match_r


@numba.njit(cache=True, nogil=True)
def _has_augmenting_path(n, indptr, indices, match_l, match_r):  # pragma: no cover
    seen = np.zeros(n, dtype=np.bool_)
    queue = np.empty(n, dtype=np.int64)
    tail = 0
    for u in range(n):
        if match_l[u] == -1:
            seen[u] = True
            queue[tail] = u
            tail += 1
    head = 0
    while head < tail:
        u = queue[head]
        head += 1
        for k in range(indptr[u], indptr[u + 1]):
            v = indices[k]
            if v == match_l[u]:
                continue
            w = match_r[v]
            if w == -1:
                return True
            if not seen[w]:
                seen[w] = True
                queue[tail] = w
                tail += 1
    return False


@numba.njit(cache=True, nogil=True)
def _even_reach(n, right_indptr, right_indices, match_l, match_r):  # pragma: no cover
    reach_r = np.zeros(n, dtype=np.bool_)
    reach_l = np.zeros(n, dtype=np.bool_)
    queue = np.empty(n, dtype=np.int64)
    tail = 0
    for v in range(n):
        if match_r[v] == -1:
            reach_r[v] = True
            queue[tail] = v
            tail += 1
    head = 0
    augmenting = False
    while head < tail:
        v = queue[head]
        head += 1
        for k in range(right_indptr[v], right_indptr[v + 1]):
            u = right_indices[k]
            if match_r[v] == u or reach_l[u]:
                continue
            reach_l[u] = True
            w = match_l[u]
            if w == -1:
                augmenting = True
            elif not reach_r[w]:
                reach_r[w] = True
                queue[tail] = w
                tail += 1
    return reach_r, reach_l, augmenting


@dataclass(frozen=True, eq=False)
class Matching:
    """A matching on a bipartite split: ``match_of_left[u] = v`` pairs u_out with v_in."""

    match_of_left: np.ndarray
    match_of_right: np.ndarray

    @classmethod
    def from_pairs(cls, n: int, pairs) -> Matching:
        ml = np.full(n, _UNMATCHED, dtype=np.int64)
        mr = np.full(n, _UNMATCHED, dtype=np.int64)
        for u, v in pairs:
            if ml[u] != _UNMATCHED or mr[v] != _UNMATCHED:
                raise ContractViolation(f"pair ({u}, {v}) shares a node with another pair")
            ml[u] = v
            mr[v] = u
        return cls(ml, mr)

    @classmethod
    def empty(cls, n: int) -> Matching:
        return cls.from_pairs(n, ())

    @property
    def n(self) -> int:
        return int(self.match_of_left.size)

    @property
    def size(self) -> int:
        return int(np.count_nonzero(self.match_of_left != _UNMATCHED))

    def pairs(self) -> list[tuple[int, int]]:
        left = np.flatnonzero(self.match_of_left != _UNMATCHED)
        return list(zip(left.tolist(), self.match_of_left[left].tolist()))

    def unmatched_right(self) -> NodeSet:
        return NodeSet(self.n, self.match_of_right == _UNMATCHED)

    def unmatched_left(self) -> NodeSet:
        return NodeSet(self.n, self.match_of_left == _UNMATCHED)

    def swapped(self) -> Matching:
        """The same edge set seen from the swapped bipartite graph."""
        return Matching(self.match_of_right, self.match_of_left)

    def validate(self, b: BipartiteGraph) -> None:
        """Raise :class:`ContractViolation` unless this is a matching of ``b``."""
        ml, mr = self.match_of_left, self.match_of_right
        if ml.shape != (b.n,) or mr.shape != (b.n,):
            raise ContractViolation("matching size does not match the bipartite graph")
        left = np.flatnonzero(ml != _UNMATCHED)
        right = ml[left]
        if right.size and (right.min() < 0 or right.max() >= b.n):
            raise ContractViolation("matched partner out of range")
        if not np.array_equal(mr[right], left):
            raise ContractViolation("match_of_left and match_of_right disagree")
        if np.count_nonzero(mr != _UNMATCHED) != left.size:
            raise ContractViolation("match_of_right has pairs missing from match_of_left")
        # every pair must be an edge: look each one up in its sorted row
        for u, v in zip(left.tolist(), right.tolist()):
            if not b.has_edge(u, v):
                raise ContractViolation(f"pair ({u}_out, {v}_in) is not an edge")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matching):
            return NotImplemented
        return np.array_equal(self.match_of_left, other.match_of_left)

    def __hash__(self) -> int:
        return hash(self.match_of_left.tobytes())

    def __repr__(self) -> str:
        return f"Matching(size={self.size}, pairs={self.pairs()})"


@dataclass(frozen=True)
class AlternatingReachability:
    reachable_right: NodeSet
    reachable_left: NodeSet


def maximum_matching(b: BipartiteGraph) -> Matching:
    """Maximum-cardinality matching of ``b`` by Hopcroft-Karp, O(sqrt(N) L)."""
    ml, mr = _hopcroft_karp(b.n, b.left_indptr, b.left_indices)
    return Matching(ml, mr)


def is_maximum(b: BipartiteGraph, m: Matching) -> bool:
    """Berge check: True iff ``m`` admits no augmenting path in ``b``."""
    m.validate(b)
    return not _has_augmenting_path(
        b.n, b.left_indptr, b.left_indices, m.match_of_left, m.match_of_right
    )


def even_alternating_reachability(
    b: BipartiteGraph, m: Matching, check: bool = False
) -> AlternatingReachability:
    """In-copies reachable by an even-length alternating path from a free in-copy.

    Breadth-first from all unmatched right nodes (length-0 paths included):
    a right node steps over a non-matching edge to a left node, which steps
    back over its matching edge.  ``m`` must be maximum; with ``check`` the
    precondition is verified first, otherwise an augmenting path met during
    the search still raises.
    """
    if check and not is_maximum(b, m):
        raise ContractViolation("matching is not maximum")
    reach_r, reach_l, augmenting = _even_reach(
        b.n, b.right_indptr, b.right_indices, m.match_of_left, m.match_of_right
    )
    if augmenting:
        raise ContractViolation("matching is not maximum (augmenting path found)")
    return AlternatingReachability(NodeSet(b.n, reach_r), NodeSet(b.n, reach_l))
