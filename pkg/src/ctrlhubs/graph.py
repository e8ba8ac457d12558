"""Directed-graph data model, edge-list I/O, transpose and bipartite split.

Nodes are dense integer indices ``0..n-1``; every node carries an external
string label.  Edge lists are stored as numpy arrays (insertion order,
duplicates removed) plus a CSR out-adjacency whose rows are sorted
ascending, so that every traversal in the package is deterministic.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from functools import cached_property

import numpy as np

from .errors import ContractViolation, EmptyGraphError, ParseError

__all__ = [
    "NodeSet",
    "DirectedGraph",
    "BipartiteGraph",
    "parse_edge_list",
    "format_edge_list",
    "transpose",
    "to_bipartite",
]

_MAX_NODES = 2**31 - 1


class NodeSet:
    """Immutable subset of ``range(n)`` backed by a boolean mask.

    Membership is O(1); iteration yields members in ascending index order.
    """

    __slots__ = ("n", "_mask")

    def __init__(self, n: int, mask: np.ndarray | None = None):
        if mask is None:
            mask = np.zeros(n, dtype=bool)
        else:
            mask = np.asarray(mask, dtype=bool)
            if mask.shape != (n,):
                raise ValueError(f"mask shape {mask.shape} does not match n={n}")
            mask = mask.copy()
        mask.setflags(write=False)
        self.n = n
        self._mask = mask

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> NodeSet:
        idx = np.fromiter(indices, dtype=np.int64)
        if idx.size and (idx.min() < 0 or idx.max() >= n):
            raise ValueError(f"node index out of range [0, {n})")
        mask = np.zeros(n, dtype=bool)
        mask[idx] = True
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> NodeSet:
        return cls(n, np.ones(n, dtype=bool))

    @property
    def mask(self) -> np.ndarray:
        return self._mask

    def indices(self) -> np.ndarray:
        return np.flatnonzero(self._mask)

    def to_set(self) -> set[int]:
        return set(self.indices().tolist())

    def __contains__(self, i: object) -> bool:
        if not isinstance(i, (int, np.integer)):
            return False
        return 0 <= i < self.n and bool(self._mask[i])

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices().tolist())

    def __len__(self) -> int:
        return int(np.count_nonzero(self._mask))

    def __bool__(self) -> bool:
        return bool(self._mask.any())

    def _check(self, other: NodeSet) -> None:
        if not isinstance(other, NodeSet):
            raise TypeError(f"expected NodeSet, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"node universes differ ({self.n} vs {other.n})")

    def __or__(self, other: NodeSet) -> NodeSet:
        self._check(other)
        return NodeSet(self.n, self._mask | other._mask)

    def __and__(self, other: NodeSet) -> NodeSet:
        self._check(other)
        return NodeSet(self.n, self._mask & other._mask)

    def __sub__(self, other: NodeSet) -> NodeSet:
        self._check(other)
        return NodeSet(self.n, self._mask & ~other._mask)

    def complement(self) -> NodeSet:
        return NodeSet(self.n, ~self._mask)

    def issubset(self, other: NodeSet) -> bool:
        self._check(other)
        return not bool((self._mask & ~other._mask).any())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NodeSet):
            return NotImplemented
        return self.n == other.n and np.array_equal(self._mask, other._mask)

    def __hash__(self) -> int:
        return hash((self.n, self._mask.tobytes()))

    def __repr__(self) -> str:
        return f"NodeSet(n={self.n}, {sorted(self.to_set())})"


def _csr(n: int, rows: np.ndarray, cols: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """CSR arrays with each row's columns sorted ascending."""
    order = np.argsort(rows * max(n, 1) + cols, kind="stable")
    indices = cols[order]
    counts = np.bincount(rows, minlength=n)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    return indptr, np.ascontiguousarray(indices, dtype=np.int64)


class DirectedGraph:
    """A simple directed graph G(V, E) on dense indices with external labels.

    Duplicate edges are collapsed (first occurrence kept); self-loops are
    allowed.  Instances are immutable after construction.
    """

    def __init__(
        self,
        n: int,
        src: Sequence[int] | np.ndarray,
        dst: Sequence[int] | np.ndarray,
        labels: Sequence[str] | None = None,
    ):
        if n < 0 or n > _MAX_NODES:
            raise ValueError(f"node count {n} out of range")
        src = np.array(src, dtype=np.int64).ravel()
        dst = np.array(dst, dtype=np.int64).ravel()
        if src.shape != dst.shape:
            raise ValueError("src and dst must have equal length")
        if src.size:
            lo = min(src.min(), dst.min())
            hi = max(src.max(), dst.max())
            if lo < 0 or hi >= n:
                raise ValueError(f"edge endpoint out of range [0, {n})")
            codes = src * n + dst
            _, first = np.unique(codes, return_index=True)
            if first.size != codes.size:
                first.sort()
                src, dst = src[first], dst[first]
        if labels is None:
            labels = tuple(str(i) for i in range(n))
        else:
            labels = tuple(str(s) for s in labels)
            if len(labels) != n:
                raise ValueError(f"expected {n} labels, got {len(labels)}")
            if len(set(labels)) != n:
                raise ValueError("labels must be unique")
        self.n = n
        self.src = src
        self.dst = dst
        self.src.setflags(write=False)
        self.dst.setflags(write=False)
        self.labels: tuple[str, ...] = labels
        self.indptr, self.indices = _csr(n, src, dst)
        self.indptr.setflags(write=False)
        self.indices.setflags(write=False)

    @classmethod
    def _trusted(
        cls, n: int, src: np.ndarray, dst: np.ndarray, labels: tuple[str, ...]
    ) -> DirectedGraph:
        """Build without validation; callers guarantee distinct in-range edges."""
        g = cls.__new__(cls)
        g.n = n
        g.src = np.ascontiguousarray(src, dtype=np.int64)
        g.dst = np.ascontiguousarray(dst, dtype=np.int64)
        g.src.setflags(write=False)
        g.dst.setflags(write=False)
        g.labels = labels
        g.indptr, g.indices = _csr(n, g.src, g.dst)
        g.indptr.setflags(write=False)
        g.indices.setflags(write=False)
        return g

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> DirectedGraph:
        pairs = np.array(list(edges), dtype=np.int64).reshape(-1, 2)
        return cls(n, pairs[:, 0], pairs[:, 1], labels)

    @property
    def edge_count(self) -> int:
        return int(self.src.size)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return list(zip(self.src.tolist(), self.dst.tolist()))

    def edge_set(self) -> set[tuple[int, int]]:
        return set(self.edges)

    def successors(self, u: int) -> np.ndarray:
        return self.indices[self.indptr[u] : self.indptr[u + 1]]

    @property
    def out_adjacency(self) -> list[list[int]]:
        return [self.successors(u).tolist() for u in range(self.n)]

    def out_degree(self) -> np.ndarray:
        return np.diff(self.indptr)

    def in_degree(self) -> np.ndarray:
        return np.bincount(self.dst, minlength=self.n)

    @cached_property
    def label_index(self) -> dict[str, int]:
        return {s: i for i, s in enumerate(self.labels)}

    def _sorted_codes(self) -> np.ndarray:
        return np.sort(self.src * self.n + self.dst)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DirectedGraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.labels == other.labels
            and np.array_equal(self._sorted_codes(), other._sorted_codes())
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"DirectedGraph(n={self.n}, edges={self.edge_count})"


class BipartiteGraph:
    """The split B(V_out, V_in, E): left node u is u_out, right node v is v_in.

    Holds the adjacency from both sides: ``left_*`` lists the in-copies
    adjacent to each out-copy (successors in the source graph) and
    ``right_*`` the out-copies adjacent to each in-copy (predecessors).
    """

    def __init__(
        self,
        n: int,
        left_indptr: np.ndarray,
        left_indices: np.ndarray,
        right_indptr: np.ndarray,
        right_indices: np.ndarray,
    ):
        self.n = n
        self.left_indptr = left_indptr
        self.left_indices = left_indices
        self.right_indptr = right_indptr
        self.right_indices = right_indices

    @property
    def left(self) -> range:
        return range(self.n)

    @property
    def right(self) -> range:
        return range(self.n)

    @property
    def edge_count(self) -> int:
        return int(self.left_indices.size)

    @property
    def edges(self) -> list[tuple[int, int]]:
        """Pairs ``(u_out, v_in)`` in left-major ascending order."""
        rows = np.repeat(np.arange(self.n, dtype=np.int64), np.diff(self.left_indptr))
        return list(zip(rows.tolist(), self.left_indices.tolist()))

    def left_neighbors(self, u: int) -> np.ndarray:
        return self.left_indices[self.left_indptr[u] : self.left_indptr[u + 1]]

    def right_neighbors(self, v: int) -> np.ndarray:
        return self.right_indices[self.right_indptr[v] : self.right_indptr[v + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        row = self.left_neighbors(u)
        k = int(np.searchsorted(row, v))
        return k < row.size and int(row[k]) == v

    def swapped(self) -> BipartiteGraph:
        """Same edge set with the roles of the two node sets exchanged."""
        return BipartiteGraph(
            self.n, self.right_indptr, self.right_indices, self.left_indptr, self.left_indices
        )

    def __repr__(self) -> str:
        return f"BipartiteGraph(n={self.n}, edges={self.edge_count})"


def parse_edge_list(text: str | Iterable[str]) -> DirectedGraph:
    """Parse whitespace-separated ``source target`` label pairs.

    Blank lines and lines starting with ``#`` are skipped.  Labels get dense
    indices in order of first appearance.  Raises :class:`ParseError` naming
    the offending line, or :class:`EmptyGraphError` if no edge is present.
    """
    lines = text.splitlines() if isinstance(text, str) else text
    index: dict[str, int] = {}
    src: list[int] = []
    dst: list[int] = []
    for lineno, line in enumerate(lines, start=1):
        tokens = line.split()
        if not tokens or tokens[0].startswith("#"):
            continue
        if len(tokens) != 2:
            raise ParseError(
                f"expected 2 tokens (source target), found {len(tokens)}: {line.strip()!r}",
                line=lineno,
            )
        a, b = tokens
        src.append(index.setdefault(a, len(index)))
        dst.append(index.setdefault(b, len(index)))
    if not index:
        raise EmptyGraphError("input contains no edges")
    return DirectedGraph(len(index), src, dst, labels=list(index))


def format_edge_list(g: DirectedGraph) -> str:
    """Serialize as one ``source target`` line per edge, in insertion order."""
    lab = g.labels
    return "".join(f"{lab[u]} {lab[v]}\n" for u, v in zip(g.src.tolist(), g.dst.tolist()))


def transpose(g: DirectedGraph) -> DirectedGraph:
    """Reverse every edge; node count and labels are kept."""
    return DirectedGraph._trusted(g.n, g.dst, g.src, g.labels)


def to_bipartite(g: DirectedGraph) -> BipartiteGraph:
    right_indptr, right_indices = _csr(g.n, g.dst, g.src)
    return BipartiteGraph(g.n, g.indptr, g.indices, right_indptr, right_indices)


def require_nonempty(g: DirectedGraph) -> None:
    if g.n == 0:
        raise EmptyGraphError("graph has no nodes")


def check_same_universe(a_n: int, b_n: int) -> None:
    if a_n != b_n:
        raise ContractViolation(f"node universes differ ({a_n} vs {b_n})")
