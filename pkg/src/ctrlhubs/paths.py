"""Decompose a maximum matching into control paths and cycles."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import ContractViolation
from .graph import DirectedGraph, check_same_universe, to_bipartite
from .matching import Matching, is_maximum

__all__ = ["Role", "ControlScheme", "extract_scheme", "schemes_differ"]


class Role(str, enum.Enum):
    HEAD = "head"
    MIDDLE = "middle"
    TAIL = "tail"
    ISOLATED_DRIVER = "isolated_driver"
    CYCLE_MEMBER = "cycle_member"


@dataclass(frozen=True)
class ControlScheme:
    """Control paths and cycles induced by one maximum matching.

    Paths are sorted by head index; each cycle starts at its lowest index and
    cycles are sorted by that first element.  ``role_of[i]`` is the role of
    node ``i``.
    """

    n: int
    paths: tuple[tuple[int, ...], ...]
    cycles: tuple[tuple[int, ...], ...]
    role_of: tuple[Role, ...]
    matching_size: int

    def nodes_with_role(self, role: Role) -> list[int]:
        return [i for i, r in enumerate(self.role_of) if r is role]

    def check_invariants(self, m: Matching | None = None) -> None:
        """Raise AssertionError if the partition or count invariants fail."""
        seen = [0] * self.n
        for seq in self.paths + self.cycles:
            assert len(seq) >= 1, "empty path or cycle"
            for v in seq:
                seen[v] += 1
        assert all(c == 1 for c in seen), "a node is missing or repeated"
        linked = sum(len(p) - 1 for p in self.paths) + sum(len(c) for c in self.cycles)
        assert linked == self.matching_size, "matched edge count does not reconcile"
        if m is not None:
            ml, mr = m.match_of_left, m.match_of_right
            assert len(self.paths) == int((mr == -1).sum()), "path count != free in-copies"
            for p in self.paths:
                assert mr[p[0]] == -1 and ml[p[-1]] == -1
                for a, b in zip(p, p[1:]):
                    assert ml[a] == b
            for c in self.cycles:
                for a, b in zip(c, c[1:] + c[:1]):
                    assert ml[a] == b


def extract_scheme(g: DirectedGraph, m: Matching, check: bool = True) -> ControlScheme:
    """Follow matched successor links from every free in-copy to build paths.

    Nodes left over after all paths are traced are matched on both sides and
    fall on cycles (a self-loop is a cycle of length one).  With ``check``
    the matching is verified to be a maximum matching of ``to_bipartite(g)``.
    """
    if m.n != g.n:
        raise ContractViolation(f"matching is over {m.n} nodes, graph has {g.n}")
    if check and not is_maximum(to_bipartite(g), m):
        raise ContractViolation("matching is not maximum")
    succ = m.match_of_left.tolist()
    pred = m.match_of_right.tolist()
    n = g.n
    role: list[Role | None] = [None] * n
    paths = []
    for h in range(n):
        if pred[h] != -1:
            continue
        path = [h]
        v = succ[h]
        while v != -1:
            path.append(v)
            v = succ[v]
        if len(path) == 1:
            role[h] = Role.ISOLATED_DRIVER
        else:
            role[h] = Role.HEAD
            for x in path[1:-1]:
                role[x] = Role.MIDDLE
            role[path[-1]] = Role.TAIL
        paths.append(tuple(path))
    cycles = []
    for s in range(n):
        if role[s] is not None:
            continue
        # lowest unvisited index starts the cycle, giving the rotation-normal form
        cyc = [s]
        role[s] = Role.CYCLE_MEMBER
        v = succ[s]
        while v != s:
            cyc.append(v)
            role[v] = Role.CYCLE_MEMBER
            v = succ[v]
        cycles.append(tuple(cyc))
    return ControlScheme(
        n=n,
        paths=tuple(paths),
        cycles=tuple(cycles),
        role_of=tuple(role),  # type: ignore[arg-type]
        matching_size=int(sum(1 for x in succ if x != -1)),
    )


def schemes_differ(a: ControlScheme, b: ControlScheme) -> bool:
    check_same_universe(a.n, b.n)
    return (a.paths, a.cycles) != (b.paths, b.cycles)
