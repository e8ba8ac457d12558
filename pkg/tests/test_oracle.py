import itertools

import pytest
from hypothesis import given

from conftest import SMALL, digraphs, labels
from ctrlhubs import (
    DirectedGraph,
    enumerate_maximum_matchings,
    is_maximum,
    oracle_hubs,
    parse_edge_list,
    to_bipartite,
)


def all_matchings_brute(g):
    """Every edge subset with distinct out- and in-copies, largest size only."""
    edges = g.edges
    best, out = 0, []
    for k in range(len(edges) + 1):
        for combo in itertools.combinations(edges, k):
            if len({u for u, _ in combo}) == k and len({v for _, v in combo}) == k:
                if k > best:
                    best, out = k, []
                if k == best:
                    out.append(sorted(combo))
    return sorted(out)


@pytest.mark.parametrize("name,count", [("chain", 1), ("star", 2), ("diamond", 4), ("cycle", 1)])
def test_matching_counts(name, count):
    g = parse_edge_list(SMALL[name])
    ms, truncated = enumerate_maximum_matchings(to_bipartite(g))
    assert not truncated and len(ms) == count


def test_diamond_matchings(diamond):
    ms, _ = enumerate_maximum_matchings(to_bipartite(diamond))
    assert [m.pairs() for m in ms] == [
        [(0, 1), (1, 3)],
        [(0, 1), (2, 3)],
        [(0, 2), (1, 3)],
        [(0, 2), (2, 3)],
    ]


@given(digraphs(max_nodes=5))
def test_enumeration_matches_subset_brute_force(g):
    ms, truncated = enumerate_maximum_matchings(to_bipartite(g))
    assert not truncated
    got = [m.pairs() for m in ms]
    assert got == all_matchings_brute(g)
    assert got == sorted(got)


@given(digraphs(max_nodes=8))
def test_every_enumerated_matching_is_maximum(g):
    b = to_bipartite(g)
    ms, _ = enumerate_maximum_matchings(b)
    assert all(is_maximum(b, m) for m in ms)


def test_truncation():
    n = 8
    g = DirectedGraph.from_edges(n, [(u, v) for u in range(n) for v in range(n)])
    ms, truncated = enumerate_maximum_matchings(to_bipartite(g), limit=1000)
    assert truncated and ms == []
    report = oracle_hubs(g, limit=1000)
    assert report.truncated
    assert report.head_union is None and report.theorem_hubs is None
    # 8! = 40320 perfect matchings fit under a larger limit
    ms, truncated = enumerate_maximum_matchings(to_bipartite(g), limit=40320)
    assert not truncated and len(ms) == 40320


def test_limit_must_be_positive(chain):
    with pytest.raises(ValueError):
        enumerate_maximum_matchings(to_bipartite(chain), limit=0)


@pytest.mark.parametrize(
    "name,heads,tails,theorem,definitional",
    [
        ("chain", {"1"}, {"3"}, {"2"}, {"2"}),
        ("star", {"1", "2", "3"}, {"2", "3"}, set(), set()),
        ("diamond", {"1", "2", "3"}, {"2", "3", "4"}, set(), set()),
        ("chain4", {"1"}, {"4"}, {"2", "3"}, {"2", "3"}),
        ("cycle", set(), set(), {"1", "2", "3"}, set()),
    ],
)
def test_oracle_examples(name, heads, tails, theorem, definitional):
    g = parse_edge_list(SMALL[name])
    o = oracle_hubs(g)
    assert not o.truncated
    assert labels(g, o.head_union) == heads
    assert labels(g, o.tail_union) == tails
    assert labels(g, o.theorem_hubs) == theorem
    assert labels(g, o.definitional_hubs) == definitional


@given(digraphs(max_nodes=7))
def test_definitional_subset_of_theorem(g):
    o = oracle_hubs(g)
    assert o.definitional_hubs.issubset(o.theorem_hubs)


def test_definitional_equals_theorem_without_cycles():
    # a DAG admits no cycles in any scheme
    g = parse_edge_list("1 2\n2 3\n3 4\n1 3\n2 4\n4 5\n")
    o = oracle_hubs(g)
    assert o.definitional_hubs == o.theorem_hubs
