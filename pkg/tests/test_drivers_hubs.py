import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import SMALL, digraphs, labels
from ctrlhubs import (
    DirectedGraph,
    EmptyGraphError,
    NodeSet,
    all_possible_drivers,
    control_hubs,
    enumerate_maximum_matchings,
    head_nodes,
    min_driver_count,
    one_mds,
    oracle_hubs,
    parse_edge_list,
    tail_nodes,
    to_bipartite,
    transpose,
)

EMPTY = DirectedGraph(0, [], [])


# expected sets frozen from the brute-force oracle (see test_oracle.py)
@pytest.mark.parametrize(
    "name,drivers,n_d",
    [
        ("chain", {"1"}, 1),
        ("star", {"1", "2", "3"}, 2),
        ("diamond", {"1", "2", "3"}, 2),
        ("cycle", set(), 1),
        ("selfloop", set(), 1),
    ],
)
def test_drivers_examples(name, drivers, n_d):
    g = parse_edge_list(SMALL[name])
    assert labels(g, all_possible_drivers(g)) == drivers
    assert min_driver_count(g) == n_d


def test_one_mds_chain(chain):
    assert labels(chain, one_mds(chain)) == {"1"}


def test_one_mds_diamond(diamond):
    mds = one_mds(diamond)
    assert len(mds) == 2
    assert mds.issubset(all_possible_drivers(diamond))
    assert labels(diamond, mds) in ({"1", "2"}, {"1", "3"})


def test_one_mds_perfect_matching_clamp():
    g = parse_edge_list("1 1\n")
    assert list(one_mds(g)) == [0]
    assert min_driver_count(g) == 1


@pytest.mark.parametrize(
    "fn", [all_possible_drivers, min_driver_count, one_mds, head_nodes, tail_nodes, control_hubs]
)
def test_empty_graph_rejected(fn):
    with pytest.raises(EmptyGraphError):
        fn(EMPTY)


@given(digraphs(max_nodes=8))
def test_drivers_equal_union_of_free_in_copies(g):
    ms, truncated = enumerate_maximum_matchings(to_bipartite(g))
    assert not truncated
    union = np.zeros(g.n, dtype=bool)
    for m in ms:
        union |= m.match_of_right == -1
    assert all_possible_drivers(g) == NodeSet(g.n, union)


@given(digraphs(max_nodes=10))
def test_one_mds_properties(g):
    mds = one_mds(g)
    assert len(mds) == min_driver_count(g)
    report = control_hubs(g)
    if not report.perfect_matching:
        assert mds.issubset(all_possible_drivers(g))


@given(digraphs(max_nodes=8), st.randoms(use_true_random=False))
def test_drivers_invariant_to_relabeling(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = DirectedGraph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges])
    expected = {perm[i] for i in all_possible_drivers(g)}
    assert all_possible_drivers(h).to_set() == expected


@pytest.mark.parametrize(
    "name,heads,tails,hubs,perfect",
    [
        ("chain", {"1"}, {"3"}, {"2"}, False),
        ("chain4", {"1"}, {"4"}, {"2", "3"}, False),
        ("star", {"1", "2", "3"}, {"2", "3"}, set(), False),
        ("diamond", {"1", "2", "3"}, {"2", "3", "4"}, set(), False),
        ("cycle", set(), set(), {"1", "2", "3"}, True),
        ("selfloop", set(), set(), {"1"}, True),
    ],
)
def test_hub_examples(name, heads, tails, hubs, perfect):
    g = parse_edge_list(SMALL[name])
    r = control_hubs(g)
    assert labels(g, r.heads) == heads == labels(g, head_nodes(g))
    assert labels(g, r.tails) == tails == labels(g, tail_nodes(g))
    assert labels(g, r.hubs) == hubs
    assert r.perfect_matching is perfect
    assert (r.n, r.edge_count) == (g.n, g.edge_count)


@given(digraphs(max_nodes=12))
def test_hub_report_invariants(g):
    r = control_hubs(g)
    assert r.hubs == (r.heads | r.tails).complement()
    assert not (r.hubs & r.heads) and not (r.hubs & r.tails)
    assert r.n_d == min_driver_count(g)
    indeg = g.in_degree()
    outdeg = g.out_degree()
    for v in range(g.n):
        if indeg[v] == 0:
            assert v in r.heads
        if outdeg[v] == 0:
            assert v in r.tails


@given(digraphs(max_nodes=12))
def test_transpose_symmetry(g):
    r = control_hubs(g)
    rt = control_hubs(transpose(g))
    assert r.hubs == rt.hubs
    assert r.heads == rt.tails and r.tails == rt.heads


@given(digraphs(max_nodes=7))
def test_hubs_agree_with_oracle(g):
    o = oracle_hubs(g)
    r = control_hubs(g)
    assert r.heads == o.head_union
    assert r.tails == o.tail_union
    assert r.hubs == o.theorem_hubs
