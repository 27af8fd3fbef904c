import random

import pytest
from hypothesis import given, settings, strategies as st

from genturan.counting import (
    automorphism_count,
    contains_disjoint_cliques,
    count_cliques,
    count_copies,
    count_embeddings,
    find_disjoint_cliques,
    list_cliques,
)
from genturan.exceptions import PatternTooLarge, UniformityError
from genturan.graphs import Graph, Hypergraph, join, make_turan
from genturan.patterns import cycle, matching, path

import naive


def test_turan_triangles():
    assert count_cliques(make_turan(6, 3), 3) == 8
    assert count_cliques(make_turan(7, 3), 3) == 12
    assert count_cliques(make_turan(7, 3), 4) == 0


def test_small_cliques_are_subsets():
    assert count_cliques(Graph.empty(5), 0) == 1
    assert count_cliques(Graph.empty(5), 1) == 5
    assert count_cliques(Hypergraph.empty(5, 3), 2) == 10


def test_hypergraph_cliques():
    assert count_cliques(Hypergraph.complete(5, 3), 4) == 5
    assert len(list_cliques(Hypergraph.complete(5, 3), 4)) == 5


def test_list_cliques_order():
    fam = list_cliques(make_turan(5, 3), 3)
    assert fam.as_lists() == sorted(fam.as_lists())
    assert len(fam) == count_cliques(make_turan(5, 3), 3)


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 2**32), st.sampled_from([2, 3]))
def test_clique_count_matches_listing_and_naive(seed, p):
    rng = random.Random(seed)
    h = naive.random_hypergraph(rng, rng.randint(p, 9), p, rng.random())
    for q in range(p, 6):
        want = len(naive.cliques(h, q))
        assert count_cliques(h, q) == want
        assert len(list_cliques(h, q)) == want


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32))
def test_clique_count_invariant_under_relabeling(seed):
    rng = random.Random(seed)
    h = naive.random_hypergraph(rng, rng.randint(2, 10), 2, rng.random())
    g, _ = naive.random_relabel(rng, h)
    for q in range(2, 6):
        assert count_cliques(h, q) == count_cliques(g, q)


def test_automorphisms_and_copies():
    assert automorphism_count(cycle(4)) == 8
    assert count_copies(cycle(4), Graph.complete(4)) == 3
    assert count_copies(path(3), Graph.complete(3)) == 3
    assert count_copies(matching(2), Graph.complete(4)) == 3
    assert count_copies(Graph.empty(2), Graph.empty(4)) == 6
    assert count_copies(Hypergraph.complete(3, 3), Hypergraph.complete(5, 3)) == 10


def test_copies_of_larger_pattern_is_zero():
    assert count_copies(Graph.complete(4), Graph.complete(3)) == 0
    assert count_embeddings(path(4).to_hypergraph(), Graph.complete(3).to_hypergraph()) == 0


def test_pattern_cap_and_uniformity():
    with pytest.raises(PatternTooLarge):
        count_copies(path(11), Graph.complete(12))
    with pytest.raises(UniformityError):
        count_copies(Graph.complete(3), Hypergraph.complete(4, 3))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_copies_against_subset_search(seed):
    rng = random.Random(seed)
    p = rng.choice([2, 3])
    pat = naive.random_hypergraph(rng, rng.randint(1, 4), p, 0.6)
    host = naive.random_hypergraph(rng, rng.randint(1, 7), p, 0.6)
    assert count_copies(pat, host) == naive.copies(pat, host)


def test_packing_witness_on_k6():
    assert find_disjoint_cliques(Graph.complete(6), 2, 3) == [[0, 1, 2], [3, 4, 5]]
    assert find_disjoint_cliques(Graph.complete(5), 2, 3) is None


def test_packing_on_extremal_hosts():
    host = join(Graph.complete(1), make_turan(9, 2))
    assert not contains_disjoint_cliques(host, 2, 3)
    assert contains_disjoint_cliques(join(Graph.complete(2), make_turan(8, 2)), 2, 3)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32))
def test_packing_against_naive(seed):
    rng = random.Random(seed)
    p = rng.choice([2, 2, 3])
    n = rng.randint(p, 9 if p == 2 else 7)
    h = naive.random_hypergraph(rng, n, p, rng.uniform(0.3, 0.95))
    t = rng.randint(1, 3)
    r = rng.randint(p, 4)
    w = find_disjoint_cliques(h, t, r)
    assert (w is not None) == naive.has_packing(h, t, r)
    if w is not None:
        assert len(w) == t
        flat = [v for c in w for v in c]
        assert len(set(flat)) == t * r
        es = naive.edge_tuples(h)
        assert all(naive.is_clique(es, c, p) for c in w)


def test_packing_argument_checks():
    with pytest.raises(ValueError):
        find_disjoint_cliques(Graph.complete(4), 0, 2)
    with pytest.raises(ValueError):
        find_disjoint_cliques(Hypergraph.complete(4, 3), 1, 2)
