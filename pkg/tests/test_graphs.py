import random

import pytest
from hypothesis import given, strategies as st

from genturan.exceptions import UniformityError
from genturan.graphs import (
    Graph,
    Hypergraph,
    blowup_layout,
    delete_vertices,
    disjoint_union,
    hyper_join,
    induced,
    join,
    make_turan,
    partial_blowup,
    relabel,
    turan_part_sizes,
)

import naive


def test_turan_edge_count():
    assert make_turan(6, 3).num_edges == 12
    assert make_turan(7, 3).num_edges == 16
    assert make_turan(5, 0).num_edges == 0
    assert make_turan(0, 3).n == 0


def test_turan_parts_larger_first():
    assert turan_part_sizes(7, 3) == [3, 2, 2]
    assert turan_part_sizes(2, 4) == [1, 1, 0, 0]
    g = make_turan(7, 3)
    # parts are contiguous: {0,1,2}, {3,4}, {5,6}
    assert not g.has_edge(0, 2) and not g.has_edge(3, 4) and g.has_edge(2, 3)


@given(st.integers(0, 14), st.integers(0, 6))
def test_turan_is_complete_multipartite(m, k):
    g = make_turan(m, k)
    sizes = turan_part_sizes(m, k)
    assert sum(sizes) == (m if k else 0)
    assert max(sizes, default=0) - min(sizes, default=0) <= 1
    expected = (m * m - sum(s * s for s in sizes)) // 2 if sizes else 0
    assert g.num_edges == expected


def test_turan_rejects_negative():
    with pytest.raises(ValueError):
        make_turan(-1, 2)


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0b00))  # asymmetric
    with pytest.raises(ValueError):
        Graph(1, (0b1,))  # loop
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])


def test_hypergraph_validation():
    with pytest.raises(ValueError):
        Hypergraph.from_edges(4, 3, [[0, 1]])
    with pytest.raises(ValueError):
        Hypergraph.from_edges(4, 3, [[0, 1, 2], [2, 1, 0]])
    with pytest.raises(ValueError):
        Hypergraph.from_edges(3, 3, [[0, 1, 5]])
    h = Hypergraph.from_edges(5, 3, [[2, 3, 4], [0, 1, 2]])
    assert h.edge_lists() == [[0, 1, 2], [2, 3, 4]]


def test_join_of_graphs():
    g = join(Graph.complete(1), make_turan(4, 2))
    assert g.n == 5 and g.num_edges == 4 + 4
    assert g.degree(0) == 4


def test_hyper_join_gives_complete():
    h = hyper_join(Hypergraph.complete(1, 3), Hypergraph.complete(3, 3))
    assert h == Hypergraph.complete(4, 3)
    h = hyper_join(Hypergraph.empty(2, 3), Hypergraph.empty(2, 3))
    assert h.num_edges == 4  # every triple meets both sides


def test_hyper_join_uniformity_mismatch():
    with pytest.raises(UniformityError):
        hyper_join(Hypergraph.complete(2, 2), Hypergraph.complete(3, 3))


def test_partial_blowup_counts():
    h = partial_blowup(Graph.complete(3), [0, 1], 2)
    # edge 01 -> 4 copies, 02 and 12 -> 2 copies each
    assert h.n == 5 and h.num_edges == 8
    assert partial_blowup(Graph.complete(3), [], 3) == Graph.complete(3).to_hypergraph()


def test_blowup_layout_order():
    assert blowup_layout(4, [2, 0], 2) == {1: [0], 3: [1], 0: [2, 3], 2: [4, 5]}
    with pytest.raises(ValueError):
        blowup_layout(3, [3], 2)
    with pytest.raises(ValueError):
        blowup_layout(3, [0], 0)


def test_partial_blowup_matches_clone_construction():
    rng = random.Random(3)
    for _ in range(60):
        p = rng.choice([2, 3])
        n = rng.randint(p, 6)
        h = naive.random_hypergraph(rng, n, p, 0.5)
        U = [v for v in range(n) if rng.random() < 0.4]
        m = rng.randint(1, 3)
        assert partial_blowup(h, U, m) == naive.blowup(h, U, m)


def test_blowup_edge_count_formula():
    rng = random.Random(5)
    for _ in range(40):
        h = naive.random_hypergraph(rng, 6, 3, 0.4)
        U = set(rng.sample(range(6), rng.randint(0, 6)))
        m = rng.randint(1, 3)
        want = sum(m ** len(U & set(e)) for e in h.edge_lists())
        assert partial_blowup(h, U, m).num_edges == want


def test_induced_and_delete():
    g = make_turan(6, 3).to_hypergraph()
    sub = induced(g, [5, 0, 2])
    assert sub.n == 3 and sub.num_edges == 3
    assert delete_vertices(g, [0, 1]).num_edges == 4


def test_disjoint_union_and_relabel():
    a = Hypergraph.complete(3, 2)
    u = disjoint_union(a, a)
    assert u.n == 6 and u.num_edges == 6
    r = relabel(a, [2, 0, 1])
    assert r == a
    with pytest.raises(ValueError):
        relabel(a, [0, 0, 1])


def test_to_graph_round_trip():
    g = make_turan(7, 3)
    assert g.to_hypergraph().to_graph() == g
    with pytest.raises(UniformityError):
        Hypergraph.complete(4, 3).to_graph()
