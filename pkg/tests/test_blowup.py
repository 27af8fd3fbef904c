from itertools import combinations

import pytest

from genturan.blowup import b_parameter, verify_certificate
from genturan.exceptions import PatternTooLarge
from genturan.formulas import x_exponent
from genturan.graphs import Graph, Hypergraph, make_turan
from genturan.patterns import cycle, matching, path, star

import naive


def test_complete_graph_exponents():
    assert b_parameter(Graph.complete(3), 2, 3).b == 2
    assert b_parameter(Graph.complete(3), 2, 2).b == 0
    assert b_parameter(Graph.complete(4), 2, 3).b == 1


def test_certificate_shape():
    res = b_parameter(Graph.complete(3), 2, 3)
    assert res.certificate.U == (0, 1)
    assert set(res.certificate.witnesses) == {(0, 1, 2)}
    assert verify_certificate(Graph.complete(3), 2, 3, res)


def test_saturated_pattern():
    res = b_parameter(Graph.complete(6), 2, 3)
    assert res.saturated and res.b == -1 and res.certificate is None
    assert verify_certificate(Graph.complete(6), 2, 3, res)


def test_forged_certificate_is_rejected():
    res = b_parameter(Graph.complete(3), 2, 3)
    W = (0, 1, 2)
    bad = type(res)(res.b, type(res.certificate)(res.certificate.U, {W: [[0, 1, 2], [0, 3, 4]]}), multiplicity=2)
    assert not verify_certificate(Graph.complete(3), 2, 3, bad)


def test_whole_vertex_set_feasible():
    res = b_parameter(path(3), 2, 3)
    assert res.b == 3 and res.certificate.witnesses == {}
    assert verify_certificate(path(3), 2, 3, res)


@pytest.mark.parametrize(
    "pattern",
    [path(3), path(4), star(3), cycle(4), matching(2), Graph.complete(3), make_turan(4, 2), Graph.empty(3)],
)
@pytest.mark.parametrize("t,r", [(2, 2), (2, 3), (3, 2)])
def test_against_exhaustive_blowups(pattern, t, r):
    res = b_parameter(pattern, t, r)
    assert res.b == naive.b_value(pattern.to_hypergraph(), t, r)
    assert verify_certificate(pattern, t, r, res)


def test_hypergraph_pattern():
    h = Hypergraph.complete(4, 3)
    res = b_parameter(h, 2, 3)
    assert res.b == naive.b_value(h, 2, 3)
    assert verify_certificate(h, 2, 3, res)


def test_matches_exponent_grid():
    for t in (2, 3):
        for r in range(2, 5):
            for s in range(r, min(t * r, 7)):
                assert b_parameter(Graph.complete(s), t, r).b == x_exponent(s, r, t)


def test_arguments():
    with pytest.raises(PatternTooLarge):
        b_parameter(Graph.empty(11), 2, 3)
    with pytest.raises(ValueError):
        b_parameter(Graph.complete(3), 2, 3, m=0)
    with pytest.raises(ValueError):
        b_parameter(Hypergraph.complete(3, 3), 2, 2)
