import itertools
from math import comb

import networkx as nx
import pytest

from graphinv.errors import EmptyEdgeSet
from graphinv.families import complete, path, star, wheel
from graphinv.graph import build_graph, is_isomorphic
from graphinv.linegraph import bouquet_line_labeling, line_graph, wheel_line_labeling
from graphinv.sweep import enumerate_labeled_connected

import oracles


def test_examples():
    assert is_isomorphic(line_graph(path(4)).lg, path(3))
    assert is_isomorphic(line_graph(star(3)).lg, complete(3))
    res = line_graph(wheel(8)[0])
    assert res.lg.n == 16
    assert all(res.lg.degree(i) == 9 for i in range(8))


def test_empty_edge_set():
    with pytest.raises(EmptyEdgeSet):
        line_graph(build_graph(3, []))


def test_identity_correspondence():
    g = wheel(5)[0]
    res = line_graph(g)
    for a, b in itertools.combinations(range(g.m), 2):
        shares = bool(set(g.edges[a]) & set(g.edges[b]))
        assert res.lg.has_edge(a, b) == shares
    assert all(res.vertex_of_edge(res.edge_of_vertex(i)) == i for i in range(g.m))


@pytest.mark.parametrize("n", range(2, 6))
def test_degree_and_size_formulas(n):
    for g in enumerate_labeled_connected(n):
        lg = line_graph(g).lg
        for i, (u, v) in enumerate(g.edges):
            assert lg.degree(i) == g.degree(u) + g.degree(v) - 2
        assert lg.m == sum(comb(g.degree(v), 2) for v in range(g.n))


def test_matches_networkx():
    g = wheel(6)[0]
    assert nx.is_isomorphic(oracles.to_nx(line_graph(g).lg), nx.line_graph(oracles.to_nx(g)))


def test_whitney_pair_is_unique_up_to_four_vertices():
    graphs = []
    for n in range(2, 5):
        for g in enumerate_labeled_connected(n):
            if not any(is_isomorphic(g, h) for h in graphs):
                graphs.append(g)
    clashes = []
    for a, b in itertools.combinations(graphs, 2):
        if is_isomorphic(line_graph(a).lg, line_graph(b).lg):
            clashes.append((a, b))
    assert len(clashes) == 1
    a, b = clashes[0]
    pair = {(x.n, x.m) for x in (a, b)}
    assert pair == {(3, 3), (4, 3)}
    assert any(is_isomorphic(x, complete(3)) for x in (a, b))
    assert any(is_isomorphic(x, star(3)) for x in (a, b))


@pytest.mark.parametrize("n", range(3, 10))
def test_wheel_line_labeling_invariants(n):
    res, lab = wheel_line_labeling(n)
    lg = res.lg
    for i, j in itertools.combinations(range(n), 2):
        assert lg.has_edge(lab.u(i), lab.u(j))
    for i in range(n):
        rims_adjacent = {t for t in range(n) if lg.has_edge(lab.u(i), lab.ell(t))}
        assert rims_adjacent == {(i - 1) % n, i}
        assert lg.has_edge(lab.ell(i), lab.ell(i + 1))
    rim_edges = sum(1 for a, b in itertools.combinations(lab.rims, 2) if lg.has_edge(a, b))
    assert rim_edges == (3 if n == 3 else n)


def test_wheel_line_labeling_examples():
    _, lab3 = wheel_line_labeling(3)
    res3, _ = wheel_line_labeling(3)
    assert all(res3.lg.has_edge(a, b) for a, b in itertools.combinations(lab3.spokes, 2))
    res6, lab6 = wheel_line_labeling(6)
    spoke_nbrs = {i for i in range(6) if res6.lg.has_edge(lab6.ell(2), lab6.u(i))}
    assert spoke_nbrs == {2, 3}
    res8, _ = wheel_line_labeling(8)
    assert res8.lg.n == 16


@pytest.mark.parametrize("ks", [[2, 2], [2, 3], [3, 3], [2, 2, 2], [2, 3, 4, 5], [4, 6]])
def test_bouquet_line_labeling_invariants(ks):
    res, lab = bouquet_line_labeling(ks)
    lg = res.lg
    cut = lab.cut_edges()
    assert len(cut) == 2 * len(ks)
    assert all(lg.has_edge(a, b) for a, b in itertools.combinations(cut, 2))
    for i, k in enumerate(ks, 1):
        c = lab.circles[i - 1]
        assert len(c) == k + 1
        # consecutive labels are adjacent and close up into a (k+1)-cycle
        for j in range(1, k + 2):
            nxt = j % (k + 1) + 1
            assert lg.has_edge(lab.u(i, j), lab.u(i, nxt))
        for e in (lab.u(i, 1), lab.u(i, k + 1)):
            assert 0 in res.source.edges[e]


def test_bouquet_line_examples():
    res, lab = bouquet_line_labeling([2, 2])
    clique = [lab.u(1, 1), lab.u(1, 3), lab.u(2, 1), lab.u(2, 3)]
    assert all(res.lg.has_edge(a, b) for a, b in itertools.combinations(clique, 2))
    res, _ = bouquet_line_labeling([2, 3, 4, 5])
    assert res.lg.n == 18
    res, lab = bouquet_line_labeling([3, 3])
    for i in (1, 2):
        nbrs = set(res.lg.adjacency[lab.u(i, 2)])
        assert nbrs == {lab.u(i, 1), lab.u(i, 3)}
