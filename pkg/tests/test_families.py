import pytest

from graphinv.errors import BadParameter, NotATree
from graphinv.families import (
    bouquet,
    branch_tree,
    by_name,
    complete,
    complete_bipartite,
    cycle,
    even_cycle_count,
    path,
    random_tree,
    star,
    wheel,
)
from graphinv.graph import build_graph, degree_profile, is_connected, is_isomorphic, is_tree
from graphinv.linegraph import line_graph


def test_basic_families():
    assert is_isomorphic(cycle(3), complete(3))
    assert complete_bipartite(1, 3) == star(3)
    assert path(2).m == 1


@pytest.mark.parametrize("fn, args", [(path, (0,)), (cycle, (2,)), (complete_bipartite, (0, 2)), (star, (0,))])
def test_bad_parameters(fn, args):
    with pytest.raises(BadParameter):
        fn(*args)


def test_wheel():
    assert is_isomorphic(wheel(3)[0], complete(4))
    g, lab = wheel(6)
    prof = degree_profile(g)
    assert (prof.max_degree, prof.min_degree) == (6, 3)
    g8, _ = wheel(8)
    assert (g8.n, g8.m) == (9, 16)
    assert all(g.has_edge(lab.hub, w) for w in lab.rim)
    assert all(g.has_edge(lab.rim[i], lab.rim[(i + 1) % 6]) for i in range(6))
    with pytest.raises(BadParameter):
        wheel(2)


@pytest.mark.parametrize("n", range(3, 10))
def test_wheel_line_order(n):
    assert line_graph(wheel(n)[0]).lg.n == 2 * n


def test_bouquet():
    g, lab = bouquet([2, 3, 4, 5])
    assert (g.n, g.m) == (15, 18)
    assert g.degree(lab.cut_vertex) == 8
    g2, _ = bouquet([2, 2])
    assert g2.n == 5 and g2.m == 6
    with pytest.raises(BadParameter):
        bouquet([2])
    with pytest.raises(BadParameter):
        bouquet([3, 2])
    with pytest.raises(BadParameter):
        bouquet([1, 2])


@pytest.mark.parametrize("ks", [[2, 2], [2, 3], [3, 3], [2, 2, 2], [2, 3, 4, 5]])
def test_bouquet_minus_cut_vertex_is_paths(ks):
    g, lab = bouquet(ks)
    h = g.without_vertex(lab.cut_vertex)
    # remaining components: each circle's interior, a path with k_i vertices
    comps = []
    seen = set()
    for s in range(h.n):
        if s in seen:
            continue
        stack, comp = [s], set()
        while stack:
            v = stack.pop()
            if v in comp:
                continue
            comp.add(v)
            stack.extend(h.adjacency[v])
        seen |= comp
        comps.append(comp)
    assert sorted(len(c) for c in comps) == sorted(ks)
    for c in comps:
        edges = sum(1 for u, v in h.edges if u in c)
        assert edges == len(c) - 1 and all(h.degree(v) <= 2 for v in c)


def test_even_cycle_count():
    assert even_cycle_count([2, 3, 4, 5]) == sum(1 for k in [2, 3, 4, 5] if (k + 1) % 2 == 0) == 2
    assert even_cycle_count([2, 2]) == 0
    assert even_cycle_count([3, 3]) == 2


def test_random_tree():
    assert random_tree(2, 5) == path(2)
    for seed in range(10):
        t = random_tree(3, seed)
        assert is_isomorphic(t, path(3))
    t = random_tree(8, 1)
    assert t.m == 7 and is_connected(t)
    assert random_tree(8, 1) == t
    with pytest.raises(BadParameter):
        random_tree(1, 0)


@pytest.mark.parametrize("n", range(2, 15))
def test_random_tree_is_tree(n):
    for seed in range(5):
        assert is_tree(random_tree(n, seed))


def test_branch_tree():
    assert is_isomorphic(branch_tree(3, path(2), 0), star(3))
    spider = branch_tree(4, path(3), 0)
    assert spider.n == 9 and degree_profile(spider).degrees.count(1) == 4
    six = build_graph(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)])
    assert branch_tree(4, six, 0).n == 4 * 5 + 1
    with pytest.raises(NotATree):
        branch_tree(3, cycle(3), 0)


def test_by_name():
    assert by_name("wheel", [5]).n == 6
    assert by_name("bouquet", [2, 3]).n == 6
    with pytest.raises(BadParameter):
        by_name("petersen", [])
    with pytest.raises(BadParameter):
        by_name("bipartite", [2])
