"""Brute-force reference implementations, independent of graphinv's solvers.

They work on networkx graphs and plain Python sets, enumerate everything,
and are only meant for tiny inputs.
"""

from itertools import combinations, permutations

import networkx as nx


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def resolves(h, landmarks):
    dist = dict(nx.all_pairs_shortest_path_length(h))
    codes = {tuple(dist[v][w] for w in landmarks) for v in h}
    return len(codes) == h.number_of_nodes()


def metric_dimension(h):
    if h.number_of_nodes() == 1:
        return 0
    nodes = sorted(h)
    for k in range(1, len(nodes) + 1):
        if any(resolves(h, s) for s in combinations(nodes, k)):
            return k


def closure(h, black):
    """Naive color-change rule: rescan every black vertex until nothing changes."""
    black = set(black)
    changed = True
    while changed:
        changed = False
        for v in sorted(black):
            white = [w for w in h[v] if w not in black]
            if len(white) == 1:
                black.add(white[0])
                changed = True
    return black


def zero_forcing_number(h):
    nodes = sorted(h)
    for k in range(1, len(nodes) + 1):
        for s in combinations(nodes, k):
            if len(closure(h, s)) == len(nodes):
                return k


def edge_closure(h, black_edges):
    """Edge color-change rule straight from the definition, on frozenset edges."""
    edges = [frozenset(e) for e in h.edges]
    black = {frozenset(e) for e in black_edges}
    changed = True
    while changed:
        changed = False
        for e in list(black):
            white = [f for f in edges if f not in black and f != e and e & f]
            if len(white) == 1:
                black.add(white[0])
                changed = True
    return black


def edge_zero_forcing_number(h):
    edges = list(h.edges)
    for k in range(1, len(edges) + 1):
        for s in combinations(edges, k):
            if len(edge_closure(h, s)) == len(edges):
                return k


def _is_induced_path(h, block):
    sub = h.subgraph(block)
    if len(block) == 1:
        return True
    return nx.is_connected(sub) and sub.number_of_edges() == len(block) - 1 and max(d for _, d in sub.degree) <= 2


def _partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def path_cover_number(h):
    best = None
    for part in _partitions(sorted(h)):
        if (best is None or len(part) < best) and all(_is_induced_path(h, b) for b in part):
            best = len(part)
    return best


def has_hamiltonian_path(h):
    nodes = sorted(h)
    return any(all(h.has_edge(a, b) for a, b in zip(p, p[1:])) for p in permutations(nodes))


def connected_labeled_count(n):
    pairs = list(combinations(range(n), 2))
    count = 0
    for mask in range(1 << len(pairs)):
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(p for i, p in enumerate(pairs) if mask >> i & 1)
        count += nx.is_connected(h)
    return count


def terminal_profile(h):
    """(sigma, ex) by the end-vertex / exterior major vertex definitions."""
    dist = dict(nx.all_pairs_shortest_path_length(h))
    major = [v for v in h if h.degree(v) >= 3]
    ends = [v for v in h if h.degree(v) == 1]
    exterior = set()
    for u in ends:
        for v in major:
            if all(dist[u][v] < dist[u][w] for w in major if w != v):
                exterior.add(v)
    return len(ends), len(exterior)
