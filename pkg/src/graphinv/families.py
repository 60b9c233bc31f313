"""Generators for the named graph families.

Wheels and bouquets come back with their labelings so witness constructors
can address the hub, rim and circle vertices by role rather than by index.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import BadParameter, NotATree
from .graph import Graph, build_graph, is_tree


def path(n: int) -> Graph:
    if n < 1:
        raise BadParameter("path needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParameter("cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise BadParameter("complete graph needs n >= 1")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(s: int, t: int) -> Graph:
    """``K_{s,t}`` with parts ``0..s-1`` and ``s..s+t-1``."""
    if s < 1 or t < 1:
        raise BadParameter("complete bipartite graph needs s, t >= 1")
    return build_graph(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def star(k: int) -> Graph:
    """``K_{1,k}``; the center is vertex 0."""
    if k < 1:
        raise BadParameter("star needs k >= 1")
    return complete_bipartite(1, k)


@dataclass(frozen=True)
class WheelLabeling:
    hub: int
    rim: tuple[int, ...]


def wheel(n: int) -> tuple[Graph, WheelLabeling]:
    """``W_{1,n}``: hub 0, rim ``w_i = i + 1`` in cyclic order.

    Edge ``i`` is the spoke ``v w_i`` and edge ``n + i`` the rim edge
    ``w_i w_{i+1}``, indices mod n.
    """
    if n < 3:
        raise BadParameter("wheel needs rim length n >= 3")
    rim = tuple(range(1, n + 1))
    spokes = [(0, w) for w in rim]
    rims = [(rim[i], rim[(i + 1) % n]) for i in range(n)]
    return build_graph(n + 1, spokes + rims), WheelLabeling(0, rim)


@dataclass(frozen=True)
class BouquetLabeling:
    cut_vertex: int
    circles: tuple[tuple[int, ...], ...]

    def edge_offsets(self) -> tuple[int, ...]:
        """Index of the first edge of each circle; circle ``i`` owns ``k_i + 1`` edges."""
        out, at = [], 0
        for c in self.circles:
            out.append(at)
            at += len(c) + 1
        return tuple(out)


def check_bouquet_params(ks) -> list[int]:
    ks = [int(k) for k in ks]
    if len(ks) < 2:
        raise BadParameter("a bouquet needs at least two circles")
    if any(k < 2 for k in ks):
        raise BadParameter("every circle needs k_i >= 2 interior vertices")
    if any(a > b for a, b in zip(ks, ks[1:])):
        raise BadParameter("bouquet parameters must be nondecreasing")
    return ks


def bouquet(ks) -> tuple[Graph, BouquetLabeling]:
    """Circles of lengths ``k_i + 1`` glued at cut-vertex 0.

    Circle ``i`` runs ``v, w_{i,1}, ..., w_{i,k_i}, v`` and its edges are
    listed in that cyclic order, so edge ``offset_i`` is ``v w_{i,1}`` and
    edge ``offset_i + k_i`` is ``w_{i,k_i} v``.
    """
    ks = check_bouquet_params(ks)
    pairs = []
    circles = []
    nxt = 1
    for k in ks:
        ws = tuple(range(nxt, nxt + k))
        nxt += k
        circles.append(ws)
        walk = (0,) + ws + (0,)
        pairs.extend(zip(walk, walk[1:]))
    return build_graph(nxt, pairs), BouquetLabeling(0, tuple(circles))


def even_cycle_count(ks) -> int:
    return sum(1 for k in ks if (k + 1) % 2 == 0)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labeled tree on ``n`` vertices by Pruefer decoding."""
    if n < 2:
        raise BadParameter("random tree needs n >= 2")
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    pairs = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        pairs.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = (v for v in range(n) if degree[v] == 1)
    pairs.append((u, w))
    return build_graph(n, pairs)


def branch_tree(k: int, branch: Graph, root: int = 0) -> Graph:
    """Glue ``k`` copies of the rooted tree ``branch`` at their roots.

    The shared root becomes vertex 0; copy ``c`` takes the next
    ``branch.n - 1`` indices.
    """
    if k < 1:
        raise BadParameter("need at least one branch")
    if not is_tree(branch):
        raise NotATree("branch must be a tree")
    others = [v for v in range(branch.n) if v != root]
    pairs = []
    for c in range(k):
        index = {root: 0}
        index.update({v: 1 + c * len(others) + i for i, v in enumerate(others)})
        pairs.extend((index[a], index[b]) for a, b in branch.edges)
    return build_graph(1 + k * len(others), pairs)


def join(a: Graph, b: Graph) -> Graph:
    """``A + B``: disjoint union plus every edge between the two sides."""
    shift = a.n
    pairs = list(a.edges) + [(u + shift, v + shift) for u, v in b.edges]
    pairs += [(u, shift + v) for u in range(a.n) for v in range(b.n)]
    return build_graph(a.n + b.n, pairs)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    shift = a.n
    return build_graph(a.n + b.n, list(a.edges) + [(u + shift, v + shift) for u, v in b.edges])


def empty(n: int) -> Graph:
    return build_graph(n, [])


FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "bipartite": (complete_bipartite, 2),
    "star": (star, 1),
    "wheel": (lambda n: wheel(n)[0], 1),
    "bouquet": (lambda *ks: bouquet(ks)[0], None),
}


def by_name(name: str, params) -> Graph:
    """Build a family member from CLI-style integer parameters."""
    try:
        fn, arity = FAMILIES[name]
    except KeyError:
        raise BadParameter(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}") from None
    if arity is not None and len(params) != arity:
        raise BadParameter(f"family {name!r} takes {arity} parameter(s)")
    return fn(*params)
