"""Immutable simple graphs on dense integer vertices, plus structural queries.

Vertices are ``0..n-1`` and edge ``i`` is always the ``i``-th pair given at
construction. Every query here is pure; solvers elsewhere lean on the
adjacency bitmasks (``Graph.masks``) for speed.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import DuplicateEdge, SelfLoop, TooLarge, VertexOutOfRange

UNREACHABLE = math.inf

HAMILTONIAN_CAP = 24
ISOMORPHISM_CAP = 10


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[frozenset[int], ...] = field(repr=False, compare=False)
    masks: tuple[int, ...] = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edge_index(self, u: int, v: int) -> int:
        return self._edge_lookup[(min(u, v), max(u, v))]

    @cached_property
    def _edge_lookup(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def without_edge(self, index: int) -> Graph:
        kept = [e for i, e in enumerate(self.edges) if i != index]
        return build_graph(self.n, kept)

    def without_vertex(self, v: int) -> Graph:
        """Delete ``v``; vertices above it shift down by one."""

        def relabel(x: int) -> int:
            return x - 1 if x > v else x

        kept = [(relabel(a), relabel(b)) for a, b in self.edges if v not in (a, b)]
        return build_graph(self.n - 1, kept)

    def relabeled(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``i`` renamed ``perm[i]``."""
        return build_graph(self.n, [(perm[a], perm[b]) for a, b in self.edges])


def build_graph(n: int, edge_pairs: Iterable[Sequence[int]]) -> Graph:
    if n < 1:
        raise VertexOutOfRange(f"graph needs at least one vertex, got n={n}")
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    adj: list[set[int]] = [set() for _ in range(n)]
    for pair in edge_pairs:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge {{{u},{v}}} outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"edge {{{u},{v}}} given twice")
        seen.add(key)
        edges.append(key)
        adj[u].add(v)
        adj[v].add(u)
    masks = tuple(sum(1 << w for w in nbrs) for nbrs in adj)
    return Graph(n, tuple(edges), tuple(frozenset(a) for a in adj), masks)


# Distances


def bfs_distances(g: Graph, source: int) -> list[float]:
    dist: list[float] = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


@dataclass(frozen=True)
class DistanceMatrix:
    rows: tuple[tuple[float, ...], ...]

    def __getitem__(self, uv: tuple[int, int]) -> float:
        u, v = uv
        return self.rows[u][v]

    @property
    def n(self) -> int:
        return len(self.rows)

    def diameter(self) -> float:
        return max((max(r) for r in self.rows), default=0)


def distance_matrix(g: Graph) -> DistanceMatrix:
    rows = []
    for s in range(g.n):
        rows.append(tuple(int(d) if d != UNREACHABLE else UNREACHABLE for d in bfs_distances(g, s)))
    return DistanceMatrix(tuple(rows))


def diameter(g: Graph) -> float:
    return distance_matrix(g).diameter()


def is_connected(g: Graph) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= g.masks[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1


def is_path_graph(g: Graph) -> bool:
    """True for ``P_n`` (including ``P_1``) in any labeling."""
    if not is_connected(g):
        return False
    return g.m == g.n - 1 and all(g.degree(v) <= 2 for v in range(g.n))


def is_complete_graph(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


# Degrees and exterior major vertices


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    min_degree: int
    max_degree: int
    end_vertices: tuple[int, ...]
    exterior_major_vertices: tuple[int, ...]

    @property
    def end_vertex_count(self) -> int:
        return len(self.end_vertices)

    @property
    def exterior_major_count(self) -> int:
        return len(self.exterior_major_vertices)


def terminal_degrees(g: Graph, dist: DistanceMatrix | None = None) -> dict[int, int]:
    """Map each major vertex (degree >= 3) to its number of terminal vertices.

    End-vertex ``u`` is terminal for major ``v`` when ``d(u, v) < d(u, w)``
    for every other major vertex ``w``.
    """
    dist = dist or distance_matrix(g)
    major = [v for v in range(g.n) if g.degree(v) >= 3]
    ends = [u for u in range(g.n) if g.degree(u) == 1]
    counts = dict.fromkeys(major, 0)
    for u in ends:
        for v in major:
            if all(dist[u, v] < dist[u, w] for w in major if w != v):
                counts[v] += 1
    return counts


def degree_profile(g: Graph) -> DegreeProfile:
    degrees = tuple(g.degree(v) for v in range(g.n))
    terminal = terminal_degrees(g)
    return DegreeProfile(
        degrees=degrees,
        min_degree=min(degrees),
        max_degree=max(degrees),
        end_vertices=tuple(v for v, d in enumerate(degrees) if d == 1),
        exterior_major_vertices=tuple(sorted(v for v, t in terminal.items() if t > 0)),
    )


# Hamiltonian paths


def has_hamiltonian_path(g: Graph, cap: int = HAMILTONIAN_CAP) -> bool:
    """Subset DP: ``ends[mask]`` holds the vertices a path covering ``mask`` can end at."""
    if g.n > cap:
        raise TooLarge(f"Hamiltonian path DP capped at n={cap}, got {g.n}")
    if g.n == 1:
        return True
    if not is_connected(g):
        return False
    full = (1 << g.n) - 1
    ends = [0] * (1 << g.n)
    for v in range(g.n):
        ends[1 << v] = 1 << v
    for mask in range(1, full + 1):
        e = ends[mask]
        if not e:
            continue
        if mask == full:
            return True
        reach = 0
        while e:
            low = e & -e
            reach |= g.masks[low.bit_length() - 1]
            e ^= low
        reach &= ~mask
        while reach:
            low = reach & -reach
            ends[mask | low] |= low
            reach ^= low
    return bool(ends[full])


# Isomorphism


def is_isomorphic(g: Graph, h: Graph, cap: int = ISOMORPHISM_CAP) -> bool:
    if g.n > cap or h.n > cap:
        raise TooLarge(f"isomorphism search capped at n={cap}")
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(map(len, g.adjacency)) != sorted(map(len, h.adjacency)):
        return False

    def signature(x: Graph, v: int) -> tuple:
        return (x.degree(v), tuple(sorted(x.degree(w) for w in x.adjacency[v])))

    sig_g = [signature(g, v) for v in range(g.n)]
    sig_h = [signature(h, v) for v in range(h.n)]
    if sorted(sig_g) != sorted(sig_h):
        return False

    # Map g's vertices in order of rarest signature first.
    freq: dict[tuple, int] = {}
    for s in sig_g:
        freq[s] = freq.get(s, 0) + 1
    order = sorted(range(g.n), key=lambda v: (freq[sig_g[v]], -g.degree(v), v))
    image = [-1] * g.n
    used = [False] * h.n

    def extend(pos: int) -> bool:
        if pos == g.n:
            return True
        v = order[pos]
        for w in range(h.n):
            if used[w] or sig_h[w] != sig_g[v]:
                continue
            ok = True
            for prev in order[:pos]:
                if g.has_edge(v, prev) != h.has_edge(w, image[prev]):
                    ok = False
                    break
            if not ok:
                continue
            image[v] = w
            used[w] = True
            if extend(pos + 1):
                return True
            used[w] = False
            image[v] = -1
        return False

    return extend(0)


# Cliques


def max_clique_size(g: Graph) -> int:
    """Exact clique number by branch and bound on bitmask candidate sets."""
    best = 1 if g.n else 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            expand(size + 1, cand & g.masks[v])
            cand ^= low

    expand(0, (1 << g.n) - 1)
    return best


def max_clique_at_least(g: Graph, m: int) -> bool:
    if m <= 1:
        return g.n >= m
    found = False

    def expand(size: int, cand: int) -> None:
        nonlocal found
        if size >= m:
            found = True
            return
        while cand and not found:
            if size + cand.bit_count() < m:
                return
            low = cand & -cand
            expand(size + 1, cand & g.masks[low.bit_length() - 1])
            cand ^= low

    expand(0, (1 << g.n) - 1)
    return found


# Edge-list text format


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines of ``"u v"``."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or len(lines[0]) != 2:
        raise ValueError("edge list must start with a line 'n m'")
    n, m = int(lines[0][0]), int(lines[0][1])
    body = lines[1:]
    if len(body) != m:
        raise ValueError(f"header declares {m} edges but {len(body)} follow")
    pairs = []
    for row in body:
        if len(row) != 2:
            raise ValueError(f"bad edge line: {' '.join(row)!r}")
        pairs.append((int(row[0]), int(row[1])))
    return build_graph(n, pairs)


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g))


def to_dot(g: Graph, name: str = "G", labels: dict[int, str] | None = None, highlight=()) -> str:
    lines = [f"graph {name} {{"]
    marked = set(highlight)
    for v in range(g.n):
        attrs = []
        if labels and v in labels:
            attrs.append(f'label="{labels[v]}"')
        if v in marked:
            attrs.append("style=filled, fillcolor=black, fontcolor=white")
        lines.append(f"  {v}" + (f" [{', '.join(attrs)}]" if attrs else "") + ";")
    lines.extend(f"  {u} -- {v};" for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"
