"""Line graphs with the edge <-> line-vertex correspondence kept explicit.

Line-vertex ``i`` is always source edge ``i``, so a set of edges of ``G``
and a set of vertices of ``L(G)`` are the same list of integers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyEdgeSet
from .families import bouquet, check_bouquet_params, wheel
from .graph import Graph, build_graph


@dataclass(frozen=True)
class LineGraphResult:
    lg: Graph
    source: Graph

    def edge_of_vertex(self, a: int) -> int:
        return a

    def vertex_of_edge(self, e: int) -> int:
        return e

    def endpoints(self, a: int) -> tuple[int, int]:
        return self.source.edges[a]


def line_graph(g: Graph) -> LineGraphResult:
    if g.m == 0:
        raise EmptyEdgeSet("line graph of an edgeless graph is empty")
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        incident[u].append(i)
        incident[v].append(i)
    pairs = set()
    for at in incident:
        for x in range(len(at)):
            for y in range(x + 1, len(at)):
                pairs.add((at[x], at[y]))
    return LineGraphResult(build_graph(g.m, sorted(pairs)), g)


@dataclass(frozen=True)
class WheelLineLabeling:
    """``spokes[i]`` is the line-vertex of ``v w_i``; ``rims[i]`` of ``w_i w_{i+1}``."""

    spokes: tuple[int, ...]
    rims: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.spokes)

    def u(self, i: int) -> int:
        return self.spokes[i % self.n]

    def ell(self, i: int) -> int:
        return self.rims[i % self.n]


def wheel_line_labeling(n: int) -> tuple[LineGraphResult, WheelLineLabeling]:
    g, lab = wheel(n)
    res = line_graph(g)
    spokes = tuple(g.edge_index(lab.hub, w) for w in lab.rim)
    rims = tuple(g.edge_index(lab.rim[i], lab.rim[(i + 1) % n]) for i in range(n))
    return res, WheelLineLabeling(spokes, rims)


@dataclass(frozen=True)
class BouquetLineLabeling:
    """``circles[i][j - 1]`` is ``u_{i+1,j}``.

    Circle ``i`` contributes ``k_i + 1`` line-vertices in cyclic order;
    the first and the last are the two edges at the cut-vertex.
    """

    circles: tuple[tuple[int, ...], ...]

    def u(self, i: int, j: int) -> int:
        """1-based circle ``i`` and position ``j``."""
        return self.circles[i - 1][j - 1]

    def cut_edges(self) -> tuple[int, ...]:
        return tuple(x for c in self.circles for x in (c[0], c[-1]))


def bouquet_line_labeling(ks) -> tuple[LineGraphResult, BouquetLineLabeling]:
    ks = check_bouquet_params(ks)
    g, lab = bouquet(ks)
    res = line_graph(g)
    circles = tuple(tuple(range(off, off + len(c) + 1)) for off, c in zip(lab.edge_offsets(), lab.circles))
    return res, BouquetLineLabeling(circles)
