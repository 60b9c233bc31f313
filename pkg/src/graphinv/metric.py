"""Metric codes, resolving sets and an exact metric dimension solver.

The solver grows the target size ``k`` from the diameter bound upward.
At each size it runs a set-cover search over vertex pairs: a pair
``{u, v}`` is covered by ``x`` when ``d(u, x) != d(v, x)``, and the
branch always picks a vertex covering the lowest uncovered pair. The first
size that succeeds is minimal because the previous size was searched
exhaustively.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import BadLandmarks, BadParameter, BudgetExceeded, NotConnected, TooLarge
from .graph import DistanceMatrix, Graph, degree_profile, distance_matrix, is_connected
from .linegraph import bouquet_line_labeling, wheel_line_labeling

DIM_CAP = 24
DEFAULT_DIM_BUDGET = 20_000_000


@dataclass(frozen=True)
class CodeTable:
    landmarks: tuple[int, ...]
    codes: tuple[tuple[int, ...], ...]

    def resolves(self) -> bool:
        return len(set(self.codes)) == len(self.codes)


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise NotConnected("metric dimension is defined for connected graphs only")


def code_table(g: Graph, landmarks: Sequence[int], dist: DistanceMatrix | None = None) -> CodeTable:
    _require_connected(g)
    landmarks = tuple(landmarks)
    if not landmarks:
        raise BadLandmarks("landmark list is empty")
    if len(set(landmarks)) != len(landmarks):
        raise BadLandmarks("landmarks must be distinct")
    if any(not 0 <= w < g.n for w in landmarks):
        raise BadLandmarks("landmark outside the vertex range")
    dist = dist or distance_matrix(g)
    codes = tuple(tuple(int(dist[v, w]) for w in landmarks) for v in range(g.n))
    return CodeTable(landmarks, codes)


def is_resolving(g: Graph, landmarks, dist: DistanceMatrix | None = None) -> bool:
    return code_table(g, sorted(set(landmarks)), dist).resolves()


def lower_bound_f(n: int, d: int) -> int:
    """Least ``k >= 1`` with ``k + d**k >= n``."""
    k = 1
    while k + d**k < n:
        k += 1
    return k


def hernando_bound_holds(n: int, d: int, k: int) -> bool:
    bound = (2 * d // 3 + 1) ** k + k * sum((2 * i - 1) ** (k - 1) for i in range(1, -(-d // 3) + 1))
    return n <= bound


@dataclass(frozen=True)
class DimResult:
    value: int
    witness: tuple[int, ...]
    nodes_explored: int


class _CoverSearch:
    def __init__(self, g: Graph, dist: DistanceMatrix, budget: int):
        self.n = g.n
        self.budget = budget
        self.nodes = 0
        pairs = [(u, v) for u in range(g.n) for v in range(u + 1, g.n)]
        self.full = (1 << len(pairs)) - 1
        self.cover = []
        for x in range(g.n):
            mask = 0
            for i, (u, v) in enumerate(pairs):
                if dist[u, x] != dist[v, x]:
                    mask |= 1 << i
            self.cover.append(mask)
        # Vertices able to split each pair, used when branching on that pair.
        self.splitters = [[x for x in range(g.n) if self.cover[x] >> i & 1] for i in range(len(pairs))]

    def find(self, k: int) -> tuple[int, ...] | None:
        self.k = k
        return self._search(0, ())

    def _search(self, covered: int, chosen: tuple[int, ...]):
        self.nodes += 1
        if self.nodes > self.budget:
            raise _OutOfBudget
        if covered == self.full:
            return chosen
        left = self.k - len(chosen)
        if left == 0:
            return None
        uncovered = self.full & ~covered
        gains = {x: (self.cover[x] & uncovered).bit_count() for x in range(self.n)}
        best_gain = max(gains.values())
        if best_gain * left < uncovered.bit_count():
            return None
        first = (uncovered & -uncovered).bit_length() - 1
        candidates = sorted(self.splitters[first], key=lambda x: (-gains[x], x))
        for x in candidates:
            found = self._search(covered | self.cover[x], chosen + (x,))
            if found is not None:
                return found
        return None


class _OutOfBudget(Exception):
    pass


def metric_dimension(g: Graph, cap_nodes: int = DEFAULT_DIM_BUDGET, cap_n: int = DIM_CAP) -> DimResult:
    _require_connected(g)
    if g.n > cap_n:
        raise TooLarge(f"metric dimension solver capped at n={cap_n}")
    if g.n == 1:
        return DimResult(0, (), 0)
    dist = distance_matrix(g)
    d = int(dist.diameter())
    search = _CoverSearch(g, dist, cap_nodes)
    # One below the diameter bound, so the failure at value - 1 is searched, not assumed.
    k = max(1, lower_bound_f(g.n, d) - 1)

    def find(size: int):
        try:
            return search.find(size)
        except _OutOfBudget:
            raise BudgetExceeded(
                f"metric dimension search exceeded {cap_nodes} nodes at size {size}",
                lower=size,
                upper=g.n - d,
                nodes=search.nodes,
            ) from None

    found = find(k)
    if found is not None:
        # only reachable if the bound overshoots; walk down until a size fails
        while k > 1 and (smaller := find(k - 1)) is not None:
            k, found = k - 1, smaller
        return DimResult(k, tuple(sorted(found)), search.nodes)
    while found is None:
        k += 1
        found = find(k)
    return DimResult(k, tuple(sorted(found)), search.nodes)


def dim_bounds_check(g: Graph, dim: int, source: Graph | None = None) -> bool:
    """Check the diameter bounds, and the line-graph bounds when ``g = L(source)``.

    The line-graph bounds apply only for sources of order at least 5.
    """
    dist = distance_matrix(g)
    d = int(dist.diameter())
    if g.n >= 2 and not lower_bound_f(g.n, d) <= dim <= g.n - d:
        return False
    if source is not None and source.n >= 5:
        delta = degree_profile(source).max_degree
        if not math.ceil(math.log2(delta)) <= dim <= source.n - 2:
            return False
    return True


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise BadParameter(msg)


def dim_formula(family: str, *params: int) -> int:
    """Closed-form metric dimension for the named family.

    Families: ``path(n)``, ``cycle(n)``, ``complete(n)``, ``wheel(n)``,
    ``bouquet(n_circles, even_cycles)``, ``tree(sigma, ex)``,
    ``lineTree(sigma, ex)``, ``lineWheel(n)``, ``lineBouquet(n_circles)``,
    ``lineComplete(n)`` and ``lineBipartite(s, t)``.
    """
    if family == "path":
        (n,) = params
        _check(n >= 2, "path needs n >= 2")
        return 1
    if family == "cycle":
        (n,) = params
        _check(n >= 3, "cycle needs n >= 3")
        return 2
    if family == "complete":
        (n,) = params
        _check(n >= 2, "complete graph needs n >= 2")
        return n - 1
    if family == "wheel":
        (n,) = params
        _check(n >= 3, "wheel needs n >= 3")
        return 3 if n in (3, 6) else (2 * n + 2) // 5
    if family == "bouquet":
        n, x = params
        _check(n >= 2 and 0 <= x <= n, "bouquet needs n >= 2 and 0 <= x <= n")
        return n if x == 0 else n + x - 1
    if family in ("tree", "lineTree"):
        sigma, ex = params
        _check(sigma >= 3 and ex >= 1, "tree formula excludes paths")
        return sigma - ex
    if family == "lineWheel":
        (n,) = params
        _check(n >= 3, "wheel needs n >= 3")
        if n in (3, 4):
            return 3
        if n == 5:
            return 4
        return n - math.ceil(n / 3)
    if family == "lineBouquet":
        (n,) = params
        _check(n >= 2, "bouquet needs n >= 2")
        return 2 * n - 1
    if family == "lineComplete":
        (n,) = params
        _check(n >= 6, "formula holds for n >= 6")
        return math.ceil(2 * n / 3)
    if family == "lineBipartite":
        s, t = sorted(params)
        _check(s >= 2, "formula needs s, t >= 2")
        if t <= 2 * s - 1:
            return 2 * (s + t - 1) // 3
        return t - 1
    raise BadParameter(f"no dimension formula for family {family!r}")


def wheel_line_resolving_witness(n: int) -> tuple[int, ...]:
    """Resolving set of ``L(W_{1,n})`` of size ``n - ceil(n/3)``, for ``n >= 6``."""
    if n < 6:
        raise BadParameter("the mod-3 construction needs n >= 6")
    _, lab = wheel_line_labeling(n)
    k, r = divmod(n, 3)
    if r == 2:
        idx = [i for i in range(3 * k) if i % 3 in (1, 2)] + [3 * k]
    else:
        idx = [i for i in range(n) if i % 3 in (1, 2)]
    return tuple(lab.ell(i) for i in idx)


def bouquet_line_resolving_witness(ks) -> tuple[int, ...]:
    """Two landmarks per circle except the last, which gets one.

    Within circle ``i`` the second landmark sits at position
    ``ceil(c_i / 2) + 1`` where ``c_i = k_i + 1`` is the circle length;
    the first landmark is the cut edge ``u_{i,1}``.
    """
    _, lab = bouquet_line_labeling(ks)
    n = len(lab.circles)

    def far(i: int) -> int:
        c = len(lab.circles[i - 1])
        return lab.u(i, math.ceil(c / 2) + 1)

    out = []
    for i in range(1, n):
        out += [lab.u(i, 1), far(i)]
    out.append(far(n))
    return tuple(out)
