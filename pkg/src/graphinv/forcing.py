"""Zero forcing on vertices and edges, path covers, bounds and witnesses.

Closures run on bitmasks. Vertex mode forces along ``Graph.masks``; edge
mode builds its own edge-adjacency masks from edge incidences, so edge
forcing never goes through :func:`graphinv.linegraph.line_graph`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Literal, Sequence

from .errors import BadParameter, BudgetExceeded, NotConnected, TooLarge
from .families import check_bouquet_params, wheel
from .graph import Graph, degree_profile, has_hamiltonian_path, is_connected, max_clique_size
from .linegraph import bouquet_line_labeling, wheel_line_labeling

Mode = Literal["vertex", "edge"]

DEFAULT_Z_BUDGET = 20_000_000
PATH_COVER_CAP = 14
CRITICALITY_RANGE = (3, 8)


@dataclass(frozen=True)
class ColorState:
    black: frozenset[int]
    mode: Mode


@dataclass(frozen=True)
class ForcingTrace:
    initial: tuple[int, ...]
    events: tuple[tuple[int, int], ...]
    final_black: frozenset[int]
    mode: Mode = "vertex"

    def to_text(self) -> str:
        """One ``"k: forcer -> forced"`` line per event, numbered from 1."""
        return "".join(f"{k}: {a} -> {b}\n" for k, (a, b) in enumerate(self.events, 1))


@dataclass(frozen=True)
class ZResult:
    value: int
    witness: tuple[int, ...]
    trace: ForcingTrace
    nodes_explored: int


def _mask(items: Iterable[int]) -> int:
    out = 0
    for x in items:
        out |= 1 << x
    return out


def _members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def edge_masks(g: Graph) -> tuple[int, ...]:
    """For each edge, the mask of edges sharing an endpoint with it."""
    incident = [0] * g.n
    for i, (u, v) in enumerate(g.edges):
        incident[u] |= 1 << i
        incident[v] |= 1 << i
    return tuple((incident[u] | incident[v]) & ~(1 << i) for i, (u, v) in enumerate(g.edges))


def closure_mask(adj: Sequence[int], black: int) -> int:
    """Fixed point of the color-change rule, without recording events.

    Only vertices whose neighborhood just changed can become new forcers,
    so the work list holds the freshly forced vertices and their neighbors.
    """
    full = (1 << len(adj)) - 1
    todo = black
    while todo and black != full:
        nxt = 0
        while todo:
            low = todo & -todo
            v = low.bit_length() - 1
            todo ^= low
            if not black >> v & 1:
                continue
            white = adj[v] & ~black
            if white and not white & (white - 1):
                black |= white
                nxt |= white | adj[white.bit_length() - 1]
        todo = nxt
    return black


def _closure_with_trace(adj: Sequence[int], start: int, rng: random.Random | None):
    black = start
    events = []
    while True:
        eligible = []
        for v in _members(black):
            white = adj[v] & ~black
            if white and not white & (white - 1):
                eligible.append((v, white.bit_length() - 1))
                if rng is None:
                    break
        if not eligible:
            return black, events
        v, w = eligible[0] if rng is None else rng.choice(eligible)
        black |= 1 << w
        events.append((v, w))


def _closure(adj, initial, mode: Mode, rng):
    initial = tuple(sorted(set(initial)))
    if any(not 0 <= x < len(adj) for x in initial):
        raise BadParameter(f"initial set not contained in the {mode} set")
    black, events = _closure_with_trace(adj, _mask(initial), rng)
    final = frozenset(_members(black))
    return ColorState(final, mode), ForcingTrace(initial, tuple(events), final, mode)


def forcing_closure(g: Graph, s: Iterable[int], rng: random.Random | None = None):
    """Run the color-change rule from ``s``; returns ``(ColorState, ForcingTrace)``.

    Without ``rng`` the lowest-index eligible forcer fires first and the
    scan restarts after every force. With ``rng`` a random eligible forcer
    fires instead; the final black set does not depend on the order.
    """
    return _closure(g.masks, s, "vertex", rng)


def edge_forcing_closure(g: Graph, f: Iterable[int], rng: random.Random | None = None):
    return _closure(edge_masks(g), f, "edge", rng)


def is_zero_forcing(g: Graph, s: Iterable[int]) -> bool:
    return closure_mask(g.masks, _mask(s)) == (1 << g.n) - 1


def is_edge_zero_forcing(g: Graph, f: Iterable[int]) -> bool:
    return closure_mask(edge_masks(g), _mask(f)) == (1 << g.m) - 1


def replay_trace(g: Graph, trace: ForcingTrace) -> bool:
    """Check each event obeys the rule at its step and the events reach ``final_black``."""
    adj = g.masks if trace.mode == "vertex" else edge_masks(g)
    black = _mask(trace.initial)
    for a, b in trace.events:
        if not black >> a & 1:
            return False
        if adj[a] & ~black != 1 << b:
            return False
        black |= 1 << b
    if frozenset(_members(black)) != trace.final_black:
        return False
    # A trace is complete only if nothing further can fire.
    return all(
        not ((w := adj[v] & ~black) and not w & (w - 1)) for v in _members(black)
    )


def _search_min(adj: Sequence[int], lower: int, budget: int, what: str):
    size = len(adj)
    full = (1 << size) - 1
    nodes = 0
    if size == 1:
        return 1, (0,), 1

    def first_forcing(k: int):
        nonlocal nodes
        for combo in combinations(range(size), k):
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(
                    f"{what} search exceeded {budget} closures at size {k}",
                    lower=k,
                    upper=max(k, size - 1),
                    nodes=nodes,
                )
            if closure_mask(adj, _mask(combo)) == full:
                return combo
        return None

    # Start one below the seed so value - 1 is always refuted exhaustively;
    # supersets of forcing sets force, so that refutes every smaller size too.
    k = max(1, lower - 1)
    found = first_forcing(k)
    if found is not None:
        # only reachable if the seed overshoots; walk down until a size fails
        while k > 1 and (smaller := first_forcing(k - 1)) is not None:
            k, found = k - 1, smaller
        return k, found, nodes
    while found is None:
        k += 1
        found = first_forcing(k)
    return k, found, nodes


def z_lower_bound(g: Graph, source: Graph | None = None) -> int:
    """Pruning seed: ``max(delta, omega - 1)``, plus the Hamiltonian-path bound
    ``|E(source)| - (|V(source)| - 2)`` when ``g`` is the line graph of ``source``.
    """
    if g.n == 1:
        return 1
    bound = max(min(g.degree(v) for v in range(g.n)), max_clique_size(g) - 1)
    if source is not None and source.n >= 2 and source.n <= 24 and has_hamiltonian_path(source):
        bound = max(bound, source.m - (source.n - 2))
    return bound


def zero_forcing_number(g: Graph, cap_nodes: int = DEFAULT_Z_BUDGET, source: Graph | None = None) -> ZResult:
    """Exact ``Z(g)``; pass ``source`` when ``g`` is ``L(source)`` to tighten the seed."""
    if not is_connected(g):
        raise NotConnected("zero forcing number is computed for connected graphs only")
    lower = z_lower_bound(g, source)
    value, witness, nodes = _search_min(g.masks, lower, cap_nodes, "zero forcing")
    _, trace = forcing_closure(g, witness)
    return ZResult(value, tuple(witness), trace, nodes)


def edge_zero_forcing_number(g: Graph, cap_nodes: int = DEFAULT_Z_BUDGET) -> ZResult:
    if g.m == 0:
        raise BadParameter("edge zero forcing needs at least one edge")
    if not is_connected(g):
        raise NotConnected("edge zero forcing number is computed for connected graphs only")
    value, witness, nodes = _search_min(edge_masks(g), 1, cap_nodes, "edge zero forcing")
    _, trace = edge_forcing_closure(g, witness)
    return ZResult(value, tuple(witness), trace, nodes)


# Path covers


def _induced_paths_through(g: Graph, v: int, allowed: int) -> list[int]:
    """Vertex masks of every induced path inside ``allowed`` that contains ``v``."""
    found: set[int] = set()

    def grow(left: int, right: int, body: int) -> None:
        found.add(body)
        for end, other in ((right, left), (left, right)):
            cand = g.masks[end] & allowed & ~body
            while cand:
                low = cand & -cand
                w = low.bit_length() - 1
                cand ^= low
                # w may touch only the endpoint it extends.
                if g.masks[w] & body == 1 << end:
                    if end == right:
                        grow(left, w, body | low)
                    else:
                        grow(w, right, body | low)

    grow(v, v, 1 << v)
    return sorted(found, key=lambda m: (-m.bit_count(), m))


def path_cover_number(g: Graph, cap: int = PATH_COVER_CAP) -> int:
    """Minimum number of vertex-disjoint induced paths covering ``V(g)``.

    Branches on the lowest uncovered vertex, longest paths first, with
    memoization on the uncovered set.
    """
    if g.n > cap:
        raise TooLarge(f"path cover search capped at n={cap}")
    memo: dict[int, int] = {0: 0}

    def solve(rest: int) -> int:
        if rest in memo:
            return memo[rest]
        v = (rest & -rest).bit_length() - 1
        best = rest.bit_count()
        for p in _induced_paths_through(g, v, rest):
            if best == 1:
                break
            best = min(best, 1 + solve(rest & ~p))
        memo[rest] = best
        return best

    return solve((1 << g.n) - 1)


# Bounds and closed forms


def z_line_bounds(g: Graph) -> tuple[int, int]:
    """``(Delta - 1, |E| - (delta - 1))``, bracketing ``Z(L(g))``."""
    prof = degree_profile(g)
    return prof.max_degree - 1, g.m - (prof.min_degree - 1)


def z_formula(family: str, *params: int) -> int:
    """Closed-form zero forcing numbers.

    Families: ``path``, ``complete``, ``wheel(n)``, ``bouquet(n_circles)``,
    ``lineTree(sigma)``, ``lineComplete(n)``, ``lineBipartite(s, t)``,
    ``lineWheel(n)``, ``lineBouquet(n_circles)``.
    """
    if family == "path":
        return 1
    if family == "complete":
        (n,) = params
        return n - 1
    if family == "wheel":
        (n,) = params
        if n < 3:
            raise BadParameter("wheel needs n >= 3")
        return 3
    if family == "bouquet":
        (n,) = params
        return n + 1
    if family == "lineTree":
        (sigma,) = params
        return sigma - 1
    if family == "lineComplete":
        (n,) = params
        if n < 4:
            raise BadParameter("formula holds for n >= 4")
        return (n * n - 3 * n + 4) // 2
    if family == "lineBipartite":
        s, t = params
        return s * t - s - t + 2
    if family == "lineWheel":
        (n,) = params
        return n + 1
    if family == "lineBouquet":
        (n,) = params
        return 2 * n - 1
    raise BadParameter(f"no zero forcing formula for family {family!r}")


def edge_zfs_upper_witness(g: Graph) -> tuple[int, ...]:
    """All edges except ``v0 v2, ..., v0 v_delta`` at a minimum-degree vertex ``v0``.

    When ``delta <= 2`` the whole edge set is returned.
    """
    prof = degree_profile(g)
    delta = prof.min_degree
    if delta <= 2:
        return tuple(range(g.m))
    v0 = prof.degrees.index(delta)
    nbrs = sorted(g.adjacency[v0])
    dropped = {g.edge_index(v0, w) for w in nbrs[1:]}
    return tuple(i for i in range(g.m) if i not in dropped)


# Paper witnesses


def wheel_zfs_witness(n: int) -> tuple[int, ...]:
    """Hub plus two adjacent rim vertices (the first and last rim vertex)."""
    _, lab = wheel(n)
    return (lab.hub, lab.rim[0], lab.rim[-1])


def wheel_line_zfs_witness(n: int) -> tuple[int, ...]:
    _, lab = wheel_line_labeling(n)
    return tuple(sorted({lab.ell(0), lab.ell(1)} | {lab.u(i) for i in range(1, n)}))


def bouquet_line_zfs_witness(ks) -> tuple[int, ...]:
    _, lab = bouquet_line_labeling(check_bouquet_params(ks))
    n = len(lab.circles)
    out = []
    for i in range(1, n):
        out += [lab.u(i, 1), lab.u(i, 2)]
    out.append(lab.u(n, 1))
    return tuple(out)


def _wheel_line_edge_witness(n: int, lab, a: int, b: int) -> set[int]:
    """Size-``n`` forcing set of ``L(W_{1,n})`` minus the edge between line-vertices ``a`` and ``b``.

    The base witnesses handle edges at position 0; every other edge is
    carried there by a rotation and, for the ``l_{i-1} u_i`` edges, a
    reflection of the wheel.
    """
    spoke = {x: i for i, x in enumerate(lab.spokes)}
    rim = {x: i for i, x in enumerate(lab.rims)}

    def rotated(shift: int, reflect: bool, us=(), ls=()) -> set[int]:
        # Reflection w_i -> w_{-i} sends u_i -> u_{-i} and l_i -> l_{-i-1}.
        out = set()
        for i in us:
            out.add(lab.u((-i if reflect else i) + shift))
        for i in ls:
            out.add(lab.ell((-i - 1 if reflect else i) + shift))
        return out

    if a in rim and b in rim:
        i, j = rim[a], rim[b]
        start = i if (i + 1) % n == j else j
        return rotated(start, False, us=range(1, n), ls=[1])
    if a in spoke and b in spoke:
        i, j = spoke[a], spoke[b]
        if (i + 1) % n == j or (j + 1) % n == i:
            start = i if (i + 1) % n == j else j
            return rotated(start, False, us=range(1, n - 1), ls=[0, 1])
        gap = (j - i) % n
        return rotated(i, False, us=[t for t in range(n) if t not in (1, gap)], ls=[0, n - 1])
    if a in rim:
        a, b = b, a
    i, r = spoke[a], rim[b]
    base = dict(us=range(1, n - 1), ls=[0, n - 1])
    if r == i:
        return rotated(i, False, **base)
    return rotated(i, True, **base)


def wheel_line_edge_witnesses(n: int) -> list[tuple[int, tuple[int, ...]]]:
    """``(edge index of L(W_{1,n}), size-n witness)`` for every edge."""
    res, lab = wheel_line_labeling(n)
    out = []
    for e, (a, b) in enumerate(res.lg.edges):
        out.append((e, tuple(sorted(_wheel_line_edge_witness(n, lab, a, b)))))
    return out


def wheel_line_edge_criticality(n: int, detail: list | None = None) -> bool:
    """Every single-edge deletion of ``L(W_{1,n})`` has zero forcing number ``n``.

    Each deletion is certified twice: the constructed size-``n`` witness must
    force, and an exhaustive pass must find no forcing set of size ``n - 1``.
    """
    lo, hi = CRITICALITY_RANGE
    if not lo <= n <= hi:
        raise TooLarge(f"criticality check runs for {lo} <= n <= {hi}")
    res, _ = wheel_line_labeling(n)
    ok = True
    for e, witness in wheel_line_edge_witnesses(n):
        h = res.lg.without_edge(e)
        upper_ok = len(witness) == n and is_zero_forcing(h, witness)
        full = (1 << h.n) - 1
        lower_ok = all(closure_mask(h.masks, _mask(c)) != full for c in combinations(range(h.n), n - 1))
        if detail is not None:
            detail.append({"edge": res.lg.edges[e], "witness": witness, "upper_ok": upper_ok, "lower_ok": lower_ok})
        ok = ok and upper_ok and lower_ok
    return ok


def removal_stability_check(g: Graph, cap_n: int = 16) -> bool:
    """``Z(G) - 1 <= Z(G - x) <= Z(G) + 1`` for every vertex and edge ``x``.

    Deletions that disconnect the graph are skipped.
    """
    if g.n > cap_n:
        raise TooLarge(f"removal stability check capped at n={cap_n}")
    z = zero_forcing_number(g).value
    variants = [g.without_edge(e) for e in range(g.m)]
    if g.n > 1:
        variants += [g.without_vertex(v) for v in range(g.n)]
    for h in variants:
        if not is_connected(h):
            continue
        zh = zero_forcing_number(h).value
        if not z - 1 <= zh <= z + 1:
            return False
    return True
