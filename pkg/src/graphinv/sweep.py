"""Sweeps over graph sources: conjecture checks, table reproduction, witness audits.

Reports are plain dataclasses serialized to JSON or CSV. Nothing in a
report depends on wall-clock time unless asked for, so two identical
invocations write identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

from . import __version__
from .errors import BudgetExceeded, TooLarge
from .families import (
    bouquet,
    complete,
    complete_bipartite,
    path,
    random_tree,
    wheel,
    branch_tree,
)
from .forcing import (
    edge_zero_forcing_number,
    edge_zfs_upper_witness,
    is_edge_zero_forcing,
    is_zero_forcing,
    path_cover_number,
    bouquet_line_zfs_witness,
    wheel_line_edge_witnesses,
    wheel_line_zfs_witness,
    wheel_zfs_witness,
    z_formula,
    zero_forcing_number,
)
from .graph import Graph, build_graph, degree_profile, is_path_graph
from .linegraph import line_graph, wheel_line_labeling
from .metric import (
    bouquet_line_resolving_witness,
    dim_formula,
    is_resolving,
    metric_dimension,
    wheel_line_resolving_witness,
)

ENUMERATION_CAP = 6
DEFAULT_BUDGET = 5_000_000


# Enumeration


def enumerate_labeled_connected(n: int, cap: int = ENUMERATION_CAP) -> Iterator[Graph]:
    """Every connected labeled graph on ``n`` vertices, in edge-bitmask order."""
    if n > cap:
        raise TooLarge(f"exhaustive enumeration capped at n={cap}")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        chosen = []
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                chosen.append((u, v))
        seen, frontier = 1, 1
        while frontier:
            reach = 0
            f = frontier
            while f:
                low = f & -f
                reach |= adj[low.bit_length() - 1]
                f ^= low
            frontier = reach & ~seen
            seen |= reach
        if seen == (1 << n) - 1:
            yield build_graph(n, chosen)


def random_non_path_trees(count: int, n_min: int, n_max: int, seed: int) -> Iterator[tuple[str, Graph]]:
    """``count`` random trees with ``n_min <= n <= n_max``, skipping paths."""
    made = 0
    attempt = 0
    span = n_max - n_min + 1
    while made < count:
        n = n_min + attempt % span
        t = random_tree(n, seed * 1_000_003 + attempt)
        attempt += 1
        if is_path_graph(t):
            continue
        made += 1
        yield f"tree-{seed}-{attempt - 1}-n{n}", t


# Reports


@dataclass
class SweepRecord:
    id: str
    source: str
    params: list
    n: int
    m: int
    edges: list
    invariants: dict = field(default_factory=dict)
    expected: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    status: str = "ok"
    notes: dict = field(default_factory=dict)

    def graph(self) -> Graph:
        return build_graph(self.n, self.edges)


@dataclass
class SweepReport:
    name: str
    meta: dict
    records: list[SweepRecord]
    summary: dict

    @property
    def violations(self) -> list[str]:
        return self.summary["violations"]

    def to_json(self) -> str:
        payload = {
            "name": self.name,
            "meta": self.meta,
            "records": [asdict(r) for r in self.records],
            "summary": self.summary,
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> SweepReport:
        data = json.loads(text)
        records = [SweepRecord(**r) for r in data["records"]]
        return cls(data["name"], data["meta"], records, data["summary"])

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for r in self.records:
            writer.writerow(
                [
                    r.id,
                    r.source,
                    " ".join(map(str, r.params)),
                    r.n,
                    r.m,
                    " ".join(f"{u}-{v}" for u, v in r.edges),
                    _flat(r.invariants),
                    _flat(r.expected),
                    _flat(r.checks),
                    _flat({k: " ".join(map(str, v)) for k, v in r.witnesses.items()}),
                    r.status,
                ]
            )
        return buf.getvalue()

    def to_markdown(self) -> str:
        keys = sorted({k for r in self.records for k in r.invariants})
        head = ["id", "n", "m"] + [f"{k} (got/expected)" for k in keys] + ["status"]
        lines = ["| " + " | ".join(head) + " |", "|" + "---|" * len(head)]
        for r in self.records:
            cells = [r.id, str(r.n), str(r.m)]
            for k in keys:
                got = r.invariants.get(k)
                want = r.expected.get(k)
                cells.append(f"{_cell(got)} / {_cell(want)}")
            cells.append(r.status)
            lines.append("| " + " | ".join(cells) + " |")
        return "\n".join(lines) + "\n"


# id, source, params (space separated), n, m, edges ("u-v" space separated),
# invariants / expected / checks / witnesses ("key=value" joined by ";"), status.
CSV_COLUMNS = ["id", "source", "params", "n", "m", "edges", "invariants", "expected", "checks", "witnesses", "status"]


def _cell(x) -> str:
    return "-" if x is None else str(x)


def _flat(d: dict) -> str:
    return ";".join(f"{k}={_cell(v)}" for k, v in sorted(d.items()))


def make_meta(seed: int | None, timestamp: str | None = None) -> dict:
    """``timestamp`` stays ``None`` unless given, keeping reports reproducible."""
    if timestamp is None:
        timestamp = os.environ.get("SOURCE_DATE_EPOCH")
    return {"version": __version__, "seed": seed, "timestamp": timestamp}


def summarize(records: list[SweepRecord], extra: dict | None = None) -> dict:
    summary = {
        "checked": len(records),
        "violations": [r.id for r in records if r.status == "violation"],
        "incomplete": [r.id for r in records if r.status == "budget"],
    }
    summary.update(extra or {})
    return summary


def record_for(graph_id: str, source: str, params, g: Graph) -> SweepRecord:
    return SweepRecord(graph_id, source, list(params), g.n, g.m, [list(e) for e in g.edges])


def finalize(rec: SweepRecord) -> SweepRecord:
    if rec.status != "budget":
        rec.status = "ok" if all(rec.checks.values()) else "violation"
    return rec


# Invariants by name

INVARIANTS = ("dim", "z", "ze", "p")


def compute_invariant(g: Graph, name: str, of_line: bool = False, budget: int = DEFAULT_BUDGET):
    """Return ``(value, witness)`` for ``name`` on ``g`` or on ``L(g)``.

    ``p`` has no witness; ``ze`` of a line graph is not offered.
    """
    target, source = g, None
    if of_line:
        target, source = line_graph(g).lg, g
    if name == "dim":
        r = metric_dimension(target, cap_nodes=budget)
        return r.value, list(r.witness)
    if name == "z":
        r = zero_forcing_number(target, cap_nodes=budget, source=source)
        return r.value, list(r.witness)
    if name == "ze" and not of_line:
        r = edge_zero_forcing_number(target, cap_nodes=budget)
        return r.value, list(r.witness)
    if name == "p":
        return path_cover_number(target), None
    raise ValueError(f"unknown invariant {name!r} (of_line={of_line})")


def invariant_key(name: str, of_line: bool) -> str:
    return f"{name}_l" if of_line else name


def verify_witness(g: Graph, key: str, witness) -> bool:
    """Re-check a stored witness against the graph it was computed on."""
    name, _, suffix = key.partition("_")
    target = line_graph(g).lg if suffix == "l" else g
    if name == "dim":
        return target.n == 1 or is_resolving(target, witness)
    if name == "z":
        return is_zero_forcing(target, witness)
    if name == "ze":
        return is_edge_zero_forcing(target, witness)
    raise ValueError(f"no verifier for {key!r}")


# Conjectures


@dataclass(frozen=True)
class Selector:
    invariant: str
    of_line: bool = False

    @property
    def key(self) -> str:
        return invariant_key(self.invariant, self.of_line)

    def label(self) -> str:
        sym = {"dim": "dim", "z": "Z", "ze": "Z_e", "p": "P"}[self.invariant]
        return f"{sym}(L(G))" if self.of_line else f"{sym}(G)"


@dataclass(frozen=True)
class GraphSource:
    kind: str  # "enumeration" | "trees" | "wheels" | "bouquets"
    max_n: int = 5
    min_n: int = 2
    count: int = 50

    def graphs(self, seed: int) -> Iterator[tuple[str, list, Graph]]:
        if self.kind == "enumeration":
            for n in range(self.min_n, self.max_n + 1):
                for i, g in enumerate(enumerate_labeled_connected(n)):
                    yield f"enum-n{n}-{i}", [n, i], g
        elif self.kind == "trees":
            for gid, t in random_non_path_trees(self.count, max(self.min_n, 4), self.max_n, seed):
                yield gid, [t.n], t
        elif self.kind == "wheels":
            for n in range(max(3, self.min_n), self.max_n + 1):
                yield f"wheel-{n}", [n], wheel(n)[0]
        elif self.kind == "bouquets":
            for ks in bouquet_params(self.max_n):
                yield "bouquet-" + "-".join(map(str, ks)), list(ks), bouquet(ks)[0]
        else:
            raise ValueError(f"unknown graph source {self.kind!r}")


@dataclass(frozen=True)
class ConjectureSpec:
    name: str
    lhs: Selector
    rhs: Selector
    relation: str = "le"  # "le" or "eq"
    factor: int = 1
    source: GraphSource = GraphSource("enumeration")
    description: str = ""

    def statement(self) -> str:
        rel = "=" if self.relation == "eq" else "<="
        k = f"{self.factor}*" if self.factor != 1 else ""
        return f"{self.lhs.label()} {rel} {k}{self.rhs.label()}"


CONJECTURES: dict[str, ConjectureSpec] = {
    c.name: c
    for c in [
        ConjectureSpec("z-vs-2zl", Selector("z"), Selector("z", True), factor=2,
                       description="proved for every connected graph"),
        ConjectureSpec("z-vs-zl", Selector("z"), Selector("z", True),
                       description="open in general"),
        ConjectureSpec("z-vs-zl-trees", Selector("z"), Selector("z", True),
                       source=GraphSource("trees", max_n=10, count=100),
                       description="proved for trees"),
        ConjectureSpec("diml-vs-zl", Selector("dim", True), Selector("z", True),
                       description="open in general"),
        ConjectureSpec("ze-eq-zl", Selector("ze"), Selector("z", True), relation="eq",
                       description="edge forcing in G is vertex forcing in L(G)"),
        ConjectureSpec("p-vs-z", Selector("p"), Selector("z"),
                       description="path cover number never exceeds Z"),
        ConjectureSpec("dim-vs-z-trees", Selector("dim"), Selector("z"),
                       source=GraphSource("trees", max_n=10, count=100),
                       description="proved for trees"),
    ]
}


def _evaluate(args) -> SweepRecord:
    spec, gid, params, g, budget = args
    rec = record_for(gid, spec.source.kind, params, g)
    try:
        for sel in (spec.lhs, spec.rhs):
            if sel.key in rec.invariants:
                continue
            value, witness = compute_invariant(g, sel.invariant, sel.of_line, budget)
            rec.invariants[sel.key] = value
            if witness is not None:
                rec.witnesses[sel.key] = witness
    except BudgetExceeded as exc:
        rec.status = "budget"
        rec.notes = {"bracket": [exc.lower, exc.upper], "message": str(exc)}
        return rec
    lhs = rec.invariants[spec.lhs.key]
    rhs = spec.factor * rec.invariants[spec.rhs.key]
    rec.checks["holds"] = lhs == rhs if spec.relation == "eq" else lhs <= rhs
    rec.notes = {"equal": lhs == rec.invariants[spec.rhs.key]}
    return finalize(rec)


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("GRAPHINV_THREADS", "1")))
    except ValueError:
        return 1


def _map_in_order(fn, jobs: Iterable, workers: int) -> list:
    """Results come back in input order whatever the completion order."""
    if workers <= 1:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, jobs, chunksize=16))


def run_conjecture(
    spec: ConjectureSpec,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
    workers: int | None = None,
    timestamp: str | None = None,
) -> SweepReport:
    """Check the relation on every graph of the source; violations never stop the sweep."""
    jobs = ((spec, gid, params, g, budget) for gid, params, g in spec.source.graphs(seed))
    records = _map_in_order(_evaluate, jobs, worker_count() if workers is None else workers)
    extra = {
        "statement": spec.statement(),
        "equalities": [r.id for r in records if r.notes.get("equal")],
        "scope": f"{spec.source.kind}, max_n={spec.source.max_n}",
    }
    return SweepReport(spec.name, make_meta(seed, timestamp), records, summarize(records, extra))


# Table reproduction


def bouquet_params(max_order_sum: int = 14) -> list[tuple[int, ...]]:
    """Nondecreasing ``ks`` (each >= 2, at least two circles) with ``sum(k_i + 1) <= max_order_sum``."""
    out = []

    def grow(prefix: list[int], total: int) -> None:
        if len(prefix) >= 2:
            out.append(tuple(prefix))
        lo = prefix[-1] if prefix else 2
        k = lo
        while total + k + 1 <= max_order_sum:
            grow(prefix + [k], total + k + 1)
            k += 1

    grow([], 0)
    return sorted(out, key=lambda ks: (len(ks), ks))


def _line_row(gid: str, family: str, params, g: Graph, exp_dim, exp_z, budget: int, note: str = "") -> SweepRecord:
    rec = record_for(gid, family, params, g)
    try:
        for key in ("dim_l", "z_l"):
            value, witness = compute_invariant(g, key[:-2], True, budget)
            rec.invariants[key] = value
            rec.witnesses[key] = witness
    except BudgetExceeded as exc:
        rec.status = "budget"
        rec.notes = {"bracket": [exc.lower, exc.upper]}
        return rec
    rec.expected = {"dim_l": exp_dim, "z_l": exp_z}
    for key, want in rec.expected.items():
        if want is not None:
            rec.checks[key] = rec.invariants[key] == want
    if note:
        rec.notes["oracle"] = note
    return finalize(rec)


def table_rows(seed: int = 0, tree_count: int = 30) -> Iterator[tuple]:
    for gid, t in random_non_path_trees(tree_count, 4, 10, seed):
        prof = degree_profile(t)
        sigma, ex = prof.end_vertex_count, prof.exterior_major_count
        yield (gid, "lineTree", [t.n], t, dim_formula("lineTree", sigma, ex), z_formula("lineTree", sigma), "")
    for n in range(4, 7):
        exp_dim = dim_formula("lineComplete", n) if n >= 6 else None
        yield (f"K{n}", "lineComplete", [n], complete(n), exp_dim, z_formula("lineComplete", n), "")
    for s in range(2, 4):
        for t in range(s, 8 - s):
            yield (
                f"K{s},{t}", "lineBipartite", [s, t], complete_bipartite(s, t),
                dim_formula("lineBipartite", s, t), z_formula("lineBipartite", s, t),
                "dim formula cited without proof; used as an oracle only",
            )
    for n in range(3, 9):
        yield (f"W1,{n}", "lineWheel", [n], wheel(n)[0], dim_formula("lineWheel", n), z_formula("lineWheel", n), "")
    # the order-18 bouquet is the worked example, kept beyond the order-14 range
    for ks in bouquet_params(14) + [(2, 3, 4, 5)]:
        yield (
            "B(" + ",".join(str(k + 1) for k in ks) + ")", "lineBouquet", list(ks), bouquet(ks)[0],
            dim_formula("lineBouquet", len(ks)), z_formula("lineBouquet", len(ks)), "",
        )


def _table_job(args) -> SweepRecord:
    gid, family, params, g, exp_dim, exp_z, note, budget = args
    return _line_row(gid, family, params, g, exp_dim, exp_z, budget, note)


def reproduce_table(
    seed: int = 0, budget: int = DEFAULT_BUDGET, workers: int | None = None, tree_count: int = 30,
    timestamp: str | None = None,
) -> SweepReport:
    """Compute dim and Z of each table row's line graph at desk-scale parameters."""
    jobs = (row + (budget,) for row in table_rows(seed, tree_count))
    records = _map_in_order(_table_job, jobs, worker_count() if workers is None else workers)
    extra = {"scope": "finite prefixes of each family; closed forms for all n are not checked beyond them"}
    return SweepReport("table", make_meta(seed, timestamp), records, summarize(records, extra))


# Witness audit


def _witness_record(gid: str, family: str, params, g: Graph, kind: str, witness, expected_size: int) -> SweepRecord:
    rec = record_for(gid, family, params, g)
    key = {"resolving": "dim", "forcing": "z", "edge-forcing": "ze"}[kind]
    rec.witnesses[key] = list(witness)
    rec.expected = {"size": expected_size}
    rec.invariants = {"size": len(witness)}
    rec.checks = {"verifies": verify_witness(g, key, witness), "size": len(witness) == expected_size}
    return finalize(rec)


WITNESS_FAMILIES = ("wheel", "wheel-line", "bouquet-line", "edge-upper", "criticality")


def witness_records(families: Iterable[str] | None = None) -> Iterator[SweepRecord]:
    families = set(families or WITNESS_FAMILIES)
    if "wheel" in families:
        for n in range(3, 13):
            g = wheel(n)[0]
            yield _witness_record(f"W1,{n}-zfs", "wheel", [n], g, "forcing", wheel_zfs_witness(n), z_formula("wheel", n))
    if "wheel-line" in families:
        for n in range(3, 13):
            res, _ = wheel_line_labeling(n)
            yield _witness_record(
                f"L(W1,{n})-zfs", "lineWheel", [n], res.lg, "forcing", wheel_line_zfs_witness(n), n + 1
            )
            if n >= 6:
                yield _witness_record(
                    f"L(W1,{n})-resolving", "lineWheel", [n], res.lg, "resolving",
                    wheel_line_resolving_witness(n), dim_formula("lineWheel", n),
                )
    if "bouquet-line" in families:
        for ks in bouquet_params(16):
            lg = line_graph(bouquet(ks)[0]).lg
            tag = "L(B(" + ",".join(str(k + 1) for k in ks) + "))"
            n = len(ks)
            yield _witness_record(f"{tag}-zfs", "lineBouquet", list(ks), lg, "forcing", bouquet_line_zfs_witness(ks), 2 * n - 1)
            yield _witness_record(
                f"{tag}-resolving", "lineBouquet", list(ks), lg, "resolving", bouquet_line_resolving_witness(ks), 2 * n - 1
            )
    if "edge-upper" in families:
        cases = [(f"K{n}", complete(n)) for n in range(2, 8)]
        cases += [(f"W1,{n}", wheel(n)[0]) for n in range(3, 9)]
        cases += [(f"P{n}", path(n)) for n in range(2, 7)]
        for gid, g in cases:
            prof = degree_profile(g)
            size = g.m - (prof.min_degree - 1) if prof.min_degree >= 3 else g.m
            yield _witness_record(f"{gid}-edge-upper", "edgeUpper", [g.n], g, "edge-forcing", edge_zfs_upper_witness(g), size)
    if "criticality" in families:
        for n in range(3, 9):
            res, _ = wheel_line_labeling(n)
            for e, witness in wheel_line_edge_witnesses(n):
                h = res.lg.without_edge(e)
                a, b = res.lg.edges[e]
                rec = record_for(f"L(W1,{n})-e{a}-{b}", "criticality", [n, a, b], h)
                rec.witnesses["z"] = list(witness)
                rec.invariants = {"size": len(witness)}
                rec.expected = {"size": n}
                rec.checks = {"verifies": is_zero_forcing(h, witness), "size": len(witness) == n}
                yield finalize(rec)


def verify_witnesses(families: Iterable[str] | None = None, timestamp: str | None = None) -> SweepReport:
    records = list(witness_records(families))
    return SweepReport("witnesses", make_meta(None, timestamp), records, summarize(records))


# Exploratory: trees made of k copies of one rooted branch glued at the root


def rooted_trees(order: int) -> list[tuple[Graph, int]]:
    """One representative per rooted-isomorphism class of trees on ``order`` vertices; root is 0."""
    seen: dict[str, tuple[Graph, int]] = {}
    if order == 1:
        return [(build_graph(1, []), 0)]
    for code in _pruefer_codes(order):
        t = _decode(order, code)
        for root in range(order):
            key = _canon(t, root, -1)
            if key not in seen:
                seen[key] = _reroot(t, root)
    return [seen[k] for k in sorted(seen)]


def _pruefer_codes(order: int):
    from itertools import product

    return product(range(order), repeat=order - 2)


def _decode(order: int, code) -> Graph:
    degree = [1] * order
    for x in code:
        degree[x] += 1
    pairs = []
    for x in code:
        leaf = min(v for v in range(order) if degree[v] == 1)
        pairs.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = (v for v in range(order) if degree[v] == 1)
    pairs.append((u, w))
    return build_graph(order, pairs)


def _canon(t: Graph, v: int, parent: int) -> str:
    return "(" + "".join(sorted(_canon(t, w, v) for w in t.adjacency[v] if w != parent)) + ")"


def _reroot(t: Graph, root: int) -> tuple[Graph, int]:
    perm = list(range(t.n))
    perm[0], perm[root] = root, 0
    return t.relabeled(perm), 0


def explore_branch_candidates(k: int = 3, branch_order: int = 6) -> list[dict]:
    """For each rooted tree on ``branch_order`` vertices, glue ``k`` copies at the root and
    report ``Z``, ``P`` and ``Z(L)`` against the claimed ``2k - 1`` and ``3k - 1``.
    """
    out = []
    for branch, root in rooted_trees(branch_order):
        t = branch_tree(k, branch, root)
        z = zero_forcing_number(t).value
        p = path_cover_number(t, cap=max(t.n, 14))
        zl = zero_forcing_number(line_graph(t).lg, source=t).value
        out.append(
            {
                "branch_edges": [list(e) for e in branch.edges],
                "order": t.n,
                "z": z,
                "p": p,
                "z_l": zl,
                "matches": z == p == 2 * k - 1 and zl == 3 * k - 1,
            }
        )
    return out

