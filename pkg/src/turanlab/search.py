"""Exhaustive enumeration, exact small Turán numbers and bound sweeps.

Graphs on ``n`` vertices are generated by adding a vertex, with every possible
neighbourhood, to each class representative on ``n - 1`` vertices, then
deduplicated by canonical form. For a forbidden subgraph H the H-free graphs
are closed under vertex deletion, so the same construction restricted to
H-free parents yields every H-free graph.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Iterator

from .bounds import BIPARTITE_BOUNDS, BOUND_IDS, VIOLATED, GraphProfile, evaluate
from .canon import canonical_form, canonical_graph
from .detect import contains_c4, contains_c6, contains_cube, contains_cube_diag, contains_k3
from .errors import CapExceeded, DomainError
from .graph import Graph, bipartite_views, empty_graph
from .graph6 import to_graph6

__all__ = [
    "ENUMERATION_CAP",
    "EXTREMAL_CAPS",
    "BIPARTITE_EDGE_CAP",
    "FORBIDDEN",
    "SearchResult",
    "SweepReport",
    "enumerate_graphs",
    "extremal_number",
    "extremal_number_bipartite",
    "sweep_bounds",
]

ENUMERATION_CAP = 9
# the final stratum of a Q / Q+ search at n = 9 means ~10^6 cube searches
EXTREMAL_CAPS = {"K3": 10, "C4": 10, "C6": 9, "Q": 8, "Qplus": 8}
BIPARTITE_EDGE_CAP = 25

FORBIDDEN: dict[str, Callable[[Graph], bool]] = {
    "K3": contains_k3,
    "C4": contains_c4,
    "C6": contains_c6,
    "Q": contains_cube,
    "Qplus": contains_cube_diag,
}


def _forbidden(name: str) -> Callable[[Graph], bool]:
    try:
        return FORBIDDEN[name]
    except KeyError:
        raise DomainError(f"unknown forbidden graph {name!r}; choose from {sorted(FORBIDDEN)}") from None


@lru_cache(maxsize=None)
def _level(n: int, forbidden: str | None) -> tuple[Graph, ...]:
    """Canonical representatives on ``n`` vertices (H-free if ``forbidden`` is set)."""
    if n == 0:
        return (empty_graph(0),)
    bad = FORBIDDEN[forbidden] if forbidden else None
    found: dict[tuple[int, int], Graph] = {}
    for h in _level(n - 1, forbidden):
        for mask in range(1 << (n - 1)):
            cand = h.add_vertex(mask)
            key = canonical_form(cand)
            if key in found:
                continue
            if bad is not None and bad(cand):
                continue
            found[key] = canonical_graph(cand)
    return tuple(found[k] for k in sorted(found))


def _masks_of_size(width: int, size: int) -> Iterator[int]:
    for combo in itertools.combinations(range(width), size):
        yield sum(1 << i for i in combo)


def enumerate_graphs(
    n: int,
    *,
    edges: int | None = None,
    forbidden: str | None = None,
    cap: int = ENUMERATION_CAP,
) -> Iterator[Graph]:
    """One canonical representative per isomorphism class on ``n`` vertices.

    ``edges`` restricts to one edge count; ``forbidden`` to H-free graphs.
    Output is ordered by canonical certificate.
    """
    if n < 0:
        raise DomainError("n must be nonnegative")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds the enumeration cap of {cap}")
    if forbidden is not None:
        _forbidden(forbidden)
    if edges is None or n == 0:
        for g in _level(n, forbidden):
            if edges is None or g.e == edges:
                yield g
        return
    bad = FORBIDDEN[forbidden] if forbidden else None
    found: dict[tuple[int, int], Graph] = {}
    for h in _level(n - 1, forbidden):
        extra = edges - h.e
        if not 0 <= extra <= n - 1:
            continue
        for mask in _masks_of_size(n - 1, extra):
            cand = h.add_vertex(mask)
            key = canonical_form(cand)
            if key in found or (bad is not None and bad(cand)):
                continue
            found[key] = canonical_graph(cand)
    for k in sorted(found):
        yield found[k]


@dataclass(frozen=True)
class SearchResult:
    host: str
    forbidden: str
    extremal_edges: int
    witness: Graph
    graphs_examined: int
    canonical_classes: int

    def to_dict(self) -> dict:
        return {
            "host": self.host,
            "forbidden": self.forbidden,
            "extremal_edges": self.extremal_edges,
            "witness_graph6": to_graph6(self.witness),
            "graphs_examined": self.graphs_examined,
            "canonical_classes": self.canonical_classes,
        }


def extremal_number(n: int, forbidden: str, *, cap: int | None = None) -> SearchResult:
    """Exact ``ex(n, H)`` with an extremal witness.

    H-free classes on ``n - 1`` vertices are extended by one vertex, trying
    edge counts from the largest reachable downward; the first count that
    admits an H-free graph is the answer. The witness is the extremal graph
    with the least canonical graph6 string; ``canonical_classes`` counts the
    extremal graphs up to isomorphism.
    """
    bad = _forbidden(forbidden)
    limit = EXTREMAL_CAPS[forbidden] if cap is None else cap
    if n < 0:
        raise DomainError("n must be nonnegative")
    if n > limit:
        raise CapExceeded(f"ex(n, {forbidden}) search is capped at n={limit}; got n={n}")
    host = f"complete_{n}"
    if n == 0:
        return SearchResult(host, forbidden, 0, empty_graph(0), 1, 1)
    parents = _level(n - 1, forbidden)
    examined = sum(len(_level(k, forbidden)) for k in range(n))
    top = min(n * (n - 1) // 2, max(h.e for h in parents) + n - 1)
    for m in range(top, -1, -1):
        found: dict[tuple[int, int], Graph] = {}
        for h in parents:
            extra = m - h.e
            if not 0 <= extra <= n - 1:
                continue
            for mask in _masks_of_size(n - 1, extra):
                cand = h.add_vertex(mask)
                examined += 1
                key = canonical_form(cand)
                if key not in found and not bad(cand):
                    found[key] = canonical_graph(cand)
        if found:
            witness = min(found.values(), key=to_graph6)
            return SearchResult(host, forbidden, m, witness, examined, len(found))
    raise AssertionError("the empty graph is always H-free")


def extremal_number_bipartite(
    a: int, b: int, forbidden: str, *, edge_cap: int = BIPARTITE_EDGE_CAP
) -> SearchResult:
    """Exact ``ex(a, b, H)`` inside the host K_{a,b} (class A = ``0..a-1``).

    Depth-first over the rows (A-vertices) with row neighbourhoods taken in
    nonincreasing order, which factors out permutations of A. A prefix that
    already contains H is pruned, since adding rows cannot remove a copy.
    """
    bad = _forbidden(forbidden)
    if a < 0 or b < 0:
        raise DomainError("class sizes must be nonnegative")
    if a * b > edge_cap:
        raise CapExceeded(f"K_{a},{b} has {a * b} edges; bipartite search is capped at {edge_cap}")
    n = a + b
    full_row = (1 << b) - 1
    rows: list[int] = []
    best_edges = -1
    best_rows: list[list[int]] = []
    examined = 0

    def build(rs: list[int]) -> Graph:
        return Graph.from_edges(
            n, ((x, a + y) for x, r in enumerate(rs) for y in range(b) if (r >> y) & 1)
        )

    def go(edges_so_far: int, max_row: int) -> None:
        nonlocal best_edges, examined
        k = len(rows)
        # widest row still allowed: max_row itself or a lower number with more bits
        widest = max(max_row.bit_count(), max_row.bit_length() - 1)
        if edges_so_far + (a - k) * widest < best_edges:
            return
        if k == a:
            if edges_so_far > best_edges:
                best_edges = edges_so_far
                best_rows.clear()
            best_rows.append(list(rows))
            return
        for r in range(max_row, -1, -1):
            rows.append(r)
            examined += 1
            if not bad(build(rows)):
                go(edges_so_far + r.bit_count(), r)
            rows.pop()

    go(0, full_row)
    witnesses = [build(rs) for rs in best_rows]
    classes = {canonical_form(w) for w in witnesses}
    return SearchResult(f"complete_bipartite_{a}_{b}", forbidden, best_edges, witnesses[0], examined, len(classes))


# -- sweeps -----------------------------------------------------------------


@dataclass
class SweepReport:
    n_max: int
    bound_ids: tuple[str, ...]
    graphs: int = 0
    evaluations: int = 0
    verdict_counts: dict[str, int] = field(default_factory=dict)
    violations: list[dict] = field(default_factory=list)
    tight: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: "SweepReport") -> None:
        self.graphs += other.graphs
        self.evaluations += other.evaluations
        for k, v in other.verdict_counts.items():
            self.verdict_counts[k] = self.verdict_counts.get(k, 0) + v
        self.violations.extend(other.violations)
        self.tight.extend(other.tight)

    def finalize(self) -> "SweepReport":
        key = lambda r: (r["n"], r["graph6"], r["bound_id"], r.get("class_a", []), r["details"].get("k", 0))
        self.violations.sort(key=key)
        self.tight.sort(key=key)
        self.verdict_counts = dict(sorted(self.verdict_counts.items()))
        return self

    def to_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "bound_ids": list(self.bound_ids),
            "graphs": self.graphs,
            "evaluations": self.evaluations,
            "verdict_counts": self.verdict_counts,
            "violations": self.violations,
            "tight": self.tight,
        }


def _record(g: Graph, report, view=None) -> dict:
    rec = {"n": g.n, "graph6": to_graph6(g), **report.to_dict()}
    if view is not None:
        rec["class_a"] = sorted(view.class_a)
    return rec


def _sweep_graphs(graphs: Iterable[Graph], ids: tuple[str, ...], n_max: int) -> SweepReport:
    rep = SweepReport(n_max, ids)
    for g in graphs:
        rep.graphs += 1
        prof = GraphProfile(g)
        views = bipartite_views(g) if any(b in BIPARTITE_BOUNDS for b in ids) else []
        for bid in ids:
            if bid in BIPARTITE_BOUNDS:
                pairs = [(v, r) for v in views for r in evaluate(bid, g, v, profile=prof)]
            elif bid == "qplus_leading" and views:
                pairs = [(v, r) for v in views for r in evaluate(bid, g, v, profile=prof)]
            else:
                pairs = [(None, r) for r in evaluate(bid, g, profile=prof)]
            for view, report in pairs:
                rep.evaluations += 1
                rep.verdict_counts[report.verdict] = rep.verdict_counts.get(report.verdict, 0) + 1
                if report.verdict == VIOLATED:
                    rep.violations.append(_record(g, report, view))
                elif report.tight:
                    rep.tight.append(_record(g, report, view))
    return rep


def _sweep_level(args: tuple[int, tuple[str, ...], int]) -> SweepReport:
    n, ids, n_max = args
    return _sweep_graphs(enumerate_graphs(n), ids, n_max)


def sweep_bounds(
    n_max: int,
    bound_ids: Iterable[str] | None = None,
    *,
    n_min: int = 1,
    workers: int | None = None,
) -> SweepReport:
    """Evaluate bounds on every isomorphism class with ``n_min <= n <= n_max``.

    Bipartite bounds are evaluated on every proper 2-colouring with both
    classes nonempty. ``bound_ids=None`` means all bounds; an empty set yields
    an empty report. Each vertex count is an independent work unit; results
    are merged and sorted, so the report does not depend on scheduling.
    """
    ids = tuple(BOUND_IDS if bound_ids is None else bound_ids)
    for bid in ids:
        if bid not in BOUND_IDS:
            raise DomainError(f"unknown bound id {bid!r}")
    if n_max > ENUMERATION_CAP:
        raise CapExceeded(f"n_max={n_max} exceeds the enumeration cap of {ENUMERATION_CAP}")
    report = SweepReport(n_max, ids)
    if not ids:
        return report
    jobs = [(n, ids, n_max) for n in range(max(n_min, 0), n_max + 1)]
    workers = workers if workers is not None else int(os.environ.get("TURANLAB_THREADS", "1"))
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_sweep_level, jobs))
    else:
        parts = [_sweep_level(job) for job in jobs]
    for part in parts:
        report.merge(part)
    return report.finalize()
