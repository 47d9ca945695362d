"""Acceptance suite: one PASS/FAIL line per criterion.

Run under pytest (lines appear in the -v log) or directly with
``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import itertools
import random
import sys
import time
from functools import lru_cache
from pathlib import Path

import mpmath
import networkx as nx
import pytest

sys.path.insert(0, str(Path(__file__).parent))
import oracles  # noqa: E402

from turanlab import (  # noqa: E402
    InvariantError,
    bipartition,
    c4_count,
    c6_count,
    complete_bipartite_graph,
    complete_graph,
    contains_c6,
    contains_cube,
    cube_graph,
    cycle_graph,
    enumerate_graphs,
    erdos_bipartite_subgraph,
    extremal_number,
    extremal_number_bipartite,
    gyori_c4free_reduction,
    hexagon_between,
    random_graph,
    sweep_bounds,
    walk_count,
)
from turanlab.bounds import (  # noqa: E402
    CERTIFIED_IDS,
    cor4_c6_bip_bound,
    cor6_c6_bound,
    eq11_cube_bound,
    eq13_cube_sharp_bound,
    lem10_c4_bip_report,
    lem11_c4_D_lower,
    thm2_p3_bound,
)

RESULTS: list[tuple[str, bool, str]] = []


def report(name: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] {name}" + (f": {detail}" if detail else "")
    RESULTS.append((name, ok, detail))
    print(line, flush=True)


# -- 1. walk identities ------------------------------------------------------------


def check_walks():
    start = time.perf_counter()
    bad = []
    regular = [cycle_graph(n) for n in range(3, 13)]
    regular += [complete_bipartite_graph(a, a) for a in range(1, 7)]
    regular += [cube_graph()] + [complete_graph(n) for n in range(1, 13)]
    for g in regular:
        d = g.degree(0)
        if walk_count(g, 3) != g.n * d**3:
            bad.append(g)
    for a in range(1, 7):
        for b in range(1, 7):
            if walk_count(complete_bipartite_graph(a, b), 3) != 2 * a * a * b * b:
                bad.append((a, b))
    elapsed = time.perf_counter() - start
    return not bad and elapsed < 1.0, f"{len(regular)} regular + 36 complete bipartite, {len(bad)} mismatches, {elapsed:.3f}s"


def test_criterion_1_walk_identities():
    ok, detail = check_walks()
    report("criterion 1 walk identities", ok, detail)
    assert ok, detail


# -- 2. exhaustive sweep -----------------------------------------------------------


@lru_cache(maxsize=1)
def sweep7():
    start = time.perf_counter()
    rep = sweep_bounds(7, CERTIFIED_IDS, workers=1)
    return rep, time.perf_counter() - start


@pytest.mark.parametrize("bound_id", sorted(CERTIFIED_IDS))
def test_criterion_2_sweep(bound_id):
    rep, elapsed = sweep7()
    bad = [v for v in rep.violations if v["bound_id"] == bound_id]
    ok = not bad and elapsed < 300
    detail = f"{rep.graphs} classes n<=7, {len(bad)} violations, sweep {elapsed:.1f}s"
    if bad:
        detail += f", first {bad[0]['graph6']} bound={bad[0]['bound_value']} observed={bad[0]['observed']}"
    report(f"criterion 2 sweep {bound_id}", ok, detail)
    assert ok, detail


# -- 3. tightness ------------------------------------------------------------------


def check_tightness():
    fails = []
    for a in range(2, 6):
        for b in range(2, 6):
            r = thm2_p3_bound(bipartition(complete_bipartite_graph(a, b)))
            if r.exact_slack != 0:
                fails.append(("thm2_p3", a, b, r.exact_slack))
    for (a, b), value in {(2, 2): 1, (2, 3): 3}.items():
        r = lem11_c4_D_lower(bipartition(complete_bipartite_graph(a, b)))
        if r.exact_bound != value or r.exact_slack != 0:
            fails.append(("lem11_c4_D", a, b, r.exact_slack))
    r = lem10_c4_bip_report(bipartition(complete_bipartite_graph(2, 2)))
    if r.exact_slack != 0:
        fails.append(("lem10_c4_bip", 2, 2, r.exact_slack))
    return not fails, f"{len(fails)} non-tight cases {fails[:3]}"


def test_criterion_3_tightness():
    ok, detail = check_tightness()
    report("criterion 3 tightness", ok, detail)
    assert ok, detail


# -- 4. cube machinery -------------------------------------------------------------


def check_cube():
    mismatches = 0
    corpus = list(enumerate_graphs(8, edges=12))
    exhaustive = len(corpus)
    for g in corpus:
        mismatches += contains_cube(g) != oracles.contains_pattern_8(g)
    rng = random.Random(2024)
    for _ in range(10_000):
        g = random_graph(8, m=rng.randint(12, 16), seed=rng.randrange(2**32))
        corpus.append(g)
        mismatches += contains_cube(g) != oracles.contains_pattern_8(g)

    q = cube_graph()
    w = hexagon_between(q, 0b000, 0b111)
    expected = [0b001, 0b011, 0b010, 0b110, 0b100, 0b101]
    emb = w.embedding() if w else None
    witness_ok = (
        w is not None
        and list(w.hexagon) == expected
        and w.verify(q)
        and len(set(emb)) == 8
        and sum(q.has_edge(emb[u], emb[v]) for u, v in oracles.CUBE_EDGES) == 12
    )

    corpus += [g for n in range(1, 8) for g in enumerate_graphs(n)]
    implication_failures = 0
    hexagons = 0
    for g in corpus:
        cube = None
        for x, y in itertools.combinations(range(g.n), 2):
            if hexagon_between(g, x, y) is not None:
                hexagons += 1
                cube = contains_cube(g) if cube is None else cube
                implication_failures += not cube
    ok = mismatches == 0 and witness_ok and implication_failures == 0
    detail = (
        f"{exhaustive} e=12 classes + 10000 samples, {mismatches} oracle mismatches, "
        f"witness ok={witness_ok}, {hexagons} hexagons, {implication_failures} implication failures"
    )
    return ok, detail


def test_criterion_4_cube_machinery():
    ok, detail = check_cube()
    report("criterion 4 cube machinery", ok, detail)
    assert ok, detail


# -- 5. reductions -----------------------------------------------------------------


def check_reductions():
    rng = random.Random(5)
    erdos_bad = 0
    for _ in range(10_000):
        n = rng.randint(1, 60)
        g = random_graph(n, p=rng.uniform(0, 0.3), seed=rng.randrange(2**32))
        res, _ = erdos_bipartite_subgraph(g)
        out = res.output
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(out.edges())
        if not nx.is_bipartite(h) or any(2 * out.degree(x) < g.degree(x) for x in range(n)):
            erdos_bad += 1
    gyori_bad = asserts = graphs = 0
    for n in range(1, 9):
        for g in enumerate_graphs(n, forbidden="C6"):
            graphs += 1
            try:
                res = gyori_c4free_reduction(g)
            except InvariantError:
                asserts += 1
                continue
            if c4_count(res.output) or oracles.cycles(res.output, 4) or 2 * res.kept_edges < g.e:
                gyori_bad += 1
    ok = erdos_bad == gyori_bad == asserts == 0
    return ok, f"erdos 10000 runs, {erdos_bad} bad; gyori {graphs} C6-free classes, {gyori_bad} bad, {asserts} assertions"


def test_criterion_5_reductions():
    ok, detail = check_reductions()
    report("criterion 5 reductions", ok, detail)
    assert ok, detail


# -- 6. extremal search ------------------------------------------------------------


def check_extremal():
    start = time.perf_counter()
    fails = []
    for n in range(1, 9):
        res = extremal_number(n, "K3")
        brute = oracles.naive_ex(n, 3)
        if not res.extremal_edges == brute == n * n // 4 == complete_bipartite_graph(n // 2, n - n // 2).e:
            fails.append(("K3", n, res.extremal_edges, brute))
    for n in range(1, 8):
        for k, name in ((4, "C4"), (6, "C6")):
            res = extremal_number(n, name)
            if res.extremal_edges != oracles.naive_ex(n, k):
                fails.append((name, n, res.extremal_edges))
            if name == "C6" and (res.extremal_edges > cor6_c6_bound(n) or contains_c6(res.witness)):
                fails.append(("cor6", n))
    for a in range(1, 5):
        for b in range(1, 5):
            res = extremal_number_bipartite(a, b, "C6")
            if res.extremal_edges > cor4_c6_bip_bound(a, b):
                fails.append(("cor4", a, b, res.extremal_edges))
    elapsed = time.perf_counter() - start
    return not fails and elapsed < 600, f"{len(fails)} failures {fails[:3]}, {elapsed:.1f}s"


def test_criterion_6_extremal_search():
    ok, detail = check_extremal()
    report("criterion 6 extremal search", ok, detail)
    assert ok, detail


# -- 7. headline arithmetic ---------------------------------------------------------


def check_headline():
    mpmath.mp.dps = 40
    n = mpmath.mpf(100)
    lead = n ** mpmath.mpf("1.6")
    ref11 = lead + (2 * n) ** mpmath.mpf("1.5")
    ref13 = lead * mpmath.mpf(2) ** mpmath.mpf("-0.4") + 13 * n ** mpmath.mpf("1.5")
    got11, got13 = eq11_cube_bound(100), eq13_cube_sharp_bound(100)
    rel11 = abs(got11 - ref11) / ref11
    rel13 = abs(got13 - ref13) / ref13
    rounded = round(float(ref11), 1) == 4413.3 and round(float(lead), 1) == 1584.9
    ok = rel11 <= 1e-9 and rel13 <= 1e-9 and rounded
    return ok, f"eq11(100)={got11:.6f} rel {float(rel11):.1e}; eq13(100)={got13:.6f} rel {float(rel13):.1e}"


def test_criterion_7_headline_values():
    ok, detail = check_headline()
    report("criterion 7 cube bound values at n=100", ok, detail)
    assert ok, detail


# -- 8. performance ----------------------------------------------------------------


def check_performance():
    g = random_graph(1000, m=20_000, seed=8)
    times = {}
    for name, fn in (("c4", c4_count), ("c6", c6_count), ("w3", lambda h: walk_count(h, 3))):
        start = time.perf_counter()
        fn(g)
        times[name] = time.perf_counter() - start
    ok = times["c4"] < 10 and times["c6"] < 10 and times["w3"] < 1
    return ok, ", ".join(f"{k} {v:.3f}s" for k, v in times.items())


def test_criterion_8_performance():
    ok, detail = check_performance()
    report("criterion 8 performance n=1000 e=20000", ok, detail)
    assert ok, detail


if __name__ == "__main__":
    for fn in (check_walks, check_tightness, check_headline, check_performance, check_cube, check_reductions, check_extremal):
        name = fn.__name__.replace("check_", "")
        try:
            report(name, *fn())
        except Exception as exc:  # report and keep going
            report(name, False, repr(exc))
    for bid in sorted(CERTIFIED_IDS):
        try:
            test_criterion_2_sweep(bid)
        except AssertionError:
            pass
    sys.exit(0 if all(ok for _, ok, _ in RESULTS) else 1)
