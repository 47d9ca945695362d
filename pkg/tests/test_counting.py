from __future__ import annotations

import math
import random

import pytest

import oracles
from turanlab import (
    DomainError,
    Graph,
    c4_count,
    c6_count,
    codegree,
    complete_bipartite_graph,
    complete_graph,
    count,
    cube_graph,
    cycle_graph,
    d_value,
    girth,
    path3_count,
    path_graph,
    random_graph,
    star_graph,
    walk_count,
)
from turanlab.counting import c4_count_by_class, six_cycles
from turanlab.graph import bipartition


def _samples(count_, max_n, seed):
    rng = random.Random(seed)
    for _ in range(count_):
        n = rng.randint(0, max_n)
        yield random_graph(n, p=rng.uniform(0.1, 0.9), seed=rng.randrange(10**6))


def test_walk_examples():
    assert walk_count(complete_graph(2), 3) == 2
    assert walk_count(cycle_graph(4), 3) == 32
    assert walk_count(complete_bipartite_graph(2, 3), 3) == 72


def test_walks_match_matrix_powers():
    for g in _samples(80, 12, 1):
        for k in range(1, 7):
            assert walk_count(g, k) == oracles.walks(g, k)


def test_walks_do_not_overflow():
    g = complete_graph(60)
    assert walk_count(g, 12) == 60 * 59**12


def test_walk_rejects_k0():
    with pytest.raises(DomainError):
        walk_count(cycle_graph(4), 0)


def test_path3_examples():
    assert path3_count(path_graph(4)) == 1
    assert path3_count(complete_bipartite_graph(2, 2)) == 4
    assert path3_count(complete_bipartite_graph(2, 3)) == 12


def test_c4_examples():
    assert c4_count(complete_bipartite_graph(2, 2)) == 1
    assert c4_count(complete_bipartite_graph(3, 3)) == 9
    assert c4_count(cube_graph()) == 6


def test_c6_examples():
    assert c6_count(cycle_graph(6)) == 1
    assert c6_count(complete_bipartite_graph(2, 3)) == 0
    assert c6_count(complete_bipartite_graph(3, 3)) == 6


def test_small_counts_match_brute_force():
    for g in _samples(120, 8, 2):
        assert path3_count(g) == oracles.paths3(g)
        assert c4_count(g) == oracles.cycles(g, 4)
        assert c6_count(g) == oracles.cycles(g, 6)
        assert girth(g) == oracles.girth(g)


def test_six_cycles_enumerates_each_cycle_once():
    for g in _samples(40, 8, 3):
        found = [tuple(c) for c in six_cycles(g)]
        assert len(found) == len(set(found)) == oracles.cycles(g, 6)
        for c in found:
            assert all(g.has_edge(c[i], c[(i + 1) % 6]) for i in range(6))


def test_complete_bipartite_closed_forms():
    for a in range(1, 7):
        for b in range(1, 7):
            g = complete_bipartite_graph(a, b)
            assert path3_count(g) == a * b * (a - 1) * (b - 1)
            assert c4_count(g) == math.comb(a, 2) * math.comb(b, 2)
            assert walk_count(g, 3) == 2 * a * a * b * b


def test_c4_by_class_sums_to_total():
    for g in _samples(60, 9, 4):
        view = bipartition(g)
        if view is None:
            continue
        assert c4_count_by_class(view, "a") == c4_count(g) == c4_count_by_class(view, "b")


def test_codegree_examples():
    k23 = complete_bipartite_graph(2, 3)
    assert codegree(k23, 0, 1) == 3
    assert codegree(k23, 0, 2) == 0
    q = cube_graph()
    assert codegree(q, 0, 7) == 0
    assert codegree(q, 0, 3) == 2
    with pytest.raises(DomainError):
        codegree(q, 1, 1)


def test_d_value_examples():
    assert d_value(bipartition(complete_bipartite_graph(2, 2)), 0) == 2
    assert d_value(bipartition(star_graph(5)), 0) == 0
    assert d_value(bipartition(complete_bipartite_graph(2, 3)), 0) == 3


def test_girth_examples():
    assert girth(cube_graph()) == 4
    assert girth(path_graph(5)) == math.inf
    assert girth(cycle_graph(6)) == 6
    assert girth(Graph.from_edges(0, [])) == math.inf


def test_count_dispatch_and_json():
    res = count(complete_bipartite_graph(2, 3), "w3")
    assert res.value == 72
    assert count(path_graph(3), "girth").to_dict()["value"] is None
    with pytest.raises(DomainError):
        count(path_graph(3), "k5")


def test_c6_algebraic_count_on_dense_graph_matches_enumeration():
    g = random_graph(14, p=0.5, seed=11)
    assert c6_count(g) == sum(1 for _ in six_cycles(g))
