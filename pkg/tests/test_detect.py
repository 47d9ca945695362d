from __future__ import annotations

import itertools
import random

import pytest

import oracles
from turanlab import (
    DomainError,
    Graph,
    complete_bipartite_graph,
    contains_c4,
    contains_c6,
    contains_cube,
    contains_cube_diag,
    cube_graph,
    cube_with_diagonal,
    cycle_graph,
    hexagon_between,
    random_graph,
)
from turanlab.detect import CUBE, CUBE_DIAG, find_cube, find_cube_diag, find_embedding


def _b(s: str) -> int:
    return int(s, 2)


def test_hexagon_between_antipodal_cube():
    w = hexagon_between(cube_graph(), 0, 7)
    assert w is not None
    assert list(w.hexagon) == [_b(s) for s in ("001", "011", "010", "110", "100", "101")]
    assert w.verify(cube_graph())
    emb = w.embedding()
    q = cube_graph()
    assert all(q.has_edge(emb[u], emb[v]) for u, v in oracles.CUBE_EDGES)


def test_hexagon_between_adjacent_is_none():
    assert hexagon_between(cube_graph(), 0, 1) is None


def test_hexagon_between_rejects_equal_vertices():
    with pytest.raises(DomainError):
        hexagon_between(cube_graph(), 2, 2)


def test_hexagon_between_k44():
    g = complete_bipartite_graph(4, 4)
    w = hexagon_between(g, 0, 4)
    assert w is not None and w.verify(g)


def test_cube_examples():
    q = cube_graph()
    assert contains_cube(q)
    for u, v in q.edges():
        assert not contains_cube(Graph.from_edges(8, [e for e in q.edges() if e != (u, v)]))
    assert contains_cube(complete_bipartite_graph(4, 4))
    assert not contains_cube_diag(q)
    assert contains_cube_diag(cube_with_diagonal())
    assert contains_cube_diag(complete_bipartite_graph(4, 4))


def test_c6_examples():
    assert contains_c6(cycle_graph(6))
    for b in range(1, 10):
        assert not contains_c6(complete_bipartite_graph(2, b))
    assert contains_c6(cube_graph())


def test_embeddings_are_valid():
    for g in (cube_graph(), complete_bipartite_graph(4, 4), complete_bipartite_graph(4, 5)):
        emb = find_cube(g)
        assert len(set(emb)) == 8
        assert all(g.has_edge(emb[u], emb[v]) for u, v in CUBE.edges())
    assert find_cube_diag(cube_graph()) is None
    for g in (cube_with_diagonal(), complete_bipartite_graph(4, 4), complete_bipartite_graph(4, 5)):
        emb = find_cube_diag(g)
        assert all(g.has_edge(emb[u], emb[v]) for u, v in CUBE_DIAG.edges())


def test_cube_agrees_with_injection_oracle_on_dense_samples():
    rng = random.Random(5)
    diag_edges = tuple(oracles.CUBE_EDGES + [(0, 7)])
    for _ in range(300):
        g = random_graph(8, m=rng.randint(12, 20), seed=rng.randrange(10**6))
        assert contains_cube(g) == oracles.contains_pattern_8(g)
        assert contains_cube_diag(g) == oracles.contains_pattern_8(g, diag_edges)


def test_cube_in_relabelled_larger_hosts():
    rng = random.Random(6)
    for _ in range(20):
        perm = list(range(12))
        rng.shuffle(perm)
        q = Graph.from_edges(12, [(perm[u], perm[v]) for u, v in cube_graph().edges()])
        noise = random_graph(12, p=0.2, seed=rng.randrange(10**6))
        host = Graph.from_edges(12, set(q.edges()) | set(noise.edges()))
        assert contains_cube(host)


def test_c4_detection_against_brute_force():
    rng = random.Random(8)
    for _ in range(200):
        g = random_graph(rng.randint(0, 8), p=rng.random() * 0.5, seed=rng.randrange(10**6))
        assert contains_c4(g) == (oracles.cycles(g, 4) > 0)
        assert contains_c6(g) == (oracles.cycles(g, 6) > 0)


def test_hexagon_implies_cube_on_8_vertex_samples():
    rng = random.Random(9)
    for _ in range(200):
        g = random_graph(8, m=rng.randint(12, 18), seed=rng.randrange(10**6))
        cube = contains_cube(g)
        for x, y in itertools.combinations(range(8), 2):
            w = hexagon_between(g, x, y)
            if w is not None:
                assert w.verify(g) and cube


def test_find_embedding_respects_allowed_mask():
    g = complete_bipartite_graph(4, 4)
    assert find_embedding(CUBE, g, allowed=(1 << 8) - 1 - 1) is None
