"""Slow, independent reference implementations used only by the tests.

None of these touch the library's algorithms: they work from raw numpy
adjacency matrices, itertools enumeration or labeled bitmask brute force.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np


def matrix(g) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1
    return a


def walks(g, k: int) -> int:
    """Sum of the entries of A^k, in Python integers to avoid overflow."""
    a = matrix(g).astype(object)
    m = np.identity(g.n, dtype=object)
    for _ in range(k):
        m = m.dot(a)
    return int(m.sum()) if g.n else 0


def _edge_set(g) -> set[frozenset]:
    return {frozenset(e) for e in g.edges()}


def paths3(g) -> int:
    es = _edge_set(g)
    total = 0
    for seq in itertools.permutations(range(g.n), 4):
        if all(frozenset(seq[i : i + 2]) in es for i in range(3)):
            total += 1
    return total // 2


def cycles(g, k: int) -> int:
    """Number of k-cycle subgraphs: rooted at the least vertex, halved for direction."""
    es = _edge_set(g)
    total = 0
    for verts in itertools.combinations(range(g.n), k):
        root, rest = verts[0], verts[1:]
        for perm in itertools.permutations(rest):
            seq = (root,) + perm
            if all(frozenset((seq[i], seq[(i + 1) % k])) in es for i in range(k)):
                total += 1
    return total // 2


def girth(g) -> float:
    for k in range(3, g.n + 1):
        if cycles(g, k):
            return k
    return float("inf")


def is_bipartite(g) -> bool:
    a = matrix(g)
    for bits in range(1 << max(g.n - 1, 0)):
        side = np.array([(bits >> i) & 1 for i in range(g.n)])
        if not np.any(a[side[:, None] == side[None, :]]):
            return True
    return g.n == 0


# -- cube containment by trying every injection -----------------------------------

CUBE_EDGES = [(i, i ^ (1 << k)) for i in range(8) for k in range(3) if i < i ^ (1 << k)]


@lru_cache(maxsize=None)
def _perm_index(n: int, edges: tuple) -> np.ndarray:
    perms = np.array(list(itertools.permutations(range(n), 8)), dtype=np.int64)
    return np.stack([perms[:, u] * n + perms[:, v] for u, v in edges])


def contains_pattern_8(g, edges=tuple(CUBE_EDGES)) -> bool:
    """True if some injection of the 8 pattern vertices maps every pattern edge onto an edge."""
    if g.n < 8:
        return False
    flat = matrix(g).ravel().astype(bool)
    idx = _perm_index(g.n, tuple(edges))
    return bool(np.all(flat[idx], axis=0).any())


# -- labeled brute force over edge bitmasks -----------------------------------------


def pair_list(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


def cycle_masks(n: int, k: int) -> list[int]:
    """Bitmask (over ``pair_list(n)``) of every k-cycle of K_n."""
    index = {p: i for i, p in enumerate(pair_list(n))}
    masks = set()
    for verts in itertools.combinations(range(n), k):
        for perm in itertools.permutations(verts[1:]):
            seq = (verts[0],) + perm
            m = 0
            for i in range(k):
                u, v = sorted((seq[i], seq[(i + 1) % k]))
                m |= 1 << index[(u, v)]
            masks.add(m)
    return sorted(masks)


def naive_ex(n: int, k: int, chunk_bits: int = 22) -> int:
    """max edges over all 2^C(n,2) labeled graphs with no k-cycle, scanned in chunks."""
    m = n * (n - 1) // 2
    if m == 0:
        return 0
    masks = cycle_masks(n, k)
    step = 1 << min(m, chunk_bits)
    best = 0
    for start in range(0, 1 << m, step):
        allg = np.arange(start, start + step, dtype=np.int64)
        free = np.ones(allg.shape, dtype=bool)
        for cm in masks:
            free &= (allg & cm) != cm
        pop = np.zeros(allg.shape, dtype=np.int64)
        for i in range(m):
            pop += (allg >> i) & 1
        if free.any():
            best = max(best, int(pop[free].max()))
    return best


def orbit_counts(n: int) -> list[int]:
    """Isomorphism classes of n-vertex graphs per edge count, by minimising over all relabellings."""
    pairs = pair_list(n)
    m = len(pairs)
    index = {p: i for i, p in enumerate(pairs)}
    allg = np.arange(1 << m, dtype=np.int64)
    best = allg.copy()
    for perm in itertools.permutations(range(n)):
        img = np.zeros_like(allg)
        for i, (u, v) in enumerate(pairs):
            j = index[tuple(sorted((perm[u], perm[v])))]
            img |= ((allg >> i) & 1) << j
        np.minimum(best, img, out=best)
    reps = np.unique(best)
    pop = np.zeros(reps.shape, dtype=np.int64)
    for i in range(m):
        pop += (reps >> i) & 1
    return np.bincount(pop, minlength=m + 1).tolist()
