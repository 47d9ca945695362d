"""Exact counts of walks, 3-paths, 4-cycles, 6-cycles, codegrees and girth.

Walks are ordered vertex sequences (``xyxy`` and ``yxyx`` differ); paths and
cycles are counted as unlabelled subgraphs. All results are Python ints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np
from scipy import sparse

from .errors import DomainError
from .graph import BipartiteView, Graph, iter_bits

__all__ = [
    "CountResult",
    "walk_count",
    "path3_count",
    "c4_count",
    "c4_count_by_class",
    "c6_count",
    "six_cycles",
    "codegree",
    "d_value",
    "girth",
    "count",
]


@dataclass(frozen=True)
class CountResult:
    kind: str
    value: int | float

    def to_dict(self) -> dict:
        value = self.value
        if isinstance(value, float) and math.isinf(value):
            value = None
        return {"kind": self.kind, "value": value}


def walk_count(g: Graph, k: int) -> int:
    """Number of walks ``x_0 x_1 ... x_k`` with consecutive vertices adjacent."""
    if k < 1:
        raise DomainError("walk length must be at least 1")
    nbrs = [g.neighbors(x) for x in range(g.n)]
    w = [1] * g.n
    for _ in range(k):
        w = [sum(w[y] for y in nb) for nb in nbrs]
    return sum(w)


def codegree(g: Graph, x: int, y: int) -> int:
    """``|N(x) & N(y)|``, the number of x,y-paths of length two."""
    if x == y:
        raise DomainError("codegree needs two distinct vertices")
    return (g.adj(x) & g.adj(y)).bit_count()


def path3_count(g: Graph) -> int:
    """Number of 3-edge paths. Each path is anchored at its middle edge ``xy``:
    choices ``u in N(x)-y``, ``v in N(y)-x``, minus the ``u == v`` triangles."""
    total = 0
    deg = g.degrees()
    for x, y in g.edges():
        total += (deg[x] - 1) * (deg[y] - 1) - codegree(g, x, y)
    return total


def _csr(g: Graph) -> sparse.csr_matrix:
    edges = g.edges()
    if not edges:
        return sparse.csr_matrix((g.n, g.n), dtype=np.int64)
    u, v = np.array(edges, dtype=np.int64).T
    rows = np.concatenate([u, v])
    cols = np.concatenate([v, u])
    data = np.ones(rows.size, dtype=np.int64)
    return sparse.csr_matrix((data, (rows, cols)), shape=(g.n, g.n))


def c4_count(g: Graph) -> int:
    """Number of 4-cycles: half the sum of ``C(d(x,y), 2)`` over vertex pairs."""
    if g.e < 4:
        return 0
    a = _csr(g)
    co = sparse.triu(a @ a, k=1).tocoo()
    c = co.data
    # sum stays below 2**63 for n < ~90000 (at most 3*C(n,4) cycles)
    return int(np.sum(c * (c - 1) // 2, dtype=np.int64)) // 2


def c4_count_by_class(view: BipartiteView, side: str = "a") -> int:
    """Bipartite 4-cycle count ``sum over pairs {x,x'} in one class of C(d(x,x'), 2)``."""
    cls = sorted(view.class_a if side == "a" else view.class_b)
    g = view.graph
    total = 0
    for i, x in enumerate(cls):
        ax = g.adj(x)
        for y in cls[i + 1 :]:
            c = (ax & g.adj(y)).bit_count()
            total += c * (c - 1) // 2
    return total


def _row_sums(m: np.ndarray) -> int:
    return sum(int(s) for s in m.sum(axis=1, dtype=np.int64))


def c6_count(g: Graph) -> int:
    """Number of 6-cycles, by pairing 3-paths between antipodal vertices.

    Every 6-cycle is a pair of internally disjoint 3-paths joining each of its
    three antipodal pairs. Summing ``C(P(x,y), 2)`` over pairs and removing the
    pairs of paths that share an interior vertex gives three times the count.
    The overlap corrections reduce to entrywise expressions in ``A``, ``A^2``
    and ``A^3``, so the cost is two dense matrix products.
    """
    n = g.n
    if n < 6 or g.e < 6:
        return 0
    af = g.adjacency_matrix(dtype=np.float64)
    # float64 BLAS products are exact: every entry is an integer below 2**53
    a = af.astype(np.int64)
    cf = af @ af
    c = np.rint(cf).astype(np.int64)
    a3 = np.rint(cf @ af).astype(np.int64)
    deg = a.sum(axis=1)

    offdiag = ~np.eye(n, dtype=bool)

    # P(x, y): 3-paths from x to y
    p = a3 - a * (deg[:, None] + deg[None, :] - 1)
    p[~offdiag] = 0
    s1 = _row_sums(p * (p - 1) // 2) // 2

    # pairs of paths sharing their first (or, by symmetry, last) interior vertex
    cc2 = c * (c - 1) // 2
    cm1 = c * (c - 1) * (c - 2) // 2  # c * C(c-1, 2)
    s2_terms = (deg[:, None] - c - a) * cc2 + cm1
    s2_terms[~offdiag] = 0
    s2 = _row_sums(s2_terms)

    # crossing pairs x-w-v-y / x-u-w-y, minus the doubly crossing ones
    b = a * c
    t1 = sum(int(r) ** 2 for r in b.sum(axis=1)) - _row_sums(b * b)
    t2 = 2 * _row_sums(b * c)
    t3 = _row_sums(b)
    s3 = (t1 - t2 + t3) // 2
    s4 = _row_sums(np.triu(a * cc2, k=1))

    total = s1 - s2 - s3 + s4
    if total % 3:
        raise AssertionError("6-cycle pair count not divisible by 3")
    return total // 3


def six_cycles(g: Graph) -> Iterator[tuple[int, ...]]:
    """Yield every 6-cycle once as ``(z0, ..., z5)`` with ``z0`` minimal and ``z1 < z5``."""
    adj = g.rows
    for s in range(g.n):
        above = ~((1 << (s + 1)) - 1)
        start_nbrs = adj[s] & above
        if start_nbrs.bit_count() < 2:
            continue
        path = [s]

        def extend(used: int):
            last = path[-1]
            if len(path) == 6:
                if (start_nbrs >> last) & 1 and path[1] < last:
                    yield tuple(path)
                return
            for y in iter_bits(adj[last] & above & ~used):
                path.append(y)
                yield from extend(used | (1 << y))
                path.pop()

        yield from extend(1 << s)


def d_value(view: BipartiteView | Graph, x: int) -> int:
    """``D(x) = sum over y in N(x) of (deg(y) - 1)``."""
    g = view.graph if isinstance(view, BipartiteView) else view
    if not 0 <= x < g.n:
        raise DomainError(f"vertex {x} out of range")
    return sum(g.degree(y) - 1 for y in iter_bits(g.adj(x)))


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle; ``math.inf`` for forests."""
    best = math.inf
    n = g.n
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        frontier = [root]
        while frontier and 2 * dist[frontier[0]] + 1 < best:
            nxt = []
            for x in frontier:
                for y in iter_bits(g.adj(x)):
                    if dist[y] == -1:
                        dist[y] = dist[x] + 1
                        parent[y] = x
                        nxt.append(y)
                    elif y != parent[x]:
                        best = min(best, dist[x] + dist[y] + 1)
            frontier = nxt
        if best == 3:
            break
    return best


def count(g: Graph, kind: str) -> CountResult:
    """Dispatch by name: ``w3``, ``w<k>``, ``p3``, ``c4``, ``c6``, ``girth``."""
    if kind == "p3":
        return CountResult("path3", path3_count(g))
    if kind == "c4":
        return CountResult("c4", c4_count(g))
    if kind == "c6":
        return CountResult("c6", c6_count(g))
    if kind == "girth":
        return CountResult("girth", girth(g))
    if kind.startswith("w") and kind[1:].isdigit():
        k = int(kind[1:])
        return CountResult(f"walk_{k}", walk_count(g, k))
    raise DomainError(f"unknown count kind {kind!r}")
