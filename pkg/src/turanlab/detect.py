"""Containment tests for the cube Q, the cube with a long diagonal Q+, and C6,
plus the search for a hexagon lying between two vertices."""

from __future__ import annotations

from dataclasses import dataclass

from .counting import six_cycles
from .errors import DomainError
from .graph import Graph, cube_graph, cube_with_diagonal, iter_bits

__all__ = [
    "CubeWitness",
    "hexagon_between",
    "find_embedding",
    "find_cube",
    "find_cube_diag",
    "contains_cube",
    "contains_cube_diag",
    "find_c6",
    "contains_c6",
    "contains_c4",
    "contains_k3",
    "CUBE",
    "CUBE_DIAG",
    "HEXAGON_CUBE_LABELS",
]

CUBE = cube_graph()
CUBE_DIAG = cube_with_diagonal()

# cube labels of (z1, ..., z6) when x = 000 and y = 111
HEXAGON_CUBE_LABELS = (1, 3, 2, 6, 4, 5)


@dataclass(frozen=True)
class CubeWitness:
    """Hexagon ``z1..z6`` between ``x`` and ``y``: odd z's in N(x), even z's in N(y)."""

    x: int
    y: int
    hexagon: tuple[int, int, int, int, int, int]

    def embedding(self) -> tuple[int, ...]:
        """Host vertex for each cube label 0..7 (``x`` at 000, ``y`` at 111)."""
        emb = [0] * 8
        emb[0], emb[7] = self.x, self.y
        for label, z in zip(HEXAGON_CUBE_LABELS, self.hexagon):
            emb[label] = z
        return tuple(emb)

    def verify(self, g: Graph) -> bool:
        z = self.hexagon
        if len(set(z) | {self.x, self.y}) != 8:
            return False
        if not all(g.has_edge(self.x, v) for v in z[0::2]):
            return False
        if not all(g.has_edge(self.y, v) for v in z[1::2]):
            return False
        return all(g.has_edge(z[i], z[(i + 1) % 6]) for i in range(6))


def hexagon_between(g: Graph, x: int, y: int) -> CubeWitness | None:
    """Exhaustive search for a hexagon between ``x`` and ``y``.

    Rotations and reflections are factored out by requiring ``z1 < z3, z5`` and
    ``z2 < z6``; the search runs in lexicographic order, so the returned
    witness is the lexicographically least one.
    """
    if x == y:
        raise DomainError("hexagon_between needs two distinct vertices")
    adj = g.rows
    outside = ~((1 << x) | (1 << y))
    nx = adj[x] & outside
    ny = adj[y] & outside
    if nx.bit_count() < 3 or ny.bit_count() < 3:
        return None
    for z1 in iter_bits(nx):
        above = ~((1 << (z1 + 1)) - 1)
        u1 = 1 << z1
        for z2 in iter_bits(ny & adj[z1] & ~u1):
            u2 = u1 | (1 << z2)
            for z3 in iter_bits(nx & adj[z2] & above & ~u2):
                u3 = u2 | (1 << z3)
                for z4 in iter_bits(ny & adj[z3] & ~u3):
                    u4 = u3 | (1 << z4)
                    for z5 in iter_bits(nx & adj[z4] & above & ~u4):
                        u5 = u4 | (1 << z5)
                        last = ny & adj[z5] & adj[z1] & ~u5 & ~((1 << (z2 + 1)) - 1)
                        if last:
                            z6 = (last & -last).bit_length() - 1
                            return CubeWitness(x, y, (z1, z2, z3, z4, z5, z6))
    return None


def _core_mask(g: Graph, k: int) -> int:
    """Vertices of the k-core."""
    alive = (1 << g.n) - 1
    changed = True
    while changed:
        changed = False
        for v in iter_bits(alive):
            if (g.adj(v) & alive).bit_count() < k:
                alive &= ~(1 << v)
                changed = True
    return alive


def _search_order(pattern: Graph) -> list[int]:
    order: list[int] = []
    placed = 0
    remaining = set(range(pattern.n))
    while remaining:
        v = max(
            remaining,
            key=lambda p: ((pattern.adj(p) & placed).bit_count(), pattern.degree(p), -p),
        )
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    return order


def find_embedding(pattern: Graph, host: Graph, allowed: int | None = None) -> tuple[int, ...] | None:
    """Injective map ``pattern -> host`` preserving edges (non-induced), or ``None``.

    ``result[p]`` is the host image of pattern vertex ``p``. Pattern vertices are
    placed most-constrained first; host candidates are tried in index order.
    """
    if pattern.n > host.n or pattern.e > host.e:
        return None
    if allowed is None:
        allowed = (1 << host.n) - 1
    order = _search_order(pattern)
    back = [[q for q in order[:i] if pattern.has_edge(p, q)] for i, p in enumerate(order)]
    need = [pattern.degree(p) for p in order]
    by_degree = {}
    for d in set(need):
        by_degree[d] = sum(1 << v for v in iter_bits(allowed) if host.degree(v) >= d)
    image = [-1] * pattern.n
    hadj = host.rows

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        cand = by_degree[need[i]] & ~used
        for q in back[i]:
            cand &= hadj[image[q]]
        p = order[i]
        for v in iter_bits(cand):
            image[p] = v
            if place(i + 1, used | (1 << v)):
                return True
        image[p] = -1
        return False

    return tuple(image) if place(0, 0) else None


def find_cube(g: Graph) -> tuple[int, ...] | None:
    """Embedding of Q (indexed by cube label 0..7), or ``None``."""
    if g.n < 8 or g.e < 12:
        return None
    core = _core_mask(g, 3)
    if core.bit_count() < 8:
        return None
    return find_embedding(CUBE, g, core)


def find_cube_diag(g: Graph) -> tuple[int, ...] | None:
    """Embedding of Q+ (cube labels, diagonal 0--7), or ``None``."""
    if g.n < 8 or g.e < 13:
        return None
    core = _core_mask(g, 3)
    if core.bit_count() < 8:
        return None
    if sum(1 for v in iter_bits(core) if (g.adj(v) & core).bit_count() >= 4) < 2:
        return None
    return find_embedding(CUBE_DIAG, g, core)


def contains_cube(g: Graph) -> bool:
    return find_cube(g) is not None


def contains_cube_diag(g: Graph) -> bool:
    return find_cube_diag(g) is not None


def find_c6(g: Graph) -> tuple[int, ...] | None:
    return next(six_cycles(g), None)


def contains_c6(g: Graph) -> bool:
    return find_c6(g) is not None


def contains_c4(g: Graph) -> bool:
    adj = g.rows
    for x in range(g.n):
        for y in range(x + 1, g.n):
            if (adj[x] & adj[y]).bit_count() >= 2:
                return True
    return False


def contains_k3(g: Graph) -> bool:
    adj = g.rows
    return any(adj[u] & adj[v] for u, v in g.edges())
