"""Immutable simple graphs on vertices ``0..n-1`` backed by integer bitsets.

Row ``x`` of the adjacency is a Python int whose bit ``y`` is set iff ``xy`` is
an edge, so neighbourhood intersection (codegree) is one ``&`` and a popcount.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import DomainError

__all__ = [
    "Graph",
    "BipartiteView",
    "DegreeSequence",
    "iter_bits",
    "bipartition",
    "find_odd_cycle",
    "bipartite_views",
    "degree_sequence",
    "empty_graph",
    "complete_graph",
    "cycle_graph",
    "path_graph",
    "star_graph",
    "complete_bipartite_graph",
    "cube_graph",
    "cube_with_diagonal",
    "random_graph",
]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Undirected simple graph with dense 0-based vertex indexing."""

    __slots__ = ("_n", "_adj", "_m")

    def __init__(self, n: int, adjacency: Sequence[int]):
        if n < 0:
            raise DomainError("vertex count must be nonnegative")
        if len(adjacency) != n:
            raise DomainError(f"expected {n} adjacency rows, got {len(adjacency)}")
        full = (1 << n) - 1
        for x, row in enumerate(adjacency):
            if row & ~full:
                raise DomainError(f"row {x} references a vertex >= {n}")
            if (row >> x) & 1:
                raise DomainError(f"loop at vertex {x}")
            for y in iter_bits(row):
                if not (adjacency[y] >> x) & 1:
                    raise DomainError(f"asymmetric adjacency between {x} and {y}")
        self._n = n
        self._adj = tuple(adjacency)
        self._m = sum(row.bit_count() for row in self._adj) // 2

    @classmethod
    def _trusted(cls, n: int, adjacency: tuple[int, ...]) -> "Graph":
        g = object.__new__(cls)
        g._n = n
        g._adj = adjacency
        g._m = sum(row.bit_count() for row in adjacency) // 2
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge {u}{v} out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._trusted(n, tuple(rows))

    @classmethod
    def from_matrix(cls, matrix) -> "Graph":
        a = np.asarray(matrix)
        n = a.shape[0]
        edges = [(int(u), int(v)) for u, v in zip(*np.nonzero(np.triu(a, 1)))]
        g = cls.from_edges(n, edges)
        if not np.array_equal(a != 0, g.adjacency_matrix() != 0):
            raise DomainError("matrix is not a symmetric 0/1 matrix with zero diagonal")
        return g

    # -- basic accessors ---------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def e(self) -> int:
        return self._m

    def __len__(self) -> int:
        return self._n

    def adj(self, x: int) -> int:
        """Neighbourhood of ``x`` as a bitset."""
        return self._adj[x]

    @property
    def rows(self) -> tuple[int, ...]:
        return self._adj

    def neighbors(self, x: int) -> list[int]:
        return list(iter_bits(self._adj[x]))

    def degree(self, x: int) -> int:
        return self._adj[x].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self._adj]

    def has_edge(self, x: int, y: int) -> bool:
        return bool((self._adj[x] >> y) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, row in enumerate(self._adj):
            out.extend((u, v) for v in iter_bits(row >> (u + 1) << (u + 1)))
        return out

    def adjacency_matrix(self, dtype=np.int64) -> np.ndarray:
        a = np.zeros((self._n, self._n), dtype=dtype)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a

    # -- derived graphs ----------------------------------------------------

    def add_vertex(self, neighbor_mask: int) -> "Graph":
        """Return a copy with a new vertex ``n`` joined to ``neighbor_mask``."""
        n = self._n
        rows = [row | (((neighbor_mask >> x) & 1) << n) for x, row in enumerate(self._adj)]
        rows.append(neighbor_mask)
        return Graph._trusted(n + 1, tuple(rows))

    def with_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        return Graph.from_edges(self._n, itertools.chain(self.edges(), edges))

    def edge_subgraph(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Spanning subgraph on the same vertex set keeping only ``edges``."""
        edges = list(edges)
        for u, v in edges:
            if not self.has_edge(u, v):
                raise DomainError(f"{u}{v} is not an edge")
        return Graph.from_edges(self._n, edges)

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        index = {v: i for i, v in enumerate(vertices)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return Graph.from_edges(len(vertices), edges)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Vertex ``x`` becomes ``perm[x]``."""
        return Graph.from_edges(self._n, ((perm[u], perm[v]) for u, v in self.edges()))

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, e={self._m})"


@dataclass(frozen=True)
class BipartiteView:
    """A graph together with a proper 2-colouring into ``class_a``/``class_b``.

    One class may be empty only when the graph has no edges.
    """

    graph: Graph
    class_a: frozenset[int]
    class_b: frozenset[int]
    mask_a: int = field(init=False, repr=False, compare=False)
    mask_b: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        g = self.graph
        if self.class_a & self.class_b:
            raise DomainError("bipartition classes overlap")
        if self.class_a | self.class_b != frozenset(range(g.n)):
            raise DomainError("bipartition classes do not cover the vertex set")
        mask_a = sum(1 << x for x in self.class_a)
        mask_b = sum(1 << x for x in self.class_b)
        for x in self.class_a:
            if g.adj(x) & mask_a:
                raise DomainError(f"vertex {x} has a neighbour in its own class")
        for x in self.class_b:
            if g.adj(x) & mask_b:
                raise DomainError(f"vertex {x} has a neighbour in its own class")
        object.__setattr__(self, "mask_a", mask_a)
        object.__setattr__(self, "mask_b", mask_b)

    @property
    def a(self) -> int:
        return len(self.class_a)

    @property
    def b(self) -> int:
        return len(self.class_b)

    @property
    def e(self) -> int:
        return self.graph.e

    def swapped(self) -> "BipartiteView":
        return BipartiteView(self.graph, self.class_b, self.class_a)


@dataclass(frozen=True)
class DegreeSequence:
    degrees: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def total(self) -> int:
        return sum(self.degrees)

    @property
    def d_ave(self) -> Fraction:
        if not self.degrees:
            return Fraction(0)
        return Fraction(self.total, len(self.degrees))

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def power_sum(self, r: float) -> float:
        return float(sum(d**r for d in self.degrees))


def degree_sequence(g: Graph) -> DegreeSequence:
    """Degrees sorted in nonincreasing order."""
    return DegreeSequence(tuple(sorted(g.degrees(), reverse=True)))


def _components(g: Graph) -> list[list[int]]:
    seen = 0
    comps = []
    for root in range(g.n):
        if (seen >> root) & 1:
            continue
        comp, frontier = 0, 1 << root
        while frontier:
            comp |= frontier
            nxt = 0
            for x in iter_bits(frontier):
                nxt |= g.adj(x)
            frontier = nxt & ~comp
        seen |= comp
        comps.append(list(iter_bits(comp)))
    return comps


def _two_color(g: Graph) -> tuple[list[int], tuple[int, ...] | None]:
    """BFS colouring from each component's least vertex, neighbours in index order.

    Returns the colouring and, if one exists, an odd cycle found on the way.
    """
    color = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in iter_bits(g.adj(x)):
                if color[y] == -1:
                    color[y] = 1 - color[x]
                    parent[y] = x
                    depth[y] = depth[x] + 1
                    queue.append(y)
                elif color[y] == color[x]:
                    return color, _odd_cycle_from(x, y, parent, depth)
    return color, None


def _odd_cycle_from(x: int, y: int, parent: list[int], depth: list[int]) -> tuple[int, ...]:
    left, right = [x], [y]
    u, v = x, y
    while depth[u] > depth[v]:
        u = parent[u]
        left.append(u)
    while depth[v] > depth[u]:
        v = parent[v]
        right.append(v)
    while u != v:
        u, v = parent[u], parent[v]
        left.append(u)
        right.append(v)
    # left ends at the common ancestor; right repeats it
    return tuple(left + right[-2::-1])


def bipartition(g: Graph) -> BipartiteView | None:
    """Canonical proper 2-colouring, or ``None`` if ``g`` has an odd cycle.

    Components are processed by least vertex; the side of a component holding
    its least vertex goes to ``class_a``.
    """
    color, odd = _two_color(g)
    if odd is not None:
        return None
    a = frozenset(x for x in range(g.n) if color[x] == 0)
    return BipartiteView(g, a, frozenset(range(g.n)) - a)


def find_odd_cycle(g: Graph) -> tuple[int, ...] | None:
    """Vertex sequence of some odd cycle of ``g``, or ``None`` if bipartite."""
    return _two_color(g)[1]


def bipartite_views(g: Graph, max_components: int = 12) -> list[BipartiteView]:
    """Every proper 2-colouring of ``g`` with both classes nonempty.

    A graph with ``c`` components has ``2**c`` colourings; ``max_components``
    guards against blowup on large edgeless inputs.
    """
    color, odd = _two_color(g)
    if odd is not None:
        return []
    comps = _components(g)
    if len(comps) > max_components:
        raise DomainError(f"{len(comps)} components exceeds max_components={max_components}")
    views = []
    everything = frozenset(range(g.n))
    for flips in itertools.product((0, 1), repeat=len(comps)):
        a = frozenset(
            x for comp, flip in zip(comps, flips) for x in comp if color[x] ^ flip == 0
        )
        if a and len(a) < g.n:
            views.append(BipartiteView(g, a, everything - a))
    return views


# -- standard families -----------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph._trusted(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._trusted(n, tuple(full ^ (1 << x) for x in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise DomainError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    """K_{a,b} with class A = ``0..a-1`` and class B = ``a..a+b-1``."""
    return Graph.from_edges(a + b, ((x, a + y) for x in range(a) for y in range(b)))


def cube_graph() -> Graph:
    """The 3-cube Q; vertex ``i`` is the bit string of ``i``."""
    return Graph.from_edges(8, ((i, i ^ (1 << k)) for i in range(8) for k in range(3) if i < i ^ (1 << k)))


def cube_with_diagonal() -> Graph:
    """Q+ : the cube plus the long diagonal ``000``--``111``."""
    return cube_graph().with_edges([(0, 7)])


def random_graph(n: int, *, p: float | None = None, m: int | None = None, seed=None) -> Graph:
    """G(n, p) if ``p`` is given, otherwise a uniform graph with exactly ``m`` edges."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    pairs = n * (n - 1) // 2
    if (p is None) == (m is None):
        raise DomainError("give exactly one of p and m")
    if p is not None:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        return Graph.from_edges(n, edges)
    if not 0 <= m <= pairs:
        raise DomainError(f"m={m} outside 0..{pairs}")
    chosen = rng.sample(range(pairs), m)
    # unrank pair index -> (u, v) with u < v, column-major like graph6
    edges = []
    for k in chosen:
        v = int((1 + (1 + 8 * k) ** 0.5) // 2)
        while v * (v - 1) // 2 > k:
            v -= 1
        while (v + 1) * v // 2 <= k:
            v += 1
        edges.append((k - v * (v - 1) // 2, v))
    return Graph.from_edges(n, edges)
