"""Constructive reductions.

* ``erdos_bipartite_subgraph``: a bipartite spanning subgraph in which every
  vertex keeps at least half its degree (local-search max-cut).
* ``gyori_c4free_reduction``: a C4-free spanning subgraph of a C6-free graph
  keeping at least half the edges.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .detect import contains_c4, find_c6
from .errors import InvariantError, PreconditionError
from .graph import BipartiteView, Graph, bipartition, iter_bits
from .graph6 import to_graph6

__all__ = [
    "ReductionResult",
    "ERDOS_HALF_DEGREE",
    "GYORI_HALF_EDGES",
    "erdos_bipartite_subgraph",
    "gyori_c4free_reduction",
    "c4_clusters",
]

ERDOS_HALF_DEGREE = "erdos_half_degree"
GYORI_HALF_EDGES = "gyori_half_edges"


@dataclass(frozen=True)
class ReductionResult:
    output: Graph
    input_edges: int
    guarantee: str

    @property
    def kept_edges(self) -> int:
        return self.output.e

    def to_dict(self) -> dict:
        return {
            "guarantee": self.guarantee,
            "input_edges": self.input_edges,
            "kept_edges": self.kept_edges,
            "output_graph6": to_graph6(self.output),
        }


def _bfs_coloring(g: Graph) -> list[int]:
    """Each vertex gets the opposite side to its BFS parent; roots go to side 0."""
    color = [-1] * g.n
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
                    queue.append(y)
    return color


def erdos_bipartite_subgraph(g: Graph) -> tuple[ReductionResult, BipartiteView]:
    """Bipartite subgraph with ``2 deg_out(x) >= deg_in(x)`` for every vertex.

    Starts from the BFS colouring (proper whenever ``g`` is bipartite) and flips
    the least-index vertex having strictly more neighbours on its own side
    until none remains. Each flip raises the cut size, so this terminates.
    """
    color = _bfs_coloring(g)
    side = [0, 0]
    for x, c in enumerate(color):
        side[c] |= 1 << x
    adj = g.rows
    while True:
        for x in range(g.n):
            c = color[x]
            own = (adj[x] & side[c]).bit_count()
            if 2 * own > adj[x].bit_count():
                side[c] &= ~(1 << x)
                side[1 - c] |= 1 << x
                color[x] = 1 - c
                break
        else:
            break
    edges = [(u, v) for u, v in g.edges() if color[u] != color[v]]
    out = Graph.from_edges(g.n, edges)
    class_a = frozenset(x for x in range(g.n) if color[x] == 0)
    view = BipartiteView(out, class_a, frozenset(range(g.n)) - class_a)
    return ReductionResult(out, g.e, ERDOS_HALF_DEGREE), view


class _DisjointSet:
    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx


def c4_clusters(g: Graph) -> list[list[tuple[int, int]]]:
    """Group edges lying on 4-cycles; two 4-cycles sharing an edge share a cluster.

    Clusters are edge-disjoint by construction and come back sorted by their
    least edge, each as a sorted edge list.
    """
    ds = _DisjointSet()
    adj = g.rows
    for x in range(g.n):
        for y in range(x + 1, g.n):
            common = adj[x] & adj[y]
            if common.bit_count() < 2:
                continue
            spokes = [(min(x, s), max(x, s)) for s in iter_bits(common)]
            spokes += [(min(y, s), max(y, s)) for s in iter_bits(common)]
            for edge in spokes[1:]:
                ds.union(spokes[0], edge)
    groups: dict = {}
    for edge in ds.parent:
        groups.setdefault(ds.find(edge), []).append(edge)
    return sorted((sorted(edges) for edges in groups.values()), key=lambda es: es[0])


def _as_k2_block(edges: list[tuple[int, int]]) -> tuple[int, int, list[int]] | None:
    """``(u, v, S)`` if the edges are exactly K({u, v}, S) with ``|S| >= 2``."""
    nbrs: dict[int, int] = {}
    for p, q in edges:
        nbrs[p] = nbrs.get(p, 0) | (1 << q)
        nbrs[q] = nbrs.get(q, 0) | (1 << p)
    verts = sorted(nbrs)
    if len(verts) < 4 or len(edges) != 2 * (len(verts) - 2):
        return None
    width = len(verts) - 2
    for u in verts:
        if nbrs[u].bit_count() != width:
            continue
        for v in verts:
            if v > u and nbrs[v] == nbrs[u] and not (nbrs[u] >> v) & 1:
                return u, v, list(iter_bits(nbrs[u]))
    return None


def _max_c4free_subset(edges: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Largest C4-free subset of ``edges`` by branch and bound (first found among ties)."""
    nbr: dict[int, int] = {}
    best: list[tuple[int, int]] = []
    chosen: list[tuple[int, int]] = []

    def closes_c4(u: int, v: int) -> bool:
        nu, nv = nbr.get(u, 0), nbr.get(v, 0)
        for w in iter_bits(nu & ~(1 << v)):
            if nbr.get(w, 0) & nv & ~(1 << u):
                return True
        return False

    def go(i: int):
        nonlocal best
        if len(chosen) + len(edges) - i <= len(best):
            return
        if i == len(edges):
            best = list(chosen)
            return
        u, v = edges[i]
        if not closes_c4(u, v):
            nbr[u] = nbr.get(u, 0) | (1 << v)
            nbr[v] = nbr.get(v, 0) | (1 << u)
            chosen.append((u, v))
            go(i + 1)
            chosen.pop()
            nbr[u] &= ~(1 << v)
            nbr[v] &= ~(1 << u)
        go(i + 1)

    go(0)
    return best


def gyori_c4free_reduction(g: Graph, *, exact_cluster_limit: int = 40) -> ReductionResult:
    """C4-free subgraph of a C6-free graph with at least half of its edges.

    In a bipartite C6-free graph every 4-cycle cluster is a single K_{2,beta};
    each is thinned to the star at ``u`` plus one edge at ``v`` (beta + 1 of
    2 beta edges). A bipartite cluster of any other shape raises
    :class:`InvariantError`. Non-bipartite C6-free graphs can have other
    clusters (K4, wheels); those are thinned to a maximum C4-free subset.
    """
    witness = find_c6(g)
    if witness is not None:
        raise PreconditionError("input contains a 6-cycle", witness)
    bipartite = bipartition(g) is not None
    removed: set[tuple[int, int]] = set()
    for cluster in c4_clusters(g):
        block = _as_k2_block(cluster)
        if block is not None:
            u, v, spokes = block
            keep = {(min(u, s), max(u, s)) for s in spokes}
            keep.add((min(v, spokes[0]), max(v, spokes[0])))
        elif bipartite:
            raise InvariantError(f"4-cycle cluster {cluster} of a bipartite C6-free graph is not a K_2,beta")
        elif len(cluster) <= exact_cluster_limit:
            keep = set(_max_c4free_subset(cluster))
        else:
            raise InvariantError(f"4-cycle cluster with {len(cluster)} edges exceeds exact_cluster_limit")
        if 2 * len(keep) < len(cluster):
            raise InvariantError(f"cluster {cluster} keeps fewer than half its edges")
        removed.update(edge for edge in cluster if edge not in keep)
    out = Graph.from_edges(g.n, (edge for edge in g.edges() if edge not in removed))
    if contains_c4(out):
        raise InvariantError("thinned graph still contains a 4-cycle")
    return ReductionResult(out, g.e, GYORI_HALF_EDGES)
