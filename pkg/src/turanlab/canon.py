"""Canonical labelling for small graphs by individualisation and refinement.

The certificate of a graph is the largest upper-triangle adjacency code
(graph6 bit order) over the leaves of a search tree: start from the degree
partition, refine to an equitable ordered partition, and branch by
individualising each vertex of the first non-singleton cell. Every step is
isomorphism-invariant, so isomorphic graphs get equal certificates. Branches
on vertices that are twins of an already tried vertex are skipped: swapping
twins is an automorphism fixing the current partition.
"""

from __future__ import annotations

from .graph import Graph, iter_bits

__all__ = ["canonical_labeling", "canonical_form", "canonical_graph", "adjacency_code"]


def adjacency_code(adj: tuple[int, ...] | list[int], order: list[int]) -> int:
    """Upper-triangle code of the graph relabelled so that ``order[i]`` becomes ``i``."""
    code = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = (code << 1) | ((row >> order[i]) & 1)
    return code


def _refine(adj, cells: list[int]) -> list[int]:
    while True:
        out = []
        for cell in cells:
            if cell & (cell - 1) == 0:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], int] = {}
            for v in iter_bits(cell):
                sig = tuple((adj[v] & c).bit_count() for c in cells)
                groups[sig] = groups.get(sig, 0) | (1 << v)
            out.extend(groups[sig] for sig in sorted(groups))
        if len(out) == len(cells):
            return out
        cells = out


def canonical_labeling(g: Graph) -> tuple[list[int], int]:
    """Return ``(order, code)``: canonical vertex order and its certificate."""
    n = g.n
    adj = g.rows
    if n == 0:
        return [], 0
    by_degree: dict[int, int] = {}
    for v in range(n):
        d = adj[v].bit_count()
        by_degree[d] = by_degree.get(d, 0) | (1 << v)
    start = [by_degree[d] for d in sorted(by_degree)]

    best_code = -1
    best_order: list[int] = []

    def search(cells: list[int]) -> None:
        nonlocal best_code, best_order
        cells = _refine(adj, cells)
        if len(cells) == n:
            order = [c.bit_length() - 1 for c in cells]
            code = adjacency_code(adj, order)
            if code > best_code:
                best_code, best_order = code, order
            return
        idx = next(i for i, c in enumerate(cells) if c & (c - 1))
        target = cells[idx]
        tried: list[int] = []
        for v in iter_bits(target):
            bv = 1 << v
            if any((adj[v] & ~(1 << w)) == (adj[w] & ~bv) for w in tried):
                continue
            tried.append(v)
            search(cells[:idx] + [bv, target ^ bv] + cells[idx + 1 :])

    search(start)
    return best_order, best_code


def canonical_form(g: Graph) -> tuple[int, int]:
    """Hashable certificate ``(n, code)``; equal iff the graphs are isomorphic."""
    return g.n, canonical_labeling(g)[1]


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of ``g``'s isomorphism class."""
    order, _ = canonical_labeling(g)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return g.relabel(perm)
