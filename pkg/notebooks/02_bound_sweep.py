"""
Sweeping every inequality over small graphs
===========================================

Every isomorphism class up to seven vertices, every bound, every
2-colouring of the bipartite ones.  Most bounds hold everywhere; two of the
stated lower bounds on counts do not, and the smallest counterexamples are
printed below.
"""

from collections import Counter

from turanlab import Graph, cycle_graph, evaluate, parse_graph6, sweep_bounds
from turanlab.bounds import lem10_c4_bip_lower
from turanlab.graph import BipartiteView

rep = sweep_bounds(7)
print(f"{rep.graphs} classes, {rep.evaluations} evaluations")
print("verdicts:", rep.verdict_counts)

per_bound = Counter(v["bound_id"] for v in rep.violations)
print("violations by bound:", dict(per_bound))

tight = Counter(t["bound_id"] for t in rep.tight)
print("tight cases by bound:", dict(tight))

# The 4-cycle lower bound in (a, b, e) goes positive when e < b,
# e.g. a single edge inside a 2 + 2 bipartition.
g = Graph.from_edges(4, [(0, 1)])
view = BipartiteView(g, frozenset({0, 2}), frozenset({1, 3}))
print()
print("one edge, a = b = 2: bound", lem10_c4_bip_lower(2, 2, 1), "vs 0 four-cycles")
print(evaluate("lem10_c4_bip", g, view)[0])
small = [v for v in rep.violations if v["bound_id"] == "lem10_c4_bip"]


def e_below_b(v):
    h = parse_graph6(v["graph6"])
    return h.e < h.n - len(v["class_a"])


print(f"{len(small)} violations; all have e < b:", all(e_below_b(v) for v in small))

# The e^3/(ab) - Delta e comparison bound exceeds the 3-path count of C4.
print()
print(evaluate("sidorenko_p3", cycle_graph(4))[0])
