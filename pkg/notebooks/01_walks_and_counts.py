"""
Walks, paths and short cycles
=============================

A tour of the counting layer: 3-walks against their degree-based lower
bound, 3-paths on complete bipartite graphs, and 4- and 6-cycle counts on
the cube and on a large random graph.
"""

import time

import numpy as np

from turanlab import (
    c4_count,
    c6_count,
    complete_bipartite_graph,
    cube_graph,
    cycle_graph,
    path3_count,
    random_graph,
    walk_count,
)
from turanlab.bounds import blakley_roy_bound, thm1_w3_bound

# Regular graphs sit exactly on the walk bound: n * d**3 walks of length 3.
for g, name in ((cycle_graph(9), "C9"), (cube_graph(), "Q"), (complete_bipartite_graph(4, 4), "K44")):
    rep = thm1_w3_bound(g)
    print(f"{name:4s} W3={walk_count(g, 3):6d}  bound={rep.bound_value:10.3f}  tight={rep.tight}")

# Irregular graphs leave slack.  K_{a,b} has 2 a^2 b^2 three-walks.
print()
print(" a  b     W3  power-mean bound  average-degree bound")
for a, b in ((1, 5), (2, 3), (2, 6), (3, 5)):
    g = complete_bipartite_graph(a, b)
    print(
        f"{a:2d} {b:2d} {walk_count(g, 3):6d}"
        f"  {thm1_w3_bound(g).bound_value:16.3f}  {blakley_roy_bound(g, 3).bound_value:20.3f}"
    )

# 3-paths on K_{a,b} follow ab(a-1)(b-1).
table = np.array([[path3_count(complete_bipartite_graph(a, b)) for b in range(1, 6)] for a in range(1, 6)])
print()
print("P3(K_{a,b}) for a, b = 1..5")
print(table)

# The cube: six square faces and sixteen hexagons.
q = cube_graph()
print()
print("cube: C4 =", c4_count(q), " C6 =", c6_count(q))

# Counting at scale: n = 1000, e = 20000.
g = random_graph(1000, m=20_000, seed=1)
for label, fn in (("W3", lambda h: walk_count(h, 3)), ("C4", c4_count), ("C6", c6_count)):
    start = time.perf_counter()
    value = fn(g)
    print(f"{label}: {value:>12d}   {time.perf_counter() - start:.3f}s")
