"""
Cubes, hexagons and exact Turán numbers
=======================================

The cube appears as soon as two vertices x, y have a hexagon alternating
between their neighbourhoods.  This script shows the witness on Q itself,
then computes exact extremal numbers for small hosts and sets them beside
the upper bounds.
"""

from turanlab import (
    complete_bipartite_graph,
    cube_graph,
    erdos_bipartite_subgraph,
    extremal_number,
    extremal_number_bipartite,
    gyori_c4free_reduction,
    hexagon_between,
    random_graph,
    to_graph6,
)
from turanlab.bounds import cor4_c6_bip_bound, cor6_c6_bound, eq10_cube_bip_bound, eq11_cube_bound

q = cube_graph()
w = hexagon_between(q, 0b000, 0b111)
print("hexagon between 000 and 111:", [format(v, "03b") for v in w.hexagon])
print("assembled embedding verifies:", w.verify(q))

print()
print(" n  ex(n,K3)  ex(n,C4)  ex(n,C6)  C6 bound  ex(n,Q)  Q bound")
for n in range(1, 9):
    k3 = extremal_number(n, "K3").extremal_edges
    c4 = extremal_number(n, "C4").extremal_edges
    c6 = extremal_number(n, "C6").extremal_edges
    cube = extremal_number(n, "Q").extremal_edges
    print(f"{n:2d} {k3:9d} {c4:9d} {c6:9d} {cor6_c6_bound(n):9.1f} {cube:8d} {eq11_cube_bound(n):8.1f}")

print()
print(" a  b  ex(a,b,C6)  bound")
for a in range(2, 5):
    for b in range(a, 5):
        val = extremal_number_bipartite(a, b, "C6").extremal_edges
        print(f"{a:2d} {b:2d} {val:11d} {cor4_c6_bip_bound(a, b):6.1f}")
res = extremal_number_bipartite(4, 4, "Q")
print("ex(4,4,Q) =", res.extremal_edges, " bound", round(eq10_cube_bip_bound(4, 4), 1), " witness", to_graph6(res.witness))

# Reductions: half-degree bipartite subgraphs and C4-free thinning.
g = random_graph(40, p=0.2, seed=3)
out, _ = erdos_bipartite_subgraph(g)
print()
print(f"bipartite subgraph keeps {out.kept_edges} of {g.e} edges")
k = complete_bipartite_graph(2, 6)
thin = gyori_c4free_reduction(k)
print(f"K_2,6 thinned to {thin.kept_edges} of {k.e} edges, C4-free")
