"""Quartic surfaces: generic Hodge diamond and a maximal degeneration.

Run: python3 demos/k3_degeneration.py   (takes a few seconds)
"""

from tropical_nearby.hodge import NewtonData, e_generic_fiber, euler_generic, full_report
from tropical_nearby.lattice_geometry import dilated_simplex

P = dilated_simplex(4, 3)
pts = list(P.points)
print("generic quartic:", e_generic_fiber(P), "| Euler characteristic", euler_generic(P))

# a generic convex quadratic: fine enough to give a unimodular triangulation
lifts = [7 * x * x + 11 * y * y + 13 * z * z + 3 * x * y + 5 * y * z + 2 * x * z for x, y, z in pts]
data = NewtonData(pts, lifts)
rep = full_report(data)
print(f"subdivision: {len(data.subdivision.maximal_cells)} tetrahedra, unimodular = {data.subdivision.is_unimodular()}")
print("limit E-polynomial:", rep.e_limit)
print("middle row of the limit table:")
for (p, q), h in sorted(rep.table.row(2).items()):
    if h:
        print(f"  h^{{{p},{q}}}(H^2) = {h}")
print("weight-0 part (b_2 of the dual complex):", rep.betti_gamma_d)
