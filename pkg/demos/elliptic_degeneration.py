"""Degenerate a plane cubic in two ways and compare the limit Hodge tables.

Run: python3 demos/elliptic_degeneration.py
"""

from tropical_nearby.hodge import NewtonData, full_report
from tropical_nearby.lattice_geometry import dilated_simplex
from tropical_nearby.tropical import dual_complex, tropical_motivic_fiber

pts = list(dilated_simplex(3, 2).points)

cases = {
    # strictly convex heights cut the triangle into nine unit triangles
    "honeycomb": [a * a + a * b + b * b for a, b in pts],
    # constant heights: no degeneration at all
    "trivial": [0] * len(pts),
}

for name, lifts in cases.items():
    data = NewtonData(pts, lifts)
    rep = full_report(data)
    print(f"== {name}: {len(data.subdivision.maximal_cells)} maximal cells")
    print(f"   E(X_inf)   = {rep.e_limit}")
    print(f"   E(X_gen)   = {rep.e_generic}")
    print(f"   genus {rep.genus}, Euler characteristic {rep.euler}, b_1(Gamma) = {rep.betti_gamma_d}")
    for m in range(3):
        row = {pq: h for pq, h in rep.table.row(m).items() if h}
        print(f"   H^{m}: {row}")
    psi = tropical_motivic_fiber(dual_complex(data))
    print(f"   nearby fiber summed over the tropical curve: {psi}")
