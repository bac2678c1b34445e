"""Nearby fibers of matroidal tropical curves, computed from flat lattices.

Run: python3 demos/matroidal_curves.py
"""

from tropical_nearby.matroids import Matroid, char_poly, complement_class
from tropical_nearby.tropical import (
    TropicalComplex,
    TropicalFace,
    curve_graph_fiber,
    matroidal_euler,
    matroidal_fiber,
)

U23, U22, U11 = Matroid.uniform(2, 3), Matroid.uniform(2, 2), Matroid.uniform(1, 1)
print("U(2,3): chi =", char_poly(U23), "| complement class =", complement_class(U23))

line = TropicalComplex(
    2, [(0, 0)], [(1, 0), (0, 1), (-1, -1)],
    [TropicalFace((0,), (), U23)] + [TropicalFace((0,), (j,), U11) for j in range(3)],
)
print("tropical line:  psi =", matroidal_fiber(line), "| e =", matroidal_euler(line))

# two trivalent vertices joined by three edges; two edges are bent at a
# bivalent vertex so that every edge is a straight segment
theta = TropicalComplex(
    2, [(0, 0), (2, 0), (1, 1), (1, -1)], [],
    [TropicalFace((0,), (), U23), TropicalFace((1,), (), U23),
     TropicalFace((2,), (), U22), TropicalFace((3,), (), U22)]
    + [TropicalFace(e, (), U11) for e in [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]],
)
print("theta graph:    psi =", matroidal_fiber(theta), "| e =", matroidal_euler(theta))
psi, g = curve_graph_fiber(V=2, B=3, U=0)
print("from counts:    psi =", psi, "| genus", g)
