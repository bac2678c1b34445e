"""Shared test inputs: Newton data (polytope points plus heights), small
subdivided simplices and matroids."""

import itertools
import random

from tropical_nearby.lattice_geometry import box, dilated_simplex
from tropical_nearby.matroids import Matroid


def _pts(P):
    return [tuple(p) for p in P.points]


def _quad(p):
    return sum(x * x for x in p) + (p[0] * p[1] if len(p) > 1 else 0)


def _seeded(points, seed, hi=8):
    rng = random.Random(seed)
    return [rng.randint(0, hi) for _ in points]


def _hexagon():
    return [(1, 0), (2, 0), (0, 1), (1, 1), (2, 1), (3, 1), (0, 2), (1, 2), (2, 2)]


def newton_corpus():
    """(name, points, lifts) triples; polytope dimensions 1 to 4."""
    out = []
    t3 = _pts(dilated_simplex(3, 2))
    out.append(("cubic_honeycomb", t3, [_quad(p) for p in t3]))
    out.append(("cubic_zero", t3, [0] * len(t3)))
    out.append(("cubic_random", t3, _seeded(t3, 11)))
    out.append(("cubic_random_b", t3, _seeded(t3, 12)))
    t4 = _pts(dilated_simplex(4, 2))
    out.append(("quartic_curve_honeycomb", t4, [_quad(p) for p in t4]))
    t2 = _pts(dilated_simplex(2, 2))
    out.append(("conic_random", t2, _seeded(t2, 3)))
    sq = _pts(box(1, 1))
    out.append(("square_zero", sq, [0] * 4))
    sq2 = _pts(box(2, 2))
    out.append(("square2_cubes", sq2, [a * a + b * b for a, b in sq2]))
    out.append(("square2_tri", sq2, [_quad(p) for p in sq2]))
    hx = _hexagon()
    out.append(("hexagon_random", hx, _seeded(hx, 5)))
    q4 = _pts(dilated_simplex(4, 3))
    out.append(("quartic_surface_zero", q4, [0] * len(q4)))
    out.append(("quartic_surface_lift", q4, [_quad(p) for p in q4]))
    q2 = _pts(dilated_simplex(2, 3))
    out.append(("quadric_surface_lift", q2, [_quad(p) for p in q2]))
    c1 = _pts(box(1, 1, 1))
    out.append(("cube_zero", c1, [0] * len(c1)))
    c2 = _pts(box(2, 2, 2))
    out.append(("cube2_lift", c2, [a * a + b * b + c * c for a, b, c in c2]))
    t33 = _pts(dilated_simplex(3, 3))
    out.append(("cubic_surface_random", t33, _seeded(t33, 7)))
    t24 = _pts(dilated_simplex(2, 4))
    out.append(("quadric_threefold_lift", t24, [_quad(p) for p in t24]))
    seg = [(i,) for i in range(4)]
    out.append(("segment_unit", seg, [i * i for i in range(4)]))
    return out


def subdivided_triangles():
    """(points, lifts) for at least five subdivided triangles."""
    t3 = _pts(dilated_simplex(3, 2))
    t2 = _pts(dilated_simplex(2, 2))
    t4 = _pts(dilated_simplex(4, 2))
    corners = [(0, 0), (3, 0), (0, 3), (1, 1)]
    return [
        (t3, [_quad(p) for p in t3]),
        (t3, _seeded(t3, 1, 4)),
        (t2, _seeded(t2, 2, 3)),
        (t4, _seeded(t4, 3, 9)),
        (corners, [0, 0, 0, -1]),
        (t3, [0] * len(t3)),
    ]


def subdivided_tetrahedra():
    t2 = _pts(dilated_simplex(2, 3))
    t1 = _pts(dilated_simplex(1, 3))
    with_center = [(0, 0, 0), (4, 0, 0), (0, 4, 0), (0, 0, 4), (1, 1, 1)]
    return [
        (t2, [_quad(p) for p in t2]),
        (t2, _seeded(t2, 4, 5)),
        (with_center, [0, 0, 0, 0, -1]),
        (t1, [0, 0, 0, 0]),
    ]


def matroid_corpus():
    k4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    fano_lines = [{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 0}, {5, 6, 1}, {6, 0, 2}]
    fano_bases = [b for b in itertools.combinations(range(7), 3) if set(b) not in fano_lines]
    parallel = [(0, 1), (0, 1), (1, 2), (0, 2)]
    out = {
        "U(1,1)": Matroid.uniform(1, 1),
        "U(2,3)": Matroid.uniform(2, 3),
        "U(3,3)": Matroid.uniform(3, 3),
        "U(2,5)": Matroid.uniform(2, 5),
        "U(3,5)": Matroid.uniform(3, 5),
        "U(3,6)": Matroid.uniform(3, 6),
        "U(4,7)": Matroid.uniform(4, 7),
        "U(3,9)": Matroid.uniform(3, 9),
        "M(K4)": Matroid.graphic(k4),
        "Fano": Matroid(7, fano_bases),
        "triangle_with_parallel": Matroid.graphic(parallel),
        "boolean4": Matroid.uniform(4, 4),
    }
    return out


def tropical_line(kind="matroid"):
    """Tropical line in R^2: one vertex and the three standard rays."""
    from tropical_nearby.tropical import TropicalComplex, TropicalFace, eclass_of_matroid

    U23, U11 = Matroid.uniform(2, 3), Matroid.uniform(1, 1)
    lab = (lambda M: M) if kind == "matroid" else eclass_of_matroid
    faces = [TropicalFace((0,), (), lab(U23))] + [TropicalFace((0,), (j,), lab(U11)) for j in range(3)]
    return TropicalComplex(2, [(0, 0)], [(1, 0), (0, 1), (-1, -1)], faces)


def theta_graph():
    """Two trivalent vertices joined by three paths; the two curved paths
    get a bivalent vertex (label U(2,2)) so every edge is a segment."""
    from tropical_nearby.tropical import TropicalComplex, TropicalFace

    U23, U22, U11 = Matroid.uniform(2, 3), Matroid.uniform(2, 2), Matroid.uniform(1, 1)
    verts = [(0, 0), (2, 0), (1, 1), (1, -1)]
    faces = [
        TropicalFace((0,), (), U23),
        TropicalFace((1,), (), U23),
        TropicalFace((2,), (), U22),
        TropicalFace((3,), (), U22),
    ] + [TropicalFace(e, (), U11) for e in [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]]
    return TropicalComplex(2, verts, [], faces)
