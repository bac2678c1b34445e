"""Lattice polytopes, face lattices, Ehrhart data and regular subdivisions.

Everything is exact.  A polytope is handled in *local lattice coordinates*:
a basis of the saturated lattice ``aff(Q) ∩ Z^n`` is chosen once, so lattice
point counts, normalized volumes and h*-polynomials are automatically taken
with respect to the affine lattice of ``Q`` rather than the sublattice spanned
by its vertices.

Facets (of polytopes, of cones, of lifted point sets) are found by brute
force over generator subsets.  This is quadratic-to-exponential in the input
size and meant for curves, surfaces and threefolds; ``TROP_DIM_CAP`` guards
against accidental large inputs.
"""

from __future__ import annotations

import itertools
import os
from fractions import Fraction
from functools import cached_property
from math import factorial, gcd
from typing import Iterable, Mapping, Sequence

from .errors import DegenerateInput, DimensionTooLarge, NonNegativityViolation, NotContained, InvariantViolation
from .exact_math import UnivarPoly, det, lattice_basis, nullspace, primitive, rank, solve
from .posets import FinitePoset, is_eulerian

DEFAULT_DIM_CAP = 6


def dim_cap(override: int | None = None) -> int:
    if override is not None:
        return int(override)
    env = os.environ.get("TROP_DIM_CAP")
    return int(env) if env else DEFAULT_DIM_CAP


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# cones given by generators
# ---------------------------------------------------------------------------


def _integral(v) -> tuple[int, ...]:
    """Positive rescaling of a rational vector to an integer vector."""
    den = 1
    for x in v:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    return tuple(int(Fraction(x) * den) for x in v)


def _midpoint_redundant(gens: list[tuple[int, ...]], vertical: int | None) -> set[int]:
    """Generators that are the midpoint of two others (optionally plus a
    non-negative multiple of the unit vector ``e_vertical``, which must then
    itself be a generator).  Such generators never span an extreme ray."""
    out = set()
    if vertical is None:
        index = {g: i for i, g in enumerate(gens)}
        for i, g in enumerate(gens):
            for j, h in enumerate(gens):
                if j != i:
                    k = index.get(tuple(2 * a - b for a, b in zip(g, h)))
                    if k is not None and k != i:
                        out.add(i)
                        break
        return out
    low: dict[tuple, list[tuple[int, int]]] = {}
    for i, g in enumerate(gens):
        low.setdefault(g[:vertical] + g[vertical + 1 :], []).append((g[vertical], i))
    for i, g in enumerate(gens):
        for j, h in enumerate(gens):
            if j == i:
                continue
            t = tuple(2 * a - b for a, b in zip(g, h))
            if any(k != i and z <= t[vertical] for z, k in low.get(t[:vertical] + t[vertical + 1 :], ())):
                out.add(i)
                break
    return out


def cone_facets(gens: Sequence[Sequence], vertical: int | None = None) -> list[tuple[tuple[int, ...], frozenset]]:
    """Facets of the (pointed) cone spanned by ``gens``.

    Returns ``(normal, members)`` pairs: ``normal`` is a primitive integer
    inner normal inside the linear span of the cone and ``members`` the set
    of generator indices lying on the facet.  Pass ``vertical`` when the unit
    vector in that coordinate is among the generators; it only speeds up the
    search.
    """
    gens = [_integral(g) for g in gens]
    if not gens:
        return []
    m = len(gens[0])
    k = rank(gens)
    if k == 0:
        return []
    ortho = [_integral(v) for v in nullspace(gens, m)]
    skip = _midpoint_redundant(gens, vertical)
    candidates = [i for i, g in enumerate(gens) if any(g) and i not in skip]
    found: dict[tuple, frozenset] = {}
    masks: list[int] = []
    for subset in itertools.combinations(candidates, k - 1):
        smask = 0
        for i in subset:
            smask |= 1 << i
        if any(smask & ~fm == 0 for fm in masks):
            continue
        rows = [gens[i] for i in subset] + ortho
        # generalized cross product: signed maximal minors
        normal = [
            (-1) ** j * det([r[:j] + r[j + 1 :] for r in rows]) if rows else 1
            for j in range(m)
        ]
        if not any(normal):
            continue
        normal = primitive(normal)
        vals = []
        pos = neg = False
        for g in gens:
            v = sum(a * b for a, b in zip(normal, g))
            pos |= v > 0
            neg |= v < 0
            if pos and neg:
                break
            vals.append(v)
        if pos and neg:
            continue
        if neg:
            normal = tuple(-x for x in normal)
            vals = [-v for v in vals]
        members = frozenset(i for i, v in enumerate(vals) if v == 0)
        if len(members) == len(gens):
            continue
        if normal not in found:
            found[normal] = members
            mask = 0
            for i in members:
                mask |= 1 << i
            masks.append(mask)
    return sorted(found.items(), key=lambda kv: sorted(kv[1]))


def cone_faces(gens: Sequence[Sequence]) -> list[frozenset]:
    """All faces of a pointed cone as sets of generator indices (the apex is
    the set of zero generators, usually empty)."""
    everything = frozenset(range(len(gens)))
    facets = [mem for _, mem in cone_facets(gens)]
    faces = {everything}
    frontier = set(facets)
    while frontier:
        faces |= frontier
        new = set()
        for f in frontier:
            for g in facets:
                h = f & g
                if h not in faces:
                    new.add(h)
        frontier = new
    apex = frozenset(i for i, g in enumerate(gens) if not any(g))
    faces.add(apex)
    return sorted(faces, key=lambda s: (len(s), sorted(s)))


# ---------------------------------------------------------------------------
# lattice polytopes
# ---------------------------------------------------------------------------


def _reduce_basis(basis: list[list[int]]) -> list[list[int]]:
    """Cheap size reduction so local bounding boxes stay small."""
    basis = [list(b) for b in basis]
    changed = True
    while changed:
        changed = False
        basis.sort(key=lambda b: _dot(b, b))
        for i in range(len(basis)):
            for j in range(len(basis)):
                if i == j:
                    continue
                nj = _dot(basis[j], basis[j])
                if nj == 0:
                    continue
                q = round(Fraction(_dot(basis[i], basis[j]), nj))
                if q:
                    cand = [a - q * b for a, b in zip(basis[i], basis[j])]
                    if _dot(cand, cand) < _dot(basis[i], basis[i]):
                        basis[i] = cand
                        changed = True
    return basis


class LatticePolytope:
    """Convex hull of finitely many points of ``Z^n`` (possibly empty)."""

    def __init__(self, points: Iterable[Sequence[int]], ambient_dim: int | None = None):
        pts = []
        seen = set()
        for p in points:
            p = tuple(int(x) for x in p)
            if p not in seen:
                seen.add(p)
                pts.append(p)
        if ambient_dim is None:
            if not pts:
                raise ValueError("ambient_dim is required for the empty polytope")
            ambient_dim = len(pts[0])
        if any(len(p) != ambient_dim for p in pts):
            raise ValueError("points of different lengths")
        self.points = tuple(pts)
        self.ambient_dim = ambient_dim

    # identity --------------------------------------------------------------

    @cached_property
    def key(self) -> frozenset:
        return frozenset(self.vertices)

    def __eq__(self, other):
        if not isinstance(other, LatticePolytope):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.key == other.key

    def __hash__(self):
        return hash((self.ambient_dim, self.key))

    def __repr__(self):
        return f"LatticePolytope(vertices={sorted(self.vertices)})"

    def is_empty(self) -> bool:
        return not self.points

    # affine frame ------------------------------------------------------------

    @cached_property
    def _frame(self):
        n = self.ambient_dim
        if not self.points:
            return None, [], -1
        origin = self.points[0]
        diffs = [[a - b for a, b in zip(p, origin)] for p in self.points[1:]]
        diffs = [d for d in diffs if any(d)]
        if not diffs:
            return origin, [], 0
        k = rank(diffs)
        if k == n:
            basis = [[int(i == j) for j in range(n)] for i in range(n)]
        else:
            basis = _reduce_basis(lattice_basis(diffs, n))
        return origin, basis, k

    @property
    def dim(self) -> int:
        return self._frame[2]

    @property
    def basis(self) -> list[list[int]]:
        return self._frame[1]

    def to_local(self, x: Sequence) -> tuple | None:
        """Coordinates of ``x`` in the affine lattice frame, or None when ``x``
        lies outside the affine hull."""
        origin, basis, k = self._frame
        if k < 0:
            return None
        d = [Fraction(a) - b for a, b in zip(x, origin)]
        if k == 0:
            return () if not any(d) else None
        if k == self.ambient_dim:
            return tuple(d)
        cols = [[basis[j][i] for j in range(k)] for i in range(self.ambient_dim)]
        y = solve(cols, d)
        return None if y is None else tuple(y)

    def from_local(self, y: Sequence[int]) -> tuple[int, ...]:
        origin, basis, _ = self._frame
        out = list(origin)
        for c, b in zip(y, basis):
            for i in range(self.ambient_dim):
                out[i] += c * b[i]
        return tuple(int(v) for v in out)

    @cached_property
    def local_points(self) -> list[tuple[int, ...]]:
        return [tuple(int(c) for c in self.to_local(p)) for p in self.points]

    # H-representation ------------------------------------------------------

    @cached_property
    def _hrep(self):
        """Facets in local coordinates as ``(a, b, members)`` with
        ``a . y >= b`` and ``members`` the point indices on the facet."""
        k = self.dim
        if k <= 0:
            return []
        gens = [tuple(y) + (1,) for y in self.local_points]
        out = []
        for normal, members in cone_facets(gens):
            a = normal[:-1]
            b = -normal[-1]
            g = 0
            for x in a:
                g = gcd(g, abs(x))
            a = tuple(x // g for x in a)
            b = b // g
            out.append((a, b, members))
        return out

    @property
    def facets(self) -> list[tuple[tuple[int, ...], int]]:
        """Facet inequalities ``a . y >= b`` in local lattice coordinates.

        For a full-dimensional polytope the normals are ambient normals but
        ``y`` is still measured from the first point (see ``to_local``)."""
        return [(a, b) for a, b, _ in self._hrep]

    @cached_property
    def _vertex_ids(self) -> list[int]:
        k = self.dim
        if k < 0:
            return []
        if k == 0:
            return [0]
        out = []
        for i in range(len(self.points)):
            normals = [a for a, _, mem in self._hrep if i in mem]
            if len(normals) >= k and rank(normals) == k:
                out.append(i)
        return out

    @cached_property
    def vertices(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(self.points[i] for i in self._vertex_ids))

    def contains(self, x: Sequence, strict: bool = False) -> bool:
        """Membership in the polytope (``strict``: in the relative interior)."""
        y = self.to_local(x)
        if y is None:
            return False
        if strict:
            return all(_dot(a, y) > b for a, b in self.facets)
        return all(_dot(a, y) >= b for a, b in self.facets)

    # faces -------------------------------------------------------------------

    @cached_property
    def face_vertex_sets(self) -> list[frozenset]:
        """All faces (empty face and the polytope included) as vertex sets."""
        if self.dim < 0:
            return [frozenset()]
        verts = set(self.vertices)
        sets = {frozenset(verts), frozenset()}
        facet_sets = [frozenset(self.points[i] for i in mem) & verts for _, _, mem in self._hrep]
        frontier = set(facet_sets)
        while frontier:
            sets |= frontier
            new = set()
            for f in frontier:
                for g in facet_sets:
                    h = f & g
                    if h not in sets:
                        new.add(h)
            frontier = new
        return sorted(sets, key=lambda s: (len(s), sorted(s)))

    def face(self, vertex_set) -> "LatticePolytope":
        return LatticePolytope(sorted(vertex_set), self.ambient_dim)

    @cached_property
    def faces(self) -> list["LatticePolytope"]:
        fs = [self.face(s) for s in self.face_vertex_sets]
        fs.sort(key=lambda f: (f.dim, sorted(f.vertices)))
        return fs

    def facet_polytopes(self) -> list[tuple[int, "LatticePolytope"]]:
        """``(lattice distance offset b, facet)`` pairs in local coordinates."""
        return [(b, self.face(self.points[i] for i in mem)) for _, b, mem in self._hrep]

    # lattice points ------------------------------------------------------------

    def _local_points_in(self, m: int = 1, strict: bool = False) -> list[tuple[int, ...]]:
        k = self.dim
        if k < 0:
            return []
        if k == 0:
            return [()] if (m >= 0 and not strict) or (strict and True) else []
        verts = [self.local_points[i] for i in self._vertex_ids]
        lo = [m * min(v[j] for v in verts) for j in range(k)]
        hi = [m * max(v[j] for v in verts) for j in range(k)]
        hrep = self.facets
        out = []
        for y in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
            if strict:
                if all(_dot(a, y) > m * b for a, b in hrep):
                    out.append(y)
            elif all(_dot(a, y) >= m * b for a, b in hrep):
                out.append(y)
        return out

    def lattice_points(self, mode: str = "all") -> list[tuple[int, ...]]:
        if mode not in ("all", "interior"):
            raise ValueError(f"unknown mode {mode!r}")
        if self.dim < 0:
            return []
        pts = self._local_points_in(1, strict=(mode == "interior"))
        return sorted(self.from_local(y) for y in pts)

    def count_points(self, m: int = 1, strict: bool = False) -> int:
        return len(self._local_points_in(m, strict))

    def interior_count(self) -> int:
        return self.count_points(1, strict=True)


def lattice_points(Q: LatticePolytope, mode: str = "all") -> list[tuple[int, ...]]:
    return Q.lattice_points(mode)


def normalized_volume(Q: LatticePolytope) -> int:
    """``(dim Q)! vol(Q)`` in the affine lattice of ``Q``; 1 for a point.

    Pyramid decomposition from the first vertex: each facet missing it
    contributes (lattice height) x (normalized volume of the facet).
    """
    return _normalized_volume(Q)


def _normalized_volume(Q: LatticePolytope) -> int:
    k = Q.dim
    if k < 0:
        return 0
    if k == 0:
        return 1
    v0 = Q.local_points[Q._vertex_ids[0]]
    total = 0
    for a, b, mem in Q._hrep:
        height = _dot(a, v0) - b
        if height == 0:
            continue
        total += height * _normalized_volume(Q.face(Q.points[i] for i in mem))
    return total


def euclidean_volume(Q: LatticePolytope) -> Fraction:
    """Volume of ``Q`` in its affine lattice, normalized so the unit cube has
    volume one."""
    return Fraction(normalized_volume(Q), factorial(max(Q.dim, 0)))


def ehrhart_hstar(Q: LatticePolytope) -> UnivarPoly:
    """Numerator of the Ehrhart series; 1 for the empty face."""
    k = Q.dim
    if k < 0:
        return UnivarPoly.from_coeffs([1])
    counts = [1] + [Q.count_points(m) for m in range(1, k + 1)]
    series = UnivarPoly.from_coeffs(counts)
    h = (series * UnivarPoly.from_coeffs([1, -1]) ** (k + 1)).truncate_below(k + 1)
    if any(c < 0 for c in h.coeffs()):
        raise NonNegativityViolation(f"negative h* coefficient for {Q!r}: {h!r}")
    return h


def ehrhart_polynomial_values(Q: LatticePolytope, upto: int) -> list[int]:
    return [1] + [Q.count_points(m) for m in range(1, upto + 1)]


# ---------------------------------------------------------------------------
# face lattices
# ---------------------------------------------------------------------------


class FaceLattice:
    """Faces of a polytope ordered by inclusion, empty face first."""

    def __init__(self, polytope: LatticePolytope):
        self.polytope = polytope
        self.faces = polytope.faces
        self.index = {f.key: i for i, f in enumerate(self.faces)}
        covers = []
        for i, f in enumerate(self.faces):
            for j, g in enumerate(self.faces):
                if g.dim == f.dim + 1 and f.key < g.key:
                    covers.append((i, j))
        self.poset = FinitePoset(len(self.faces), covers, [f.key for f in self.faces])

    @cached_property
    def dual_poset(self) -> FinitePoset:
        return self.poset.dual()

    def __len__(self):
        return len(self.faces)

    def __iter__(self):
        return iter(self.faces)

    def idx(self, face: LatticePolytope) -> int:
        return self.index[face.key]

    def below(self, face: LatticePolytope) -> list[LatticePolytope]:
        """Faces contained in ``face`` (including ``face`` and the empty face)."""
        return [self.faces[i] for i in sorted(self.poset.down(self.idx(face)))]

    def g(self, lo: LatticePolytope, hi: LatticePolytope) -> UnivarPoly:
        """G-polynomial of the interval ``[lo, hi]``."""
        return self.poset.g_interval(self.idx(lo), self.idx(hi))

    def g_dual(self, lo: LatticePolytope, hi: LatticePolytope) -> UnivarPoly:
        """G-polynomial of the dual interval ``[lo, hi]^*``."""
        return self.dual_poset.g_interval(self.idx(hi), self.idx(lo))

    def is_eulerian(self) -> bool:
        return is_eulerian(self.poset)


def face_lattice(P: LatticePolytope, cap: int | None = None) -> FaceLattice:
    if P.is_empty():
        raise DegenerateInput("face lattice of the empty polytope")
    if P.ambient_dim > dim_cap(cap):
        raise DimensionTooLarge(f"ambient dimension {P.ambient_dim} exceeds cap {dim_cap(cap)}")
    return FaceLattice(P)


def is_simple(P: LatticePolytope) -> bool:
    return all(sum(1 for _, _, mem in P._hrep if i in mem) == P.dim for i in P._vertex_ids)


def h_vector(P: LatticePolytope) -> UnivarPoly:
    """``sum_Q t^(dim P - dim Q) (1 - t)^(dim Q)`` over non-empty faces."""
    n = P.dim
    t = UnivarPoly.gen()
    one_minus_t = UnivarPoly.from_coeffs([1, -1])
    h = UnivarPoly()
    for Q in P.faces:
        if Q.dim >= 0:
            h = h + t ** (n - Q.dim) * one_minus_t ** Q.dim
    if is_simple(P):
        c = h.coeffs() + [0] * (n + 1 - len(h.coeffs()))
        if c != c[::-1]:
            raise InvariantViolation(f"h-vector {c} of a simple polytope is not symmetric")
    return h


def is_unimodular_cone(rays: Sequence[Sequence[int]]) -> bool:
    """True iff the rays are linearly independent and extend to a lattice
    basis (gcd of maximal minors equals one)."""
    rays = [list(map(int, r)) for r in rays]
    if not rays:
        return True
    r = len(rays)
    n = len(rays[0])
    if rank(rays) != r:
        return False
    g = 0
    for cols in itertools.combinations(range(n), r):
        g = gcd(g, abs(det([[row[c] for c in cols] for row in rays])))
        if g == 1:
            return True
    return g == 1


def normal_cone_rays(P: LatticePolytope, Q: LatticePolytope) -> list[tuple[int, ...]]:
    """Primitive inner facet normals (local coordinates of ``P``) of the
    facets of ``P`` containing the face ``Q``."""
    out = []
    for a, b, mem in P._hrep:
        on = {P.points[i] for i in mem}
        if all(v in on or (P.to_local(v) is not None and _dot(a, P.to_local(v)) == b) for v in Q.vertices):
            out.append(a)
    return out


def is_almost_smooth(P: LatticePolytope) -> bool:
    """Normal fan of ``P`` minus its maximal cones is unimodular."""
    return all(is_unimodular_cone(normal_cone_rays(P, Q)) for Q in P.faces if Q.dim >= 1)


# ---------------------------------------------------------------------------
# regular subdivisions
# ---------------------------------------------------------------------------


def interiority_class(cell: LatticePolytope, parent: LatticePolytope) -> int:
    """Codimension in ``parent`` of the smallest face containing ``cell``."""
    locs = [parent.to_local(v) for v in cell.vertices]
    if any(y is None for y in locs) or not all(
        _dot(a, y) >= b for y in locs for a, b in parent.facets
    ):
        raise NotContained(f"{cell!r} is not contained in {parent!r}")
    tight = [mem for a, b, mem in parent._hrep if all(_dot(a, y) == b for y in locs)]
    if not tight:
        return 0
    carrier = frozenset(range(len(parent.points)))
    for mem in tight:
        carrier &= mem
    carrier_dim = LatticePolytope([parent.points[i] for i in carrier], parent.ambient_dim).dim
    return parent.dim - carrier_dim


class RegularSubdivision:
    """Subdivision of ``conv(points)`` induced by integer heights ``lifts``.

    ``cells`` holds every non-empty face of every maximal cell (each once);
    ``interiority`` maps a cell's vertex set to its interiority class.
    """

    def __init__(self, points: Sequence[Sequence[int]], lifts: Sequence[int] | Mapping, cap: int | None = None):
        pts = [tuple(int(x) for x in p) for p in points]
        if isinstance(lifts, Mapping):
            try:
                lifts = [lifts[p] for p in pts]
            except KeyError as exc:
                raise DegenerateInput(f"no lift given for point {exc}") from exc
        lifts = [int(x) for x in lifts]
        if len(lifts) != len(pts):
            raise DegenerateInput("lifts must align with points")
        if len(set(pts)) != len(pts):
            raise DegenerateInput("repeated point in subdivision input")
        self.points = pts
        self.lifts = lifts
        self.parent = LatticePolytope(pts)
        if self.parent.ambient_dim > dim_cap(cap):
            raise DimensionTooLarge(f"ambient dimension {self.parent.ambient_dim} exceeds cap")
        if self.parent.dim < 1:
            raise DegenerateInput("points must affinely span at least one dimension")
        self._compute()

    def _compute(self):
        P = self.parent
        k = P.dim
        local = [P.to_local(p) for p in self.points]
        gens = [tuple(y) + (1, h) for y, h in zip(local, self.lifts)]
        gens.append((0,) * (k + 1) + (1,))
        up = len(gens) - 1
        lower = []
        for normal, members in cone_facets(gens, vertical=k + 1):
            if up in members or normal[-1] <= 0:
                continue
            lower.append(frozenset(members))
        self.maximal_point_sets = sorted(lower, key=sorted)
        self.affine_on_cell = {}
        cells: dict[frozenset, LatticePolytope] = {}
        self.maximal_cells = []
        for mem in self.maximal_point_sets:
            C = LatticePolytope([self.points[i] for i in sorted(mem)])
            self.maximal_cells.append(C)
            for f in C.faces:
                if f.dim >= 0 and f.key not in cells:
                    cells[f.key] = f
        self.cells = sorted(cells.values(), key=lambda c: (c.dim, sorted(c.vertices)))
        self.interiority = {c.key: interiority_class(c, P) for c in self.cells}
        self._index = {p: i for i, p in enumerate(self.points)}

    def lower_affine_function(self, cell_points: frozenset) -> tuple[list[Fraction], Fraction]:
        """Affine function ``y -> c . y + c0`` (local coordinates) agreeing
        with the lift on the given maximal cell."""
        P = self.parent
        ids = sorted(cell_points)
        rows = [list(P.to_local(self.points[i])) + [1] for i in ids]
        sol = solve(rows, [self.lifts[i] for i in ids])
        return sol[:-1], sol[-1]

    def cells_of_dim(self, k: int) -> list[LatticePolytope]:
        return [c for c in self.cells if c.dim == k]

    def vertex_indices(self, cell: LatticePolytope) -> list[int]:
        return sorted(self._index[v] for v in cell.vertices)

    def point_indices(self, cell: LatticePolytope) -> list[int]:
        return sorted(i for i, p in enumerate(self.points) if cell.contains(p))

    def is_triangulation(self) -> bool:
        return all(len(c.vertices) == c.dim + 1 for c in self.maximal_cells)

    def is_unimodular(self) -> bool:
        return all(normalized_volume(c) == 1 for c in self.maximal_cells)

    def to_json(self) -> dict:
        return {
            "cells": [
                {"vertices": self.vertex_indices(c), "dim": c.dim, "interiority": self.interiority[c.key]}
                for c in self.cells
            ],
            "maximal": [self.vertex_indices(c) for c in self.maximal_cells],
        }


def regular_subdivision(points, lift, cap: int | None = None) -> RegularSubdivision:
    return RegularSubdivision(points, lift, cap)


# ---------------------------------------------------------------------------
# standard polytopes
# ---------------------------------------------------------------------------


def dilated_simplex(m: int, n: int) -> LatticePolytope:
    """``m`` times the standard simplex ``conv(0, e_1, ..., e_n)``, given by
    all of its lattice points."""
    pts = [p for p in itertools.product(range(m + 1), repeat=n) if sum(p) <= m]
    return LatticePolytope(pts)


def simplex_vertices(m: int, n: int) -> list[tuple[int, ...]]:
    out = [(0,) * n]
    for i in range(n):
        out.append(tuple(m if j == i else 0 for j in range(n)))
    return out


def box(*sides: int) -> LatticePolytope:
    return LatticePolytope(itertools.product(*(range(s + 1) for s in sides)))


def polytope_from_json(obj: Mapping) -> LatticePolytope:
    from .errors import ParseError

    try:
        pts = [tuple(int(x) for x in p) for p in obj["points"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad polytope encoding: {exc}") from exc
    if not pts:
        raise DegenerateInput("empty point list")
    return LatticePolytope(pts)
