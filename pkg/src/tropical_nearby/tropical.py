"""Polyhedral complexes with class labels and the motivic nearby fiber.

A :class:`TropicalComplex` lists rational vertices, integer rays and faces,
each face being ``conv(vertices) + cone(rays)``.  Every face carries a label:
either the E-polynomial of its stratum (a :class:`LaurentBivarPoly`) or a
matroid whose arrangement complement is that stratum.  The nearby fiber is

    psi = sum_F [X_F] (1 - L)^(dim F - dim rec F)

evaluated either with ``L -> uv`` (E-polynomial labels) or in ``Z[L]``
(matroid labels).
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Mapping, Sequence, Union

from .errors import (
    InconsistentGraph,
    MissingLabel,
    MultiplicityUnsupported,
    NotAFan,
    ParseError,
    RecessionFanChanged,
    ValidationError,
    NotContained,
)
from .exact_math import LaurentBivarPoly, UnivarPoly, nonneg_solution, poly_from_json, primitive, rank
from .lattice_geometry import LatticePolytope, RegularSubdivision, cone_faces, is_unimodular_cone
from .matroids import Matroid, complement_class, complement_euler

Label = Union[LaurentBivarPoly, Matroid, None]

_UV = LaurentBivarPoly.monomial(1, 1)
_ONE = LaurentBivarPoly.monomial(0, 0)


def _rat(x) -> Fraction:
    try:
        return Fraction(x)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {x!r}") from exc


def _rat_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class TropicalFace:
    """``conv(vertices) + cone(rays)``; indices point into the complex."""

    vertices: tuple[int, ...]
    rays: tuple[int, ...] = ()
    label: Label = None
    mult: int = 1

    @property
    def key(self) -> tuple[frozenset, frozenset]:
        return frozenset(self.vertices), frozenset(self.rays)


class TropicalComplex:
    def __init__(
        self,
        ambient: int,
        vertices: Sequence[Sequence],
        rays: Sequence[Sequence[int]],
        faces: Sequence[TropicalFace],
    ):
        self.ambient = int(ambient)
        self.vertices = [tuple(_rat(x) for x in v) for v in vertices]
        self.rays = [tuple(int(x) for x in r) for r in rays]
        for v in self.vertices:
            if len(v) != self.ambient:
                raise ValidationError(f"vertex {v} has wrong length")
        for r in self.rays:
            if len(r) != self.ambient or not any(r):
                raise ValidationError(f"ray {r} is zero or has wrong length")
        self.faces = list(faces)
        for f in self.faces:
            if not f.vertices:
                raise ValidationError("every face needs at least one vertex")
            if any(not 0 <= i < len(self.vertices) for i in f.vertices) or any(
                not 0 <= j < len(self.rays) for j in f.rays
            ):
                raise ValidationError(f"face {f} refers to a missing vertex or ray")
            if not (isinstance(f.mult, int) and f.mult >= 1):
                raise ValidationError(f"multiplicity must be a positive integer, got {f.mult!r}")
        self.dims = [self._dim(f) for f in self.faces]
        self.recession_dims = [len(f.rays) and rank([self.rays[j] for j in f.rays]) for f in self.faces]

    # geometry ------------------------------------------------------------------

    def _hom(self, f: TropicalFace) -> list[tuple]:
        return [self.vertices[i] + (Fraction(1),) for i in f.vertices] + [
            tuple(Fraction(x) for x in self.rays[j]) + (Fraction(0),) for j in f.rays
        ]

    def _dim(self, f: TropicalFace) -> int:
        return rank(self._hom(f)) - 1

    def dim(self, i: int) -> int:
        return self.dims[i]

    def polyhedral_faces(self, f: TropicalFace) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        """Non-empty faces of the polyhedron ``f`` as (vertex ids, ray ids)."""
        nv = len(f.vertices)
        out = []
        for mem in cone_faces(self._hom(f)):
            vs = tuple(sorted(f.vertices[i] for i in mem if i < nv))
            rs = tuple(sorted(f.rays[i - nv] for i in mem if i >= nv))
            if vs:
                out.append((vs, rs))
        return out

    def check_closed(self) -> None:
        keys = {f.key for f in self.faces}
        for f in self.faces:
            for vs, rs in self.polyhedral_faces(f):
                if (frozenset(vs), frozenset(rs)) not in keys:
                    raise ValidationError(f"face {vs}+{rs} of {f.vertices}+{f.rays} is missing")

    def recession_cones(self) -> set[frozenset]:
        """Recession cones of all faces, each as a set of primitive rays."""
        return {frozenset(primitive(self.rays[j]) for j in f.rays) for f in self.faces}

    def with_labels(self, labels: Sequence[Label]) -> "TropicalComplex":
        return TropicalComplex(
            self.ambient, self.vertices, self.rays, [replace(f, label=l) for f, l in zip(self.faces, labels)]
        )

    def __len__(self):
        return len(self.faces)

    def __repr__(self):
        return f"TropicalComplex(ambient={self.ambient}, faces={len(self.faces)})"

    # serialization -------------------------------------------------------------

    @classmethod
    def from_json(cls, obj: Mapping) -> "TropicalComplex":
        try:
            named = {k: Matroid.from_json(v) for k, v in obj.get("matroids", {}).items()}
            faces = []
            for fo in obj["faces"]:
                lab = fo.get("label")
                label: Label = None
                if lab is not None:
                    if "eclass" in lab:
                        p = poly_from_json(lab["eclass"])
                        label = LaurentBivarPoly(p.terms)
                    elif "matroid" in lab:
                        ref = lab["matroid"]
                        label = named[ref] if isinstance(ref, str) else Matroid.from_json(ref)
                    else:
                        raise ParseError(f"unknown label kind {sorted(lab)}")
                faces.append(
                    TropicalFace(tuple(fo["v"]), tuple(fo.get("r", ())), label, fo.get("mult", 1))
                )
            return cls(obj["ambient"], obj.get("vertices", []), obj.get("rays", []), faces)
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad complex encoding: {exc}") from exc

    def to_json(self) -> dict:
        faces = []
        for f in self.faces:
            fo = {"v": list(f.vertices), "r": list(f.rays), "mult": f.mult}
            if isinstance(f.label, LaurentBivarPoly):
                fo["label"] = {"eclass": f.label.to_json()}
            elif isinstance(f.label, Matroid):
                fo["label"] = {"matroid": f.label.to_json()}
            faces.append(fo)
        return {
            "ambient": self.ambient,
            "vertices": [[_rat_str(x) for x in v] for v in self.vertices],
            "rays": [list(r) for r in self.rays],
            "faces": faces,
        }


# ---------------------------------------------------------------------------
# recession data
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Cone:
    rays: tuple[tuple[int, ...], ...]
    dim: int


def recession_cone(C: TropicalComplex, i: int) -> Cone:
    rays = tuple(sorted({primitive(C.rays[j]) for j in C.faces[i].rays}))
    return Cone(rays, C.recession_dims[i])


def _improper_overlap(A: list[tuple], B: list[tuple]) -> bool:
    """For simplicial cones ``cone(A)``, ``cone(B)``: is there a point of the
    intersection needing a generator outside ``A & B``?"""
    shared = set(A) & set(B)
    if set(A) == shared and set(B) == shared:
        return False
    n = len(A[0]) if A else len(B[0])
    cols = [list(a) for a in A] + [[-x for x in b] for b in B]
    rows = [[col[k] for col in cols] for k in range(n)]
    # scale-free normalization: the non-shared coefficients sum to 1
    rows.append([0 if g in shared else 1 for g in list(A) + list(B)])
    return nonneg_solution(rows, [0] * n + [1]) is not None


def recession_fan_unimodular(C: TropicalComplex) -> bool:
    """Each recession cone is simplicial and unimodular.  Raises
    :class:`NotAFan` when two unimodular cones overlap improperly."""
    cones = sorted((sorted(c) for c in C.recession_cones()), key=lambda c: (len(c), c))
    for c in cones:
        if not is_unimodular_cone(c):
            return False
    for a, b in itertools.combinations(cones, 2):
        if a and b and _improper_overlap(a, b):
            raise NotAFan(f"recession cones {a} and {b} meet outside a common face")
    return True


# ---------------------------------------------------------------------------
# nearby fiber
# ---------------------------------------------------------------------------


def _require_mult_one(C: TropicalComplex):
    for f in C.faces:
        if f.mult != 1:
            raise MultiplicityUnsupported(f"face {f.vertices}+{f.rays} has multiplicity {f.mult}")


def tropical_motivic_fiber(C: TropicalComplex) -> LaurentBivarPoly:
    """E-image of the nearby fiber from E-polynomial labels."""
    _require_mult_one(C)
    total = LaurentBivarPoly()
    for i, f in enumerate(C.faces):
        if not isinstance(f.label, LaurentBivarPoly):
            raise MissingLabel(f"face {f.vertices}+{f.rays} has no E-polynomial label")
        total = total + f.label * (_ONE - _UV) ** (C.dims[i] - C.recession_dims[i])
    return total


def _matroid_labels(C: TropicalComplex) -> list[Matroid]:
    out = []
    for f in C.faces:
        if not isinstance(f.label, Matroid):
            raise MissingLabel(f"face {f.vertices}+{f.rays} has no matroid label")
        out.append(f.label)
    return out


def matroidal_fiber(C: TropicalComplex) -> UnivarPoly:
    """Nearby fiber in ``Z[L]`` from matroid labels."""
    _require_mult_one(C)
    labels = _matroid_labels(C)
    _warn_label_mismatch(C, labels)
    one_minus_L = UnivarPoly.from_coeffs([1, -1], "L")
    total = UnivarPoly({}, ("L",))
    for i, M in enumerate(labels):
        total = total + complement_class(M) * one_minus_L ** (C.dims[i] - C.recession_dims[i])
    return total


def matroidal_euler(C: TropicalComplex) -> int:
    """Euler characteristic of the generic fiber: contributions of the faces
    whose dimension equals that of their recession cone."""
    labels = _matroid_labels(C)
    return sum(
        complement_euler(M) for i, M in enumerate(labels) if C.dims[i] == C.recession_dims[i]
    )


def eclass_of_matroid(M: Matroid) -> LaurentBivarPoly:
    """``complement_class`` with ``L -> uv``."""
    return LaurentBivarPoly.from_univar(complement_class(M), (1, 1))


def with_eclass_labels(C: TropicalComplex) -> TropicalComplex:
    return C.with_labels([eclass_of_matroid(M) for M in _matroid_labels(C)])


def _warn_label_mismatch(C: TropicalComplex, labels: Sequence[Matroid]) -> None:
    """Cheap plausibility check: at a vertex whose local fan has the
    dimension of the label's Bergman fan, the number of edges and rays
    leaving it should match the number of rays of that fan."""
    edges_at: dict[int, int] = {}
    for i, f in enumerate(C.faces):
        if C.dims[i] == 1:
            for v in f.vertices:
                edges_at[v] = edges_at.get(v, 0) + 1
    for i, f in enumerate(C.faces):
        if C.dims[i] != 0 or C.recession_dims[i] != 0:
            continue
        M = labels[i]
        if M.d != 1:
            continue
        expected = len(M.flat_lattice.nonempty_proper())
        seen = edges_at.get(f.vertices[0], 0)
        if seen != expected:
            warnings.warn(
                f"vertex {f.vertices[0]} has {seen} edges but its label has {expected} Bergman rays",
                stacklevel=3,
            )


def curve_graph_fiber(
    V: int | None = None,
    B: int = 0,
    U: int = 0,
    degrees: Sequence[int] | None = None,
) -> tuple[UnivarPoly, int]:
    """Nearby fiber and genus of a degeneration with dual graph given by
    vertex degrees, ``B`` bounded edges and ``U`` unbounded legs.

    Computes ``sum_v (L - deg v + 1) + B (1 - L) + U`` and ``(L + 1)(V - B)``
    independently and insists they agree.
    """
    if degrees is None:
        if V is None:
            raise InconsistentGraph("need either V or a degree list")
        if V < 1:
            raise InconsistentGraph("a curve needs at least one vertex")
        if V == 1:
            degrees = [2 * B + U]
        else:
            # counts only: distribute the half-edges arbitrarily
            total = 2 * B + U
            degrees = [total // V + (1 if i < total % V else 0) for i in range(V)]
    degrees = list(degrees)
    if V is None:
        V = len(degrees)
    if len(degrees) != V:
        raise InconsistentGraph(f"{len(degrees)} degrees for {V} vertices")
    if any(d < 0 for d in degrees) or B < 0 or U < 0:
        raise InconsistentGraph("negative count")
    L = UnivarPoly.gen("L")
    lhs = UnivarPoly({}, ("L",))
    for deg in degrees:
        lhs = lhs + L - deg + 1
    lhs = lhs + (1 - L) * B + U
    rhs = (L + 1) * (V - B)
    if lhs != rhs:
        raise InconsistentGraph(
            f"degree sum {sum(degrees)} does not match 2B + U = {2 * B + U}: {lhs!r} != {rhs!r}"
        )
    return rhs, B - V + 1


def curve_graph_from_edges(n_vertices: int, edges: Sequence[Sequence[int]], legs: Sequence[int] = ()) -> tuple[UnivarPoly, int]:
    deg = [0] * n_vertices
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    for v in legs:
        deg[v] += 1
    return curve_graph_fiber(n_vertices, len(edges), len(legs), deg)


# ---------------------------------------------------------------------------
# dual complex of a regular subdivision
# ---------------------------------------------------------------------------


def dual_complex(data, include_regions: bool = True) -> TropicalComplex:
    """Tropical hypersurface of Newton data, labelled by E-polynomials.

    Cell ``Q`` of the subdivision corresponds to the polyhedron whose
    vertices are ``-grad`` of the lift on the maximal cells around ``Q`` and
    whose recession cone is spanned by the inner normals of the facets of
    ``P`` containing ``Q``.  With ``include_regions`` the duals of the
    0-cells (top-dimensional regions, label 0) are kept as well, giving a
    complete complex.
    """
    from .hodge import bb_epoly

    S: RegularSubdivision = data.subdivision
    P: LatticePolytope = data.polytope
    n = P.ambient_dim
    vertices = []
    for mem in S.maximal_point_sets:
        c, _ = S.lower_affine_function(mem)
        vertices.append(tuple(-x for x in c))
    facet_rays = [a for a, _b in P.facets]
    faces = []
    for Q in S.cells:
        if Q.dim == 0 and not include_regions:
            continue
        vs = tuple(i for i, C in enumerate(S.maximal_cells) if Q.key <= C.key)
        rs = tuple(
            j for j, (a, b) in enumerate(P.facets)
            if all(sum(x * y for x, y in zip(a, P.to_local(v))) == b for v in Q.vertices)
        )
        faces.append(TropicalFace(vs, rs, bb_epoly(Q) if Q.dim >= 1 else LaurentBivarPoly()))
    C = TropicalComplex(n, vertices, facet_rays, faces)
    for i, Q in enumerate(q for q in S.cells if q.dim >= 1 or include_regions):
        if C.dims[i] != n - Q.dim:
            raise ValidationError(f"dual of {Q!r} has dimension {C.dims[i]}, expected {n - Q.dim}")
    return C


# ---------------------------------------------------------------------------
# refinements
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Split:
    """Insert the point ``sum w_i v_i / sum w_i + sum r_j rho_j`` of the
    relative interior of face ``face`` and subdivide stellarly."""

    face: int
    weights: tuple = ()
    ray_weights: tuple = ()


@dataclass(frozen=True)
class DeleteRay:
    """Drop every face using ray ``ray`` (changes the recession fan)."""

    ray: int


def _pulled_back(label: LaurentBivarPoly, drop: int) -> LaurentBivarPoly:
    return label * (_UV - 1) ** drop


def _split(C: TropicalComplex, edit: Split) -> TropicalComplex:
    F = C.faces[edit.face]
    w = [Fraction(x) for x in (edit.weights or [1] * len(F.vertices))]
    rw = [Fraction(x) for x in (edit.ray_weights or [1] * len(F.rays))]
    if len(w) != len(F.vertices) or len(rw) != len(F.rays) or min(w + rw, default=1) <= 0:
        raise ValidationError("split weights must be positive, one per vertex and ray of the face")
    total = sum(w)
    point = [sum(wi * C.vertices[v][k] for wi, v in zip(w, F.vertices)) / total for k in range(C.ambient)]
    for rj, r in zip(rw, F.rays):
        for k in range(C.ambient):
            point[k] += rj * C.rays[r][k]
    new_v = len(C.vertices)
    vertices = C.vertices + [tuple(point)]
    fv, fr = set(F.vertices), set(F.rays)
    kept: dict = {}
    for i, G in enumerate(C.faces):
        if not (fv <= set(G.vertices) and fr <= set(G.rays)):
            kept.setdefault(G.key, G)
            continue
        if not isinstance(G.label, LaurentBivarPoly):
            raise MissingLabel("refinement needs E-polynomial labels")
        nv = len(G.vertices)
        for mem in cone_faces(C._hom(G)):
            hv = [G.vertices[k] for k in mem if k < nv]
            hr = [G.rays[k - nv] for k in mem if k >= nv]
            if fv <= set(hv) and fr <= set(hr):
                continue
            face = TropicalFace(tuple(sorted(hv)) + (new_v,), tuple(sorted(hr)), None, G.mult)
            if face.key in kept:
                continue
            # carrier: the smallest face of G containing H and F
            carrier = min(
                (j for j, K in enumerate(C.faces)
                 if set(hv) | fv <= set(K.vertices) and set(hr) | fr <= set(K.rays)
                 and set(K.vertices) <= set(G.vertices) and set(K.rays) <= set(G.rays)),
                key=lambda j: C.dims[j],
            )
            tmp = TropicalComplex(C.ambient, vertices, C.rays, [face])
            drop = C.dims[carrier] - tmp.dims[0]
            kept[face.key] = replace(face, label=_pulled_back(C.faces[carrier].label, drop))
    return TropicalComplex(C.ambient, vertices, C.rays, list(kept.values()))


def _delete_ray(C: TropicalComplex, edit: DeleteRay) -> TropicalComplex:
    faces = [f for f in C.faces if edit.ray not in f.rays]
    return TropicalComplex(C.ambient, C.vertices, C.rays, faces)


def apply_refinement(C: TropicalComplex, edits: Sequence[Split | DeleteRay]) -> TropicalComplex:
    out = C
    for e in edits:
        if isinstance(e, Split):
            out = _split(out, e)
        elif isinstance(e, DeleteRay):
            out = _delete_ray(out, e)
        else:
            raise ValidationError(f"unknown refinement step {e!r}")
    return out


def refine_and_check(C: TropicalComplex, edits: Sequence[Split | DeleteRay]) -> bool:
    """Apply ``edits`` and compare the nearby fiber before and after."""
    refined = apply_refinement(C, edits)
    if refined.recession_cones() != C.recession_cones():
        raise RecessionFanChanged("refinement changed the recession fan")
    return tropical_motivic_fiber(refined) == tropical_motivic_fiber(C)


def edits_from_json(obj) -> list[Split | DeleteRay]:
    out = []
    try:
        for e in obj:
            if "split" in e:
                s = e["split"]
                out.append(Split(int(s["face"]), tuple(s.get("weights", ())), tuple(s.get("ray_weights", ()))))
            elif "delete_ray" in e:
                out.append(DeleteRay(int(e["delete_ray"])))
            else:
                raise ParseError(f"unknown edit {e!r}")
    except (TypeError, KeyError, ValueError) as exc:
        raise ParseError(f"bad edit list: {exc}") from exc
    return out


# ---------------------------------------------------------------------------
# signed cell sums
# ---------------------------------------------------------------------------


def mobius_cell_identity(
    P: LatticePolytope,
    S: RegularSubdivision,
    sigma: LatticePolytope | None,
    sigma_prime: LatticePolytope | None,
) -> int:
    """``sum (-1)^dim tau`` over cells ``tau`` of ``S`` interior to ``P``
    with ``tau ∩ sigma = sigma_prime``.

    ``sigma`` must be a boundary cell of ``S`` (or empty, ``None``) and
    ``sigma_prime`` a face of it (``None`` for the empty face).
    """
    if S.parent != P:
        raise NotContained("subdivision is not of the given polytope")
    cells = {c.key: c for c in S.cells}
    sv = frozenset() if sigma is None or sigma.is_empty() else sigma.key
    pv = frozenset() if sigma_prime is None or sigma_prime.is_empty() else sigma_prime.key
    if sv:
        if sv not in cells:
            raise NotContained(f"{sigma!r} is not a cell of the subdivision")
        if S.interiority[sv] == 0:
            raise NotContained(f"{sigma!r} is not on the boundary")
    if pv and (not pv <= sv or pv not in cells or not any(pv == f.key for f in cells[sv].faces)):
        raise NotContained(f"{sigma_prime!r} is not a face of {sigma!r}")
    return sum(
        (-1) ** tau.dim
        for tau in S.cells
        if S.interiority[tau.key] == 0 and tau.key & sv == pv
    )


def boundary_cells(S: RegularSubdivision) -> list[LatticePolytope]:
    return [c for c in S.cells if S.interiority[c.key] > 0]
