"""E-polynomials of nondegenerate hypersurfaces and their degenerations.

Input is Newton data: a full-dimensional lattice polytope ``P`` (given by
points) together with integer heights on those points.  The heights induce
a regular subdivision of ``P`` which governs the degeneration; from it we
compute the limit Hodge-Deligne polynomial, the limit Hodge number table and
a handful of numerical invariants, and cross-check them against each other.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import DegenerateInput, NegativeHodgeNumber, ParseError
from .exact_math import LaurentBivarPoly, UnivarPoly, eval_poly, exact_divide, poly_from_json, specialize_v_to_1
from .lattice_geometry import (
    FaceLattice,
    LatticePolytope,
    RegularSubdivision,
    ehrhart_hstar,
    h_vector,
    is_almost_smooth,
    normalized_volume,
)

log = logging.getLogger(__name__)

_UV = LaurentBivarPoly.monomial(1, 1)
_ONE = LaurentBivarPoly.monomial(0, 0)


def _key(Q: LatticePolytope) -> tuple:
    """Translation-invariant cache key."""
    vs = sorted(Q.vertices)
    o = vs[0]
    return tuple(tuple(a - b for a, b in zip(v, o)) for v in vs)


_HSTAR: dict[tuple, UnivarPoly] = {}
_BB: dict[tuple, LaurentBivarPoly] = {}


def clear_caches() -> None:
    """Forget memoized h* and E-polynomials (for cold timing runs)."""
    _HSTAR.clear()
    _BB.clear()


def _hstar(Q: LatticePolytope) -> UnivarPoly:
    if Q.is_empty():
        return UnivarPoly.from_coeffs([1])
    k = _key(Q)
    if k not in _HSTAR:
        _HSTAR[k] = ehrhart_hstar(Q)
    return _HSTAR[k]


def stilde(Q: LatticePolytope, lattice: FaceLattice | None = None) -> UnivarPoly:
    """``S~(Q,t) = sum_{Q' <= Q} (-1)^(dim Q - dim Q') h*_{Q'}(t) G([Q',Q],t)``.

    ``lattice`` is any face lattice containing ``Q`` (defaults to the face
    lattice of ``Q`` itself).  The empty face gives 1.
    """
    if Q.is_empty():
        return UnivarPoly.from_coeffs([1])
    if lattice is None:
        lattice = FaceLattice(Q)
    acc = UnivarPoly()
    for Qp in lattice.below(Q):
        term = _hstar(Qp) * lattice.g(Qp, Q)
        acc = acc + term if (Q.dim - Qp.dim) % 2 == 0 else acc - term
    return acc


def bb_epoly(Q: LatticePolytope) -> LaurentBivarPoly:
    """E-polynomial of a nondegenerate hypersurface with Newton polytope
    ``Q`` inside a torus of dimension ``dim Q`` (0 when ``Q`` is a point)."""
    if Q.dim <= 0:
        return LaurentBivarPoly()
    k = _key(Q)
    if k in _BB:
        return _BB[k]
    L = FaceLattice(Q)
    d = Q.dim - 1
    total = (_UV - 1) ** (d + 1)
    inner = LaurentBivarPoly()
    for F in L.faces:
        s = stilde(F, L)
        if s.is_zero():
            continue
        e = F.dim + 1
        # u^(dim F + 1) S~(F, v/u)
        s_uv = LaurentBivarPoly({(e - j, j): c for (j,), c in s.items()})
        inner = inner + s_uv * LaurentBivarPoly.from_univar(L.g_dual(F, Q), (1, 1))
    total = total + inner if d % 2 == 0 else total - inner
    result = LaurentBivarPoly(exact_divide(total, _UV).terms).finalize()
    _BB[k] = result
    return result


# ---------------------------------------------------------------------------
# Newton data
# ---------------------------------------------------------------------------


class NewtonData:
    """Newton polytope ``conv(points)`` with integer heights on ``points``."""

    def __init__(self, points: Sequence[Sequence[int]], lifts: Sequence[int] | Mapping | None = None, cap: int | None = None):
        pts = [tuple(int(x) for x in p) for p in points]
        if not pts:
            raise DegenerateInput("no points given")
        if lifts is None:
            lifts = [0] * len(pts)
        self.polytope = LatticePolytope(pts)
        if self.polytope.dim != self.polytope.ambient_dim:
            raise DegenerateInput(
                f"Newton polytope has dimension {self.polytope.dim} in ambient dimension {self.polytope.ambient_dim}"
            )
        self.subdivision = RegularSubdivision(pts, lifts, cap)
        self.points = self.subdivision.points
        self.lifts = self.subdivision.lifts

    @classmethod
    def from_function(cls, points, f, cap: int | None = None) -> "NewtonData":
        pts = [tuple(p) for p in points]
        return cls(pts, [f(*p) for p in pts], cap)

    @classmethod
    def from_json(cls, obj: Mapping, cap: int | None = None) -> "NewtonData":
        try:
            pts = obj["points"]
            lifts = obj.get("lifts")
        except (TypeError, AttributeError, KeyError) as exc:
            raise ParseError(f"expected {{'points': ..., 'lifts': ...}}: {exc}") from exc
        try:
            return cls(pts, lifts, cap)
        except (TypeError, ValueError) as exc:
            raise ParseError(str(exc)) from exc

    @property
    def d(self) -> int:
        """Dimension of the hypersurface."""
        return self.polytope.dim - 1

    def cells(self):
        return self.subdivision.cells

    def interiority(self, cell: LatticePolytope) -> int:
        return self.subdivision.interiority[cell.key]

    def to_json(self) -> dict:
        return {"points": [list(p) for p in self.points], "lifts": list(self.lifts)}

    def __repr__(self):
        return f"NewtonData(points={self.points}, lifts={self.lifts})"


def e_generic_fiber(P: LatticePolytope) -> LaurentBivarPoly:
    """E-polynomial of the closure of a generic hypersurface in the toric
    variety of ``P``: sum of ``bb_epoly`` over the non-empty faces."""
    total = LaurentBivarPoly()
    for Q in P.faces:
        if Q.dim >= 1:
            total = total + bb_epoly(Q)
    return total.finalize()


def e_limit(data: NewtonData) -> LaurentBivarPoly:
    """``sum_C E(X_C)(1 - uv)^(codim C - i(C))`` over all cells ``C``."""
    n = data.polytope.dim
    total = LaurentBivarPoly()
    for C in data.cells():
        if C.dim < 1:
            continue
        total = total + bb_epoly(C) * (_ONE - _UV) ** (n - C.dim - data.interiority(C))
    return total.finalize()


def euler_generic(P: LatticePolytope) -> int:
    return sum((-1) ** (Q.dim - 1) * normalized_volume(Q) for Q in P.faces if Q.dim >= 1)


def genus(P: LatticePolytope) -> int:
    """Number of interior lattice points, i.e. the geometric genus."""
    return P.interior_count()


def limit_h_p0(data: NewtonData, p: int) -> int:
    """Interior-point count for ``h^{p,0}`` of the middle limit cohomology.

    ``p > 0``: interior points of the interior cells of dimension ``p+1``.
    ``p = 0``: interior vertices plus interior points of interior edges,
    which is the top Betti number of the parameterizing complex.
    """
    if not 0 <= p <= max(data.d, 0):
        raise ValueError(f"p={p} outside 0..{data.d}")
    total = 0
    for C in data.cells():
        if data.interiority(C) != 0:
            continue
        if p == 0:
            if C.dim == 0:
                total += 1
            elif C.dim == 1:
                total += C.interior_count()
        elif C.dim == p + 1:
            total += C.interior_count()
    return total


def generic_hodge_numbers(e_gen: LaurentBivarPoly) -> dict[tuple[int, int], int]:
    """``h^{p,q}(X_gen) = (-1)^(p+q) e^{p,q}`` (the compactified generic
    fiber is smooth projective, so each ``e^{p,q}`` sees one degree)."""
    return {(p, q): (-1) ** (p + q) * c for (p, q), c in e_gen.items()}


# ---------------------------------------------------------------------------
# limit Hodge table
# ---------------------------------------------------------------------------


@dataclass
class LimitHodgeTable:
    d: int
    entries: dict = field(default_factory=dict)  # (m, p, q) -> h
    ambient: int = 0  # ambient contribution at (d/2, d/2) in degree d

    def __getitem__(self, key) -> int:
        return self.entries.get(tuple(key), 0)

    def row(self, m: int) -> dict[tuple[int, int], int]:
        return {(p, q): h for (mm, p, q), h in self.entries.items() if mm == m}

    def primitive(self, p: int, q: int) -> int:
        h = self[(self.d, p, q)]
        if self.d % 2 == 0 and p == q == self.d // 2:
            h -= self.ambient
        return h

    def to_json(self) -> list[dict]:
        return [
            {"m": m, "p": p, "q": q, "h": h}
            for (m, p, q), h in sorted(self.entries.items())
            if h != 0
        ]


def limit_hodge_table(data: NewtonData, e_lim: LaurentBivarPoly | None = None) -> LimitHodgeTable:
    d = data.d
    if e_lim is None:
        e_lim = e_limit(data)
    hP = h_vector(data.polytope)
    table = LimitHodgeTable(d)
    ent = table.entries
    for p in range(d + 1):
        if 2 * p < d:
            hp = hP.coeff((p,))
            if hp:
                ent[(2 * p, p, p)] = hp
                ent[(2 * d - 2 * p, d - p, d - p)] = hp
    ambient = hP.coeff((d // 2,)) if d % 2 == 0 else 0
    table.ambient = ambient
    sign = (-1) ** d
    for p in range(d + 1):
        for q in range(d + 1):
            others = sum((-1) ** m * ent.get((m, p, q), 0) for m in range(2 * d + 1) if m != d)
            h = sign * (e_lim.coeff((p, q)) - others)
            if h < 0:
                raise NegativeHodgeNumber(f"h^{{{p},{q}}}(H^{d}) = {h} < 0 for {data!r}")
            if h:
                ent[(d, p, q)] = h
    if table.primitive(d // 2, d // 2) < 0:
        raise NegativeHodgeNumber(f"primitive part negative at ({d // 2},{d // 2}) for {data!r}")
    # anything left in e_lim outside 0..d is an inconsistency
    for (p, q), c in e_lim.items():
        if c and not (0 <= p <= d and 0 <= q <= d):
            raise NegativeHodgeNumber(f"E(X_inf) has a term u^{p} v^{q} outside the Hodge diamond")
    return table


# ---------------------------------------------------------------------------
# reports and audits
# ---------------------------------------------------------------------------


@dataclass
class EPolyReport:
    d: int
    e_limit: LaurentBivarPoly
    e_generic: LaurentBivarPoly
    euler: int
    genus: int
    betti_gamma_d: int
    table: LimitHodgeTable
    h_p0: list[int]
    almost_smooth: bool

    def to_json(self, audit: bool = True) -> dict:
        out = {
            "d": self.d,
            "e_limit": self.e_limit.to_json(),
            "e_generic": self.e_generic.to_json(),
            "euler": self.euler,
            "genus": self.genus,
            "betti_gamma_d": self.betti_gamma_d,
            "h_p0": list(self.h_p0),
            "almost_smooth": self.almost_smooth,
            "limit_hodge": self.table.to_json(),
        }
        if audit:
            out["audit"] = audit_block(out)
        return out


def full_report(data: NewtonData) -> EPolyReport:
    P = data.polytope
    e_lim = e_limit(data)
    e_gen = e_generic_fiber(P)
    table = limit_hodge_table(data, e_lim)
    d = data.d
    h_p0 = [limit_h_p0(data, p) for p in range(d + 1)]
    return EPolyReport(
        d=d,
        e_limit=e_lim,
        e_generic=e_gen,
        euler=euler_generic(P),
        genus=genus(P),
        betti_gamma_d=h_p0[0],
        table=table,
        h_p0=h_p0,
        almost_smooth=is_almost_smooth(P),
    )


def _is_symmetric_unimodal(seq: list[int]) -> tuple[bool, bool]:
    sym = seq == seq[::-1]
    half = seq[: (len(seq) + 1) // 2]
    return sym, all(a <= b for a, b in zip(half, half[1:]))


def audit_block(report: Mapping) -> list[dict]:
    """Recompute the cross-checks from a JSON report.

    Works on the serialized form so that a tampered report is caught.
    """
    checks: list[tuple[str, bool]] = []
    try:
        d = int(report["d"])
        e_lim = LaurentBivarPoly(poly_from_json(report["e_limit"]).terms)
        e_gen = LaurentBivarPoly(poly_from_json(report["e_generic"]).terms)
        euler = int(report["euler"])
        table = {(r["m"], r["p"], r["q"]): int(r["h"]) for r in report["limit_hodge"]}
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"report is missing fields: {exc}") from exc
    h = lambda m, p, q: table.get((m, p, q), 0)  # noqa: E731
    gen = generic_hodge_numbers(e_gen)

    checks.append(("v1_identity", specialize_v_to_1(e_lim) == specialize_v_to_1(e_gen)))
    checks.append(("euler_agreement", eval_poly(e_lim, (1, 1)) == euler))
    checks.append(("generic_euler", eval_poly(e_gen, (1, 1)) == euler))
    checks.append(("nonnegative", all(v >= 0 for v in table.values()) and all(v >= 0 for v in gen.values())))
    checks.append(("hodge_symmetry", all(h(m, q, p) == v for (m, p, q), v in table.items())))
    rows_ok = all(
        sum(h(m, p, q) for q in range(d + 1)) == gen.get((p, m - p), 0)
        for m in range(2 * d + 1)
        for p in range(d + 1)
    ) and all(0 <= m <= 2 * d and p + q <= 2 * d for (m, p, q) in table)
    checks.append(("row_sums", rows_ok))
    alt_ok = all(
        sum((-1) ** m * h(m, p, q) for m in range(2 * d + 1)) == e_lim.coeff((p, q))
        for p in range(d + 1)
        for q in range(d + 1)
    )
    checks.append(("alternating_sum", alt_ok))
    wm_ok = True
    for p in range(d + 1):
        seq = [h(d, p + i, i) for i in range(d - p + 1)]
        sym, uni = _is_symmetric_unimodal(seq)
        wm_ok &= sym
        if not uni:
            log.info("weight sequence %s for p=%d is not unimodal", seq, p)
    checks.append(("weight_monodromy_symmetry", wm_ok))
    if "genus" in report and d >= 1:
        checks.append(("genus", gen.get((d, 0), 0) == int(report["genus"])))
    if "betti_gamma_d" in report:
        b = int(report["betti_gamma_d"])
        bound = min((gen.get((p, d - p), 0) for p in range(d + 1)), default=0)
        checks.append(("betti_bound", b <= bound))
        if d >= 1:
            checks.append(("weight0", h(d, 0, 0) == b))
    if "h_p0" in report and d >= 1:
        hp0 = report["h_p0"]
        checks.append(("h_p0", all(int(hp0[p]) == h(d, p, 0) for p in range(1, d + 1))))
    if "almost_smooth" in report:
        checks.append(("almost_smooth", bool(report["almost_smooth"])))
    return [{"check": name, "pass": bool(ok)} for name, ok in checks]


def audit_passed(block: list[dict]) -> bool:
    return all(c["pass"] for c in block)
