"""Command line front end: JSON in, JSON out.

    trop-nearby limit -i cubic.json
    echo '{"uniform": [2, 3]}' | trop-nearby matroid
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Callable

from . import hodge, lattice_geometry as lg, matroids, posets, tropical
from .errors import DimensionTooLarge, ParseError, SchemaMismatch, TropicalError
from .exact_math import LaurentBivarPoly

COMMANDS = (
    "ehrhart", "hvector", "gpoly", "bb", "limit", "table", "euler", "genus",
    "matroid", "bergman", "psi", "curve", "check-lemma", "refine-check",
)


@dataclass
class RunConfig:
    command: str
    input_path: str | None = None
    output_path: str | None = None
    dim_cap: int | None = None
    audit: bool = True
    strict: bool = True

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise SchemaMismatch(f"unknown command {self.command!r}")
        if self.dim_cap is not None and self.dim_cap < 1:
            raise SchemaMismatch("--dim-cap must be at least 1")


class AuditFailure(TropicalError):
    code = "AuditFailure"
    exit_status = 3


def _need(obj, *keys):
    if not isinstance(obj, dict):
        raise SchemaMismatch("expected a JSON object")
    missing = [k for k in keys if k not in obj]
    if missing:
        raise SchemaMismatch(f"missing keys {missing}")


def _polytope(obj, cfg: RunConfig) -> lg.LatticePolytope:
    _need(obj, "points")
    P = lg.polytope_from_json(obj)
    cap = lg.dim_cap(cfg.dim_cap)
    if P.ambient_dim > cap:
        raise DimensionTooLarge(f"ambient dimension {P.ambient_dim} exceeds cap {cap}")
    return P


def _newton(obj, cfg: RunConfig) -> hodge.NewtonData:
    _need(obj, "points")
    return hodge.NewtonData.from_json(obj, cfg.dim_cap)


def _coeffs(p) -> list[int]:
    return p.coeffs()


# commands ------------------------------------------------------------------


def cmd_ehrhart(obj, cfg):
    P = _polytope(obj, cfg)
    return {
        "dim": P.dim,
        "hstar": _coeffs(lg.ehrhart_hstar(P)),
        "normalized_volume": lg.normalized_volume(P),
        "lattice_points": len(P.lattice_points()),
        "interior_points": P.interior_count(),
    }


def cmd_hvector(obj, cfg):
    P = _polytope(obj, cfg)
    return {"h": _coeffs(lg.h_vector(P))}


def cmd_gpoly(obj, cfg):
    _need(obj, "elements", "covers")
    B = posets.poset_from_json(obj)
    return {"g": _coeffs(B.g_polynomial())}


def cmd_bb(obj, cfg):
    P = _polytope(obj, cfg)
    return {"e": hodge.bb_epoly(P).to_json()}


def cmd_limit(obj, cfg):
    report = hodge.full_report(_newton(obj, cfg))
    return report.to_json(audit=cfg.audit)


def cmd_table(obj, cfg):
    data = _newton(obj, cfg)
    report = hodge.full_report(data)
    full = report.to_json(audit=cfg.audit)
    out = {"d": report.d, "limit_hodge": full["limit_hodge"]}
    if cfg.audit:
        out["audit"] = full["audit"]
    return out


def cmd_euler(obj, cfg):
    P = _polytope(obj, cfg)
    e = hodge.e_generic_fiber(P)
    return {"euler": hodge.euler_generic(P), "e_generic": e.to_json()}


def cmd_genus(obj, cfg):
    return {"genus": hodge.genus(_polytope(obj, cfg))}


def _matroid(obj) -> matroids.Matroid:
    if not isinstance(obj, dict) or not ({"uniform", "bases", "graph"} & set(obj)):
        raise SchemaMismatch("expected a matroid: {'ground','bases'}, {'uniform'} or {'graph'}")
    return matroids.Matroid.from_json(obj)


def cmd_matroid(obj, cfg):
    M = _matroid(obj)
    return {"chi": _coeffs(matroids.char_poly(M)), "class": _coeffs(matroids.complement_class(M))}


def cmd_bergman(obj, cfg):
    return matroids.bergman_fan(_matroid(obj)).to_json()


def cmd_psi(obj, cfg):
    _need(obj, "faces")
    C = tropical.TropicalComplex.from_json(obj)
    if C.faces and all(isinstance(f.label, matroids.Matroid) for f in C.faces):
        return {
            "psi": tropical.matroidal_fiber(C).to_json(),
            "euler": tropical.matroidal_euler(C),
        }
    psi = tropical.tropical_motivic_fiber(C)
    return {"psi": psi.to_json()}


def cmd_curve(obj, cfg):
    if not isinstance(obj, dict):
        raise SchemaMismatch("expected a JSON object")
    if "edges" in obj:
        psi, g = tropical.curve_graph_from_edges(int(obj["vertices"]), obj["edges"], obj.get("legs", []))
    elif "degrees" in obj or "V" in obj:
        psi, g = tropical.curve_graph_fiber(
            obj.get("V"), int(obj.get("B", 0)), int(obj.get("U", 0)), obj.get("degrees")
        )
    else:
        raise SchemaMismatch("expected {'V','B','U'}, {'degrees','B','U'} or {'vertices','edges','legs'}")
    return {"psi": _coeffs(psi), "genus": g}


def cmd_check_lemma(obj, cfg):
    data = _newton(obj, cfg)
    P, S = data.polytope, data.subdivision
    d = P.dim
    if "sigma" in obj:
        sigma = lg.LatticePolytope(obj["sigma"], P.ambient_dim) if obj["sigma"] else None
        sp = obj.get("sigma_prime")
        sigma_prime = lg.LatticePolytope(sp, P.ambient_dim) if sp else None
        return {"value": tropical.mobius_cell_identity(P, S, sigma, sigma_prime)}
    failures = []
    checked = 0
    for s in [None] + tropical.boundary_cells(S):
        for sp in [None] + ([f for f in s.faces if f.dim >= 0] if s else []):
            val = tropical.mobius_cell_identity(P, S, s, sp)
            same = (sp.key if sp else frozenset()) == (s.key if s else frozenset())
            expected = (-1) ** d if same else 0
            checked += 1
            if val != expected:
                failures.append({
                    "sigma": sorted(map(list, s.vertices)) if s else [],
                    "sigma_prime": sorted(map(list, sp.vertices)) if sp else [],
                    "value": val,
                    "expected": expected,
                })
    return {"checked": checked, "failures": failures, "pass": not failures}


def cmd_refine_check(obj, cfg):
    _need(obj, "edits")
    if "complex" in obj:
        C = tropical.TropicalComplex.from_json(obj["complex"])
        if C.faces and all(isinstance(f.label, matroids.Matroid) for f in C.faces):
            C = tropical.with_eclass_labels(C)
    elif "points" in obj:
        C = tropical.dual_complex(_newton(obj, cfg))
    else:
        raise SchemaMismatch("expected 'complex' or Newton data alongside 'edits'")
    edits = tropical.edits_from_json(obj["edits"])
    refined = tropical.apply_refinement(C, edits)
    ok = tropical.refine_and_check(C, edits)
    return {
        "equal": ok,
        "faces_before": len(C),
        "faces_after": len(refined),
        "psi": tropical.tropical_motivic_fiber(C).to_json(),
    }


DISPATCH: dict[str, Callable] = {
    "ehrhart": cmd_ehrhart,
    "hvector": cmd_hvector,
    "gpoly": cmd_gpoly,
    "bb": cmd_bb,
    "limit": cmd_limit,
    "table": cmd_table,
    "euler": cmd_euler,
    "genus": cmd_genus,
    "matroid": cmd_matroid,
    "bergman": cmd_bergman,
    "psi": cmd_psi,
    "curve": cmd_curve,
    "check-lemma": cmd_check_lemma,
    "refine-check": cmd_refine_check,
}


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def run(cfg: RunConfig, stdin=None) -> tuple[int, dict]:
    """Execute one command; returns ``(exit status, JSON report)``."""
    try:
        if cfg.input_path and cfg.input_path != "-":
            with open(cfg.input_path, encoding="utf-8") as fh:
                text = fh.read()
        else:
            text = (stdin or sys.stdin).read()
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        report = DISPATCH[cfg.command](obj, cfg)
        audit = report.get("audit") if isinstance(report, dict) else None
        if cfg.strict and audit and not hodge.audit_passed(audit):
            failed = [c["check"] for c in audit if not c["pass"]]
            report["error"] = AuditFailure.code
            report["detail"] = f"audit checks failed: {failed}"
            return AuditFailure.exit_status, report
        if cfg.command == "check-lemma" and cfg.strict and report.get("pass") is False:
            return AuditFailure.exit_status, report
        return 0, report
    except TropicalError as exc:
        return exc.exit_status, {"error": exc.code, "detail": str(exc)}
    except OSError as exc:
        return 2, {"error": "ParseError", "detail": str(exc)}
    except RecursionError as exc:
        return 3, {"error": "InvariantViolation", "detail": f"recursion limit: {exc}"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trop-nearby",
        description="Exact nearby-fiber, E-polynomial and limit Hodge computations.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("-i", "--input", help="input JSON file (default: stdin)")
    parser.add_argument("-o", "--output", help="output file (default: stdout)")
    parser.add_argument("--dim-cap", type=int, default=None, help="maximum ambient dimension (default 6)")
    parser.add_argument("--no-strict", action="store_true", help="exit 0 even if audit checks fail")
    parser.add_argument("--no-audit", action="store_true", help="skip the audit block")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(args.command, args.input, args.output, args.dim_cap, not args.no_audit, not args.no_strict)
        status, report = run(cfg)
    except TropicalError as exc:
        status, report = exc.exit_status, {"error": exc.code, "detail": str(exc)}
    text = dumps(report)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
