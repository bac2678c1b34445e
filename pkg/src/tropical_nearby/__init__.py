"""Exact nearby-fiber invariants of tropical degenerations, down to limit Hodge numbers."""

from .errors import InvariantViolation, TropicalError, ValidationError
from .exact_math import LaurentBivarPoly, SparsePoly, UnivarPoly
from .hodge import NewtonData, bb_epoly, e_generic_fiber, e_limit, euler_generic, full_report, genus, limit_hodge_table
from .lattice_geometry import LatticePolytope, RegularSubdivision, face_lattice, regular_subdivision
from .matroids import Matroid, bergman_fan, char_poly, complement_class
from .posets import FinitePoset, g_polynomial, is_eulerian, mobius
from .tropical import TropicalComplex, TropicalFace, matroidal_fiber, tropical_motivic_fiber

__all__ = [
    "FinitePoset", "InvariantViolation", "LatticePolytope", "LaurentBivarPoly", "Matroid", "NewtonData",
    "RegularSubdivision", "SparsePoly", "TropicalComplex", "TropicalError", "TropicalFace", "UnivarPoly",
    "ValidationError", "bb_epoly", "bergman_fan", "char_poly", "complement_class", "e_generic_fiber", "e_limit",
    "euler_generic", "face_lattice", "full_report", "g_polynomial", "genus", "is_eulerian", "limit_hodge_table",
    "matroidal_fiber", "mobius", "regular_subdivision", "tropical_motivic_fiber",
]
