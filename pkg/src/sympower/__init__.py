"""Exact commutative algebra for the containment problem I^(3) ⊆ I^2 in the plane."""

from .fields import FieldElement, FieldSpec, make_field, parse_field_spec, roots_of_klein_quadratic
from .poly import MonomialOrder, Polynomial, PolyRing, block_order, graded_basis, grevlex, lex
from .groebner import (Ideal, buchberger, colon, eliminate, ideal_member, intersect, is_linear_type,
                       multiplicity, rees_ideal, saturate, symbolic_power)
from .syzygy import HilbertBurchData, ModuleVector, hilbert_burch, minimalize, module_member, syzygies
from .resolve import (ResolutionShape, build_X, build_Y, check_last_map_equivalence,
                      resolve_power)
from .criterion import (Prop6Report, Verdict, char_remark_identity, klein_coefficient_table,
                        oracle_check, prop6_check, thm_main_check, witness_check)
from .configs import PointConfiguration, fermat, incidence, klein, product_of_lines, star3

__version__ = "0.1.0"

__all__ = [
    "FieldElement",
    "FieldSpec",
    "make_field",
    "parse_field_spec",
    "roots_of_klein_quadratic",
    "MonomialOrder",
    "Polynomial",
    "PolyRing",
    "block_order",
    "graded_basis",
    "grevlex",
    "lex",
    "Ideal",
    "buchberger",
    "colon",
    "eliminate",
    "ideal_member",
    "intersect",
    "is_linear_type",
    "multiplicity",
    "rees_ideal",
    "saturate",
    "symbolic_power",
    "HilbertBurchData",
    "ModuleVector",
    "hilbert_burch",
    "minimalize",
    "module_member",
    "syzygies",
    "ResolutionShape",
    "build_X",
    "build_Y",
    "check_last_map_equivalence",
    "resolve_power",
    "Prop6Report",
    "Verdict",
    "char_remark_identity",
    "klein_coefficient_table",
    "oracle_check",
    "prop6_check",
    "thm_main_check",
    "witness_check",
    "PointConfiguration",
    "fermat",
    "incidence",
    "klein",
    "product_of_lines",
    "star3",
]
