"""Exact cube integration and origin derivatives of structured polynomials,
with SAT reductions that decide satisfiability through them."""

from .approx import ApproxCheck, check_r_factor, check_rs_factor
from .cnf import CnfFormula, Literal, truth_table_sat
from .compile import (
    compile_derivative_instance,
    compile_integration_instance,
    decide_sat_via_derivative,
    decide_sat_via_integration,
)
from .derivative import derivative_at_origin_oracle, has_multilinear_term, multilinear_coefficient
from .errors import CubecalcError, ParseError, PreconditionError, ResourceLimitError
from .gadgets import GadgetSet, default_gadgets, verify_gadgets
from .integrate import (
    ProdMulti,
    ProdSumUni,
    SumFactor,
    expand_prodsum,
    integrate_cwide,
    integrate_prodsum,
    width_of,
)
from .io import PolyDocument, format_dimacs, parse_dimacs, parse_poly, serialize_poly
from .montecarlo import MCEstimate, mc_estimate
from .poly import (
    MultiPoly,
    UniPoly,
    format_rat,
    integrate_disjoint_product,
    multipoly_integrate01_all,
    multipoly_mul,
    unipoly_integrate01,
    unipoly_mul,
)
from .reductions import is_33sat_instance, preprocess, reduce_3sat_to_33sat

__version__ = "0.1.0"

__all__ = [
    "ApproxCheck",
    "check_r_factor",
    "check_rs_factor",
    "CnfFormula",
    "Literal",
    "truth_table_sat",
    "compile_derivative_instance",
    "compile_integration_instance",
    "decide_sat_via_derivative",
    "decide_sat_via_integration",
    "derivative_at_origin_oracle",
    "has_multilinear_term",
    "multilinear_coefficient",
    "CubecalcError",
    "ParseError",
    "PreconditionError",
    "ResourceLimitError",
    "GadgetSet",
    "default_gadgets",
    "verify_gadgets",
    "ProdMulti",
    "ProdSumUni",
    "SumFactor",
    "expand_prodsum",
    "integrate_cwide",
    "integrate_prodsum",
    "width_of",
    "PolyDocument",
    "format_dimacs",
    "parse_dimacs",
    "parse_poly",
    "serialize_poly",
    "MCEstimate",
    "mc_estimate",
    "MultiPoly",
    "UniPoly",
    "format_rat",
    "integrate_disjoint_product",
    "multipoly_integrate01_all",
    "multipoly_mul",
    "unipoly_integrate01",
    "unipoly_mul",
    "is_33sat_instance",
    "preprocess",
    "reduce_3sat_to_33sat",
]
