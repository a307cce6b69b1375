"""Exact certification of arithmetic properties of specialisations of
function-field extensions given by monic polynomials P(T, Y) over Z."""

from .arith import INFINITY, ProjPoint, padic_valuation, parse_rational, proj_normalize, proj_reduce_mod_p
from .catalog import catalog, lookup, reproduce
from .certify import certify_family
from .poly import BiPoly, UniPoly, discriminant_uni, discriminant_y, parse_bipoly, parse_unipoly

__version__ = "0.1.0"

__all__ = [
    "INFINITY", "ProjPoint", "padic_valuation", "parse_rational", "proj_normalize",
    "proj_reduce_mod_p", "catalog", "lookup", "reproduce", "certify_family", "BiPoly",
    "UniPoly", "discriminant_uni", "discriminant_y", "parse_bipoly", "parse_unipoly",
]
