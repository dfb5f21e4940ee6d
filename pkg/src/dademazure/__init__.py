"""
Generalised Demazure products on the double affine Weyl semigroup of
affine SL2, with closed forms for the quantum Bruhat graph of the infinite
dihedral group and brute-force oracles for each of them.
"""

from .demazure import (
    DemazureResult, MinPairs, WellDefinednessViolation, additivity_equiv_check,
    assoc_check, dem_product, is_length_additive, lp_of_product_check, min_pairs,
)
from .lp import LPSet, lp_contains, lp_oracle, lp_set
from .qbg import (
    EdgeKind, QbgEdge, QbgPath, TruncationTooSmall, distance, edges_from,
    shortest_paths, weight,
)
from .roots import AffineRoot, Coweight, DoubleAffineRoot, coroot, pair, two_rho_pair
from .titscone import (
    BoundOverflow, OutsideTitsCone, ParseError, WTElement, daf_inversions_intersection,
    format_element, length_functional, parse_element, wt_length,
    wt_length_via_inversions, wt_mul,
)
from .weyl import Side, WeylElt, act_coweight, act_root, from_word, inv, length, mul

__all__ = [
    "AffineRoot", "Coweight", "DoubleAffineRoot", "coroot", "pair", "two_rho_pair",
    "WeylElt", "Side", "from_word", "mul", "inv", "length", "act_root", "act_coweight",
    "EdgeKind", "QbgEdge", "QbgPath", "TruncationTooSmall", "edges_from", "distance",
    "weight", "shortest_paths",
    "WTElement", "OutsideTitsCone", "BoundOverflow", "ParseError", "parse_element",
    "format_element", "wt_mul", "length_functional", "wt_length",
    "wt_length_via_inversions", "daf_inversions_intersection",
    "LPSet", "lp_set", "lp_contains", "lp_oracle",
    "MinPairs", "DemazureResult", "WellDefinednessViolation", "min_pairs",
    "dem_product", "lp_of_product_check", "is_length_additive",
    "additivity_equiv_check", "assoc_check",
]
