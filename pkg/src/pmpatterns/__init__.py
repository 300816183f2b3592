"""Positional marked patterns in permutations: matching, distributions, bijections, Ferrers boards."""

from .bijections import MarkedAvoider, ims_enumerate, phi, phi_inverse, theta_a, theta_b
from .distributions import classify, dist_brute, dist_gamma, dist_mmp, dist_refined_brute
from .ferrers import FerrersBoard, BoardFilling, NdSet, decompose, product_poly
from .patterns import (
    MarkedPattern, MmpSpec, PatternSet, gamma_pmp, match_positions, mmp_count, mmp_to_gamma,
    parse_pattern, parse_pattern_set, pmp,
)
from .perms import Symmetry, apply_symmetry, enumerate_perms, format_perm, parse_perm
from .poly import DistPoly

__version__ = "0.1.0"

__all__ = [
    "MarkedAvoider", "ims_enumerate", "phi", "phi_inverse", "theta_a", "theta_b",
    "classify", "dist_brute", "dist_gamma", "dist_mmp", "dist_refined_brute",
    "FerrersBoard", "BoardFilling", "NdSet", "decompose", "product_poly",
    "MarkedPattern", "MmpSpec", "PatternSet", "gamma_pmp", "match_positions", "mmp_count",
    "mmp_to_gamma", "parse_pattern", "parse_pattern_set", "pmp",
    "Symmetry", "apply_symmetry", "enumerate_perms", "format_perm", "parse_perm", "DistPoly",
]
