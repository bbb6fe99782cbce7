"""Sampling constants for weighted Bergman and Fock spaces."""

from ._core import (
    automorphism,
    bergman_norm,
    bergman_norm_region,
    builtin_region_names,
    density,
    extremal_search,
    fock_covering_ok,
    fock_monomial_norm_p2,
    fock_norm,
    fock_overlap,
    monomial_norm_p2,
    necessary_upper,
    optimal_constant_p2,
    phb_distance,
    phb_double,
    reference_covering_radius,
    region_area,
    sublevel_measure,
    theoretical_lower,
)

__all__ = [
    "automorphism",
    "bergman_norm",
    "bergman_norm_region",
    "builtin_region_names",
    "density",
    "extremal_search",
    "fock_covering_ok",
    "fock_monomial_norm_p2",
    "fock_norm",
    "fock_overlap",
    "monomial_norm_p2",
    "necessary_upper",
    "optimal_constant_p2",
    "phb_distance",
    "phb_double",
    "reference_covering_radius",
    "region_area",
    "sublevel_measure",
    "theoretical_lower",
]

__version__ = "0.1.0"
