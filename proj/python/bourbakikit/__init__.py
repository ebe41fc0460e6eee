"""Graded Bourbaki ideals of Koszul cycle modules.

Exact constructions over the rationals: catalog families with height
certificates, determinantal ideal extraction, twist formulas, splitting
searches, and lattice checks for the associated Rees semigroup.
"""

from ._core import (
    bourbaki_number,
    catalog_n6z3,
    catalog_n6z3_bad,
    catalog_z2,
    catalog_zn2,
    catalog_ztop,
    check_map,
    check_presentation,
    cycle_rank,
    extract_from_monomials,
    extract_ideal,
    koszul_bourbaki_number,
    koszul_differential,
    obstruction,
    parse_poly,
    poly_gcd,
    poly_to_string,
    rees_canonical,
    rees_normality,
    rees_reduction,
    search_generic,
    search_multigraded,
    semigroup_membership,
)

__all__ = [
    "bourbaki_number",
    "catalog_n6z3",
    "catalog_n6z3_bad",
    "catalog_z2",
    "catalog_zn2",
    "catalog_ztop",
    "check_map",
    "check_presentation",
    "cycle_rank",
    "extract_from_monomials",
    "extract_ideal",
    "koszul_bourbaki_number",
    "koszul_differential",
    "obstruction",
    "parse_poly",
    "poly_gcd",
    "poly_to_string",
    "rees_canonical",
    "rees_normality",
    "rees_reduction",
    "search_generic",
    "search_multigraded",
    "semigroup_membership",
]

__version__ = "0.1.0"
