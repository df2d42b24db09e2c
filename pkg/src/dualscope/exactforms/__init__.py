"""Exact arithmetic substrate: rationals, polynomials, binary forms, roots."""
from .poly import (
    Poly,
    T,
    as_rat,
    multiplicity,
    poly_gcd,
    poly_gcd_many,
    poly_lcm,
    rat_str,
    remove_factor,
    squarefree_decomposition,
    squarefree_part,
    interpolate,
    xgcd,
)
from .numfield import NFElem, NumberField, lift_rational
from .forms import (
    INF,
    AlgNum,
    BinaryForm,
    RootProfile,
    discriminant,
    distinct_roots,
    form_resultant,
    multiplicity_pattern,
    p1,
    p1_value,
    resultant,
    resultant_formal,
    squarefree_support,
    subresultants,
    sylvester,
    vieta,
)
from .elim import factor_rational, isolate_roots, count_roots_in_box

__all__ = [
    "Poly", "T", "as_rat", "rat_str", "multiplicity", "poly_gcd", "poly_gcd_many",
    "poly_lcm", "remove_factor", "squarefree_decomposition", "squarefree_part", "xgcd",
    "interpolate", "resultant_formal",
    "NFElem", "NumberField", "lift_rational",
    "INF", "AlgNum", "BinaryForm", "RootProfile", "discriminant", "distinct_roots",
    "form_resultant", "multiplicity_pattern", "p1", "p1_value", "resultant",
    "squarefree_support", "subresultants", "sylvester", "vieta",
    "factor_rational", "isolate_roots", "count_roots_in_box",
]
