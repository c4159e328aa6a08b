"""Exact binomial Eulerian tables over colored permutation groups.

Polynomials are lists of Python ints, lowest degree first.
"""

from ._core import (
    DomainError,
    IdentityError,
    a_plus_minus,
    binomial_eulerian,
    binomial_eulerian_pm,
    d_plus_minus,
    derangement_poly,
    dimension_shadows,
    eulerian_poly,
    facets,
    gamma_b,
    gamma_tilde,
    gamma_vector,
    h_polynomial,
    is_palindromic,
    is_real_rooted,
    is_unimodal,
    local_h,
    named_series,
    series_names,
    verify,
)

__all__ = [
    "DomainError",
    "IdentityError",
    "a_plus_minus",
    "binomial_eulerian",
    "binomial_eulerian_pm",
    "d_plus_minus",
    "derangement_poly",
    "dimension_shadows",
    "eulerian_poly",
    "facets",
    "gamma_b",
    "gamma_tilde",
    "gamma_vector",
    "h_polynomial",
    "is_palindromic",
    "is_real_rooted",
    "is_unimodal",
    "local_h",
    "named_series",
    "series_names",
    "verify",
]
