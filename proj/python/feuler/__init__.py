"""Exact Frobenius-Euler numbers and polynomials over Q(lambda)."""

from ._feuler import (
    FEExpansion,
    LRat,
    PoleError,
    XPoly,
    delta_lambda,
    fe_change_order,
    fe_number,
    fe_number_higher,
    fe_numbers_via_series,
    fe_poly,
    fe_poly_higher,
    from_fe_basis,
    integral_01,
    poly_derivative,
    random_screen,
    registry_list,
    report,
    to_fe_basis,
    to_fe_basis_higher,
    verify_identity,
)

__all__ = [
    "FEExpansion",
    "LRat",
    "PoleError",
    "XPoly",
    "delta_lambda",
    "fe_change_order",
    "fe_number",
    "fe_number_higher",
    "fe_numbers_via_series",
    "fe_poly",
    "fe_poly_higher",
    "from_fe_basis",
    "integral_01",
    "poly_derivative",
    "random_screen",
    "registry_list",
    "report",
    "to_fe_basis",
    "to_fe_basis_higher",
    "verify_identity",
]
