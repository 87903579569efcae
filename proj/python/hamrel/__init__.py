"""Reliability polynomials of hammock networks: exact coefficients,
cubic approximations, coefficient bounds and the approximation error bound."""

from fractions import Fraction

from ._hamrel import (
    HamrelError,
    approximate,
    binomial_row,
    dual_coeffs,
    error_bound,
    eval_nform,
    exact_coeffs,
    hammock_coeffs,
    stanley_bounds,
)

__all__ = [
    "HamrelError",
    "approximate",
    "auto_anchors",
    "binomial_row",
    "dual_coeffs",
    "error_bound",
    "eval_nform",
    "exact_coeffs",
    "hammock_coeffs",
    "stanley_bounds",
]


def auto_anchors(l, w, s=1, t=1, variant="A"):
    """Anchor coefficients N_l, N_{l+t}, N_dual_w, N_dual_{w+s} from the oracle."""
    coeffs = hammock_coeffs(l, w, variant)
    dual = dual_coeffs(coeffs)
    return {
        "n_l": coeffs[l],
        "n_lt": coeffs[l + t],
        "nw_dual": dual[w],
        "nws_dual": dual[w + s],
    }


def eval_nform_exact(coeffs, p):
    """Exact h(p) for a rational p."""
    p = Fraction(p)
    n = len(coeffs) - 1
    return sum(c * p**k * (1 - p) ** (n - k) for k, c in enumerate(coeffs))
