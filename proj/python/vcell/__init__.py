"""Exact generating functions, laws and bijections for Voronoi cells of bi-pointed quadrangulations."""

from fractions import Fraction

from . import _core
from ._core import (
    FormatError,
    InvariantViolation,
    asym_ratio,
    bridge_error,
    contour_total,
    demo_path3,
    mgf,
    mgf_limit,
    pde_residual,
    r_fn,
    uniformity_max_deviation,
    validate_map,
    x_fn,
    x_fn_equal,
)

__all__ = [
    "FormatError",
    "InvariantViolation",
    "asym_ratio",
    "bijection",
    "bridge_error",
    "closed_r",
    "contour_total",
    "demo_path3",
    "f_coefficients",
    "law",
    "mgf",
    "mgf_limit",
    "oracle_f",
    "pde_residual",
    "r_fn",
    "r_series",
    "uniformity_max_deviation",
    "validate_map",
    "x_fn",
    "x_fn_equal",
]


def r_series(s, order):
    return [Fraction(c) for c in _core.r_series(s, order)]


def closed_r(s, order):
    return [Fraction(c) for c in _core.closed_r(s, order)]


def f_coefficients(max_degree, variant="all"):
    """Coefficients of u^i v^j keyed by (i, j)."""
    return {k: Fraction(c) for k, c in _core.f_coefficients(max_degree, variant).items()}


def oracle_f(edges):
    return {k: Fraction(c) for k, c in _core.oracle_f(edges).items()}


def law(N, variant="all", backend="exact"):
    out = _core.law(N, variant, backend)
    if backend == "exact":
        out["weights"] = [Fraction(w) for w in out["weights"]]
        out["normalization"] = Fraction(out["normalization"])
    return out


def bijection(text):
    out = _core.bijection(text)
    if "areas" in out:
        out["areas"] = tuple(Fraction(a) for a in out["areas"])
    return out
