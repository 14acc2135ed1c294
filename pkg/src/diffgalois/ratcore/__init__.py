"""Exact arithmetic over QQ, QQ(q) and the rational function field C(x)."""

from .dispersion import dispersion_set, orbit_refine, sigma_poly
from .fields import ConstField, perfect_power, rational_log
from .partial import PartialFractionForm, PolarTerm, partial_fractions, split_over
from .poly import (
    QQ,
    Poly,
    gcd_free_basis,
    multiplicity,
    poly_gcd,
    poly_lcm,
    poly_xgcd,
    squarefree_decompose,
    squarefree_part,
)
from .ratfun import QQq, RatFun

__all__ = [
    "QQ",
    "QQq",
    "ConstField",
    "PartialFractionForm",
    "PolarTerm",
    "Poly",
    "RatFun",
    "dispersion_set",
    "orbit_refine",
    "gcd_free_basis",
    "multiplicity",
    "partial_fractions",
    "perfect_power",
    "poly_gcd",
    "poly_lcm",
    "poly_xgcd",
    "rational_log",
    "sigma_poly",
    "split_over",
    "squarefree_decompose",
    "squarefree_part",
]
