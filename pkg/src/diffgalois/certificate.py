"""Certificates: the data that lets a verdict be re-checked by substitution."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Certificate:
    """Witness for an identity of the form

    * additive:        sum(lam[i] * f[i]) == sigma(g) - g
    * multiplicative:  prod(a[i] ** lam[i]) == c * x**n * sigma(g) / g

    Unused fields stay None.
    """

    g: object = None
    lam: tuple = None
    c: object = None
    n: int = None
