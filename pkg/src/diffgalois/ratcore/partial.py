"""Partial fractions over a set of pairwise coprime squarefree factors.

No root extraction happens: a polar term is (factor, power, residue) with
the residue a polynomial of degree < deg(factor), i.e. an element of
C[x]/(factor).
"""

from dataclasses import dataclass

from .dispersion import orbit_refine
from .fields import RATIONALS
from .poly import Poly, poly_gcd, poly_xgcd, squarefree_decompose
from .ratfun import RatFun


@dataclass(frozen=True)
class PolarTerm:
    factor: Poly
    power: int
    residue: Poly

    def to_ratfun(self):
        return RatFun(self.residue, self.factor ** self.power)


@dataclass(frozen=True)
class PartialFractionForm:
    polynomial_part: Poly
    polar_terms: tuple

    def reassemble(self):
        out = RatFun.from_poly(self.polynomial_part)
        for t in self.polar_terms:
            out = out + t.to_ratfun()
        return out


def support_part(den, factor):
    """The largest divisor of ``den`` whose roots are all roots of ``factor``,
    together with the number of gcd rounds needed (a bound on the pole order)."""
    part = Poly.constant(1, den.domain)
    rounds = 0
    rest = den
    while True:
        h = poly_gcd(rest, factor)
        if h.degree <= 0:
            return part, rest, rounds
        part = part * h
        rest = rest.exact_div(h)
        rounds += 1


def _inverse_mod_power(a, p, rounds, part):
    """s with s * a = 1 modulo part, where part divides p^rounds.

    The extended Euclid runs modulo the squarefree p only; Newton steps
    s <- s (2 - a s) then lift the inverse to p^rounds.
    """
    _, s, _ = poly_xgcd(a % p, p)
    modulus, e = p, 1
    while e < rounds:
        e = min(2 * e, rounds)
        modulus = p ** e
        a_mod = a % modulus
        s = (s * (2 - a_mod * s)) % modulus
    return s % part


def split_over(f, factors):
    """Decompose ``f`` over pairwise coprime monic squarefree ``factors``.

    Returns ``(polynomial_part, polar)`` where ``polar[i]`` maps a power k to
    the residue of the term residue/factors[i]^k (zero residues omitted).
    Raises ValueError if the denominator has a root outside the factors.
    """
    dom = f.domain
    poly_part, rem = divmod(f.num, f.den)
    polar = [dict() for _ in factors]
    if not rem:
        return poly_part, polar
    den = f.den
    pieces = []
    for i, b in enumerate(factors):
        part, den, rounds = support_part(den, b)
        if rounds:
            pieces.append((i, part, rounds))
    if den.degree > 0:
        raise ValueError("denominator not covered by the given factors")
    # CRT split: rem/D = sum N_i/G_i, peeling one factor support at a time
    total = f.den
    for i, part, rounds in pieces:
        other = total.exact_div(part)
        if other.degree <= 0:
            numer = rem * (dom.one / other.lc) if other.degree == 0 else rem
            rem = Poly._raw((), dom)
        else:
            s = _inverse_mod_power(other, factors[i], rounds, part)
            numer = (rem * s) % part
            rem = (rem - numer * other).exact_div(part)
        total = other
        b = factors[i]
        # numer/part = numer*(b^E/part) / b^E, then expand in base b
        lift = (b ** rounds).exact_div(part)
        m = numer * lift
        for k in range(rounds):
            m, digit = divmod(m, b)
            if digit:
                polar[i][rounds - k] = digit
        if m:
            raise ArithmeticError("partial fraction digits overflow")
    return poly_part, polar


def partial_fractions(f, op=None):
    """Decomposition over the squarefree factors of the denominator.

    With a difference operator ``op`` the factors are refined further so
    that each one lies in a single orbit: 1/(x(x+1)) then splits into
    1/x - 1/(x+1) under the shift.
    """
    if f.den.degree <= 0:
        factors = []
    elif op is None:
        factors = [p for p, _ in squarefree_decompose(f.den)]
    else:
        factors = orbit_refine([f.den], op)
        v = f.den.valuation()
        if v and getattr(op, "field", op).kind != RATIONALS:
            factors.append(Poly.x(f.domain))
    poly_part, polar = split_over(f, factors)
    terms = []
    for b, powers in zip(factors, polar):
        for k in sorted(powers):
            terms.append(PolarTerm(b, k, powers[k]))
    return PartialFractionForm(poly_part, tuple(terms))
