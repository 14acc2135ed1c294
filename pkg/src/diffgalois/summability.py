"""Rational summability: decide f = sigma(g) - g in C(x).

The reduction walks every polar part along its orbit onto the orbit's
canonical representative.  For a polar term T = R / m^k sitting on the
member m = sigma^t(rep),

    T - sigma^{-t}(T) = sigma(h) - h   with  h = sum_{j=1..t} sigma^{-j}(T),

so T may be replaced by sigma^{-t}(T), which lives on the representative,
while h joins the certificate.  What is left has at most one polar factor
per orbit, and f is summable iff no polar part survives (plus, in the q
case, the x^0 coefficient vanishes).  In the q case the poles at 0 and
the polynomial part form a Laurent polynomial; every monomial x^n with
n != 0 is summable, c x^n = sigma(g) - g for g = c x^n / (q^n - 1).
"""

import os
from dataclasses import dataclass

from .certificate import Certificate
from .orbits import CoverageError, OrbitBasis
from .ratcore import Poly, RatFun, split_over, squarefree_decompose

__all__ = [
    "CoverageError",
    "ObstructionBasis",
    "ReducedForm",
    "is_summable",
    "obstruction_matrix",
    "obstruction_vector",
    "polynomial_antidifference",
    "reduce",
]


def _debug():
    return os.environ.get("DIFFGALOIS_DEBUG", "") not in ("", "0")


@dataclass(frozen=True)
class ReducedForm:
    """f = sigma(g) - g + remainder, with at most one polar factor per orbit.

    ``orbit_obstructions`` holds (representative, ((power, residue), ...))
    with nonzero residues only.  ``laurent_obstruction`` is the x^0
    coefficient in the q case (None for the shift).  ``polynomial_remainder``
    is the polynomial part in the shift case (zero in the q case).
    """

    op: object
    orbit_obstructions: tuple
    laurent_obstruction: object
    polynomial_remainder: Poly
    g: RatFun

    @property
    def has_polar_remainder(self):
        return bool(self.orbit_obstructions)

    def remainder(self):
        dom = self.op.domain
        out = RatFun.from_poly(self.polynomial_remainder)
        if self.laurent_obstruction is not None:
            out = out + RatFun.constant(self.laurent_obstruction, dom)
        for rep, entries in self.orbit_obstructions:
            for k, residue in entries:
                out = out + RatFun(residue, rep ** k)
        return out


def _components(den, op):
    """Squarefree components of den, with the x-part split off in the q case."""
    if den.degree <= 0:
        return [], 0
    v = den.valuation() if op.is_q else 0
    rest = den.shift_down(v)
    return ([p for p, _ in squarefree_decompose(rest)] if rest.degree > 0 else []), v


def _pieces(f, op, basis):
    comps, _ = _components(f.den, op)
    pieces = []
    for p in comps:
        pieces.extend(basis.locate(p))
    return pieces


def reduce(f, op, basis=None):
    """Reduce f modulo the image of sigma - 1.

    ``basis`` (an OrbitBasis) fixes the representatives; by default it is
    built from f's own denominator.  Raises CoverageError when f has a
    pole outside the basis orbits.
    """
    f = op.ratfun(f)
    dom = op.domain
    if basis is None:
        basis = OrbitBasis.build([f.den], op)
    pieces = _pieces(f, op, basis)
    factors = [m for _, _, m in pieces]
    _, xv = _components(f.den, op)
    if xv:
        factors.append(Poly.x(dom))
    poly_part, polar = split_over(f, factors)

    g_terms = []
    residues = {}  # (class index, power) -> residue over the representative
    for (idx, t, member), powers in zip(pieces, polar):
        rep = basis.classes[idx].rep
        back = op.sigma_poly(member, -t)  # = lc * rep
        lead = back.lc
        for k, residue in powers.items():
            term = RatFun(residue, member ** k)
            if t > 0:
                h = [op.sigma(term, -j) for j in range(1, t + 1)]
            else:
                h = [-op.sigma(term, j) for j in range(0, -t)]
            moved = op.sigma_poly(residue, -t) * (dom.one / lead ** k)
            if _debug():
                step = term - RatFun(moved, rep ** k)
                assert step == op.delta(_sum(h, dom)), "reduction step failed"
            g_terms.extend(h)
            key = (idx, k)
            residues[key] = residues.get(key, Poly((), dom)) + moved

    laurent = None
    remainder_poly = poly_part
    if op.is_q:
        # Laurent part: poles at 0 and the polynomial part
        laurent_coeffs = {i: c for i, c in enumerate(poly_part.coeffs) if c}
        if xv:
            for k, residue in polar[-1].items():
                laurent_coeffs[-k] = residue.coeff(0)
        laurent = laurent_coeffs.pop(0, dom.zero)
        for n, c in laurent_coeffs.items():
            g_terms.append(_laurent_monomial(c / (op.q ** n - 1), n, dom))
        remainder_poly = Poly((), dom)

    obstructions = []
    for idx, cl in enumerate(basis.classes):
        entries = tuple((k, residues[(idx, k)]) for k in sorted(
            k for (i, k) in residues if i == idx) if residues[(idx, k)])
        if entries:
            obstructions.append((cl.rep, entries))
    g = _sum(g_terms, dom)
    form = ReducedForm(op, tuple(obstructions), laurent, remainder_poly, g)
    if f - form.remainder() != op.delta(g):
        raise ArithmeticError("reduction identity failed")
    return form


def _laurent_monomial(c, n, dom):
    if n >= 0:
        return RatFun.from_poly(Poly.monomial(c, n, dom))
    return RatFun(Poly.constant(c, dom), Poly.monomial(1, -n, dom))


def _sum(terms, dom):
    """Sum of RatFuns, grouped by denominator to keep gcd work small."""
    by_den = {}
    for t in terms:
        if t:
            by_den.setdefault(t.den, []).append(t.num)
    out = RatFun.constant(0, dom)
    for den, nums in by_den.items():
        num = nums[0]
        for n in nums[1:]:
            num = num + n
        out = out + RatFun(num, den)
    return out


def polynomial_antidifference(p):
    """P with P(x+1) - P(x) = p and P(0) = 0 (shift case)."""
    dom = p.domain
    d = p.degree
    if d < 0:
        return Poly((), dom)
    # Delta(x^j) = sum_{k<j} binom(j, k) x^k; solve from the top degree down
    a = [dom.zero] * (d + 2)
    binom = [[1]]
    for j in range(1, d + 2):
        row = [1] * (j + 1)
        for k in range(1, j):
            row[k] = binom[j - 1][k - 1] + binom[j - 1][k]
        binom.append(row)
    for k in range(d, -1, -1):
        acc = p.coeff(k)
        for j in range(k + 2, d + 2):
            acc = acc - a[j] * binom[j][k]
        a[k + 1] = acc * (dom.one / (k + 1))
    return Poly(a, dom)


def is_summable(f, op, form=None):
    """Certificate(g) with sigma(g) - g == f, or None."""
    f = op.ratfun(f)
    if not f:
        return Certificate(g=RatFun.constant(0, op.domain))
    form = form or reduce(f, op)
    if form.orbit_obstructions:
        return None
    g = form.g
    if op.is_q:
        if form.laurent_obstruction:
            return None
    elif form.polynomial_remainder:
        g = g + RatFun.from_poly(polynomial_antidifference(form.polynomial_remainder))
    if op.delta(g) != f:
        raise ArithmeticError("summability certificate failed")
    return Certificate(g=g)


# -- linearization ---------------------------------------------------------------

class ObstructionBasis:
    """Coordinates for reduced forms over a fixed set of orbit slots.

    A slot is (class index, power); each slot contributes deg(rep)
    coordinates (the residue coefficients).  The q case adds the x^0 slot
    at the end.
    """

    def __init__(self, orbits, max_powers, op):
        self.orbits = orbits
        self.max_powers = tuple(max_powers)
        self.op = op
        self.slots = []
        for idx, cl in enumerate(orbits.classes):
            for k in range(1, self.max_powers[idx] + 1):
                self.slots.append((idx, k))

    @classmethod
    def from_functions(cls, fs, op, extra_power=0):
        """Joint basis for the inputs; powers go up to the largest pole order
        in each orbit plus ``extra_power`` (room for derivatives)."""
        fs = [op.ratfun(f) for f in fs]
        orbits = OrbitBasis.build([f.den for f in fs], op)
        top = [0] * len(orbits.classes)
        for f in fs:
            if f.den.degree <= 0:
                continue
            v = f.den.valuation() if op.is_q else 0
            for p, mult in squarefree_decompose(f.den.shift_down(v)):
                for idx, _, _ in orbits.locate(p):
                    top[idx] = max(top[idx], mult)
        return cls(orbits, [t + extra_power if t else 0 for t in top], op)

    @classmethod
    def from_slots(cls, slots, op):
        """Explicit slots [(representative, power), ...]."""
        orbits = OrbitBasis.build([rep for rep, _ in slots], op)
        top = [0] * len(orbits.classes)
        for rep, k in slots:
            for idx, t, _ in orbits.locate(rep.monic()):
                if t != 0:
                    raise CoverageError("slot factor is not a canonical representative")
                top[idx] = max(top[idx], k)
        return cls(orbits, top, op)

    @property
    def dimension(self):
        n = sum(self.orbits.classes[i].rep.degree for i, _ in self.slots)
        return n + (1 if self.op.is_q else 0)


def obstruction_vector(f, op, basis):
    """Linear coordinates of the reduced remainder of f over ``basis``."""
    form = reduce(f, op, basis.orbits)
    dom = op.domain
    table = {}
    for rep, entries in form.orbit_obstructions:
        for k, residue in entries:
            table[(rep, k)] = residue
    used = set(table)
    out = []
    for idx, k in basis.slots:
        rep = basis.orbits.classes[idx].rep
        residue = table.get((rep, k), Poly((), dom))
        used.discard((rep, k))
        out.extend(residue.coeff(i) for i in range(rep.degree))
    if used:
        raise CoverageError("pole order exceeds the obstruction basis")
    if op.is_q:
        out.append(form.laurent_obstruction)
    return out


def obstruction_matrix(fs, op, basis):
    """Matrix whose column j is obstruction_vector(fs[j]) (as a list of rows)."""
    cols = [obstruction_vector(f, op, basis) for f in fs]
    if not cols:
        return []
    return [list(r) for r in zip(*cols)]
