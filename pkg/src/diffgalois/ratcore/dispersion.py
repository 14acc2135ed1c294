"""Dispersion sets: the integers n with gcd(p, sigma^n r) nontrivial.

Candidates are enumerated exactly and each one is confirmed by an exact
gcd; nothing is ever located numerically.

* shift: a common root means n = beta - alpha for roots alpha of p, beta of
  r.  Each polynomial is recentred at its root mean before bounding the
  roots, so n lies within the sum of the two radii of the difference of
  the means.  Each
  candidate is first screened with a gcd modulo a 61-bit prime (a common
  factor over QQ survives reduction except for finitely many bad primes),
  then confirmed over QQ.
* numeric q: |q^n| = |beta/alpha| lies between ratios of lower and upper
  root bounds, which bounds n; same screening.
* symbolic q: valuations at q = oo and q = 0 of the roots are read off the
  Newton polygons; an integer n must equal the valuation difference of a
  pair of roots for both valuations.  Candidates are screened modulo the
  prime with q specialized to a fixed residue, then confirmed over QQ(q).

Screening can only discard a candidate when the specialization is one of
finitely many bad ones; the exact gcd decides every surviving candidate.
"""

from fractions import Fraction

from .fields import NUMERIC_Q, RATIONALS, integer_root
from .poly import Poly, gcd_free_basis, poly_gcd

PRIME = (1 << 61) - 1


def sigma_poly(p, field, n):
    """p(x + n) for the shift (field = rationals), p(q^n x) otherwise."""
    if n == 0:
        return p
    if field.kind == RATIONALS:
        return p.taylor_shift(n)
    return p.dilate(field.q_power(n))


def dispersion_set(p, r, field):
    """Integers n with deg gcd(p, sigma^n(r)) > 0.

    ``field`` is a DifferenceOperator or its ConstField (rationals means
    shift).  In the q cases the common root 0 is fixed by every power of sigma; if
    both polynomials vanish at 0 the set would be all of ZZ, which is
    rejected.
    """
    field = getattr(field, "field", field)
    if not p or not r:
        raise ValueError("dispersion of the zero polynomial")
    if field.kind != RATIONALS:
        vp, vr = p.valuation(), r.valuation()
        if vp and vr:
            raise ValueError("both polynomials vanish at the fixed point 0")
        p, r = p.shift_down(vp), r.shift_down(vr)
    if p.degree <= 0 or r.degree <= 0:
        return set()
    if field.kind == RATIONALS:
        cp, rp = _root_disc(p)
        cr, rr = _root_disc(r)
        # n = beta - alpha is real, so |n - (cr - cp)| <= rp + rr
        mid = cr - cp
        lo = -((-(mid - rp - rr).numerator) // (mid - rp - rr).denominator)
        hi = (mid + rp + rr).numerator // (mid + rp + rr).denominator
        candidates = range(lo, hi + 1)
        screen = _screen_shift
    elif field.kind == NUMERIC_Q:
        candidates = _q_exponent_window(p, r, field.q_value)
        screen = _screen_dilation
    else:
        candidates = sorted(_symbolic_candidates(p, r))
        screen = _screen_symbolic
    found = set()
    modp = _mod_prime(p)
    modr = _mod_prime(r)
    for n in candidates:
        if screen and modp is not None and modr is not None:
            if not screen(modp, modr, n, field):
                continue
        if poly_gcd(p, sigma_poly(r, field, n)).degree > 0:
            found.add(n)
    return found


# -- bounds -----------------------------------------------------------------

def _ceil_root(c, k):
    """Smallest integer m >= 0 with m**k >= c, for rational c >= 0."""
    n = -(-c.numerator // c.denominator)
    m = integer_root(n, k)
    return m if m ** k >= c else m + 1


def _cauchy_bound(p):
    """Integer B with |root| <= B for every complex root of p (Fujiwara's bound)."""
    coeffs = [abs(Fraction(c)) for c in p.coeffs]
    d = len(coeffs) - 1
    lc = coeffs[-1]
    best = 0
    for i in range(1, d + 1):
        c = coeffs[d - i] / lc
        if i == d:
            c = c / 2
        if c:
            best = max(best, _ceil_root(c, i))
    return 2 * best + 1


def _root_disc(p):
    """(center, radius): every root lies within radius of the root mean."""
    d = p.degree
    center = -Fraction(p.coeffs[d - 1]) / (d * Fraction(p.coeffs[d]))
    return center, _cauchy_bound(p.taylor_shift(center))


def _root_annulus(p):
    """(lo, hi) with lo <= |root| <= hi, for p with p(0) != 0."""
    hi = _cauchy_bound(p)
    rev = Poly._raw(tuple(reversed(p.coeffs)), p.domain)
    lo = Fraction(1, _cauchy_bound(rev))
    return lo, Fraction(hi)


def _q_exponent_window(p, r, q):
    # common root alpha of p and r(q^n x): q^n = beta/alpha
    lo_p, hi_p = _root_annulus(p)
    lo_r, hi_r = _root_annulus(r)
    lo, hi = lo_r / hi_p, hi_r / lo_p
    base = abs(q)
    if base < 1:
        # |q|^n in [lo, hi]  <=>  |1/q|^(-n) in [lo, hi]
        return sorted(-n for n in _exponents_in(1 / base, lo, hi))
    return _exponents_in(base, lo, hi)


def _exponents_in(base, lo, hi):
    # all n with lo <= base^n <= hi, base > 1
    n, power = 0, Fraction(1)
    while power > lo:
        power /= base
        n -= 1
    out = []
    while power <= hi:
        if power >= lo:
            out.append(n)
        power *= base
        n += 1
    return out


# -- Newton polygons for symbolic q ----------------------------------------

def _deg_valuation(c):
    # valuation at q = oo: -(deg num - deg den)
    return c.den.degree - c.num.degree


def _zero_valuation(c):
    return c.num.valuation() - c.den.valuation()


def _root_valuations(p, valuation):
    """Valuations of the roots, from the lower convex hull of (i, v(a_i))."""
    pts = [(i, valuation(c)) for i, c in enumerate(p.coeffs) if c]
    hull = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop hull[-1] if it lies on or above the segment hull[-2] -> pt
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    out = set()
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        out.add(-Fraction(y2 - y1, x2 - x1))
    return out


def _symbolic_candidates(p, r):
    # beta = q^n alpha:  v_oo(beta) = v_oo(alpha) - n,  v_0(beta) = v_0(alpha) + n
    at_inf = {a - b for a in _root_valuations(p, _deg_valuation)
              for b in _root_valuations(r, _deg_valuation)}
    at_zero = {b - a for a in _root_valuations(p, _zero_valuation)
               for b in _root_valuations(r, _zero_valuation)}
    return {int(n) for n in at_inf & at_zero if n.denominator == 1}


# -- modular screening -------------------------------------------------------

# q is specialized to this residue when screening over QQ(q)
Q_SAMPLE = 1234567891


def _rational_mod(c):
    if c.denominator % PRIME == 0:
        return None
    return c.numerator * pow(c.denominator, -1, PRIME) % PRIME


def _poly_at_sample(p):
    # value mod PRIME of a q-polynomial over QQ at q = Q_SAMPLE
    acc = 0
    for c in reversed(p.coeffs):
        v = _rational_mod(c)
        if v is None:
            return None
        acc = (acc * Q_SAMPLE + v) % PRIME
    return acc


def _coeff_mod(c):
    if isinstance(c, Fraction):
        return _rational_mod(c)
    num, den = _poly_at_sample(c.num), _poly_at_sample(c.den)
    if num is None or not den:
        return None
    return num * pow(den, -1, PRIME) % PRIME


def _mod_prime(p):
    out = []
    for c in p.coeffs:
        v = _coeff_mod(c)
        if v is None:
            return None
        out.append(v)
    if out[-1] == 0:
        return None
    return out


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _gcd_degree_mod(a, b):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        inv = pow(b[-1], -1, PRIME)
        while len(a) >= len(b):
            c = a[-1] * inv % PRIME
            shift = len(a) - len(b)
            for j, bj in enumerate(b):
                a[shift + j] = (a[shift + j] - c * bj) % PRIME
            _trim(a)
            if not a:
                break
        a, b = b, a
    return len(a) - 1


def _screen_shift(mp, mr, n, field):
    # r(x + n) mod PRIME by Horner
    out = []
    for c in reversed(mr):
        new = [0] * (len(out) + 1)
        for i, a in enumerate(out):
            new[i + 1] = (new[i + 1] + a) % PRIME
            new[i] = (new[i] + a * n) % PRIME
        new[0] = (new[0] + c) % PRIME
        out = new
    return _gcd_degree_mod(mp, out) > 0


def _screen_dilation(mp, mr, n, field):
    qm = _rational_mod(field.q_value)
    if not qm:
        return True
    return _screen_power(mp, mr, pow(qm, n, PRIME))


def _screen_symbolic(mp, mr, n, field):
    return _screen_power(mp, mr, pow(Q_SAMPLE, n, PRIME))


def _screen_power(mp, mr, qn):
    out, power = [], 1
    for c in mr:
        out.append(c * power % PRIME)
        power = power * qn % PRIME
    if out[-1] == 0:
        return True
    return _gcd_degree_mod(mp, out) > 0


# -- orbit refinement ----------------------------------------------------------

def orbit_refine(polys, field, relations=None):
    """Refine a gcd-free basis until orbit relations are all-or-nothing.

    On return the factors are pairwise coprime, monic and squarefree, none
    meets its own orbit (dispersion with itself is {0}), and for two
    factors a, b and n in their dispersion set, a == monic(sigma^n(b)).
    In the q cases the factor x is dropped (0 is fixed by the dilation).
    If ``relations`` is a dict it receives {(a, b): dispersion_set(a, b)}
    for every pair of returned factors, in one of the two orders.
    """
    field = getattr(field, "field", field)
    basis = []
    for f in gcd_free_basis(polys):
        if field.kind != RATIONALS:
            f = f.shift_down(f.valuation())
        if f.degree > 0:
            basis.append(f)
    known = {}  # (a, b) -> dispersion set, valid while both factors survive
    while True:
        split = _find_split(basis, field, known)
        if split is None:
            if relations is not None:
                relations.update(known)
            return sorted(basis, key=Poly.key)
        i, pieces = split
        basis.pop(i)
        basis.extend(p for p in pieces if p.degree > 0)


def _find_split(basis, field, known):
    for i, a in enumerate(basis):
        for j in range(i, len(basis)):
            b = basis[j]
            key = (a, b)
            if key not in known:
                known[key] = dispersion_set(a, b, field)
            for n in sorted(known[key]):
                if i == j and n == 0:
                    continue
                g = poly_gcd(a, sigma_poly(b, field, n))
                if g.degree < a.degree:
                    return i, (g, a.exact_div(g).monic())
                piece = sigma_poly(g, field, -n).monic()
                if piece.degree < b.degree:
                    return j, (piece, b.exact_div(piece).monic())
    return None
