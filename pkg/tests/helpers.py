"""Random instance generators and brute-force oracles shared by the tests.

The oracles deliberately avoid the engine: they pose the defining
identity as a linear system in undetermined coefficients, or enumerate
exponent vectors, and use their own elimination routine.
"""

import itertools
import math
from fractions import Fraction

from diffgalois import DifferenceOperator, Poly, RatFun
from diffgalois.ratcore import dispersion_set, squarefree_decompose

SHIFT = DifferenceOperator.shift()
QSYM = DifferenceOperator.qdilation("symbolic")
Q2 = DifferenceOperator.qdilation(2)
Q3HALF = DifferenceOperator.qdilation(Fraction(-3, 2))


def X(op):
    return RatFun.x(op.domain)


def const(op, c):
    return RatFun.constant(c, op.domain)


def random_constant(rng, op, nonzero=True, small=5):
    while True:
        c = Fraction(rng.randint(-small, small), rng.randint(1, 3))
        if op.field.kind == "symbolic-q" and rng.random() < 0.3:
            value = op.domain(c) * op.q ** rng.randint(-2, 2)
        else:
            value = op.domain(c)
        if value or not nonzero:
            return value


def random_linear_or_quadratic(rng, op):
    """Monic factor x - r or irreducible x^2 + b x + c with small rational data."""
    dom = op.domain
    if rng.random() < 0.7:
        r = Fraction(rng.randint(-4, 4), rng.choice([1, 1, 2]))
        if op.is_q and r == 0:
            r = Fraction(1)
        root = dom(r)
        if op.field.kind == "symbolic-q" and rng.random() < 0.4:
            root = root * op.q ** rng.randint(-2, 2)
        return Poly((-root, dom.one), dom)
    while True:
        # irreducible over QQ, so a lone quadratic pole cannot split
        b, c = rng.randint(-3, 3), rng.randint(1, 4)
        disc = b * b - 4 * c
        if disc < 0 or math.isqrt(disc) ** 2 != disc:
            return Poly((dom(c), dom(b), dom.one), dom)


def random_poly(rng, op, degree, nonzero=False):
    dom = op.domain
    while True:
        coeffs = [random_constant(rng, op, nonzero=False) for _ in range(degree + 1)]
        p = Poly(coeffs, dom)
        if p or not nonzero:
            return p


def random_ratfun(rng, op, max_deg=6, allow_x_pole=True):
    """Random g with numerator and denominator of degree <= max_deg."""
    dom = op.domain
    den = Poly.constant(1, dom)
    target = rng.randint(0, max_deg)
    while den.degree < target:
        f = random_linear_or_quadratic(rng, op)
        if den.degree + f.degree > max_deg:
            break
        den = den * f
    if op.is_q and allow_x_pole and rng.random() < 0.3 and den.degree < max_deg:
        den = den * Poly.x(dom)
    num = random_poly(rng, op, rng.randint(0, max_deg), nonzero=True)
    return RatFun(num, den)


def random_obstruction(rng, op):
    """A term that is never summable on its own: a lone pole, or (q case) a constant."""
    if op.is_q and rng.random() < 0.25:
        return const(op, random_constant(rng, op))
    factor = random_linear_or_quadratic(rng, op)
    k = rng.randint(1, 2)
    residue = random_poly(rng, op, factor.degree - 1, nonzero=True)
    return RatFun(residue, factor ** k)


def summable_instance(rng, op, max_deg=6):
    g = random_ratfun(rng, op, max_deg)
    return op.sigma(g) - g


def non_summable_instance(rng, op, max_deg=6):
    """sigma(g) - g plus a lone pole whose orbit avoids the poles of g."""
    g = random_ratfun(rng, op, max_deg)
    f = op.sigma(g) - g
    while True:
        ob = random_obstruction(rng, op)
        if ob.den.degree == 0:
            return f + ob
        base = ob.den
        # keep the obstruction's orbit away from the poles of g
        other = g.den.shift_down(g.den.valuation()) if op.is_q else g.den
        if other.degree <= 0 or not dispersion_set(base, other, op):
            return f + ob


# -- brute-force summability -------------------------------------------------------

def _solve(rows, rhs):
    """One solution of rows * v = rhs over a field, or None (plain elimination)."""
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    ncols = len(rows[0]) if rows else 0
    piv_cols = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                k = m[i][c]
                m[i] = [a - k * b for a, b in zip(m[i], m[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, len(m)):
        if m[i][-1]:
            return None
    sol = [0] * ncols
    for i, c in enumerate(piv_cols):
        sol[c] = m[i][-1]
    return sol


def brute_force_summable(f, op):
    """Decide f = sigma(g) - g by undetermined coefficients.

    g = N / E with E the product of sigma^j(squarefree(den f))^m over
    0 <= j < W (W the widest self-dispersion, m the top multiplicity
    within the orbit; taken per squarefree part, which can only
    overestimate) and
    deg N <= deg E + max(0, deg f) + 1.  Returns g or None.

    Why E suffices: if the poles of g in one orbit occupy the positions
    sigma^a(p) .. sigma^b(p), then sigma(g) - g keeps the two extreme
    poles sigma^a(p) and sigma^(b+1)(p), so b + 1 - a <= W, and the
    leftmost pole of top order survives with that order.
    """
    dom = op.domain
    if not f:
        return RatFun.constant(0, dom)
    den = f.den
    xpow = 0
    if op.is_q:
        xpow = den.valuation()
        den = den.shift_down(xpow)
    E = Poly.x(dom) ** xpow
    if den.degree > 0:
        parts = squarefree_decompose(den)
        s = Poly.constant(1, dom)
        for p, _ in parts:
            s = s * p
        width = max(abs(n) for n in dispersion_set(s, s, op))
        for p, _ in parts:
            # top multiplicity among the parts sharing an orbit with p
            m = max(k for r, k in parts if dispersion_set(p, r, op))
            for j in range(width):
                E = E * op.sigma_poly(p, j) ** m
    deg_f = max(0, f.num.degree - f.den.degree)
    n_unknowns = E.degree + deg_f + 2
    sE = op.sigma_poly(E, 1)
    # N(sigma x) E - N sigma(E) = f E sigma(E), a polynomial identity
    target = RatFun(E * sE) * f
    if not target.is_polynomial():
        # every admissible g has denominator dividing E
        return None
    target = target.num
    columns = []
    for i in range(n_unknowns):
        mono = Poly.monomial(1, i, dom)
        columns.append(op.sigma_poly(mono, 1) * E - mono * sE)
    height = max([c.degree for c in columns] + [target.degree]) + 1
    rows = [[c.coeff(k) for c in columns] for k in range(height)]
    rhs = [target.coeff(k) for k in range(height)]
    sol = _solve(rows, rhs)
    if sol is None:
        return None
    N = Poly([dom(v) for v in sol], dom)
    return RatFun(N, E)


# -- brute-force multiplicative relations ------------------------------------------

def random_multiplicative_family(rng, op, d, max_deg=4):
    """d nonzero rational functions sharing orbits now and then, with
    numerator and denominator degrees at most max_deg."""
    dom = op.domain
    pool = [random_linear_or_quadratic(rng, op) for _ in range(3)]
    out = []
    while len(out) < d:
        a = RatFun.constant(rng.choice([1, 1, -1, 2, Fraction(1, 2), 4, -2, 3]), dom)
        for _ in range(rng.randint(0, 2)):
            p = rng.choice(pool)
            p = op.sigma_poly(p, rng.randint(-2, 2))
            a = a * RatFun.from_poly(p) ** rng.choice([1, -1, 2])
        if op.is_q and rng.random() < 0.3:
            a = a * RatFun.x(dom) ** rng.choice([1, -1])
        if rng.random() < 0.3:
            g = random_ratfun(rng, op, 2, allow_x_pole=False)
            if g:
                a = a * op.sigma(g) / g
        if max(a.num.degree, a.den.degree) <= max_deg:
            out.append(a)
    return out


def box_relations(as_, op, is_ratio, bound=3):
    """All lambda in [-bound, bound]^d with prod a_i^lambda_i a ratio sigma(g)/g."""
    d = len(as_)
    found = set()
    for lam in itertools.product(range(-bound, bound + 1), repeat=d):
        if not any(lam):
            found.add(lam)
            continue
        neg = tuple(-v for v in lam)
        if neg in found:
            found.add(lam)
            continue
        if lam > neg:
            # each pair +-lam is decided once, from the smaller member
            continue
        value = RatFun.constant(1, op.domain)
        for a, k in zip(as_, lam):
            if k:
                value = value * a ** k
        if is_ratio(value, op) is not None:
            found.add(lam)
            found.add(neg)
    return found


def random_matrix(rng, op, d):
    """Random invertible d x d matrix of small rational functions."""
    from diffgalois import SystemMatrix

    while True:
        rows = [[random_ratfun(rng, op, 1, allow_x_pole=False) if rng.random() < 0.7
                 else const(op, 0) for _ in range(d)] for _ in range(d)]
        try:
            return SystemMatrix(rows, op)
        except ValueError:
            continue
