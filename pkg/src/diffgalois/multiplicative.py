"""Multiplicative normal form a = c * x^n * sigma(g)/g * u/v.

Every factor of a is split into orbit members monic(sigma^t(rep)).  A
member raised to e telescopes onto the representative:

    sigma^t(rep)^e = rep^e * sigma(G)/G,   G = prod_{0<=i<t} sigma^i(rep)^e,

so all that survives is rep^M per orbit with M the orbit's total
multiplicity.  The kernel u/v = prod rep^M is 1 exactly when a can be
written c * x^n * sigma(g)/g; otherwise some orbit carries a nonzero
total multiplicity, which no sigma(g)/g can produce.

Constants.  sigma(g)/g has leading coefficient 1 for the shift and q^m
(m = deg g) for the dilation, so the constants a ratio may absorb are
{1} for the shift and q^ZZ for the dilation.  ``product_decompose``
allows any constant c; ``is_ratio`` insists on these absorbable ones.
"""

from dataclasses import dataclass
from math import gcd

from .certificate import Certificate
from .orbits import OrbitBasis
from .ratcore import Poly, RatFun, dispersion_set, perfect_power, rational_log, squarefree_decompose
from .ratcore.fields import NUMERIC_Q, SYMBOLIC_Q


@dataclass(frozen=True)
class ProductForm:
    """a = c * x^n * sigma(g)/g * u/v, u and v orbit-coprime, x-free in the q case."""

    c: object
    n: int
    g: RatFun
    u: Poly
    v: Poly
    orbit_exponents: tuple  # ((representative, M), ...), M != 0

    @property
    def kernel_trivial(self):
        return self.u.degree <= 0 and self.v.degree <= 0

    def reassemble(self, op):
        dom = op.domain
        x_part = RatFun.x(dom) ** self.n if self.n else RatFun.constant(1, dom)
        ratio = op.sigma(self.g) / self.g
        return RatFun.constant(self.c, dom) * x_part * ratio * RatFun(self.u, self.v)


def _support(a):
    return [a.num, a.den]


def _factor_exponents(p, sign, op, basis, out):
    """Accumulate {(class, t): exponent} for the squarefree pieces of p."""
    v = p.valuation() if op.is_q else 0
    rest = p.shift_down(v)
    if rest.degree > 0:
        for comp, mult in squarefree_decompose(rest):
            for idx, t, _ in basis.locate(comp):
                out[(idx, t)] = out.get((idx, t), 0) + sign * mult
    return sign * v


def gp_normal_form(a, op, basis=None):
    """ProductForm of a nonzero rational function ``a``.

    ``basis`` fixes the orbit representatives (default: built from a).
    """
    a = op.ratfun(a)
    if not a:
        raise ValueError("normal form of zero")
    dom = op.domain
    if basis is None:
        basis = OrbitBasis.build(_support(a), op)
    exps = {}
    n = _factor_exponents(a.num, 1, op, basis, exps)
    n += _factor_exponents(a.den, -1, op, basis, exps)
    c = a.num.lc / a.den.lc
    g_num = Poly.constant(1, dom)
    g_den = Poly.constant(1, dom)
    totals = {}
    for (idx, t), e in sorted(exps.items()):
        if not e:
            continue
        rep = basis.classes[idx].rep
        totals[idx] = totals.get(idx, 0) + e
        # the factor was monic(sigma^t(rep)) = sigma^t(rep) / lead
        lead = op.sigma_poly(rep, t).lc
        c = c / lead ** e
        if t > 0:
            block = Poly.constant(1, dom)
            for i in range(t):
                block = block * op.sigma_poly(rep, i)
            if e > 0:
                g_num = g_num * block ** e
            else:
                g_den = g_den * block ** (-e)
        elif t < 0:
            block = Poly.constant(1, dom)
            for i in range(t, 0):
                block = block * op.sigma_poly(rep, i)
            if e > 0:
                g_den = g_den * block ** e
            else:
                g_num = g_num * block ** (-e)
    u = Poly.constant(1, dom)
    v = Poly.constant(1, dom)
    orbit_exponents = []
    for idx in sorted(totals):
        m = totals[idx]
        if not m:
            continue
        rep = basis.classes[idx].rep
        orbit_exponents.append((rep, m))
        if m > 0:
            u = u * rep ** m
        else:
            v = v * rep ** (-m)
    g = RatFun(g_num, g_den)
    if g.num.lc != 1:
        g = g * (dom.one / g.num.lc)
    form = ProductForm(c, n, g, u, v, tuple(orbit_exponents))
    if form.reassemble(op) != a:
        raise ArithmeticError("normal form identity failed")
    return form


def product_decompose(a, op):
    """Certificate(c, n, g) with a == c * x^n * sigma(g)/g, any constant c; or None."""
    form = gp_normal_form(a, op)
    if not form.kernel_trivial:
        return None
    cert = Certificate(g=form.g, c=form.c, n=form.n)
    if _ratio_value(cert, op) != op.ratfun(a):
        raise ArithmeticError("product certificate failed")
    return cert


def _ratio_value(cert, op):
    dom = op.domain
    x_part = RatFun.x(dom) ** cert.n if cert.n else RatFun.constant(1, dom)
    return RatFun.constant(cert.c, dom) * x_part * op.sigma(cert.g) / cert.g


def absorbable_exponent(c, op):
    """m with c == q^m (q case) or 0 if c == 1 (shift); None otherwise."""
    if not op.is_q:
        return 0 if c == 1 else None
    return op.field.q_log(c)


def is_ratio(a, op, form=None):
    """Certificate(g) with a == sigma(g)/g exactly (constant absorbed into g), or None."""
    form = form or gp_normal_form(a, op)
    if not form.kernel_trivial or form.n:
        return None
    m = absorbable_exponent(form.c, op)
    if m is None:
        return None
    g = form.g
    if m:
        # q^m = sigma(x^m)/x^m
        g = g * RatFun.x(op.domain) ** m
    if op.sigma(g) / g != op.ratfun(a):
        raise ArithmeticError("ratio certificate failed")
    return Certificate(g=g, c=op.domain.one, n=0)


def minimal_torsion(a, op):
    """Smallest N >= 1 with a^N == sigma(g)/g for some g in C(x), or None."""
    form = gp_normal_form(a, op)
    if not form.kernel_trivial or form.n:
        return None
    c = form.c
    if not op.is_q:
        return {1: 1, -1: 2}.get(c)
    if op.field.kind == SYMBOLIC_Q:
        # the units of QQ(q) that become q-powers after a power are +-q^j
        if op.field.q_log(c) is not None:
            return 1
        if op.field.q_log(-c) is not None:
            return 2
        return None
    assert op.field.kind == NUMERIC_Q
    c = op.domain(c)
    q = op.field.q_value
    base, k = perfect_power(q)
    if abs(c) == 1:
        j = 0
    else:
        j = rational_log(abs(c), base)
        if j is None:
            return None
    # |c|^N = |q|^m  <=>  N * j = m * k
    r = k // gcd(j, k)
    s = j * r // k
    sign_c = -1 if c < 0 else 1
    sign_q = -1 if q < 0 else 1
    if sign_c ** r == sign_q ** (s % 2):
        return r
    return 2 * r


def kernel_is_coprime(form, op):
    """u and v share no orbit (dispersion_set(u, v) is empty)."""
    if form.u.degree <= 0 or form.v.degree <= 0:
        return True
    return not dispersion_set(form.u, form.v, op)
