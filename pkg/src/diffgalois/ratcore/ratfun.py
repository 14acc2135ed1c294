"""Rational functions num/den with gcd(num, den) = 1 and den monic."""

from fractions import Fraction
from math import gcd, isqrt

from .poly import QQ, Poly, _heuristic_int_gcd, _to_integers, poly_gcd, poly_lcm


class RatFun:
    """Immutable reduced fraction of two polynomials over one domain."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, domain=None):
        if not isinstance(num, Poly):
            num = Poly.constant(num, domain or QQ)
        dom = num.domain
        if den is None:
            den = Poly._raw((dom.one,), dom)
        elif not isinstance(den, Poly):
            den = Poly.constant(den, dom)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if den.degree > 0 and num:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
        self._set(num, den)

    def _set(self, num, den):
        dom = num.domain
        if not num:
            den = Poly._raw((dom.one,), dom)
        elif den.lc != 1:
            inv = dom.one / den.lc
            num = num * inv
            den = den * inv
        self.num = num
        self.den = den

    @classmethod
    def _make(cls, num, den):
        # caller guarantees gcd(num, den) = 1
        f = object.__new__(cls)
        f._set(num, den)
        return f

    @classmethod
    def from_poly(cls, p):
        return cls._make(p, Poly._raw((p.domain.one,), p.domain))

    @classmethod
    def constant(cls, c, domain=QQ):
        return cls.from_poly(Poly.constant(c, domain))

    @classmethod
    def x(cls, domain=QQ):
        return cls.from_poly(Poly.x(domain))

    @property
    def domain(self):
        return self.num.domain

    def is_polynomial(self):
        return self.den.degree == 0

    def constant_value(self):
        """The constant this function equals, or None if it depends on x."""
        if self.num.degree <= 0 and self.den.degree == 0:
            return self.num.coeff(0)
        return None

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, RatFun):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.den.degree == 0 and self.num == other
        if isinstance(other, Poly) and other.domain is self.num.domain:
            return self.den.degree == 0 and self.num == other
        return NotImplemented

    def __hash__(self):
        return hash((self.num.coeffs, self.den.coeffs))

    def key(self):
        return (self.den.key(), self.num.key())

    # -- arithmetic -------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFun) and other.num.domain is self.num.domain:
            return other
        if isinstance(other, Poly) and other.domain is self.num.domain:
            return RatFun.from_poly(other)
        # anything else must be a scalar of our coefficient domain
        return RatFun.constant(self.num.domain(other), self.num.domain)

    def _pair(self, other):
        """Both operands in a common domain, order preserved."""
        try:
            return self, self._coerce(other)
        except TypeError:
            if isinstance(other, RatFun):
                # self may be a scalar (e.g. a QQ(q) element) of other's domain
                return other._coerce(self), other
            raise

    def __add__(self, other):
        try:
            a, b = self._pair(other)
        except TypeError:
            return NotImplemented
        return a._add(b)

    def __radd__(self, other):
        return self.__add__(other)

    def _add(self, other):
        if self.den == other.den:
            if self.den.degree == 0:
                return RatFun._make(self.num + other.num, self.den)
            return RatFun(self.num + other.num, self.den)
        if other.den.degree == 0:
            return RatFun._make(self.num + other.num * self.den, self.den)
        if self.den.degree == 0:
            return RatFun._make(self.num * other.den + other.num, other.den)
        g = poly_gcd(self.den, other.den)
        if g.degree == 0:
            return RatFun._make(self.num * other.den + other.num * self.den,
                                self.den * other.den)
        d1 = self.den.exact_div(g)
        d2 = other.den.exact_div(g)
        num = self.num * d2 + other.num * d1
        return RatFun(num, d1 * other.den)

    def __neg__(self):
        return RatFun._make(-self.num, self.den)

    def __sub__(self, other):
        try:
            a, b = self._pair(other)
        except TypeError:
            return NotImplemented
        return a._add(-b)

    def __rsub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return other._add(-self)

    def __mul__(self, other):
        try:
            a, b = self._pair(other)
        except TypeError:
            return NotImplemented
        return a._mul(b)

    def __rmul__(self, other):
        return self.__mul__(other)

    def _mul(self, other):
        if other.den.degree == 0 and other.num.degree <= 0:
            c = other.num.coeff(0)
            if not c:
                return RatFun.constant(0, self.domain)
            return RatFun._make(self.num * c, self.den)
        if self.den.degree == 0 and self.num.degree <= 0:
            return other._mul(self)
        if self.den.degree == 0 and other.den.degree == 0:
            return RatFun._make(self.num * other.num, self.den)
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n1 = self.num.exact_div(g1) if g1.degree > 0 else self.num
        d2 = other.den.exact_div(g1) if g1.degree > 0 else other.den
        n2 = other.num.exact_div(g2) if g2.degree > 0 else other.num
        d1 = self.den.exact_div(g2) if g2.degree > 0 else self.den
        return RatFun._make(n1 * n2, d1 * d2)

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFun._make(self.den, self.num)

    def __truediv__(self, other):
        try:
            a, b = self._pair(other)
        except TypeError:
            return NotImplemented
        return a._mul(b.inverse())

    def __rtruediv__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return other._mul(self.inverse())

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFun._make(self.num ** n, self.den ** n)

    # -- substitutions -------------------------------------------------------

    def taylor_shift(self, n):
        return RatFun._make(self.num.taylor_shift(n), self.den.taylor_shift(n))

    def dilate(self, c):
        return RatFun._make(self.num.dilate(c), self.den.dilate(c))

    def derivative(self):
        if self.den.degree == 0:
            return RatFun._make(self.num.derivative(), self.den)
        num = self.num.derivative() * self.den - self.num * self.den.derivative()
        return RatFun(num, self.den * self.den)

    def __call__(self, value):
        d = self.den(value)
        if not d:
            raise ZeroDivisionError("evaluation at a pole")
        return self.num(value) / d

    # -- display --------------------------------------------------------------

    def to_str(self, var="x"):
        n = self.num.to_str(var)
        if self.den.degree == 0:
            return n
        d = self.den.to_str(var)
        if _needs_parens(self.num):
            n = f"({n})"
        if _needs_parens(self.den):
            d = f"({d})"
        return f"{n}/{d}"

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"RatFun({self.to_str()!r})"


def _needs_parens(p):
    # "/" is left associative, so only sums need grouping
    return sum(1 for c in p.coeffs if c) > 1


class RationalFunctionsInQ:
    """The field QQ(q); elements are RatFun over QQ in the variable q."""

    name = "QQ(q)"

    def __init__(self):
        self.zero = RatFun.constant(0, QQ)
        self.one = RatFun.constant(1, QQ)

    def __call__(self, c):
        if isinstance(c, RatFun):
            if c.domain is not QQ:
                raise TypeError("QQ(q) elements must have rational coefficients")
            return c
        if isinstance(c, Poly) and c.domain is QQ:
            return RatFun.from_poly(c)
        if isinstance(c, (int, Fraction)):
            return RatFun.constant(c, QQ)
        raise TypeError(f"cannot coerce {c!r} into QQ(q)")

    def render(self, c, atomic=False):
        s = c.to_str("q")
        if atomic:
            v = c.constant_value()
            if v is not None:
                return QQ.render(v, atomic=True)
            if c.den.degree > 0 or len([a for a in c.num.coeffs if a]) > 1 or c.num.lc != 1:
                return f"({s})"
        return s

    def key(self, c):
        return c.key()

    def split_sign(self, c):
        if c.num.lc < 0:
            return True, -c
        return False, c

    @property
    def q(self):
        return RatFun.x(QQ)

    def exact_div_polys(self, a, b):
        """a / b when b divides a, by exact division in ZZ[q][x]; else None."""
        quo = _exact_quotient(_integral(a), _integral(b))
        if quo is None:
            return None
        scale = a.lc / (b.lc * RatFun.from_poly(Poly(quo[-1], QQ)))
        return Poly._raw([RatFun.from_poly(Poly(c, QQ)) * scale if c else self.zero
                          for c in quo], self)

    def gcd_of_polys(self, a, b):
        """Monic gcd in QQ(q)[x] by a primitive pseudo-remainder sequence.

        Working in ZZ[q][x] with contents removed keeps the coefficient
        growth of plain Euclid over QQ(q) in check.
        """
        if not b:
            return a.monic()
        if not a:
            return b.monic()
        u, v = _integral(a), _integral(b)
        h = _heuristic_bivariate_gcd(u, v)
        if h is not None:
            if len(h) == 1:
                return Poly._raw((self.one,), self)
            return Poly._raw([RatFun.from_poly(Poly(c, QQ)) for c in h], self).monic()
        if len(u) < len(v):
            u, v = v, u
        while v:
            r = _pseudo_remainder(u, v)
            u, v = v, (_primitive(r) if r else [])
        if len(u) == 1:
            return Poly._raw((self.one,), self)
        return Poly._raw([RatFun.from_poly(Poly(c, QQ)) for c in u], self).monic()

    def xgcd_of_polys(self, a, b):
        """(g, s, t) with s a + t b = g monic, by a pseudo-remainder
        sequence over ZZ[q] that carries the cofactors along."""
        u, v = _integral(a), _integral(b)
        ka = RatFun.from_poly(Poly(u[-1], QQ)) / a.lc
        kb = RatFun.from_poly(Poly(v[-1], QQ)) / b.lc
        row0 = (u, [[1]], [])
        row1 = (v, [], [[1]])
        while row1[0]:
            r0, s0, t0 = row0
            r1, s1, t1 = row1
            quo, rem, k = _pseudo_divmod(r0, r1)
            scale = _zpow(r1[-1], k)
            s2 = _bsub(_bscale(s0, scale), _bmul(quo, s1))
            t2 = _bsub(_bscale(t0, scale), _bmul(quo, t1))
            row0, row1 = row1, _divide_content(rem, s2, t2)
        r, s, t = row0
        lead = RatFun.from_poly(Poly(r[-1], QQ))
        conv = lambda p, k: Poly._raw([RatFun.from_poly(Poly(c, QQ)) * k for c in p], self)
        g = conv(r, 1 / lead)
        return g, conv(s, ka / lead), conv(t, kb / lead)

    def __repr__(self):
        return "QQ(q)"


def _integral(p):
    """Coefficients of p as primitive integer polynomials in q (lists, low first)."""
    den = Poly.constant(1, QQ)
    for c in p.coeffs:
        if c.den.degree > 0 and c.den != den and (den % c.den):
            den = poly_lcm(den, c.den)
    polys = [c.num if c.den == den else c.num * den.exact_div(c.den) for c in p.coeffs]
    scale = 1
    for c in polys:
        for v in c.coeffs:
            scale = scale * v.denominator // gcd(scale, v.denominator)
    return _primitive([[v.numerator * (scale // v.denominator) for v in c.coeffs] for c in polys])


def _zgcd(a, b):
    """gcd in ZZ[q] of integer lists, primitive with positive lead."""
    if not a:
        return _normalize(b)
    if not b:
        return _normalize(a)
    if len(a) == 1 or len(b) == 1:
        return [1]  # integer contents are removed separately
    g = _heuristic_int_gcd(_normalize(a), _normalize(b))
    if g is None:
        p = poly_gcd(Poly(a, QQ), Poly(b, QQ))
        g = _to_integers(p)
    return g


def _normalize(a):
    if not a:
        return a
    c = 0
    for v in a:
        c = gcd(c, v)
    if a[-1] < 0:
        c = -c
    return [v // c for v in a]


def _zdiv(a, b):
    """Exact quotient of integer lists."""
    a = list(a)
    n = len(b) - 1
    out = [0] * (len(a) - n)
    for i in range(len(a) - 1, n - 1, -1):
        k = a[i] // b[-1]
        out[i - n] = k
        if k:
            for j in range(n + 1):
                a[i - n + j] -= k * b[j]
    return out


def _zmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                out[i + j] += u * v
    return out


def _zsub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    while out and not out[-1]:
        out.pop()
    return out


def _primitive(coeffs):
    """Divide out the ZZ[q] content; the leading coefficient ends up with lc > 0."""
    content = []
    for c in coeffs:
        content = _zgcd(content, c)
        if len(content) == 1:
            break
    if len(content) > 1:
        coeffs = [_zdiv(c, content) if c else c for c in coeffs]
    k = 0
    for c in coeffs:
        for v in c:
            k = gcd(k, v)
    if coeffs[-1][-1] < 0:
        k = -k
    return [[v // k for v in c] for c in coeffs]


def _zeval(c, xi):
    v = 0
    for t in reversed(c):
        v = v * xi + t
    return v


def _balanced_digits(n, xi):
    out = []
    half = xi // 2
    while n:
        d = n % xi
        if d > half:
            d -= xi
        out.append(d)
        n = (n - d) // xi
    return out


def _int_quotient(a, b):
    """Exact quotient in ZZ[x] of integer lists, or None."""
    a = list(a)
    n = len(b) - 1
    if len(a) <= n:
        return None if any(a) else []
    out = [0] * (len(a) - n)
    for i in range(len(a) - 1, n - 1, -1):
        k, r = divmod(a[i], b[-1])
        if r:
            return None
        out[i - n] = k
        if k:
            for j in range(n + 1):
                a[i - n + j] -= k * b[j]
    if any(a[:n]):
        return None
    return out


def _exact_quotient(a, h):
    """Quotient a / h in ZZ[q][x] (lists of q-lists), or None if inexact."""
    a = list(a)
    n = len(h) - 1
    if len(a) <= n:
        return None
    out = [[] for _ in range(len(a) - n)]
    for i in range(len(a) - 1, n - 1, -1):
        if a[i]:
            k = _int_quotient(a[i], h[-1])
            if k is None:
                return None
            out[i - n] = k
            for j, hj in enumerate(h):
                if hj:
                    a[i - n + j] = _zsub(a[i - n + j], _zmul(k, hj))
    if any(a[:n]):
        return None
    return out


def _divides(h, a):
    """Whether h divides a in ZZ[q][x]."""
    return _exact_quotient(a, h) is not None


def _heuristic_bivariate_gcd(a, b):
    """gcd in ZZ[q][x] of polynomials primitive over ZZ[q], or None.

    q is evaluated at a large integer xi, the integer gcd in ZZ[x] is
    decoded back digit by digit and accepted if it divides both inputs.
    As in the univariate case, xi >= 2 * min(|a|, |b|) + 2 makes an
    accepted primitive candidate the true gcd.
    """
    norm = min(max(abs(t) for c in p for t in c) for p in (a, b))
    xi = 2 * norm + 29
    for _ in range(6):
        if _zeval(a[-1], xi) and _zeval(b[-1], xi):
            ea = [_zeval(c, xi) for c in a]
            eb = [_zeval(c, xi) for c in b]
            h = _univariate_int_gcd(ea, eb)
            if h is not None:
                cand = _primitive([_balanced_digits(t, xi) for t in h])
                if _divides(cand, a) and _divides(cand, b):
                    return cand
        xi = 73794 * xi * isqrt(isqrt(xi)) // 27011
    return None


def _univariate_int_gcd(a, b):
    """gcd in ZZ[x] of integer lists (up to sign), None if the heuristic fails."""
    if len(a) == 1 or len(b) == 1:
        return [gcd(*a, *b)]
    ca, cb = _normalize(a), _normalize(b)
    g = _heuristic_int_gcd(ca, cb)
    if g is None:
        return None
    k = gcd(gcd(*a), gcd(*b))
    return [k * t for t in g]


def _zpow(c, k):
    out = [1]
    for _ in range(k):
        out = _zmul(out, c)
    return out


def _bscale(p, c):
    return [_zmul(t, c) if t else [] for t in p]


def _bmul(p, r):
    if not p or not r:
        return []
    out = [[] for _ in range(len(p) + len(r) - 1)]
    for i, u in enumerate(p):
        if u:
            for j, v in enumerate(r):
                if v:
                    out[i + j] = _zsub(out[i + j], [-t for t in _zmul(u, v)])
    while out and not out[-1]:
        out.pop()
    return out


def _bsub(p, r):
    n = max(len(p), len(r))
    out = [_zsub(p[i] if i < len(p) else [], r[i] if i < len(r) else []) for i in range(n)]
    while out and not out[-1]:
        out.pop()
    return out


def _pseudo_divmod(a, b):
    """(quo, rem, k) with lc(b)^k a = quo b + rem and deg rem < deg b."""
    a = list(a)
    lb = b[-1]
    db = len(b) - 1
    quo = [[] for _ in range(max(len(a) - db, 0))]
    k = 0
    while a and len(a) - 1 >= db:
        la = a[-1]
        shift = len(a) - len(b)
        quo = _bscale(quo, lb)
        quo[shift] = _zsub(quo[shift], [-t for t in la])
        a = [_zmul(c, lb) if c else c for c in a]
        for j, bj in enumerate(b):
            if bj:
                a[shift + j] = _zsub(a[shift + j], _zmul(la, bj))
        while a and not a[-1]:
            a.pop()
        k += 1
    while quo and not quo[-1]:
        quo.pop()
    return quo, a, k


def _divide_content(r, s, t):
    """Divide the triple by the common content of all its coefficients."""
    content = []
    for c in list(r) + list(s) + list(t):
        if c:
            content = _zgcd(content, c)
            if len(content) == 1:
                break
    if len(content) > 1:
        r, s, t = ([_zdiv(c, content) if c else c for c in p] for p in (r, s, t))
    k = 0
    for p in (r, s, t):
        for c in p:
            for v in c:
                k = gcd(k, v)
    if k > 1:
        r, s, t = ([[v // k for v in c] for c in p] for p in (r, s, t))
    return r, s, t


def _pseudo_remainder(a, b):
    a = list(a)
    lb = b[-1]
    db = len(b) - 1
    while a and len(a) - 1 >= db:
        la = a[-1]
        shift = len(a) - len(b)
        a = [_zmul(c, lb) if c else c for c in a]
        for j, bj in enumerate(b):
            if bj:
                a[shift + j] = _zsub(a[shift + j], _zmul(la, bj))
        while a and not a[-1]:
            a.pop()
    return a


QQq = RationalFunctionsInQ()
