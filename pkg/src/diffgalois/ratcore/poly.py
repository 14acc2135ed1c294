"""Dense univariate polynomials over an exact coefficient field.

A polynomial a_0 + a_1 x + ... + a_n x^n is stored as the tuple
(a_0, a_1, ..., a_n) with a_n nonzero; the zero polynomial is the empty
tuple.  Coefficients live in a *domain* object which knows how to coerce
Python integers and fractions into its elements.  Two domains exist:
:data:`QQ` (elements are :class:`fractions.Fraction`) and ``QQq``, the
rational functions in the transcendental q (see :mod:`.ratfun`).
"""

from fractions import Fraction
from math import gcd, isqrt


class Rationals:
    """The field of rational numbers, with Fraction elements."""

    name = "QQ"
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, c):
        if isinstance(c, Fraction):
            return c
        if isinstance(c, int):
            return Fraction(c)
        constant = getattr(c, "constant_value", None)
        if constant is not None:
            value = constant()
            if value is not None and isinstance(value, Fraction):
                return value
        raise TypeError(f"cannot coerce {c!r} into QQ")

    def render(self, c, atomic=False):
        if c.denominator == 1:
            s = str(c.numerator)
        else:
            s = f"{c.numerator}/{c.denominator}"
        if atomic and (c.denominator != 1 or c < 0):
            return f"({s})"
        return s

    def key(self, c):
        return (c,)

    def mul_coeffs(self, a, b):
        """Coefficients of a product, convolved over the integers."""
        da, ia = _scaled_integers(a)
        db, ib = _scaled_integers(b)
        out = [0] * (len(a) + len(b) - 1)
        for i, u in enumerate(ia):
            if u:
                for j, v in enumerate(ib):
                    out[i + j] += u * v
        d = da * db
        return [Fraction(c, d) for c in out]

    def split_sign(self, c):
        return (True, -c) if c < 0 else (False, c)

    def gcd_of_polys(self, a, b):
        return _rational_gcd(a, b)

    def __repr__(self):
        return "QQ"


QQ = Rationals()


class Poly:
    """Immutable dense polynomial in x over ``domain``."""

    __slots__ = ("coeffs", "domain")

    def __init__(self, coeffs=(), domain=QQ):
        cs = [domain(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.domain = domain

    @classmethod
    def _raw(cls, coeffs, domain):
        # coeffs already in the domain; only trailing zeros are stripped
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        p = object.__new__(cls)
        p.coeffs = tuple(cs)
        p.domain = domain
        return p

    @classmethod
    def x(cls, domain=QQ):
        return cls._raw((domain.zero, domain.one), domain)

    @classmethod
    def constant(cls, c, domain=QQ):
        return cls._raw((domain(c),), domain)

    @classmethod
    def monomial(cls, c, k, domain=QQ):
        return cls._raw((domain.zero,) * k + (domain(c),), domain)

    # -- basic properties ---------------------------------------------------

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.domain.zero

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self):
        return len(self.coeffs) <= 1

    def is_one(self):
        return len(self.coeffs) == 1 and self.coeffs[0] == 1

    def coeff(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.domain.zero

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.coeffs
            return len(self.coeffs) == 1 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def key(self):
        """Total-order sort key, used to make factor lists deterministic."""
        return (self.degree, tuple(self.domain.key(c) for c in self.coeffs))

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.domain is not self.domain:
                raise TypeError("polynomials over different domains")
            return other
        return Poly._raw((self.domain(other),), self.domain)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly._raw(out, self.domain)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw([-c for c in self.coeffs], self.domain)

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            try:
                c = self.domain(other)
            except TypeError:
                return NotImplemented
            if not c:
                return Poly._raw((), self.domain)
            return Poly._raw([a * c for a in self.coeffs], self.domain)
        if other.domain is not self.domain:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw((), self.domain)
        special = getattr(self.domain, "mul_coeffs", None)
        if special is not None:
            return Poly._raw(special(a, b), self.domain)
        out = [self.domain.zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return Poly._raw(out, self.domain)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly._raw((self.domain.one,), self.domain)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        if len(rem) - 1 < db:
            return Poly._raw((), self.domain), self
        inv = self.domain.one / other.lc
        quo = [self.domain.zero] * (len(rem) - db)
        bc = other.coeffs
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if not c:
                continue
            c = c * inv
            quo[i - db] = c
            for j in range(db):
                rem[i - db + j] = rem[i - db + j] - c * bc[j]
            rem[i] = self.domain.zero
        return Poly._raw(quo, self.domain), Poly._raw(rem[:db], self.domain)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        special = getattr(self.domain, "exact_div_polys", None)
        if special is not None and self and other.degree > 0:
            q = special(self, other)
            if q is None:
                raise ArithmeticError("inexact polynomial division")
            return q
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def scale(self, c):
        return self * c

    def monic(self):
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        inv = self.domain.one / self.coeffs[-1]
        return Poly._raw([c * inv for c in self.coeffs], self.domain)

    # -- calculus and substitutions ------------------------------------------

    def derivative(self):
        return Poly._raw([c * i for i, c in enumerate(self.coeffs)][1:], self.domain)

    def __call__(self, value):
        acc = self.domain.zero
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def taylor_shift(self, n):
        """Return p(x + n)."""
        if not n or len(self.coeffs) <= 1:
            return self
        n = self.domain(n)
        out = []
        for c in reversed(self.coeffs):
            # out <- out * (x + n) + c
            new = [self.domain.zero] * (len(out) + 1)
            for i, a in enumerate(out):
                new[i + 1] = new[i + 1] + a
                new[i] = new[i] + a * n
            new[0] = new[0] + c
            out = new
        return Poly._raw(out, self.domain)

    def dilate(self, c):
        """Return p(c x)."""
        c = self.domain(c)
        out = []
        power = self.domain.one
        for a in self.coeffs:
            out.append(a * power)
            power = power * c
        return Poly._raw(out, self.domain)

    def valuation(self):
        """Order of vanishing at x = 0 (None for the zero polynomial)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def shift_down(self, k):
        """Divide by x^k, which must divide the polynomial."""
        if k == 0:
            return self
        if any(self.coeffs[:k]):
            raise ArithmeticError("x^k does not divide the polynomial")
        return Poly._raw(self.coeffs[k:], self.domain)

    # -- display --------------------------------------------------------------

    def to_str(self, var="x"):
        if not self.coeffs:
            return "0"
        out = ""
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            negative, c = self.domain.split_sign(c)
            if i == 0:
                body = self.domain.render(c)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if c == 1 else f"{self.domain.render(c, atomic=True)}*{mono}"
            if negative:
                out += "-" + body
            else:
                out += ("+" if out else "") + body
        return out

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Poly({self.to_str()!r})"


def _scaled_integers(coeffs):
    """(d, ints) with coeffs[i] == ints[i] / d."""
    d = 1
    for c in coeffs:
        d = d * c.denominator // gcd(d, c.denominator)
    if d == 1:
        return 1, [c.numerator for c in coeffs]
    return d, [c.numerator * (d // c.denominator) for c in coeffs]


def _to_integers(p):
    """Primitive integer coefficient list proportional to p (lc > 0)."""
    ints = _scaled_integers(p.coeffs)[1]
    content = 0
    for c in ints:
        content = gcd(content, c)
        if content == 1:
            break
    if ints[-1] < 0:
        content = -content
    return [c // content for c in ints]


def _int_divides(d, p):
    """Whether the integer polynomial d divides p in ZZ[x]."""
    p = list(p)
    lead = d[-1]
    n = len(d) - 1
    for i in range(len(p) - 1, n - 1, -1):
        c = p[i]
        if c:
            k, rem = divmod(c, lead)
            if rem:
                return False
            for j in range(n + 1):
                p[i - n + j] -= k * d[j]
    return not any(p[:n])


def _int_eval(p, xi):
    v = 0
    for c in reversed(p):
        v = v * xi + c
    return v


def _heuristic_int_gcd(f, g):
    """gcd of primitive integer polynomials by evaluation at a large integer.

    The candidate is read off the balanced xi-adic digits of the integer
    gcd and accepted only if its primitive part divides both inputs.
    With xi >= 2 * min(|f|, |g|) + 2 (max-norms) an accepted candidate is
    the gcd, so xi starts above that bound and only grows.  Returns None
    when every attempt fails.
    """
    nf = max(abs(c) for c in f)
    ng = max(abs(c) for c in g)
    xi = 2 * min(nf, ng) + 29
    for _ in range(8):
        h = gcd(_int_eval(f, xi), _int_eval(g, xi))
        if h:
            digits = []
            while h:
                d = h % xi
                if d > xi // 2:
                    d -= xi
                digits.append(d)
                h = (h - d) // xi
            content = 0
            for c in digits:
                content = gcd(content, c)
            if digits[-1] < 0:
                content = -content
            cand = [c // content for c in digits]
            if _int_divides(cand, f) and _int_divides(cand, g):
                return cand
        xi = 73794 * xi * isqrt(isqrt(xi)) // 27011
    return None


def _rational_gcd(p, r):
    """Monic gcd over QQ, computed in ZZ[x] where possible."""
    if not p or not r:
        return (p or r).monic() if (p or r) else p
    if p.degree == 0 or r.degree == 0:
        return Poly._raw((QQ.one,), QQ)
    cand = _heuristic_int_gcd(_to_integers(p), _to_integers(r))
    if cand is not None:
        return Poly([Fraction(c, cand[-1]) for c in cand], QQ)
    a, b = p, r
    while b:
        a, b = b, a % b
    return a.monic()


def poly_gcd(p, r):
    """Monic greatest common divisor; gcd(0, 0) = 0."""
    special = getattr(p.domain, "gcd_of_polys", None)
    if special is not None:
        return special(p, r)
    a, b = p, r
    while b:
        a, b = b, a % b
    return a.monic()


def poly_xgcd(p, r):
    """Return (g, s, t) with s*p + t*r = g = poly_gcd(p, r)."""
    special = getattr(p.domain, "xgcd_of_polys", None)
    if special is not None and p and r:
        return special(p, r)
    dom = p.domain
    one = Poly._raw((dom.one,), dom)
    zero = Poly._raw((), dom)
    a, b = p, r
    s0, s1, t0, t1 = one, zero, zero, one
    while b:
        q, rem = divmod(a, b)
        a, b = b, rem
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not a:
        return a, s0, t0
    inv = dom.one / a.lc
    return a * inv, s0 * inv, t0 * inv


def poly_lcm(p, r):
    if not p or not r:
        return Poly._raw((), p.domain)
    return (p * r).exact_div(poly_gcd(p, r)).monic()


def squarefree_decompose(p):
    """Yun's algorithm.

    Returns [(p_i, m_i)] with p = lc(p) * prod p_i^m_i, every p_i monic,
    squarefree and nonconstant, the p_i pairwise coprime and the m_i
    strictly increasing.
    """
    if not p:
        raise ValueError("squarefree decomposition of the zero polynomial")
    if p.degree == 0:
        return []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p.exact_div(a)
    c = dp.exact_div(a)
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        i += 1
    return out


def squarefree_part(p):
    out = Poly.constant(1, p.domain)
    for f, _ in squarefree_decompose(p):
        out = out * f
    return out


def gcd_free_basis(polys):
    """Pairwise coprime monic nonconstant polynomials generating the same
    multiplicative monoid (up to units) as the squarefree components of
    ``polys``.  Output is sorted by :meth:`Poly.key`."""
    work = []
    for p in polys:
        if p and p.degree > 0:
            work.extend(f for f, _ in squarefree_decompose(p))
    basis = []
    while work:
        a = work.pop()
        for i, b in enumerate(basis):
            g = poly_gcd(a, b)
            if g.degree > 0:
                basis.pop(i)
                for piece in (g, a.exact_div(g).monic(), b.exact_div(g).monic()):
                    if piece.degree > 0:
                        work.append(piece)
                break
        else:
            basis.append(a)
    # deduplicate (equal pieces may be produced twice)
    uniq = {}
    for b in basis:
        uniq[b.coeffs] = b
    return sorted(uniq.values(), key=Poly.key)


def multiplicity(factor, p):
    """Largest m with factor^m dividing p (p nonzero, factor nonconstant)."""
    m = 0
    while True:
        q, r = divmod(p, factor)
        if r:
            return m
        p = q
        m += 1
