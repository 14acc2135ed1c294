"""Constant fields: QQ, QQ with a rational q, and QQ(q) with q transcendental."""

from dataclasses import dataclass
from fractions import Fraction

from .poly import QQ, Poly
from .ratfun import QQq

RATIONALS = "rationals"
NUMERIC_Q = "numeric-q"
SYMBOLIC_Q = "symbolic-q"


@dataclass(frozen=True)
class ConstField:
    """Where constants (k, C, q, lambda, c) live.

    ``kind`` is one of ``"rationals"``, ``"numeric-q"`` (q an exact rational
    other than 0 and +-1, the only rational roots of unity) and
    ``"symbolic-q"`` (q transcendental, so q^n - 1 is invertible for all
    n != 0).
    """

    kind: str = RATIONALS
    q_value: Fraction = None

    def __post_init__(self):
        if self.kind == NUMERIC_Q:
            q = Fraction(self.q_value)
            if q in (0, 1, -1):
                raise ValueError(f"q = {q} is zero or a root of unity")
            object.__setattr__(self, "q_value", q)
        elif self.kind in (RATIONALS, SYMBOLIC_Q):
            if self.q_value is not None:
                raise ValueError("q_value is only meaningful for numeric q")
        else:
            raise ValueError(f"unknown constant field kind {self.kind!r}")

    @classmethod
    def rationals(cls):
        return cls(RATIONALS)

    @classmethod
    def numeric_q(cls, q):
        return cls(NUMERIC_Q, Fraction(q))

    @classmethod
    def symbolic_q(cls):
        return cls(SYMBOLIC_Q)

    @property
    def domain(self):
        return QQq if self.kind == SYMBOLIC_Q else QQ

    @property
    def q(self):
        if self.kind == NUMERIC_Q:
            return self.q_value
        if self.kind == SYMBOLIC_Q:
            return QQq.q
        raise AttributeError("the rationals carry no q")

    def q_power(self, n):
        return self.q ** n

    def __call__(self, c):
        return self.domain(c)

    def q_log(self, c):
        """Return m with q^m == c, or None."""
        if self.kind == NUMERIC_Q:
            return rational_log(Fraction(c), self.q_value)
        if self.kind == SYMBOLIC_Q:
            c = QQq(c)
            num, den = c.num, c.den
            if num.degree == den.degree == 0 and num.coeff(0) == 1:
                return 0
            # c = q^m exactly iff one side is q^|m| and the other is 1
            if den.degree == 0 and num == Poly.monomial(1, num.degree, QQ):
                return num.degree
            if num.degree == 0 and num.coeff(0) == 1 and den == Poly.monomial(1, den.degree, QQ):
                return -den.degree
            return None
        return 0 if c == 1 else None

    def describe(self):
        if self.kind == NUMERIC_Q:
            return f"QQ, q={QQ.render(self.q_value)}"
        return {RATIONALS: "QQ", SYMBOLIC_Q: "QQ(q)"}[self.kind]


def rational_log(c, base):
    """Exact integer m with base**m == c, or None (|base| != 1, both nonzero)."""
    c, base = Fraction(c), Fraction(base)
    if c == 0 or base == 0 or abs(base) == 1:
        raise ValueError("rational_log needs nonzero c and |base| != 1")
    if c == 1:
        return 0
    step = base if abs(base) > 1 else 1 / base
    sign = 1 if abs(base) > 1 else -1
    target = abs(c)
    # walk upward (target > 1) or downward (target < 1) in |step|^k
    if target >= 1:
        k, power = 0, Fraction(1)
        while abs(power) < target:
            power *= step
            k += 1
    else:
        k, power = 0, Fraction(1)
        while abs(power) > target:
            power /= step
            k -= 1
    if power == c:
        return sign * k
    return None


def integer_root(n, k):
    """floor(n ** (1/k)) for n >= 0, exact."""
    if n < 2:
        return n
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x ** k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


def perfect_power(r):
    """Write |r| = b^k with k maximal (r rational, |r| != 0, 1).

    Returns (b, k) with b > 0 rational and not itself a perfect power.
    """
    r = abs(Fraction(r))
    if r in (0, 1):
        raise ValueError("perfect_power of 0 or 1")
    num, den = r.numerator, r.denominator
    bound = max(num.bit_length(), den.bit_length())
    for k in range(bound, 1, -1):
        a, b = integer_root(num, k), integer_root(den, k)
        if a ** k == num and b ** k == den:
            return Fraction(a, b), k
    return r, 1


