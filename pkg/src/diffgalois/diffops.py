"""The difference operator sigma, its commuting derivation, and iterated systems."""

from dataclasses import dataclass
from fractions import Fraction

from .ratcore import ConstField, Poly, RatFun, sigma_poly
from .ratcore.fields import RATIONALS

SHIFT = "shift"
QDILATION = "q"


@dataclass(frozen=True)
class DifferenceOperator:
    """sigma: x -> x + 1 (shift) or x -> q x (q-dilation).

    The paired derivation is d/dx for the shift and x d/dx for the
    dilation; both commute with sigma.
    """

    kind: str
    field: ConstField

    def __post_init__(self):
        if self.kind == SHIFT and self.field.kind != RATIONALS:
            raise ValueError("the shift operator works over QQ")
        if self.kind == QDILATION and self.field.kind == RATIONALS:
            raise ValueError("q-dilation needs a numeric or symbolic q")
        if self.kind not in (SHIFT, QDILATION):
            raise ValueError(f"unknown operator kind {self.kind!r}")

    @classmethod
    def shift(cls):
        return cls(SHIFT, ConstField.rationals())

    @classmethod
    def qdilation(cls, q="symbolic"):
        if q == "symbolic" or q is None:
            return cls(QDILATION, ConstField.symbolic_q())
        return cls(QDILATION, ConstField.numeric_q(Fraction(q)))

    @property
    def is_q(self):
        return self.kind == QDILATION

    @property
    def domain(self):
        return self.field.domain

    @property
    def q(self):
        return self.field.q

    def x(self):
        return RatFun.x(self.domain)

    def const(self, c):
        return self.field(c)

    def ratfun(self, f):
        """Coerce f (RatFun, Poly, or a constant) into C(x) for this operator."""
        if isinstance(f, RatFun) and f.domain is self.domain:
            return f
        if isinstance(f, Poly) and f.domain is self.domain:
            return RatFun.from_poly(f)
        return RatFun.constant(self.domain(f), self.domain)

    # -- sigma -----------------------------------------------------------------

    def sigma_poly(self, p, n=1):
        return sigma_poly(p, self.field, n)

    def sigma_monic(self, p, n=1):
        return self.sigma_poly(p, n).monic()

    def sigma(self, f, n=1):
        if n == 0:
            return f
        if self.kind == SHIFT:
            return f.taylor_shift(n)
        return f.dilate(self.field.q_power(n))

    def delta(self, g):
        """sigma(g) - g."""
        return self.sigma(g) - g

    # -- derivation ----------------------------------------------------------

    def derive(self, f, i=1):
        for _ in range(i):
            d = f.derivative()
            f = d * self.x() if self.kind == QDILATION else d
        return f

    def describe(self):
        if self.kind == SHIFT:
            return "shift"
        if self.field.kind == "numeric-q":
            return f"q={self.domain.render(self.field.q_value)}"
        return "q=symbolic"


def apply_sigma(f, op, n=1):
    """Substitute x -> x + n or x -> q^n x (n may be negative)."""
    return op.sigma(op.ratfun(f), n)


def apply_derivation(f, op, i=1):
    """i-fold application of d/dx (shift) or x d/dx (q-dilation)."""
    if i < 0:
        raise ValueError("derivation order must be nonnegative")
    return op.derive(op.ratfun(f), i)


class SystemMatrix:
    """Square matrix over C(x) with nonzero determinant."""

    __slots__ = ("rows",)

    def __init__(self, rows, op=None, check=True):
        rows = [list(r) for r in rows]
        d = len(rows)
        if d == 0 or any(len(r) != d for r in rows):
            raise ValueError("system matrix must be square and nonempty")
        if op is not None:
            rows = [[op.ratfun(e) for e in r] for r in rows]
        self.rows = tuple(tuple(r) for r in rows)
        if check and not self.determinant():
            raise ValueError("system matrix is singular")

    @property
    def dim(self):
        return len(self.rows)

    @classmethod
    def identity(cls, d, domain):
        one = RatFun.constant(1, domain)
        zero = RatFun.constant(0, domain)
        return cls([[one if i == j else zero for j in range(d)] for i in range(d)], check=False)

    def determinant(self):
        m = [list(r) for r in self.rows]
        d = len(m)
        det = RatFun.constant(1, m[0][0].domain)
        for c in range(d):
            pivot = next((r for r in range(c, d) if m[r][c]), None)
            if pivot is None:
                return RatFun.constant(0, det.domain)
            if pivot != c:
                m[c], m[pivot] = m[pivot], m[c]
                det = -det
            det = det * m[c][c]
            inv = m[c][c].inverse()
            for r in range(c + 1, d):
                if m[r][c]:
                    factor = m[r][c] * inv
                    m[r] = [a - factor * b for a, b in zip(m[r], m[c])]
        return det

    def __matmul__(self, other):
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = r[0] * c[0]
                for a, b in zip(r[1:], c[1:]):
                    acc = acc + a * b
                row.append(acc)
            out.append(row)
        return SystemMatrix(out, check=False)

    def map(self, fn):
        return SystemMatrix([[fn(e) for e in r] for r in self.rows], check=False)

    def __eq__(self, other):
        return isinstance(other, SystemMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "SystemMatrix(" + str([[str(e) for e in r] for r in self.rows]) + ")"


def iterate_matrix(A, op, n):
    """A_n = sigma^{n-1}(A) ... sigma(A) A; A_0 is the identity."""
    if n < 0:
        raise ValueError("iteration count must be nonnegative")
    if n == 0:
        return SystemMatrix.identity(A.dim, op.domain)
    result = A
    for k in range(1, n):
        result = A.map(lambda e, k=k: op.sigma(e, k)) @ result
    return result
