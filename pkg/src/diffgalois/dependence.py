"""Algebraic dependence of solutions of diagonal and unipotent systems,
and symbolic descriptions of the groups they generate.

Additive side: sum(lam_i f_i) is summable iff its reduced remainder is
zero, and the reduction is linear once the orbit representatives are
shared, so the relations form the kernel of the obstruction matrix.

Multiplicative side: prod a_i^lam_i = sigma(g)/g forces (i) zero total
multiplicity in every orbit, (ii) zero x-exponent in the q case, and
(iii) a constant in the absorbable group ({1} or q^ZZ).  All three are
linear conditions on lam over ZZ once the constants are written over a
multiplicatively independent base; the relation lattice is the integer
kernel of the stacked conditions.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .certificate import Certificate
from .linalg import hermite_normal_form, integer_kernel, nullspace, primitive_integer, rref
from .multiplicative import gp_normal_form, is_ratio, minimal_torsion
from .orbits import OrbitBasis
from .ratcore import QQ, RatFun, gcd_free_basis, multiplicity
from .ratcore.fields import NUMERIC_Q, SYMBOLIC_Q
from .summability import ObstructionBasis, is_summable, obstruction_matrix

GM = "Gm"
GA = "Ga"
MU = "mu"
TRIVIAL = "trivial"
SUBTORUS = "subtorus"
SUBSPACE = "subspace"
PRODUCT = "product"


@dataclass(frozen=True)
class GroupDescriptor:
    """Symbolic algebraic group.

    ``lattice`` (subtorus of Gm^d) holds HNF integer relation rows;
    ``relations`` (subspace of Ga^d) holds row-reduced constant rows.
    """

    kind: str
    d: int = 1
    order: int = None
    lattice: tuple = ()
    relations: tuple = ()
    components: tuple = field(default=())

    @property
    def dimension(self):
        if self.kind in (GM, GA):
            return 1
        if self.kind in (MU, TRIVIAL):
            return 0
        if self.kind == SUBTORUS:
            return self.d - len(self.lattice)
        if self.kind == SUBSPACE:
            return self.d - len(self.relations)
        return sum(c.dimension for c in self.components)

    def render(self, render_const=str):
        if self.kind == MU:
            return f"mu({self.order})"
        if self.kind in (GM, GA, TRIVIAL):
            return self.kind
        if self.kind == SUBTORUS:
            rows = ";".join(",".join(str(v) for v in r) for r in self.lattice)
            return f"subtorus(Gm^{self.d}; lattice=[{rows}])"
        if self.kind == SUBSPACE:
            rows = ";".join(",".join(render_const(v) for v in r) for r in self.relations)
            return f"subspace(Ga^{self.d}; relations=[{rows}])"
        return " x ".join(c.render(render_const) for c in self.components)


def transcendence_degree(descr):
    """Transcendence degree of the Picard-Vessiot extension (= group dimension)."""
    return descr.dimension


# -- additive ------------------------------------------------------------------

def normalize_relation(vector, dom):
    """Primitive integer vector (first nonzero positive) when the entries are
    rational; otherwise scale the first nonzero entry to 1."""
    try:
        rational = [QQ(v) for v in vector]
    except TypeError:
        rational = None
    if rational is not None:
        return [dom(v) for v in primitive_integer(rational)]
    first = next(v for v in vector if v)
    return [v / first for v in vector]


def relation_space(fs, op):
    """Basis of {lam : sum lam_i f_i summable}, as nullspace vectors."""
    fs = [op.ratfun(f) for f in fs]
    dom = op.domain
    basis = ObstructionBasis.from_functions(fs, op)
    rows = obstruction_matrix(fs, op, basis)
    rows = [r for r in rows if any(r)]
    return nullspace(rows, len(fs), dom.zero, dom.one)


def _combine(lam, fs, op):
    out = RatFun.constant(0, op.domain)
    for c, f in zip(lam, fs):
        if c:
            out = out + op.ratfun(f) * c
    return out


def additive_dependence(fs, op):
    """Certificate(lam, g) with sum lam_i f_i == sigma(g) - g, lam != 0; or None."""
    if not fs:
        raise ValueError("additive_dependence needs at least one function")
    fs = [op.ratfun(f) for f in fs]
    kernel = relation_space(fs, op)
    if not kernel:
        return None
    lam = normalize_relation(kernel[0], op.domain)
    cert = is_summable(_combine(lam, fs, op), op)
    if cert is None:
        raise ArithmeticError("kernel vector does not give a summable combination")
    return Certificate(g=cert.g, lam=tuple(lam))


def classify_unipotent(fs, op):
    """Subspace of Ga^d cut out by the additive relations."""
    dom = op.domain
    kernel = relation_space(fs, op)
    relations, _ = rref(kernel, dom.zero) if kernel else ([], [])
    return GroupDescriptor(SUBSPACE, d=len(fs), relations=tuple(tuple(r) for r in relations))


def galois_rank_one_add(f, op):
    return GroupDescriptor(TRIVIAL if is_summable(f, op) else GA)


# -- multiplicative --------------------------------------------------------------

def _coprime_integer_base(values):
    """Pairwise coprime integers > 1 in which every value factors."""
    base = []
    work = [v for v in values if v > 1]
    while work:
        a = work.pop()
        for i, b in enumerate(base):
            g = gcd(a, b)
            if g > 1:
                base.pop(i)
                work.extend(p for p in (g, a // g, b // g) if p > 1)
                break
        else:
            base.append(a)
    return sorted(set(base))


def _int_valuation(b, n):
    k = 0
    while n % b == 0:
        n //= b
        k += 1
    return k


def _rational_exponents(values):
    """Sign bits and exponent vectors of nonzero rationals over a coprime base."""
    values = [Fraction(v) for v in values]
    ints = []
    for v in values:
        ints.extend((abs(v.numerator), v.denominator))
    base = _coprime_integer_base(ints)
    signs = [1 if v < 0 else 0 for v in values]
    exps = [[_int_valuation(b, abs(v.numerator)) - _int_valuation(b, v.denominator)
             for b in base] for v in values]
    return signs, exps


def _symbolic_constant_parts(c):
    """c in QQ(q)^*  ->  (rational factor, [(monic q-polynomial, exponent)])."""
    num, den = c.num, c.den
    rational = num.lc / den.lc
    parts = []
    for p, sign in ((num, 1), (den, -1)):
        p = p.shift_down(p.valuation())  # q^k is absorbable
        if p.degree > 0:
            parts.append((p.monic(), sign))
    return rational, parts


def _constant_conditions(consts, op):
    """Integer rows (one per condition) on (lam, aux...) and the aux count.

    Condition: prod c_i^lam_i lies in {1} (shift) or q^ZZ (q case).
    """
    d = len(consts)
    rationals = []
    poly_parts = []
    if op.is_q and op.field.kind == SYMBOLIC_Q:
        for c in consts:
            r, parts = _symbolic_constant_parts(c)
            rationals.append(r)
            poly_parts.append(parts)
    else:
        rationals = [Fraction(c) for c in consts]
    extra_q = op.is_q and op.field.kind == NUMERIC_Q
    if extra_q:
        # q is an extra generator whose exponent is free
        rationals.append(op.field.q_value)
    signs, exps = _rational_exponents(rationals)
    nvars = len(rationals)
    rows = []
    nb = len(exps[0]) if exps else 0
    for j in range(nb):
        rows.append([exps[i][j] for i in range(nvars)] + [0])
    # sign: sum lam_i s_i == 2 w
    rows.append(signs + [-2])
    if poly_parts:
        polys = gcd_free_basis([p for parts in poly_parts for p, _ in parts])
        for b in polys:
            row = []
            for parts in poly_parts:
                row.append(sum(s * multiplicity(b, p) for p, s in parts))
            rows.append(row + [0] * (nvars - d) + [0])
    return rows, nvars + 1


def relation_lattice(as_, op):
    """HNF basis of {lam in ZZ^d : prod a_i^lam_i == sigma(g)/g solvable}."""
    as_ = [op.ratfun(a) for a in as_]
    if any(not a for a in as_):
        raise ValueError("multiplicative dependence of zero")
    d = len(as_)
    polys = []
    for a in as_:
        polys.extend((a.num, a.den))
    basis = OrbitBasis.build(polys, op)
    forms = [gp_normal_form(a, op, basis) for a in as_]
    const_rows, nvars = _constant_conditions([f.c for f in forms], op)
    width = nvars
    rows = []
    for idx in range(len(basis.classes)):
        rep = basis.classes[idx].rep
        row = [dict((r, m) for r, m in f.orbit_exponents).get(rep, 0) for f in forms]
        rows.append(row + [0] * (width - d))
    if op.is_q:
        rows.append([f.n for f in forms] + [0] * (width - d))
    rows.extend(const_rows)
    rows = [r for r in rows if any(r)]
    kernel = integer_kernel(rows, width)
    return hermite_normal_form([v[:d] for v in kernel])


def lattice_product(as_, lam, op):
    out = RatFun.constant(1, op.domain)
    for a, k in zip(as_, lam):
        if k:
            out = out * op.ratfun(a) ** k
    return out


def multiplicative_dependence(as_, op):
    """Canonical lattice basis, each vector paired with its Certificate(lam, g)."""
    lattice = relation_lattice(as_, op)
    out = []
    for lam in lattice:
        cert = is_ratio(lattice_product(as_, lam, op), op)
        if cert is None:
            raise ArithmeticError("lattice vector without a ratio certificate")
        out.append(Certificate(g=cert.g, lam=tuple(lam), c=op.domain.one, n=0))
    return out


def classify_diagonal(as_, op):
    return GroupDescriptor(SUBTORUS, d=len(as_), lattice=tuple(relation_lattice(as_, op)))


def galois_rank_one_mult(a, op):
    n = minimal_torsion(a, op)
    if n is None:
        return GroupDescriptor(GM)
    if n == 1:
        return GroupDescriptor(TRIVIAL)
    return GroupDescriptor(MU, order=n)


def classify_mixed(as_, fs, op):
    """Diagonal part times unipotent part, without interaction terms."""
    parts = []
    if as_:
        parts.append(classify_diagonal(as_, op))
    if fs:
        parts.append(classify_unipotent(fs, op))
    return GroupDescriptor(PRODUCT, d=len(as_) + len(fs), components=tuple(parts))
