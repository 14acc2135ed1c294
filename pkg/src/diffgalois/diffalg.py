"""Differential algebraicity of solutions of y(sigma x) = y + f and y(sigma x) = a y.

The decisions rest on one observation about the reduced form: a polar
part that sits alone in its orbit can never be cancelled by sigma(g) - g,
and applying the derivation only raises its order (the derivation of
R / r^k has leading part -k R r' / r^(k+1), nonzero modulo the squarefree r).
So a lone pole survives every nonzero combination sum lam_i d^i f, and
the solution is differentially transcendental.  Without such a pole the
remainder is polynomial (shift, always summable) or Laurent (q case,
whose x^0 term is killed by one derivation).
"""

from dataclasses import dataclass

from .certificate import Certificate
from .linalg import nullspace
from .multiplicative import product_decompose
from .ratcore import RatFun
from .summability import ObstructionBasis, is_summable, obstruction_matrix, reduce
from .dependence import normalize_relation

DIFF_ALGEBRAIC = "differentially-algebraic"
TRANSCENDENTAL = "provably-transcendental"
NO_RELATION = "no-relation-up-to-order"
RATIONAL_SOLUTION = "rational-solution"
NO_FORMAL_SOLUTION = "no-formal-solution"


@dataclass(frozen=True)
class Verdict:
    kind: str
    certificate: Certificate = None
    witness: object = None  # representative factor of the lone-pole orbit
    order: int = None       # for NO_RELATION
    solution: RatFun = None  # for RATIONAL_SOLUTION


def _derivatives(f, op, top):
    out = [f]
    for _ in range(top):
        out.append(op.derive(out[-1]))
    return out


def _combine(lam, fs, op):
    out = RatFun.constant(0, op.domain)
    for c, f in zip(lam, fs):
        if c:
            out = out + f * c
    return out


def parametrized_telescoper(f, op, max_order):
    """Certificate(lam, g) with sum_{i<=m} lam_i d^i f == sigma(g) - g for the
    smallest order m <= max_order, or None."""
    f = op.ratfun(f)
    dom = op.domain
    ders = _derivatives(f, op, max_order)
    basis = ObstructionBasis.from_functions([f], op, extra_power=max_order)
    rows = obstruction_matrix(ders, op, basis)
    for m in range(max_order + 1):
        sub = [r[:m + 1] for r in rows if any(r[:m + 1])]
        kernel = nullspace(sub, m + 1, dom.zero, dom.one)
        if not kernel:
            continue
        # columns 0..m-1 are independent, so the kernel is a single line
        lam = normalize_relation(kernel[0], dom)
        cert = is_summable(_combine(lam, ders, op), op)
        if cert is None:
            raise ArithmeticError("telescoper kernel vector is not summable")
        return Certificate(g=cert.g, lam=tuple(lam))
    return None


def diff_transcendence_additive(f, op):
    """Complete decision for y(sigma x) = y + f."""
    f = op.ratfun(f)
    dom = op.domain
    form = reduce(f, op)
    if form.orbit_obstructions:
        return Verdict(TRANSCENDENTAL, witness=form.orbit_obstructions[0][0])
    one, zero = dom.one, dom.zero
    if not op.is_q or not form.laurent_obstruction:
        cert = is_summable(f, op, form)
        return Verdict(DIFF_ALGEBRAIC, Certificate(g=cert.g, lam=(one,)))
    # d(f) = sigma(d g) - d g because the derivation commutes with sigma
    g = op.derive(form.g)
    if op.delta(g) != op.derive(f):
        raise ArithmeticError("derived certificate failed")
    return Verdict(DIFF_ALGEBRAIC, Certificate(g=g, lam=(zero, one)))


def log_derivative(a, op):
    a = op.ratfun(a)
    return op.derive(a) / a


def diff_transcendence_mult(a, op):
    """Decision for y(sigma x) = a y by two independent routes that must agree.

    The structural route looks for a = c x^n sigma(g)/g with any constant
    c; the other applies the additive decision to d(a)/a.
    """
    a = op.ratfun(a)
    if not a:
        raise ValueError("a must be nonzero")
    structural = product_decompose(a, op)
    dlog = diff_transcendence_additive(log_derivative(a, op), op)
    if (structural is not None) != (dlog.kind == DIFF_ALGEBRAIC):
        raise ArithmeticError("decision routes disagree")
    if structural is None:
        return Verdict(TRANSCENDENTAL, witness=dlog.witness)
    return Verdict(DIFF_ALGEBRAIC, structural)


def diff_transcendence_mult_routes(a, op):
    """(structural verdict kind, log-derivative verdict kind), for cross-checks."""
    a = op.ratfun(a)
    structural = product_decompose(a, op)
    dlog = diff_transcendence_additive(log_derivative(a, op), op)
    return (DIFF_ALGEBRAIC if structural is not None else TRANSCENDENTAL), dlog.kind


def ogawara_classify(f, op):
    """Classify the formal power series solutions z of z(qx) = z(x) + f."""
    if not op.is_q:
        raise ValueError("the formal-solution classification needs a q-dilation")
    f = op.ratfun(f)
    if not f:
        return Verdict(RATIONAL_SOLUTION, solution=RatFun.constant(0, op.domain))
    form = reduce(f, op)
    if form.orbit_obstructions:
        return Verdict(TRANSCENDENTAL, witness=form.orbit_obstructions[0][0])
    if form.laurent_obstruction:
        return Verdict(NO_FORMAL_SOLUTION)
    z = form.g
    if op.delta(z) != f:
        raise ArithmeticError("rational solution failed")
    return Verdict(RATIONAL_SOLUTION, Certificate(g=z), solution=z)
