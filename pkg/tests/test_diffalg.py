import random

import pytest
from hypothesis import given, settings, strategies as st

from diffgalois import (
    RatFun,
    diff_transcendence_additive,
    diff_transcendence_mult,
    is_summable,
    ogawara_classify,
    parametrized_telescoper,
    reduce,
)
from diffgalois.diffalg import (
    DIFF_ALGEBRAIC,
    NO_FORMAL_SOLUTION,
    RATIONAL_SOLUTION,
    TRANSCENDENTAL,
    diff_transcendence_mult_routes,
    log_derivative,
)
from helpers import (
    Q2,
    Q3HALF,
    QSYM,
    SHIFT,
    X,
    const,
    non_summable_instance,
    random_constant,
    random_linear_or_quadratic,
    random_multiplicative_family,
    random_ratfun,
    summable_instance,
)

seeds = st.integers(0, 2**32)
OPS = [SHIFT, Q2, Q3HALF, QSYM]


def _telescoper_holds(f, op, cert):
    total = const(op, 0)
    der = op.ratfun(f)
    for lam in cert.lam:
        if lam:
            total = total + der * lam
        der = op.derive(der)
    return op.delta(cert.g) == total


# -- examples -------------------------------------------------------------------

def test_telescoper_examples():
    x = X(SHIFT)
    assert parametrized_telescoper(1 / x, SHIFT, 3) is None
    cert = parametrized_telescoper(1 / (x * (x + 1)), SHIFT, 0)
    assert cert.lam == (1,) and cert.g == -1 / x
    xq = X(QSYM)
    cert = parametrized_telescoper(1 + xq, QSYM, 1)
    assert cert.lam == (0, 1)
    assert cert.g == xq / (const(QSYM, QSYM.q) - 1)


def test_additive_dichotomy_examples():
    x = X(SHIFT)
    v = diff_transcendence_additive(1 / x, SHIFT)
    assert v.kind == TRANSCENDENTAL and v.witness == x.num
    xq = X(QSYM)
    assert diff_transcendence_additive(1 / (xq - 1), QSYM).kind == TRANSCENDENTAL
    v = diff_transcendence_additive(const(QSYM, 1), QSYM)
    assert v.kind == DIFF_ALGEBRAIC
    assert v.certificate.lam == (0, 1) and v.certificate.g == const(QSYM, 0)
    # polynomials are always summable under the shift
    v = diff_transcendence_additive(x**2, SHIFT)
    assert v.kind == DIFF_ALGEBRAIC and v.certificate.lam == (1,)


def test_multiplicative_dichotomy_examples():
    x = X(SHIFT)
    assert diff_transcendence_mult(x, SHIFT).kind == TRANSCENDENTAL
    v = diff_transcendence_mult(X(QSYM), QSYM)
    assert v.kind == DIFF_ALGEBRAIC
    c = v.certificate
    assert (c.c, c.n, c.g) == (QSYM.domain.one, 1, const(QSYM, 1))
    v = diff_transcendence_mult(2 * (x + 1) / x, SHIFT)
    assert (v.certificate.c, v.certificate.g) == (2, x)
    with pytest.raises(ValueError):
        diff_transcendence_mult(const(SHIFT, 0), SHIFT)


def test_formal_solution_examples():
    x = X(Q2)
    v = ogawara_classify(x, Q2)
    assert v.kind == RATIONAL_SOLUTION and v.solution == x
    xq = X(QSYM)
    assert ogawara_classify(const(QSYM, 1), QSYM).kind == NO_FORMAL_SOLUTION
    assert ogawara_classify(1 / (xq - 1), QSYM).kind == TRANSCENDENTAL
    one = const(QSYM, 1)
    q = const(QSYM, QSYM.q)
    v = ogawara_classify(one / (q * xq - 1) - one / (xq - 1), QSYM)
    assert v.kind == RATIONAL_SOLUTION and v.solution == one / (xq - 1)
    assert ogawara_classify(const(QSYM, 0), QSYM).solution == const(QSYM, 0)
    with pytest.raises(ValueError):
        ogawara_classify(X(SHIFT), SHIFT)


# -- properties -----------------------------------------------------------------

def _random_multiplier(rng, op):
    a = random_multiplicative_family(rng, op, 1)[0]
    if rng.random() < 0.4:
        a = a * const(op, random_constant(rng, op))
    if rng.random() < 0.3:
        a = a * RatFun.from_poly(random_linear_or_quadratic(rng, op)) ** rng.choice([1, -1])
    return a


@given(seeds, st.sampled_from(OPS))
@settings(max_examples=80)
def test_multiplicative_routes_agree(seed, op):
    rng = random.Random(seed)
    a = _random_multiplier(rng, op)
    structural, dlog = diff_transcendence_mult_routes(a, op)
    assert structural == dlog


@given(seeds, st.sampled_from(OPS))
@settings(max_examples=60)
def test_additive_verdicts_carry_sound_certificates(seed, op):
    rng = random.Random(seed)
    f = random_ratfun(rng, op, 4)
    if rng.random() < 0.5:
        f = summable_instance(rng, op, 3) + random_ratfun(rng, op, 0)
    v = diff_transcendence_additive(f, op)
    if v.kind == DIFF_ALGEBRAIC:
        assert _telescoper_holds(f, op, v.certificate)
    else:
        reps = [rep for rep, _ in reduce(f, op).orbit_obstructions]
        assert v.witness in reps


@given(seeds, st.sampled_from(OPS))
@settings(max_examples=40)
def test_dlog_certificates_are_sound(seed, op):
    rng = random.Random(seed)
    a = _random_multiplier(rng, op)
    v = diff_transcendence_mult(a, op)
    if v.kind == DIFF_ALGEBRAIC:
        c = v.certificate
        assert const(op, c.c) * X(op) ** c.n * op.sigma(c.g) / c.g == a
        inner = diff_transcendence_additive(log_derivative(a, op), op)
        assert _telescoper_holds(log_derivative(a, op), op, inner.certificate)


@given(seeds, st.sampled_from([Q2, Q3HALF, QSYM]))
@settings(max_examples=60)
def test_formal_solutions_match_summability(seed, op):
    rng = random.Random(seed)
    f = summable_instance(rng, op, 4) if rng.random() < 0.5 else non_summable_instance(rng, op, 4)
    v = ogawara_classify(f, op)
    cert = is_summable(f, op)
    assert (v.kind == RATIONAL_SOLUTION) == (cert is not None)
    if cert is not None:
        assert v.solution == cert.g


@given(seeds, st.sampled_from(OPS))
@settings(max_examples=30)
def test_transcendence_rules_out_telescopers(seed, op):
    rng = random.Random(seed)
    f = random_ratfun(rng, op, 3)
    v = diff_transcendence_additive(f, op)
    cert = parametrized_telescoper(f, op, 5 if op is not QSYM else 3)
    if v.kind == TRANSCENDENTAL:
        assert cert is None
    else:
        # without a lone pole, order one always suffices
        assert cert is not None and len(cert.lam) <= 2


@given(seeds, st.sampled_from(OPS))
@settings(max_examples=30)
def test_telescoper_is_sound_and_minimal(seed, op):
    rng = random.Random(seed)
    f = random_ratfun(rng, op, 3)
    cert = parametrized_telescoper(f, op, 2)
    if cert is None:
        return
    assert any(cert.lam) and _telescoper_holds(f, op, cert)
    order = len(cert.lam) - 1
    if order:
        assert parametrized_telescoper(f, op, order - 1) is None
