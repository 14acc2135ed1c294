import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from diffgalois import QQq, RatFun, SystemMatrix, apply_derivation, apply_sigma, iterate_matrix
from diffgalois.diffops import DifferenceOperator
from helpers import Q2, Q3HALF, QSYM, SHIFT, random_matrix, random_ratfun

seeds = st.integers(0, 2**32)
OPS = [SHIFT, Q2, Q3HALF, QSYM]


def X(op):
    return RatFun.x(op.domain)


def test_apply_sigma_examples():
    x = X(SHIFT)
    assert apply_sigma(1 / x, SHIFT, 2) == 1 / (x + 2)
    xq = X(QSYM)
    q = RatFun.constant(QQq.q, QQq)
    assert apply_sigma(xq**2, QSYM, 1) == q**2 * xq**2
    f = (x + 3) / (x**2 - 2)
    assert apply_sigma(f, SHIFT, 0) == f
    assert apply_sigma(apply_sigma(f, SHIFT, 5), SHIFT, -5) == f
    assert apply_sigma(xq, QSYM, -1) == xq / q


def test_apply_derivation_examples():
    x = X(SHIFT)
    assert apply_derivation(1 / x, SHIFT, 1) == -1 / x**2
    xq = X(Q2)
    assert apply_derivation(1 / xq, Q2, 1) == -1 / xq
    for op in OPS:
        assert apply_derivation(RatFun.constant(7, op.domain), op, 2) == RatFun.constant(0, op.domain)
    with pytest.raises(ValueError):
        apply_derivation(x, SHIFT, -1)


def test_iterate_matrix_examples():
    x = X(SHIFT)
    A = SystemMatrix([[x]], SHIFT)
    assert iterate_matrix(A, SHIFT, 3) == SystemMatrix([[x * (x + 1) * (x + 2)]], SHIFT)
    assert iterate_matrix(A, SHIFT, 3).rows[0][0] == x**3 + 3 * x**2 + 2 * x
    xq = X(QSYM)
    q = RatFun.constant(QQq.q, QQq)
    assert iterate_matrix(SystemMatrix([[xq]], QSYM), QSYM, 2) == SystemMatrix([[q * xq**2]], QSYM)
    assert iterate_matrix(A, SHIFT, 1) == A
    assert iterate_matrix(A, SHIFT, 0) == SystemMatrix.identity(1, SHIFT.domain)


def test_system_matrix_validation():
    x = X(SHIFT)
    with pytest.raises(ValueError):
        SystemMatrix([[x, x], [x, x]], SHIFT)
    with pytest.raises(ValueError):
        SystemMatrix([[x, x]], SHIFT)


def test_operator_validation():
    with pytest.raises(ValueError):
        DifferenceOperator.qdilation(1)
    with pytest.raises(ValueError):
        DifferenceOperator.qdilation(-1)
    assert DifferenceOperator.qdilation(Fraction(1, 3)).describe() == "q=1/3"
    assert SHIFT.describe() == "shift" and QSYM.describe() == "q=symbolic"


@given(seeds, st.sampled_from(OPS))
@settings(max_examples=80)
def test_sigma_commutes_with_derivation(seed, op):
    f = random_ratfun(random.Random(seed), op, 4)
    lhs = apply_derivation(apply_sigma(f, op, 1), op, 1)
    rhs = apply_sigma(apply_derivation(f, op, 1), op, 1)
    assert lhs == rhs


@given(seeds, st.sampled_from(OPS))
@settings(max_examples=60)
def test_sigma_is_a_ring_homomorphism_and_derivation_is_leibniz(seed, op):
    rng = random.Random(seed)
    f, g = random_ratfun(rng, op, 3), random_ratfun(rng, op, 3)
    n = rng.randint(-3, 3)
    assert apply_sigma(f + g, op, n) == apply_sigma(f, op, n) + apply_sigma(g, op, n)
    assert apply_sigma(f * g, op, n) == apply_sigma(f, op, n) * apply_sigma(g, op, n)
    d = lambda h: apply_derivation(h, op, 1)
    assert d(f * g) == d(f) * g + f * d(g)
    assert d(f + g) == d(f) + d(g)


@given(seeds, st.sampled_from([SHIFT, Q2, QSYM]), st.integers(2, 3),
       st.integers(1, 4), st.integers(1, 4))
@settings(max_examples=25)
def test_iteration_cocycle(seed, op, d, m, n):
    A = random_matrix(random.Random(seed), op, d)
    lhs = iterate_matrix(A, op, m + n)
    rhs = iterate_matrix(A, op, m).map(lambda e: op.sigma(e, n)) @ iterate_matrix(A, op, n)
    assert lhs == rhs
