"""Acceptance gate: criteria 1-11, exact results under wall-clock limits.

Each test prints one PASS/FAIL line; the lines are also collected in
RESULTS and echoed in the pytest terminal summary.  Run standalone with
``python3 tests/test_acceptance.py``.
"""

import itertools
import random
import time

from diffgalois import (
    DifferenceOperator,
    RatFun,
    additive_dependence,
    iterate_matrix,
    is_ratio,
    is_summable,
    minimal_torsion,
    multiplicative_dependence,
    ogawara_classify,
    SystemMatrix,
)
from diffgalois.cli import Query, run_command, run_corpus
from diffgalois.dependence import relation_lattice
from diffgalois.diffalg import diff_transcendence_mult_routes
from helpers import (
    Q2,
    Q3HALF,
    QSYM,
    SHIFT,
    X,
    box_relations,
    brute_force_summable,
    const,
    non_summable_instance,
    random_constant,
    random_linear_or_quadratic,
    random_matrix,
    random_multiplicative_family,
    summable_instance,
)

RESULTS = []


def _gate(number, title, limit, body):
    """Run body() -> (ok, detail), time it, record and assert."""
    start = time.perf_counter()
    ok, detail = body()
    elapsed = time.perf_counter() - start
    passed = bool(ok) and elapsed < limit
    line = (f"criterion {number:2d}: {'PASS' if passed else 'FAIL'}  {title}  "
            f"[{elapsed:.2f}s, limit {limit}s]{'' if ok else '  ' + detail}")
    RESULTS.append(line)
    print(line)
    assert ok, detail
    assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"


def _run(command, operator, *exprs, **kw):
    return run_command(Query(command=command, operator=operator, expressions=exprs, **kw))


def _all(checks):
    bad = [name for name, ok in checks if not ok]
    return not bad, "failed: " + ", ".join(bad)


# -- 1-6: fixtures ------------------------------------------------------------------

def test_criterion_01_gamma_is_transcendental():
    def body():
        a = _run("difftrans-mult", "shift", "x")
        t = _run("telescope", "shift", "1/x", max_order=5)
        return _all([
            ("difftrans-mult verdict", a["verdict"] == "provably-transcendental"),
            ("telescope verdict", t["verdict"] == "none"),
            ("verified", a["verified"] and t["verified"]),
        ])
    _gate(1, "difftrans-mult shift x; telescope shift 1/x --max-order 5", 1, body)


def test_criterion_02_gamma_group():
    def body():
        r = _run("galois", "shift", "x")
        return _all([("group", r["group"] == "Gm"), ("trdeg", r["transcendence_degree"] == 1)])
    _gate(2, "galois shift x is Gm with trdeg 1", 1, body)


def test_criterion_03_order_one_torsion():
    def body():
        a = _run("galois", "shift", "-1")
        b = _run("galois", "q", "2", q="4")
        q4 = DifferenceOperator.qdilation(4)
        return _all([
            ("shift -1", a["group"] == "mu(2)" and a["verified"]),
            ("q=4 2", b["group"] == "mu(2)" and b["verified"]),
            ("minimal torsion", minimal_torsion(const(q4, 2), q4) == 2),
        ])
    _gate(3, "galois shift -1 and galois q --q 4 2 give mu(2)", 1, body)


def test_criterion_04_theta_dichotomy():
    def body():
        g = _run("galois", "q", "x")
        d = _run("difftrans-mult", "q", "x")
        s = _run("difftrans-mult", "shift", "x")
        cert = d["certificate"]
        return _all([
            ("group", g["group"] == "Gm"),
            ("q verdict", d["verdict"] == "differentially-algebraic"),
            ("certificate", (cert["c"], cert["n"], cert["g"]) == ("1", 1, "1") and d["verified"]),
            ("shift verdict", s["verdict"] == "provably-transcendental"),
        ])
    _gate(4, "a = x: Gm under q, differentially algebraic with c=1 n=1 g=1", 1, body)


def test_criterion_05_formal_solutions():
    def body():
        xq = X(QSYM)
        one = const(QSYM, 1)
        q = const(QSYM, QSYM.q)
        a = ogawara_classify(X(Q2), Q2)
        b = ogawara_classify(one, QSYM)
        c = ogawara_classify(one / (xq - 1), QSYM)
        d = ogawara_classify(one / (q * xq - 1) - one / (xq - 1), QSYM)
        return _all([
            ("f=x", a.kind == "rational-solution" and a.solution == X(Q2)),
            ("f=1", b.kind == "no-formal-solution"),
            ("f=1/(x-1)", c.kind == "provably-transcendental"),
            ("f=1/(qx-1)-1/(x-1)", d.kind == "rational-solution" and d.solution == one / (xq - 1)),
        ])
    _gate(5, "formal solution classification on four fixtures", 1, body)


def test_criterion_06_dependence():
    def body():
        x = X(SHIFT)
        fs = [1 / x, 1 / x + 1 / (x + 1)]
        add = additive_dependence(fs, SHIFT)
        add_ok = add is not None and add.lam == (2, -1) and add.g == -1 / x
        add_ok = add_ok and SHIFT.delta(add.g) == 2 * fs[0] - fs[1]
        mult = multiplicative_dependence([x, x + 1], SHIFT)
        mult_ok = [c.lam for c in mult] == [(1, -1)] and mult[0].g == 1 / x
        mult_ok = mult_ok and SHIFT.sigma(mult[0].g) / mult[0].g == x / (x + 1)
        return _all([("additive", add_ok), ("multiplicative", mult_ok)])
    _gate(6, "additive (2,-1) with g=-1/x; multiplicative (1,-1) with g=1/x", 1, body)


# -- 7-10: random suites ------------------------------------------------------------

def test_criterion_07_iteration_cocycle():
    def body():
        x = X(SHIFT)
        fixed = iterate_matrix(SystemMatrix([[x]], SHIFT), SHIFT, 3).rows[0][0]
        rng = random.Random(7)
        bad = 0
        for i in range(50):
            op = QSYM if i % 17 == 0 else (SHIFT, Q2, Q3HALF)[i % 3]
            A = random_matrix(rng, op, 2 + i % 2)
            m, n = rng.randint(0, 3), rng.randint(0, 3)
            lhs = iterate_matrix(A, op, m + n)
            rhs = iterate_matrix(A, op, m).map(lambda e: op.sigma(e, n)) @ iterate_matrix(A, op, n)
            bad += lhs != rhs
        return _all([("A_3 for [x]", fixed == x**3 + 3 * x**2 + 2 * x), (f"cocycle ({bad} bad)", not bad)])
    _gate(7, "iterate [x] three times; cocycle on 50 random 2x2/3x3 matrices", 5, body)


def _mix(total, symbolic):
    return [QSYM] * symbolic + [(SHIFT, Q2, Q3HALF)[i % 3] for i in range(total - symbolic)]


def test_criterion_08_certificate_soundness():
    def body():
        rng = random.Random(8)
        unsound = missed = 0
        for op in _mix(500, 50):
            f = summable_instance(rng, op, 6)
            cert = is_summable(f, op)
            unsound += cert is None or op.delta(cert.g) != f
        for op in _mix(500, 50):
            missed += is_summable(non_summable_instance(rng, op, 6), op) is not None
        return _all([(f"summable ({unsound} bad)", not unsound), (f"non-summable ({missed} bad)", not missed)])
    _gate(8, "500 summable and 500 non-summable random instances", 60, body)


def test_criterion_09_oracle_equivalence():
    def body():
        rng = random.Random(9)
        disagree = 0
        for i in range(200):
            op = (SHIFT, Q2, QSYM, SHIFT, Q2)[i % 5]
            deg = 2 if op is QSYM else 3
            make = summable_instance if i % 2 else non_summable_instance
            f = make(rng, op, deg)
            disagree += (is_summable(f, op) is None) != (brute_force_summable(f, op) is None)
        box_bad = 0
        for i in range(100):
            op = QSYM if i % 20 == 19 else (SHIFT, Q2, Q3HALF)[i % 3]
            d = rng.randint(1, 3)
            as_ = random_multiplicative_family(rng, op, d)
            lattice = relation_lattice(as_, op)
            box_bad += _lattice_box(lattice, d, 3) != box_relations(as_, op, is_ratio, 3)
        return _all([(f"summability oracle ({disagree} bad)", not disagree),
                     (f"lattice box ({box_bad} bad)", not box_bad)])
    _gate(9, "200 summability oracle cases; 100 lattice box searches with d <= 3", 120, body)


def _lattice_box(rows, d, bound):
    """All lattice vectors with |lam_i| <= bound, from HNF rows."""
    found = set()
    for lam in itertools.product(range(-bound, bound + 1), repeat=d):
        rest = list(lam)
        for row in rows:
            p = next(i for i, v in enumerate(row) if v)
            k, r = divmod(rest[p], row[p])
            if r:
                break
            rest = [a - k * b for a, b in zip(rest, row)]
        else:
            if not any(rest):
                found.add(lam)
    return found


def test_criterion_10_route_consistency():
    def body():
        rng = random.Random(10)
        bad = 0
        for kind, ops in (("shift", (SHIFT,)), ("q", (Q2, Q3HALF, Q2, Q3HALF, QSYM))):
            for i in range(200):
                op = ops[i % len(ops)]
                a = random_multiplicative_family(rng, op, 1)[0]
                if rng.random() < 0.4:
                    a = a * const(op, random_constant(rng, op))
                if rng.random() < 0.3:
                    a = a * RatFun.from_poly(random_linear_or_quadratic(rng, op)) ** rng.choice([1, -1])
                structural, dlog = diff_transcendence_mult_routes(a, op)
                bad += structural != dlog
        return not bad, f"{bad} disagreements"
    _gate(10, "structural and log-derivative routes agree, 200 inputs per operator kind", 60, body)


# -- 11: corpus ---------------------------------------------------------------------

def test_criterion_11_corpus():
    def body():
        summary = run_corpus("builtin")
        return summary["cases"] > 0 and summary["failed"] == 0, str(summary["first_divergence"])
    _gate(11, "shipped fixture corpus passes", 5, body)


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
