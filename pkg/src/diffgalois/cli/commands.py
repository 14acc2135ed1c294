"""Query dispatch and report assembly.

Every report is a plain dict with the stable keys

    command, operator, input, verdict, certificate{g, lambda, c, n, lattice},
    instantiates, verified, summary

plus ``group``/``transcendence_degree`` for galois, ``matrix`` for
iterate and ``scope`` where the verdict comes from a search for
constant coefficients.  Certificates are re-checked here by substitution, separately
from the checks inside the engine, before ``verified`` is set.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction

from ..dependence import (
    additive_dependence,
    classify_diagonal,
    classify_unipotent,
    galois_rank_one_add,
    galois_rank_one_mult,
    lattice_product,
    multiplicative_dependence,
    transcendence_degree,
)
from ..diffalg import (
    DIFF_ALGEBRAIC,
    NO_FORMAL_SOLUTION,
    NO_RELATION,
    RATIONAL_SOLUTION,
    TRANSCENDENTAL,
    diff_transcendence_additive,
    diff_transcendence_mult,
    ogawara_classify,
    parametrized_telescoper,
)
from ..diffops import DifferenceOperator, SystemMatrix, iterate_matrix
from ..multiplicative import gp_normal_form, is_ratio, minimal_torsion, product_decompose
from ..ratcore import QQ, RatFun
from ..summability import is_summable, reduce
from .parser import parse_expression, render

COMMANDS = (
    "summable",
    "telescope",
    "product-form",
    "depend-add",
    "depend-mult",
    "galois",
    "difftrans-add",
    "difftrans-mult",
    "ogawara",
    "iterate",
)

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


class InputError(ValueError):
    """Bad query: unknown command, bad operator spec, unparsable expression."""


@dataclass(frozen=True)
class Query:
    command: str
    operator: str = "shift"
    expressions: tuple = ()
    q: str = None
    max_order: int = 5
    count: int = 1
    kind: str = "mult"
    fmt: str = "json"
    extra: dict = field(default_factory=dict)


def parse_operator(spec, q=None):
    """'shift', 'q', 'q=<rational>' or 'q=symbolic' (with --q as an alternative)."""
    spec = spec.strip()
    if spec == "shift":
        if q is not None:
            raise InputError("--q only applies to the q-dilation operator")
        return DifferenceOperator.shift()
    if spec.startswith("q="):
        if q is not None:
            raise InputError("q given twice")
        q = spec[2:]
        spec = "q"
    if spec != "q":
        raise InputError(f"unknown operator {spec!r}")
    if q is None or q == "symbolic":
        return DifferenceOperator.qdilation("symbolic")
    if not _RATIONAL.match(q.strip()):
        raise InputError(f"q must be an exact rational p/r or 'symbolic', got {q!r}")
    value = Fraction(q.strip())
    if value in (0, 1, -1):
        raise InputError(f"q = {q} is zero or a root of unity")
    return DifferenceOperator.qdilation(value)


# -- rendering ------------------------------------------------------------------

def _const(op, c):
    return op.domain.render(op.domain(c))


def _scalar(op, v):
    """Integers stay integers in the JSON; anything else is rendered."""
    if isinstance(v, int):
        return v
    try:
        r = Fraction(op.domain(v)) if op.domain is QQ else QQ(v)
    except TypeError:
        return _const(op, v)
    return int(r) if r.denominator == 1 else _const(op, v)


def _coefficients(op, p):
    return [op.domain.render(c) for c in p.coeffs]


def _g_fields(op, g):
    if g is None:
        return None, None
    return render(g), {"num": _coefficients(op, g.num), "den": _coefficients(op, g.den)}


def _certificate(op, g=None, lam=None, c=None, n=None, lattice=None):
    g_text, g_coeffs = _g_fields(op, g)
    return {
        "g": g_text,
        "g_coefficients": g_coeffs,
        "lambda": None if lam is None else [_scalar(op, v) for v in lam],
        "c": None if c is None else _const(op, c),
        "n": n,
        "lattice": lattice,
    }


def _report(query, op, inputs, verdict, instantiates, verified, cert=None, summary="", **extra):
    out = {
        "command": query.command,
        "operator": op.describe(),
        "input": inputs,
        "verdict": verdict,
        "certificate": cert or _certificate(op),
        "instantiates": instantiates,
        "verified": bool(verified),
        "summary": summary,
    }
    out.update(extra)
    return out


# -- independent re-checks --------------------------------------------------------

def _check_sum(op, f, g):
    return op.sigma(g) - g == f


def _check_reduction(op, f):
    form = reduce(f, op)
    return f - form.remainder() == op.sigma(form.g) - form.g


def _check_product(op, a, c, n, g):
    dom = op.domain
    value = RatFun.constant(c, dom) * RatFun.x(dom) ** n * op.sigma(g) / g
    return value == a


# -- commands ---------------------------------------------------------------------

def _summable(query, op, fs, inputs):
    (f,) = _single(fs)
    cert = is_summable(f, op)
    if cert is None:
        return _report(query, op, inputs, "not-summable", "Exa-additivegroup", _check_reduction(op, f),
                       summary=f"{inputs[0]} is not of the form sigma(g) - g")
    ok = _check_sum(op, f, cert.g)
    return _report(query, op, inputs, "summable", "Exa-additivegroup", ok, _certificate(op, g=cert.g),
                   summary=f"{inputs[0]} = sigma(g) - g with g = {render(cert.g)}")


def _telescope(query, op, fs, inputs):
    (f,) = _single(fs)
    tag = "Cor-qDiffHomogenous" if op.is_q else "Cor-GeneralHolder"
    cert = parametrized_telescoper(f, op, query.max_order)
    if cert is None:
        return _report(query, op, inputs, "none", tag, _check_reduction(op, f),
                       summary=f"no telescoper of order <= {query.max_order}",
                       detail=NO_RELATION, max_order=query.max_order)
    combo = RatFun.constant(0, op.domain)
    der = f
    for lam in cert.lam:
        combo = combo + der * lam
        der = op.derive(der)
    ok = _check_sum(op, combo, cert.g)
    return _report(query, op, inputs, "telescoper", tag, ok, _certificate(op, g=cert.g, lam=cert.lam),
                   summary=f"telescoper of order {len(cert.lam) - 1}")


def _product_form(query, op, fs, inputs):
    (a,) = _single(fs)
    _nonzero(a)
    tag = "Cor-qDiffHomogenousBis" if op.is_q else "Cor-GeneralHolder"
    cert = product_decompose(a, op)
    if cert is None:
        form = gp_normal_form(a, op)
        return _report(query, op, inputs, "not-decomposable", tag, form.reassemble(op) == a,
                       summary=f"{inputs[0]} has a nontrivial orbit kernel")
    ok = _check_product(op, a, cert.c, cert.n, cert.g)
    return _report(query, op, inputs, "decomposable", tag, ok,
                   _certificate(op, g=cert.g, c=cert.c, n=cert.n),
                   summary=f"a = c * x^n * sigma(g)/g with c = {_const(op, cert.c)}, n = {cert.n}, "
                           f"g = {render(cert.g)}")


def _depend_add(query, op, fs, inputs):
    cert = additive_dependence(fs, op)
    if cert is None:
        return _report(query, op, inputs, "independent", "Prop-transcendenceINH",
                       all(_check_reduction(op, f) for f in fs),
                       summary="no constant relation sum lam_i f_i = sigma(g) - g")
    combo = RatFun.constant(0, op.domain)
    for lam, f in zip(cert.lam, fs):
        combo = combo + f * lam
    ok = _check_sum(op, combo, cert.g)
    return _report(query, op, inputs, "dependent", "Prop-transcendenceINH", ok,
                   _certificate(op, g=cert.g, lam=cert.lam),
                   summary=f"relation {[_scalar(op, v) for v in cert.lam]} with g = {render(cert.g)}")


def _depend_mult(query, op, fs, inputs):
    for a in fs:
        _nonzero(a)
    certs = multiplicative_dependence(fs, op)
    lattice = [list(c.lam) for c in certs]
    if not certs:
        return _report(query, op, inputs, "independent", "Prop-AlgDepHomo", True,
                       _certificate(op, lattice=[]),
                       summary="the relation lattice is zero")
    ok = all(op.sigma(c.g) / c.g == lattice_product(fs, c.lam, op) for c in certs)
    cert = _certificate(op, g=certs[0].g, lam=certs[0].lam, c=op.domain.one, n=0, lattice=lattice)
    cert["lattice_g"] = [render(c.g) for c in certs]
    return _report(query, op, inputs, "dependent", "Prop-AlgDepHomo", ok, cert,
                   summary=f"relation lattice basis {lattice}")


def _galois(query, op, fs, inputs):
    if query.kind not in ("mult", "add"):
        raise InputError("--kind must be 'mult' or 'add'")
    if query.kind == "add":
        descr = galois_rank_one_add(fs[0], op) if len(fs) == 1 else classify_unipotent(fs, op)
        tag = "Exa-additivegroup" if len(fs) == 1 else "Prop-transcendenceINH"
        ok = True
        cert = _certificate(op)
        if len(fs) == 1 and descr.kind == "trivial":
            g = is_summable(fs[0], op).g
            ok = _check_sum(op, fs[0], g)
            cert = _certificate(op, g=g)
    else:
        for a in fs:
            _nonzero(a)
        if len(fs) == 1:
            descr = galois_rank_one_mult(fs[0], op)
            tag = "Exa-order1"
            ok = True
            cert = _certificate(op)
            if descr.kind in ("mu", "trivial"):
                n = minimal_torsion(fs[0], op)
                power = fs[0] ** n
                ratio = is_ratio(power, op)
                ok = ratio is not None and op.sigma(ratio.g) / ratio.g == power
                cert = _certificate(op, g=ratio.g, lam=(n,))
        else:
            descr = classify_diagonal(fs, op)
            tag = "Prop-AlgDepHomo"
            ok = all(is_ratio(lattice_product(fs, lam, op), op) is not None for lam in descr.lattice)
            cert = _certificate(op, lattice=[list(v) for v in descr.lattice])
    group = descr.render(lambda c: _const(op, c))
    trdeg = transcendence_degree(descr)
    return _report(query, op, inputs, group, tag, ok, cert,
                   summary=f"Galois group {group}, transcendence degree {trdeg}",
                   group=group, transcendence_degree=trdeg, dimension_theorem="Thm-dimension")


def _difftrans_add(query, op, fs, inputs):
    (f,) = _single(fs)
    tag = "Cor-qDifferenceGa" if op.is_q else "Cor-FiniteDifferenceGa"
    verdict = diff_transcendence_additive(f, op)
    if verdict.kind == TRANSCENDENTAL:
        return _report(query, op, inputs, TRANSCENDENTAL, tag, _check_reduction(op, f),
                       summary=f"lone pole in the orbit of {verdict.witness.to_str()}",
                       witness=verdict.witness.to_str())
    cert = verdict.certificate
    combo = RatFun.constant(0, op.domain)
    der = f
    for lam in cert.lam:
        combo = combo + der * lam
        der = op.derive(der)
    ok = _check_sum(op, combo, cert.g)
    return _report(query, op, inputs, DIFF_ALGEBRAIC, tag, ok, _certificate(op, g=cert.g, lam=cert.lam),
                   summary=f"telescoper lambda = {[_scalar(op, v) for v in cert.lam]}")


def _difftrans_mult(query, op, fs, inputs):
    (a,) = _single(fs)
    _nonzero(a)
    verdict = diff_transcendence_mult(a, op)
    if verdict.kind == TRANSCENDENTAL:
        tag = "Cor-qDiffHomogenousBis" if op.is_q else "Prop-Holder"
        return _report(query, op, inputs, TRANSCENDENTAL, tag,
                       _check_reduction(op, op.derive(a) / a),
                       summary=f"lone pole in the orbit of {verdict.witness.to_str()}",
                       witness=verdict.witness.to_str())
    tag = "Cor-qDiffHomogenousBis" if op.is_q else "Cor-GeneralHolder"
    cert = verdict.certificate
    ok = _check_product(op, a, cert.c, cert.n, cert.g)
    return _report(query, op, inputs, DIFF_ALGEBRAIC, tag, ok,
                   _certificate(op, g=cert.g, c=cert.c, n=cert.n),
                   summary=f"a = c * x^n * sigma(g)/g with c = {_const(op, cert.c)}, n = {cert.n}, "
                           f"g = {render(cert.g)}")


def _ogawara(query, op, fs, inputs):
    (f,) = _single(fs)
    if not op.is_q:
        raise InputError("ogawara needs the q-dilation operator")
    verdict = ogawara_classify(f, op)
    if verdict.kind == RATIONAL_SOLUTION:
        z = verdict.solution
        return _report(query, op, inputs, RATIONAL_SOLUTION, "Prop-Ogawara", _check_sum(op, f, z),
                       _certificate(op, g=z), summary=f"rational solution z = {render(z)}")
    ok = _check_reduction(op, f)
    if verdict.kind == NO_FORMAL_SOLUTION:
        return _report(query, op, inputs, NO_FORMAL_SOLUTION, "Prop-Ogawara", ok,
                       summary="nonzero x^0 coefficient: no formal power series solution")
    return _report(query, op, inputs, TRANSCENDENTAL, "Prop-Ogawara", ok,
                   summary=f"lone pole in the orbit of {verdict.witness.to_str()}",
                   witness=verdict.witness.to_str())


def _iterate(query, op, rows, inputs):
    try:
        A = SystemMatrix(rows, op)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if query.count < 0:
        raise InputError("iteration count must be nonnegative")
    result = iterate_matrix(A, op, query.count)
    # re-check with the cocycle A_n = sigma^(n-1)(A) * A_(n-1)
    ok = True
    if query.count >= 1:
        prev = iterate_matrix(A, op, query.count - 1)
        ok = A.map(lambda e: op.sigma(e, query.count - 1)) @ prev == result
    matrix = [[render(e) for e in r] for r in result.rows]
    return _report(query, op, inputs, "matrix", "Appendix-dsystem", ok,
                   summary=f"A_{query.count} = {matrix}", matrix=matrix, count=query.count)


_DISPATCH = {
    "summable": _summable,
    "telescope": _telescope,
    "product-form": _product_form,
    "depend-add": _depend_add,
    "depend-mult": _depend_mult,
    "galois": _galois,
    "difftrans-add": _difftrans_add,
    "difftrans-mult": _difftrans_mult,
    "ogawara": _ogawara,
    "iterate": _iterate,
}


# verdicts that rest on a search for constant coefficients lambda
_LAMBDA_SEARCH = ("telescope", "depend-add", "difftrans-add", "difftrans-mult")


def _scope(command, op):
    text = "lambda ranges over the coefficient field of the input"
    if command == "depend-add":
        return text
    if op.is_q:
        return text + "; the verdict over C(x) also holds with q-periodic constants adjoined"
    return text + "; verdict over C(x), not claimed after adjoining 1-periodic constants"


def _single(fs):
    if len(fs) != 1:
        raise InputError(f"expected exactly one expression, got {len(fs)}")
    return fs


def _nonzero(a):
    if not a:
        raise InputError("expression must be nonzero")


def run_command(query):
    """Validate, parse and dispatch a Query; returns the report dict."""
    if query.command not in _DISPATCH:
        raise InputError(f"unknown command {query.command!r}")
    op = parse_operator(query.operator, query.q)
    if query.max_order < 0:
        raise InputError("--max-order must be nonnegative")
    if not query.expressions:
        raise InputError("no expression given")
    try:
        if query.command == "iterate":
            rows = [[parse_expression(e, op.field) for e in row.split(",")] for row in query.expressions]
            inputs = [",".join(render(e) for e in r) for r in rows]
            return _iterate(query, op, rows, inputs)
        fs = [parse_expression(e, op.field) for e in query.expressions]
    except ValueError as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(str(exc)) from exc
    inputs = [render(f) for f in fs]
    report = _DISPATCH[query.command](query, op, fs, inputs)
    if query.command in _LAMBDA_SEARCH:
        report["scope"] = _scope(query.command, op)
    return report


def format_text(report):
    """Human-readable rendering: a summary line, then the certificate fields."""
    lines = [f"{report['command']} [{report['operator']}] {'; '.join(report['input'])}: "
             f"{report['verdict']} -- {report['summary']}"]
    cert = report["certificate"]
    for key in ("g", "lambda", "c", "n", "lattice"):
        if cert.get(key) is not None:
            lines.append(f"  {key}: {cert[key]}")
    lines.append(f"  instantiates: {report['instantiates']}")
    lines.append(f"  verified: {str(report['verified']).lower()}")
    return "\n".join(lines)
