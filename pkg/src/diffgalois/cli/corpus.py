"""Line-oriented fixture corpus.

Each non-comment line has four tab-separated fields:

    command [options]    operator    expr1; expr2; ...    expected

``operator`` is shift, q, q=<rational> or q=symbolic.  For iterate the
expressions are matrix rows with comma-separated entries.  ``expected``
is a verdict tag optionally followed by space-separated key=value checks
(g, c, n, lambda, lattice, trdeg, matrix).  Rows inside lattice and
matrix values are separated by '|'.  Lines starting with '#' and blank
lines are skipped.
"""

import shlex
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .commands import InputError, Query, parse_operator, run_command
from .parser import parse_expression


BUILTIN = Path(__file__).parent / "data" / "fixtures.tsv"


@dataclass(frozen=True)
class Case:
    line: int
    query: Query
    expected: str
    checks: tuple


def _options(tokens):
    opts = {}
    it = iter(tokens)
    for tok in it:
        if tok == "--max-order":
            opts["max_order"] = int(next(it))
        elif tok == "--n":
            opts["count"] = int(next(it))
        elif tok == "--kind":
            opts["kind"] = next(it)
        elif tok == "--q":
            opts["q"] = next(it)
        else:
            raise InputError(f"unknown option {tok!r}")
    return opts


def parse_line(number, text):
    fields = text.rstrip("\n").split("\t")
    if len(fields) != 4:
        raise InputError(f"expected 4 tab-separated fields, got {len(fields)}")
    head = shlex.split(fields[0])
    if not head:
        raise InputError("empty command field")
    exprs = tuple(e.strip() for e in fields[2].split(";") if e.strip())
    expected = fields[3].split()
    if not expected:
        raise InputError("missing expected verdict")
    checks = []
    for item in expected[1:]:
        key, sep, value = item.partition("=")
        if not sep:
            raise InputError(f"malformed check {item!r}")
        checks.append((key, value))
    query = Query(command=head[0], operator=fields[1].strip(), expressions=exprs, **_options(head[1:]))
    return Case(number, query, expected[0], tuple(checks))


def _check(report, key, value, query):
    cert = report["certificate"]
    if key == "g":
        if cert["g"] is None:
            return False
        op = parse_operator(query.operator, query.q)
        return parse_expression(cert["g"], op.field) == parse_expression(value, op.field)
    if key == "trdeg":
        return str(report.get("transcendence_degree")) == value
    if key == "lattice":
        return "|".join(",".join(str(v) for v in row) for row in cert["lattice"] or []) == value
    if key == "lambda":
        return ",".join(str(v) for v in cert["lambda"] or []) == value
    if key == "matrix":
        return "|".join(",".join(r) for r in report.get("matrix", [])) == value
    if key in ("c", "n"):
        return str(cert[key]) == value
    raise InputError(f"unknown check key {key!r}")


def run_case(case):
    """(line, passed, message)."""
    try:
        report = run_command(case.query)
    except InputError as exc:
        return case.line, False, f"input error: {exc}"
    if report["verdict"] != case.expected:
        return case.line, False, f"verdict {report['verdict']!r}, expected {case.expected!r}"
    if not report["verified"]:
        return case.line, False, "certificate failed verification"
    for key, value in case.checks:
        try:
            ok = _check(report, key, value, case.query)
        except (InputError, ValueError) as exc:
            return case.line, False, f"bad check {key}: {exc}"
        if not ok:
            return case.line, False, f"check {key}={value} failed"
    return case.line, True, "ok"


def run_corpus(path, jobs=1):
    """Run every case; results are reported in input order.

    ``path`` may be "builtin" for the shipped fixture corpus.
    """
    if str(path) == "builtin":
        path = BUILTIN
    cases = []
    diagnostics = []
    with open(path, encoding="utf-8") as fh:
        for number, text in enumerate(fh, 1):
            stripped = text.strip()
            if not stripped or stripped.startswith("#"):
                continue
            try:
                cases.append(parse_line(number, text))
            except (InputError, ValueError) as exc:
                diagnostics.append((number, f"malformed line: {exc}"))
    if jobs > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_case, cases))
    else:
        results = [run_case(c) for c in cases]
    rows = sorted([(line, ok, msg) for line, ok, msg in results]
                  + [(line, False, msg) for line, msg in diagnostics])
    failures = [r for r in rows if not r[1]]
    return {
        "command": "corpus",
        "path": str(path),
        "cases": len(rows),
        "passed": len(rows) - len(failures),
        "failed": len(failures),
        "first_divergence": None if not failures else {"line": failures[0][0], "message": failures[0][2]},
        "results": [{"line": line, "passed": ok, "message": msg} for line, ok, msg in rows],
        "verdict": "pass" if not failures else "fail",
    }
