"""Exact linear algebra: row reduction over a field, integer lattices.

Field entries are anything supporting + - * / with exact equality
(Fraction, RatFun).  Integer routines work on plain Python ints.
"""

from fractions import Fraction
from math import gcd


def rref(rows, zero):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows, ncols, zero, one):
    """Basis of {v : rows * v = 0}, one vector per free column, in column order."""
    reduced, pivots = rref(rows, zero) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def rank(rows, zero):
    return len(rref(rows, zero)[1]) if rows else 0


# -- integer lattices ---------------------------------------------------------

def hermite_normal_form(vectors):
    """Row-style HNF of the lattice spanned by integer ``vectors``.

    Rows are in echelon form, pivots positive, entries above a pivot
    reduced into [0, pivot).  Zero rows are dropped, so the result is the
    unique canonical basis of the lattice.
    """
    m = [list(v) for v in vectors if any(v)]
    if not m:
        return []
    ncols = len(m[0])
    out = []
    col = 0
    while m and col < ncols:
        nz = [r for r in m if r[col]]
        if not nz:
            col += 1
            continue
        # Euclid on column ``col`` until a single nonzero entry survives
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            p = nz[0]
            for r in nz[1:]:
                k = r[col] // p[col]
                for j in range(ncols):
                    r[j] -= k * p[j]
            nz = [r for r in nz if r[col]]
        p = nz[0]
        if p[col] < 0:
            p[:] = [-v for v in p]
        m = [r for r in m if r is not p and any(r)]
        out.append(p)
        col += 1
    for i, row in enumerate(out):
        c = next(j for j, v in enumerate(row) if v)
        for k in range(i):
            q = out[k][c] // row[c]
            if q:
                out[k] = [a - q * b for a, b in zip(out[k], row)]
    return [tuple(r) for r in out]


def integer_kernel(rows, ncols):
    """HNF basis of {v in ZZ^ncols : rows * v = 0}."""
    if not rows:
        return hermite_normal_form([[int(i == j) for j in range(ncols)] for i in range(ncols)])
    # augment the transpose with the identity and clear the constraint part
    aug = [[row[i] for row in rows] + [int(i == j) for j in range(ncols)] for i in range(ncols)]
    nrel = len(rows)
    work = aug
    for c in range(nrel):
        nz = [r for r in work if r[c]]
        zero_rows = [r for r in work if not r[c]]
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[c]))
            p = nz[0]
            for r in nz[1:]:
                k = r[c] // p[c]
                for j in range(len(r)):
                    r[j] -= k * p[j]
            zero_rows.extend(r for r in nz[1:] if not r[c])
            nz = [r for r in nz if r[c]]
        # the surviving pivot row cannot be in the kernel
        work = zero_rows
    return hermite_normal_form([r[nrel:] for r in work])


def lattice_contains(basis, v):
    """Membership of integer vector v in the lattice with HNF ``basis``."""
    v = list(v)
    for row in basis:
        c = next(j for j, a in enumerate(row) if a)
        if v[c] % row[c]:
            return False
        k = v[c] // row[c]
        v = [a - k * b for a, b in zip(v, row)]
    return not any(v)


def primitive_integer(vector):
    """Scale a rational vector to a primitive integer one, first nonzero positive."""
    fr = [Fraction(v) for v in vector]
    den = 1
    for v in fr:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in fr]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g == 0:
        return ints
    ints = [v // g for v in ints]
    first = next(v for v in ints if v)
    return [-v for v in ints] if first < 0 else ints
