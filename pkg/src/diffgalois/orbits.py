"""Orbit bookkeeping: group polynomial factors into sigma-orbits.

An orbit class is a canonical representative r together with the factors
present in the input, each recorded as monic(sigma^t(r)) with offset t.
The representative is the present member with the smallest offset, so
every other member is reached by a non-negative power of sigma.
"""

from dataclasses import dataclass

from .ratcore import Poly, dispersion_set, orbit_refine, poly_gcd


class CoverageError(ValueError):
    """A polynomial meets an orbit only partially, or an orbit not in the basis."""


@dataclass(frozen=True)
class OrbitClass:
    rep: Poly
    members: tuple  # ((offset, factor), ...) sorted by offset

    @property
    def offsets(self):
        return tuple(t for t, _ in self.members)


class OrbitBasis:
    """Canonical orbit classes for the squarefree support of some denominators."""

    def __init__(self, classes, op):
        self.classes = tuple(classes)
        self.op = op
        self._members = {f: (idx, t) for idx, cl in enumerate(self.classes) for t, f in cl.members}

    @classmethod
    def build(cls, polys, op):
        known = {}
        factors = orbit_refine([p for p in polys if p], op, known)
        parent = list(range(len(factors)))
        shift = [0] * len(factors)  # offset of factor i relative to parent[i]

        def find(i):
            if parent[i] == i:
                return i, 0
            root, off = find(parent[i])
            parent[i] = root
            shift[i] += off
            return root, shift[i]

        for i, a in enumerate(factors):
            for j in range(i + 1, len(factors)):
                b = factors[j]
                if (a, b) in known:
                    ns = known[(a, b)]
                elif (b, a) in known:
                    ns = {-n for n in known[(b, a)]}
                else:
                    ns = dispersion_set(a, b, op)
                if not ns:
                    continue
                (n,) = ns  # refinement leaves at most one relation per pair
                ra, oa = find(i)
                rb, ob = find(j)
                if ra != rb:
                    # offset(a) = offset(b) + n
                    parent[ra] = rb
                    shift[ra] = ob + n - oa
        groups = {}
        for i, f in enumerate(factors):
            root, off = find(i)
            groups.setdefault(root, []).append((off, f))
        classes = []
        for members in groups.values():
            members.sort(key=lambda m: m[0])
            base = members[0][0]
            classes.append(OrbitClass(members[0][1], tuple((t - base, f) for t, f in members)))
        classes.sort(key=lambda c: c.rep.key())
        return cls(classes, op)

    def reps(self):
        return [c.rep for c in self.classes]

    def locate(self, p):
        """Split the squarefree polynomial ``p`` (x-free in the q case) into
        pieces monic(sigma^t(rep)); returns [(class index, t, piece)].

        Raises CoverageError unless ``p`` is a product of whole orbit members
        of the basis classes.
        """
        hit = self._members.get(p)
        if hit is not None:
            return [(hit[0], hit[1], p)]
        op = self.op
        out = []
        rest = p
        for idx, cl in enumerate(self.classes):
            if rest.degree <= 0:
                break
            for n in sorted(dispersion_set(rest, cl.rep, op)):
                member = op.sigma_monic(cl.rep, n)
                g = poly_gcd(rest, member)
                if g != member:
                    raise CoverageError("polynomial meets an orbit member only partially")
                out.append((idx, n, member))
                rest = rest.exact_div(g)
        if rest.degree > 0:
            raise CoverageError("polynomial has roots outside the orbits of the basis")
        return out

    def __repr__(self):
        return "OrbitBasis(" + ", ".join(
            f"{c.rep}:{list(c.offsets)}" for c in self.classes) + ")"
