"""Exact linear algebra over complex rationals.

Vectors are sparse dicts key -> CRat with orderable keys; elimination is
plain Gaussian over reduced fractions (exact, growth bounded by Fraction's
gcd reduction).  Everything is deterministic: pivots are chosen by the
natural key order.
"""

from __future__ import annotations

from .errors import TheoryViolation
from .exterior import Form, monomials
from .scalars import CRat, ONE


def rref(rows):
    """Reduced row echelon form of an iterable of sparse rows.

    Returns {pivot_key: row} with each row normalized (pivot coefficient 1)
    and fully reduced against all other pivot rows.
    """
    ech = Echelon()
    for r in rows:
        ech.insert(r)
    return ech.rows


def nullspace(rows, variables):
    """Exact kernel basis of the homogeneous system given by `rows`.

    Each basis vector sets one free variable to 1; output order follows
    `variables`.
    """
    pivots = rref(rows)
    free = [v for v in variables if v not in pivots]
    basis = []
    for f in free:
        vec = {f: ONE}
        for pv, prow in pivots.items():
            c = prow.get(f)
            if c:
                vec[pv] = -c
        basis.append(vec)
    return basis


def operator_kernel(ops, dim, degree):
    """Exact basis of the joint kernel of `ops` on Lambda^degree.

    `ops` is a single SparseOp or a list of them; each may shift degree.
    """
    if not isinstance(ops, (list, tuple)):
        ops = [ops]
    variables = list(monomials(dim, degree))
    rows = {}
    for i, op in enumerate(ops):
        for S in variables:
            img = op.columns.get(S)
            if img is None:
                continue
            for T, c in img.terms.items():
                rows.setdefault((i, T), {})[S] = c
    basis = nullspace(rows.values(), variables)
    return [Form(dim, vec) for vec in basis]


def operator_rank(op, degree):
    from math import comb

    basis = operator_kernel(op, op.dim, degree)
    return comb(op.dim, degree) - len(basis)


class Echelon:
    """Incrementally echelonized family of sparse vectors."""

    def __init__(self):
        self.rows = {}  # pivot key -> normalized reduced row

    @property
    def dim(self):
        return len(self.rows)

    def reduce(self, vec):
        """Remainder of `vec` modulo the current span."""
        row = dict(vec)
        for pv in sorted(set(row) & set(self.rows)):
            c = row.get(pv)
            if not c:
                row.pop(pv, None)
                continue
            prow = self.rows[pv]
            row.pop(pv)
            for v, pc in prow.items():
                if v == pv:
                    continue
                nv = row.get(v)
                nv = -c * pc if nv is None else nv - c * pc
                if nv:
                    row[v] = nv
                else:
                    row.pop(v, None)
        return row

    def contains(self, vec):
        return not self.reduce(vec)

    def insert(self, vec):
        """Add `vec` to the span; returns True if the dimension grew."""
        row = self.reduce(vec)
        if not row:
            return False
        lead = min(row)
        c = row[lead]
        row = {v: val / c for v, val in row.items()}
        for pv, prow in list(self.rows.items()):
            f = prow.get(lead)
            if f is None:
                continue
            prow.pop(lead)
            for v, val in row.items():
                if v == lead:
                    continue
                nv = prow.get(v)
                nv = -f * val if nv is None else nv - f * val
                if nv:
                    prow[v] = nv
                else:
                    prow.pop(v, None)
        self.rows[lead] = row
        return True


class SpanSolver:
    """Echelonized span that can express vectors over its generators."""

    def __init__(self):
        self.rows = []  # (pivot, row, combo over generator indices)
        self.n_gens = 0

    @property
    def dim(self):
        return len(self.rows)

    def _reduce(self, vec):
        row = dict(vec)
        combo = {}
        changed = True
        while changed and row:
            changed = False
            for pv, prow, pcombo in self.rows:
                c = row.get(pv)
                if not c:
                    continue
                for v, pc in prow.items():
                    nv = row.get(v)
                    nv = -c * pc if nv is None else nv - c * pc
                    if nv:
                        row[v] = nv
                    else:
                        row.pop(v, None)
                for g, pc in pcombo.items():
                    ng = combo.get(g)
                    ng = c * pc if ng is None else ng + c * pc
                    if ng:
                        combo[g] = ng
                    else:
                        combo.pop(g, None)
                changed = True
        return row, combo

    def add(self, vec):
        """Register `vec` as the next generator; True if independent."""
        idx = self.n_gens
        self.n_gens += 1
        row, combo = self._reduce(vec)
        if not row:
            return False
        lead = min(row)
        c = row[lead]
        row = {v: val / c for v, val in row.items()}
        gcombo = {g: -val / c for g, val in combo.items()}
        gcombo[idx] = ONE / c
        self.rows.append((lead, row, gcombo))
        return True

    def express(self, vec):
        """Coefficients over the generators, or None if outside the span."""
        row, combo = self._reduce(vec)
        if row:
            return None
        return combo


def determinant(mat):
    """Exact determinant of a dense square CRat matrix."""
    n = len(mat)
    a = [list(r) for r in mat]
    det = ONE
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return CRat(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det = det * a[col][col]
        inv = ONE / a[col][col]
        for r in range(col + 1, n):
            if not a[r][col]:
                continue
            f = a[r][col] * inv
            for c2 in range(col, n):
                a[r][c2] = a[r][c2] - f * a[col][c2]
    return det


def primitive_direction(fracs):
    """Gcd-reduced integer vector from rationals, first nonzero positive."""
    from math import gcd, lcm

    dens = [f.denominator for f in fracs]
    scale = lcm(*dens) if dens else 1
    ints = [int(f * scale) for f in fracs]
    if not any(ints):
        raise TheoryViolation("zero direction vector")
    g = gcd(*ints)
    ints = [x // g for x in ints]
    lead = next((x for x in ints if x), None)
    if lead is not None and lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)
