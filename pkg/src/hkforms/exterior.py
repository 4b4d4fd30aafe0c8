"""Sparse exterior algebra over exact complex rationals.

Basis monomials of Lambda^*(R^dim) are strictly increasing index tuples
(1-based).  Forms are finite monomial -> CRat maps with no stored zeros;
operators are column-sparse maps monomial -> Form.  The monomial basis is
declared orthonormal: adjoints are conjugate transposes in this basis.
"""

from __future__ import annotations

from itertools import combinations

from .errors import InputError
from .scalars import CRat, ONE

MultiIndex = tuple


def monomials(dim, degree):
    """All degree-`degree` basis monomials of Lambda^*(R^dim), ascending."""
    return combinations(range(1, dim + 1), degree)


def all_monomials(dim):
    for d in range(dim + 1):
        yield from monomials(dim, d)


def check_monomial(S, dim):
    if any(not (1 <= a <= dim) for a in S):
        raise InputError(f"index out of range in {S} for dim {dim}")
    if any(S[i] >= S[i + 1] for i in range(len(S) - 1)):
        raise InputError(f"monomial {S} is not strictly increasing")


def sign_merge(S, T):
    """Merge disjoint ascending tuples; returns (sign, union) or None.

    None iff S and T overlap; the sign is the parity of the shuffle sorting
    the concatenation S + T.
    """
    i, j = 0, 0
    out = []
    sign = 1
    ls, lt = len(S), len(T)
    while i < ls and j < lt:
        a, b = S[i], T[j]
        if a == b:
            return None
        if a < b:
            out.append(a)
            i += 1
        else:
            out.append(b)
            j += 1
            if (ls - i) & 1:
                sign = -sign
    out.extend(S[i:])
    out.extend(T[j:])
    return sign, tuple(out)


def sort_signed(seq):
    """Sort an index sequence, returning (sign, tuple) or None on repeats."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return None
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv += 1
    return (-1) ** inv, tuple(sorted(seq))


class Form:
    """Sparse complex-rational linear combination of basis monomials."""

    __slots__ = ("dim", "terms")

    def __init__(self, dim, terms=None):
        self.dim = dim
        self.terms = {}
        if terms:
            for S, c in terms.items():
                if not isinstance(c, CRat):
                    c = CRat(c)
                if c:
                    self.terms[S] = c

    @classmethod
    def monomial(cls, dim, S, coeff=ONE):
        return cls(dim, {tuple(S): coeff})

    @classmethod
    def unit(cls, dim):
        return cls(dim, {(): ONE})

    @classmethod
    def zero(cls, dim):
        return cls(dim)

    def coeff(self, S):
        return self.terms.get(tuple(S), CRat(0))

    def is_zero(self):
        return not self.terms

    def degrees(self):
        return sorted({len(S) for S in self.terms})

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def degree(self):
        ds = self.degrees()
        if len(ds) != 1:
            raise InputError(f"form is not homogeneous (degrees {ds})")
        return ds[0]

    def is_real(self):
        return all(not c.im for c in self.terms.values())

    def real_part(self):
        return Form(self.dim, {S: CRat(c.re) for S, c in self.terms.items()})

    def imag_part(self):
        return Form(self.dim, {S: CRat(c.im) for S, c in self.terms.items()})

    def conjugate(self):
        return Form(self.dim, {S: c.conjugate() for S, c in self.terms.items()})

    def scale(self, c):
        if not isinstance(c, CRat):
            c = CRat(c)
        if not c:
            return Form(self.dim)
        return Form(self.dim, {S: c * v for S, v in self.terms.items()})

    def __add__(self, other):
        _same_dim(self, other)
        out = dict(self.terms)
        for S, c in other.terms.items():
            v = out.get(S)
            v = c if v is None else v + c
            if v:
                out[S] = v
            else:
                out.pop(S, None)
        f = Form(self.dim)
        f.terms = out
        return f

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def __eq__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        return self.dim == other.dim and self.terms == other.terms

    def __hash__(self):
        return hash((self.dim, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return f"Form({self.dim}, 0)"
        parts = [f"{c!r}*e{''.join(map(str, S)) or '()'}"
                 for S, c in sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))]
        return f"Form({self.dim}, {' + '.join(parts)})"


def _same_dim(a, b):
    if a.dim != b.dim:
        raise InputError(f"dimension mismatch: {a.dim} != {b.dim}")


def wedge(f: Form, g: Form) -> Form:
    _same_dim(f, g)
    out = {}
    for S, a in f.terms.items():
        for T, b in g.terms.items():
            m = sign_merge(S, T)
            if m is None:
                continue
            sign, U = m
            c = a * b
            if sign < 0:
                c = -c
            v = out.get(U)
            v = c if v is None else v + c
            if v:
                out[U] = v
            else:
                out.pop(U, None)
    h = Form(f.dim)
    h.terms = out
    return h


def wedge_power(f: Form, k: int) -> Form:
    out = Form.unit(f.dim)
    for _ in range(k):
        out = wedge(f, out)
    return out


def inner(f: Form, g: Form) -> CRat:
    """Monomial-orthonormal pairing <f, g>, conjugate-linear in g."""
    _same_dim(f, g)
    acc = CRat(0)
    small, big = (f.terms, g.terms) if len(f.terms) <= len(g.terms) else (g.terms, f.terms)
    for S in small:
        if S in big:
            acc = acc + f.terms[S] * g.terms[S].conjugate()
    return acc


class SparseOp:
    """Linear operator on Lambda^*(R^dim) (x) C, column-sparse over monomials.

    Absent column = zero image.  All constructors here materialize every
    column they act on; columns of the built-in operators stay short.
    """

    __slots__ = ("dim", "columns")

    def __init__(self, dim, columns=None):
        self.dim = dim
        self.columns = {}
        if columns:
            for S, f in columns.items():
                if f.terms:
                    self.columns[S] = f

    @classmethod
    def zero(cls, dim):
        return cls(dim)

    @classmethod
    def identity(cls, dim):
        return cls(dim, {S: Form.monomial(dim, S) for S in all_monomials(dim)})

    def apply(self, f: Form) -> Form:
        if f.dim != self.dim:
            raise InputError(f"dimension mismatch: {f.dim} != {self.dim}")
        out = Form(self.dim)
        for S, c in f.terms.items():
            col = self.columns.get(S)
            if col is not None:
                out = out + col.scale(c)
        return out

    def scale(self, c):
        return SparseOp(self.dim, {S: f.scale(c) for S, f in self.columns.items()})

    def __add__(self, other):
        _same_dim(self, other)
        cols = dict(self.columns)
        for S, f in other.columns.items():
            cols[S] = cols[S] + f if S in cols else f
        return SparseOp(self.dim, cols)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def __eq__(self, other):
        if not isinstance(other, SparseOp):
            return NotImplemented
        return self.dim == other.dim and self.columns == other.columns

    def __hash__(self):
        return hash((self.dim, frozenset(self.columns)))

    def degree_shifts(self):
        shifts = set()
        for S, f in self.columns.items():
            shifts.update(len(T) - len(S) for T in f.terms)
        return sorted(shifts)

    def flatten(self):
        """Dict (input monomial, output monomial) -> CRat, for span arithmetic."""
        out = {}
        for S, f in self.columns.items():
            for T, c in f.terms.items():
                out[(S, T)] = c
        return out


def compose(A: SparseOp, B: SparseOp) -> SparseOp:
    """A after B."""
    if A.dim != B.dim:
        raise InputError(f"dimension mismatch: {A.dim} != {B.dim}")
    return SparseOp(A.dim, {S: A.apply(f) for S, f in B.columns.items()})


def op_bracket(A: SparseOp, B: SparseOp) -> SparseOp:
    return compose(A, B) - compose(B, A)


def adjoint(A: SparseOp) -> SparseOp:
    """Conjugate transpose in the orthonormal monomial basis."""
    cols = {}
    for S, f in A.columns.items():
        for T, c in f.terms.items():
            cols.setdefault(T, {})[S] = c.conjugate()
    return SparseOp(A.dim, {T: Form(A.dim, d) for T, d in cols.items()})


def _mat_entry(mat, b, a):
    c = mat[b - 1][a - 1]
    return c if isinstance(c, CRat) else CRat(c)


def lift_derivation(dim, mat) -> SparseOp:
    """Leibniz extension of a (dim x dim) matrix acting on degree-1 forms.

    Column a of `mat` is the image of e^a: e^a -> sum_b mat[b-1][a-1] e^b.
    The result restricted to degree 1 equals `mat` and satisfies
    D(f ^ g) = D(f) ^ g + f ^ D(g).
    """
    images = {}
    for a in range(1, dim + 1):
        images[a] = [(b, _mat_entry(mat, b, a)) for b in range(1, dim + 1)
                     if _mat_entry(mat, b, a)]
    cols = {}
    for S in all_monomials(dim):
        terms = {}
        for k, a in enumerate(S):
            for b, c in images[a]:
                res = sort_signed(S[:k] + (b,) + S[k + 1:])
                if res is None:
                    continue
                sign, T = res
                v = c if sign > 0 else -c
                w = terms.get(T)
                w = v if w is None else w + v
                if w:
                    terms[T] = w
                else:
                    terms.pop(T, None)
        cols[S] = Form(dim, terms)
    return SparseOp(dim, cols)


def lift_multiplicative(dim, mat) -> SparseOp:
    """Extension of a degree-1 matrix acting multiplicatively on wedges.

    On degree r the result is the r-th exterior power of `mat`.
    """
    images = {a: Form(dim, {(b,): _mat_entry(mat, b, a)
                            for b in range(1, dim + 1) if _mat_entry(mat, b, a)})
              for a in range(1, dim + 1)}
    cols = {}
    for S in all_monomials(dim):
        f = Form.unit(dim)
        for a in S:
            f = wedge(f, images[a])
        cols[S] = f
    return SparseOp(dim, cols)


def wedge_op(f: Form) -> SparseOp:
    """The operator g -> f ^ g, with a column for every basis monomial."""
    return SparseOp(f.dim, {S: wedge(f, Form.monomial(f.dim, S))
                            for S in all_monomials(f.dim)})
