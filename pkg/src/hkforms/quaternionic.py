"""The standard quaternionic structure on R^{4q}.

Fixed 4x4 block convention for (I, J, K); the quaternion relations
I^2 = J^2 = K^2 = -Id and I J = K = -J I are asserted at construction so a
wrong convention cannot ship.

The operator ad R on forms is the Leibniz extension of the metric
transport of R to covectors, e^a -> sum_b R[b][a] e^b.  This is the
bracket-preserving choice, so [adI, adJ] = 2 adK holds on the nose (the
precomposition convention would flip the sign of the su(2) relations).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, InvariantViolation
from .exterior import Form, SparseOp, lift_derivation, lift_multiplicative
from .scalars import CRat, IMAG


class Endo:
    """Dense exact-rational endomorphism of R^dim; entries[i][j] is the
    e_{i+1}-coefficient of the image of e_{j+1}."""

    __slots__ = ("dim", "entries")

    def __init__(self, entries):
        self.entries = tuple(tuple(Fraction(x) for x in row) for row in entries)
        self.dim = len(self.entries)
        if any(len(row) != self.dim for row in self.entries):
            raise InputError("endomorphism matrix is not square")

    @classmethod
    def zero(cls, dim):
        return cls([[0] * dim for _ in range(dim)])

    @classmethod
    def identity(cls, dim):
        return cls([[1 if i == j else 0 for j in range(dim)] for i in range(dim)])

    def __matmul__(self, other):
        n = self.dim
        if other.dim != n:
            raise InputError("dimension mismatch")
        return Endo([[sum(self.entries[i][k] * other.entries[k][j] for k in range(n))
                      for j in range(n)] for i in range(n)])

    def __add__(self, other):
        return Endo([[a + b for a, b in zip(r1, r2)]
                     for r1, r2 in zip(self.entries, other.entries)])

    def scale(self, c):
        c = Fraction(c)
        return Endo([[c * x for x in row] for row in self.entries])

    def __neg__(self):
        return self.scale(-1)

    def __eq__(self, other):
        return isinstance(other, Endo) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def transpose(self):
        return Endo(list(zip(*self.entries)))

    def is_orthogonal(self):
        return (self.transpose() @ self) == Endo.identity(self.dim)


# 4x4 blocks: columns are images of e1..e4.
_I_BLOCK = [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]
_J_BLOCK = [[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]]
_K_BLOCK = [[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]


def _block_diag(block, q):
    dim = 4 * q
    m = [[0] * dim for _ in range(dim)]
    for b in range(q):
        for i in range(4):
            for j in range(4):
                m[4 * b + i][4 * b + j] = block[i][j]
    return Endo(m)


@dataclass(frozen=True)
class HyperTriple:
    I: Endo
    J: Endo
    K: Endo

    def __post_init__(self):
        dim = self.I.dim
        if dim % 4:
            raise InvariantViolation("dimension must be a multiple of 4")
        minus_id = Endo.identity(dim).scale(-1)
        for name, R in (("I", self.I), ("J", self.J), ("K", self.K)):
            if R @ R != minus_id:
                raise InvariantViolation(f"{name}^2 != -Id")
        if self.I @ self.J != self.K or self.J @ self.I != -self.K:
            raise InvariantViolation("I J = K = -J I fails")

    @property
    def dim(self):
        return self.I.dim

    @property
    def q(self):
        return self.I.dim // 4


def standard_triple(q: int) -> HyperTriple:
    """Block-diagonal (I, J, K) with identical 4x4 blocks per quaternion line."""
    if q < 1:
        raise InputError(f"q must be >= 1, got {q}")
    return HyperTriple(_block_diag(_I_BLOCK, q),
                       _block_diag(_J_BLOCK, q),
                       _block_diag(_K_BLOCK, q))


@dataclass(frozen=True)
class SpherePoint:
    """Rational point (a, b, c) on the unit 2-sphere of induced structures."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        object.__setattr__(self, "c", Fraction(self.c))
        if self.a ** 2 + self.b ** 2 + self.c ** 2 != 1:
            raise InputError(f"({self.a}, {self.b}, {self.c}) is not on the unit sphere")

    def coords(self):
        return (self.a, self.b, self.c)


def rational_sphere_point(u, v) -> SpherePoint:
    """Stereographic chart: exact rational sphere point from (u, v).

    Misses only the pole (0, 0, -1), which is fine for sampling.
    """
    u, v = Fraction(u), Fraction(v)
    d = 1 + u * u + v * v
    return SpherePoint(2 * u / d, 2 * v / d, (1 - u * u - v * v) / d)


def induced(t: HyperTriple, s: SpherePoint) -> Endo:
    """L = aI + bJ + cK; an exact complex structure for every sphere point."""
    return t.I.scale(s.a) + t.J.scale(s.b) + t.K.scale(s.c)


def ad_operator(R: Endo) -> SparseOp:
    """Derivation extension of R to all forms (metric transport on covectors)."""
    return lift_derivation(R.dim, R.entries)


def mult_operator(R: Endo) -> SparseOp:
    """Multiplicative extension of R to all forms: R(f ^ g) = R(f) ^ R(g)."""
    return lift_multiplicative(R.dim, R.entries)


def kaehler_form(t: HyperTriple, R: Endo) -> Form:
    """Degree-2 form with e^{ab}-coefficient <R e_a, e_b> (a < b)."""
    dim = R.dim
    minus_id = Endo.identity(dim).scale(-1)
    if R @ R != minus_id:
        raise InvariantViolation("R is not a complex structure")
    if not R.is_orthogonal():
        raise InvariantViolation("R is not orthogonal")
    terms = {}
    for a in range(1, dim + 1):
        for b in range(a + 1, dim + 1):
            # <R e_a, e_b> = R[b][a]; skew-compatibility check against (b, a)
            c = R.entries[b - 1][a - 1]
            if R.entries[a - 1][b - 1] != -c:
                raise InvariantViolation("R is not skew-compatible with the metric")
            if c:
                terms[(a, b)] = CRat(c)
    return Form(dim, terms)


def holo_symplectic(t: HyperTriple) -> Form:
    """Omega = omega_J + i omega_K, the fiberwise holomorphic symplectic form."""
    return kaehler_form(t, t.J) + kaehler_form(t, t.K).scale(IMAG)


def det_form(dim) -> Form:
    """The top monomial e^{1...dim} with coefficient 1."""
    return Form.monomial(dim, tuple(range(1, dim + 1)))
