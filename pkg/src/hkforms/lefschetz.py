"""The ten-operator algebra L_R, Lambda_R, ad R, H and its so(5) structure.

Builds the operator basis from a hyperkaehler triple, verifies the su(2)
relations and the scalar Hodge action, computes exact structure constants,
checks closure / Jacobi / Killing nondegeneracy, and identifies the B2 root
system relative to the Cartan pair (H, ad I).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .errors import InvariantViolation
from .exterior import (Form, SparseOp, adjoint, all_monomials, monomials,
                       op_bracket, wedge_op)
from .linalg import SpanSolver, determinant, nullspace, operator_kernel
from .quaternionic import HyperTriple, ad_operator, det_form, holo_symplectic, kaehler_form
from .scalars import CRat

NAMES = ("L_I", "L_J", "L_K", "Lam_I", "Lam_J", "Lam_K", "ad_I", "ad_J", "ad_K", "H")
IDX = {n: i for i, n in enumerate(NAMES)}
EXPECTED_SHIFTS = (2, 2, 2, -2, -2, -2, 0, 0, 0, 0)


def check(name, ok, witness=None, data=None):
    rec = {"name": name, "status": "pass" if ok else "fail"}
    rec["witness"] = witness
    if data is not None:
        rec["data"] = data
    return rec


@dataclass
class OperatorBasis:
    triple: HyperTriple
    ops: dict  # name -> SparseOp, keys exactly NAMES
    omega: dict  # "I"/"J"/"K" -> Form
    Omega: Form  # holomorphic symplectic form
    det: Form

    @property
    def dim(self):
        return self.triple.dim

    @property
    def q(self):
        return self.triple.q

    @property
    def m(self):
        """Complex dimension of the model."""
        return 2 * self.triple.q

    def __getitem__(self, name):
        return self.ops[name]

    def op_list(self):
        return [self.ops[n] for n in NAMES]


def build_basis(t: HyperTriple) -> OperatorBasis:
    omega = {"I": kaehler_form(t, t.I), "J": kaehler_form(t, t.J), "K": kaehler_form(t, t.K)}
    ops = {}
    for r in "IJK":
        ops[f"L_{r}"] = wedge_op(omega[r])
        ops[f"Lam_{r}"] = adjoint(ops[f"L_{r}"])
    ops["ad_I"] = ad_operator(t.I)
    ops["ad_J"] = ad_operator(t.J)
    ops["ad_K"] = ad_operator(t.K)
    H = op_bracket(ops["Lam_I"], ops["L_I"])
    for r in "JK":
        if op_bracket(ops[f"Lam_{r}"], ops[f"L_{r}"]) != H:
            raise InvariantViolation(f"H from {r} disagrees with H from I")
    ops["H"] = H
    basis = OperatorBasis(t, ops, omega, holo_symplectic(t), det_form(t.dim))
    for name, shift in zip(NAMES, EXPECTED_SHIFTS):
        shifts = ops[name].degree_shifts()
        if shifts not in ([], [shift]):
            raise InvariantViolation(f"{name} is not degree-homogeneous of shift {shift}")
    return basis


def _first_bad_column(A: SparseOp, B: SparseOp):
    """Earliest monomial on which two operators disagree."""
    for S in all_monomials(A.dim):
        if A.columns.get(S, Form(A.dim)) != B.columns.get(S, Form(B.dim)):
            return list(S)
    return None


def su2_check(b: OperatorBasis):
    """[adI,adJ] = 2adK and cyclic, as exact operator equalities."""
    checks = []
    for x, y, z in (("I", "J", "K"), ("J", "K", "I"), ("K", "I", "J")):
        lhs = op_bracket(b[f"ad_{x}"], b[f"ad_{y}"])
        rhs = b[f"ad_{z}"].scale(2)
        ok = lhs == rhs
        checks.append(check(f"su2:[ad{x},ad{y}]=2ad{z}", ok,
                            witness=None if ok else _first_bad_column(lhs, rhs)))
    return checks


def hodge_check(b: OperatorBasis):
    """H acts on Lambda^r as (m - r) Id, and is independent of R."""
    checks = []
    m = b.m
    H = b["H"]
    bad = None
    for S in all_monomials(b.dim):
        expected = Form.monomial(b.dim, S, CRat(m - len(S)))
        if H.columns.get(S, Form(b.dim)) != expected:
            bad = list(S)
            break
    checks.append(check("hodge:scalar-action", bad is None, witness=bad,
                        data={"m": m}))
    for r in "JK":
        same = op_bracket(b[f"Lam_{r}"], b[f"L_{r}"]) == H
        checks.append(check(f"hodge:H-from-{r}", same))
    return checks


@dataclass(frozen=True)
class LieElt:
    """Element of the ten-dimensional operator algebra in the fixed basis."""

    coeffs: tuple  # 10 CRat over NAMES

    def __post_init__(self):
        if len(self.coeffs) != len(NAMES):
            raise InvariantViolation(f"LieElt needs {len(NAMES)} coefficients")

    @classmethod
    def from_dict(cls, d):
        return cls(tuple(d.get(n, CRat(0)) for n in NAMES))

    def operator(self, b: OperatorBasis) -> SparseOp:
        acc = SparseOp.zero(b.dim)
        for name, c in zip(NAMES, self.coeffs):
            if c:
                acc = acc + b[name].scale(c)
        return acc


@dataclass
class BracketTable:
    names: tuple
    constants: dict  # (i, j) with i < j -> tuple of 10 CRat
    epsilon: int  # sign in [Lam_J, L_K] = epsilon * ad_I
    independent: bool
    closed: bool
    jacobi_ok: bool
    killing_det: CRat
    checks: list = field(default_factory=list)

    def c(self, i, j):
        if i == j:
            return (CRat(0),) * len(self.names)
        if i < j:
            return self.constants[(i, j)]
        return tuple(-x for x in self.constants[(j, i)])

    def ad_matrix(self, i):
        """10x10 matrix of ad_{b_i} in the operator basis: column j = [b_i, b_j]."""
        n = len(self.names)
        return [[self.c(i, j)[k] for j in range(n)] for k in range(n)]


def bracket_table(b: OperatorBasis) -> BracketTable:
    ops = b.op_list()
    n = len(ops)
    solver = SpanSolver()
    independent = all([solver.add(op.flatten()) for op in ops])
    constants = {}
    closed = True
    witness = None
    for i in range(n):
        for j in range(i + 1, n):
            br = op_bracket(ops[i], ops[j])
            coeffs = solver.express(br.flatten())
            if coeffs is None:
                closed = False
                witness = [NAMES[i], NAMES[j]]
                constants[(i, j)] = (CRat(0),) * n
            else:
                constants[(i, j)] = tuple(coeffs.get(k, CRat(0)) for k in range(n))

    tbl = BracketTable(NAMES, constants, 0, independent, closed, True, CRat(0))

    # Jacobi identity on all basis triples, from the structure constants.
    jacobi_ok = True
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                acc = [CRat(0)] * n
                for (x, y, z) in ((i, j, k), (j, k, i), (k, i, j)):
                    cxy = tbl.c(x, y)
                    for l in range(n):
                        if not cxy[l]:
                            continue
                        clz = tbl.c(l, z)
                        for mth in range(n):
                            acc[mth] = acc[mth] + cxy[l] * clz[mth]
                if any(acc):
                    jacobi_ok = False
    tbl.jacobi_ok = jacobi_ok

    killing = [[CRat(0)] * n for _ in range(n)]
    for i in range(n):
        adi = tbl.ad_matrix(i)
        for j in range(i, n):
            adj_m = tbl.ad_matrix(j)
            tr = CRat(0)
            for a in range(n):
                for bb in range(n):
                    tr = tr + adi[a][bb] * adj_m[bb][a]
            killing[i][j] = killing[j][i] = tr
    tbl.killing_det = determinant(killing)

    eps_coeffs = tbl.c(IDX["Lam_J"], IDX["L_K"])
    eps = eps_coeffs[IDX["ad_I"]]
    pure = all(not c for k, c in enumerate(eps_coeffs) if k != IDX["ad_I"])
    tbl.epsilon = int(eps.re) if pure and not eps.im and eps.re in (1, -1) else 0

    tbl.checks = [
        check("so5:independent", independent, data={"span_dim": solver.dim}),
        check("so5:closed", closed, witness=witness),
        check("so5:jacobi", jacobi_ok),
        check("so5:killing-nondegenerate", bool(tbl.killing_det),
              data={"killing_det": tbl.killing_det.to_json()}),
        check("so5:[Lam_J,L_K]=eps*ad_I", tbl.epsilon in (1, -1),
              data={"epsilon": tbl.epsilon}),
    ]
    return tbl


B2_ROOTS = {(2, 0), (-2, 0), (0, 2), (0, -2), (2, 2), (2, -2), (-2, 2), (-2, -2)}


@dataclass
class RootSystemReport:
    cartan: tuple  # names of the Cartan pair
    cartan_dim: int
    roots: list  # {"coords": (h, a), "vector": {name: CRat}, "length2": int}
    label: str
    checks: list


def root_system(tbl: BracketTable) -> RootSystemReport:
    """Simultaneous eigenspaces of ad_H and ad_{adI} on the 10-dim algebra.

    Roots are reported in integer coordinates
    (H-eigenvalue, eigenvalue of -i * ad_{adI}).
    """
    n = len(tbl.names)
    variables = list(range(n))
    ad_h = tbl.ad_matrix(IDX["H"])
    ad_i = tbl.ad_matrix(IDX["ad_I"])
    spaces = {}
    for mu_h in range(-4, 5):
        for mu_a in range(-4, 5):
            rows = []
            for mat, lam in ((ad_h, CRat(mu_h)), (ad_i, CRat(0, mu_a))):
                for k in range(n):
                    row = {j: mat[k][j] for j in range(n) if mat[k][j]}
                    d = row.get(k, CRat(0)) - lam
                    if d:
                        row[k] = d
                    else:
                        row.pop(k, None)
                    if row:
                        rows.append(row)
            basis = nullspace(rows, variables)
            if basis:
                spaces[(mu_h, mu_a)] = basis

    cartan = spaces.get((0, 0), [])
    roots = []
    for (mu_h, mu_a), basis in sorted(spaces.items()):
        if (mu_h, mu_a) == (0, 0):
            continue
        for vec in basis:
            roots.append({
                "coords": (mu_h, mu_a),
                "vector": {tbl.names[k]: c for k, c in sorted(vec.items())},
                "length2": mu_h * mu_h + mu_a * mu_a,
            })

    coords = [r["coords"] for r in roots]
    lengths = sorted({r["length2"] for r in roots})
    counts = {l: sum(1 for r in roots if r["length2"] == l) for l in lengths}
    is_b2 = (set(coords) == B2_ROOTS and len(coords) == 8
             and lengths == [4, 8] and counts == {4: 4, 8: 4})
    paired = all((-h, -a) in coords for (h, a) in coords)

    checks = [
        check("roots:cartan-dim-2", len(cartan) == 2),
        check("roots:count-8", len(coords) == 8, data={"coords": sorted(coords)}),
        check("roots:pm-pairs", paired),
        check("roots:B2-pattern", is_b2,
              data={"lengths": lengths, "counts": {str(k): v for k, v in counts.items()}}),
        check("roots:total-dim-10",
              sum(len(v) for v in spaces.values()) == 10),
    ]
    return RootSystemReport(("H", "ad_I"), len(cartan), roots,
                            "B2" if is_b2 else "unknown", checks)


def weight_decompose(b: OperatorBasis, degrees=None):
    """Joint (form degree, adI)-eigenspace dimensions; the Hodge table.

    ad I acts on the (p, p')-space with eigenvalue i(p' - p); the entry for
    (p, p') must have dimension C(m, p) * C(m, p').
    """
    m = b.m
    dim = b.dim
    if degrees is None:
        degrees = range(dim + 1)
    ad_i = b["ad_I"]
    entries = []
    checks = []
    total = 0
    for d in degrees:
        deg_total = 0
        for lam in range(-d, d + 1, 2):
            p, pp = (d - lam) // 2, (d + lam) // 2
            if p > m or pp > m:
                continue
            shifted = ad_i - SparseOp(dim, {
                S: Form.monomial(dim, S, CRat(0, lam)) for S in monomials(dim, d)})
            space = operator_kernel(shifted, dim, d)
            want = comb(m, p) * comb(m, pp)
            entries.append({"degree": d, "p": p, "p_prime": pp,
                            "dim": len(space), "expected": want})
            deg_total += len(space)
            total += len(space)
            if len(space) != want:
                checks.append(check(f"hodge-dim:({p},{pp})", False,
                                    data={"got": len(space), "expected": want}))
        checks.append(check(f"hodge-degree-total:{d}", deg_total == comb(dim, d),
                            data={"got": deg_total, "expected": comb(dim, d)}))
    if list(degrees) == list(range(dim + 1)):
        checks.append(check("hodge-grand-total", total == 2 ** dim,
                            data={"got": total, "expected": 2 ** dim}))
    return entries, checks
