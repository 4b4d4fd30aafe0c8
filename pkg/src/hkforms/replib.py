"""Representation-theoretic verifications on the operator algebra.

Isotropy invariants, the annihilator bound on the sphere of induced
structures, the submodule generated by the determinant form, the Casimir
C = Lam_I^2 + Lam_J^2 + Lam_K^2, the degree functional, and the pointwise
2^s top-form identity with its mod-4 divisibility obstruction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, TheoryViolation
from .exterior import Form, SparseOp, compose, wedge, wedge_power
from .linalg import Echelon, nullspace, operator_kernel, primitive_direction
from .lefschetz import LieElt, OperatorBasis, check
from .quaternionic import SpherePoint, ad_operator, induced, rational_sphere_point
from .scalars import CRat


def gm_invariants(b: OperatorBasis, degree):
    """Exact basis of ker(adI) n ker(adJ) n ker(adK) on Lambda^degree."""
    ads = [b["ad_I"], b["ad_J"], b["ad_K"]]
    return operator_kernel(ads, b.dim, degree)


def is_invariant(b: OperatorBasis, f: Form) -> bool:
    return all(b[f"ad_{r}"].apply(f).is_zero() for r in "IJK")


def pure_type_operator(b: OperatorBasis, s: SpherePoint) -> SparseOp:
    """Derivation lift of the induced structure at s, built independently
    of the stored ad operators (not as their linear combination)."""
    return ad_operator(induced(b.triple, s))


def is_pure_type(b: OperatorBasis, f: Form, s: SpherePoint, op=None) -> bool:
    """Whether f is purely of type (p,p) w.r.t. the induced structure at s."""
    if op is None:
        op = pure_type_operator(b, s)
    return op.apply(f).is_zero()


@dataclass(frozen=True)
class FixLocus:
    tag: str  # "All" | "AntipodalPair" | "None"
    direction: tuple | None = None  # primitive integer 3-vector, up to sign

    def to_json(self):
        return {"tag": self.tag,
                "direction": list(self.direction) if self.direction else None}


def fix_locus(b: OperatorBasis, f: Form) -> FixLocus:
    """Kernel of (a,b,c) -> a adI(f) + b adJ(f) + c adK(f) on the real span.

    Kernel dimension 2 is impossible for su(2) representations; hitting it
    means an implementation bug, so it raises.
    """
    images = [b[f"ad_{r}"].apply(f) for r in "IJK"]
    rows = {}
    for j, img in enumerate(images):
        for S, c in img.terms.items():
            if c.re:
                rows.setdefault((S, 0), {})[j] = CRat(c.re)
            if c.im:
                rows.setdefault((S, 1), {})[j] = CRat(c.im)
    kernel = nullspace(rows.values(), [0, 1, 2])
    k = len(kernel)
    if k == 3:
        return FixLocus("All")
    if k == 0:
        return FixLocus("None")
    if k == 2:
        raise TheoryViolation("fix-locus kernel of dimension 2 (forbidden)")
    vec = kernel[0]
    direction = primitive_direction([vec.get(j, CRat(0)).re for j in range(3)])
    return FixLocus("AntipodalPair", direction)


class Subspace:
    """Graded subspace of Lambda^*, stored as an echelonized basis.

    Keys are (degree, monomial); bases are reduced against the
    lexicographic monomial order inside each degree, so reports are
    deterministic.
    """

    def __init__(self, dim):
        self.dim = dim
        self.ech = Echelon()

    @property
    def total_dim(self):
        return self.ech.dim

    def insert(self, f: Form) -> bool:
        return self.ech.insert({(len(S), S): c for S, c in f.terms.items()})

    def contains(self, f: Form) -> bool:
        return self.ech.contains({(len(S), S): c for S, c in f.terms.items()})

    def degrees(self):
        return sorted({pv[0] for pv in self.ech.rows})

    def degree_dims(self):
        out = {}
        for pv in self.ech.rows:
            out[pv[0]] = out.get(pv[0], 0) + 1
        return dict(sorted(out.items()))

    def basis(self, degree):
        rows = [(pv, row) for pv, row in self.ech.rows.items() if pv[0] == degree]
        forms = []
        for pv, row in sorted(rows):
            forms.append(Form(self.dim, {key[1]: c for key, c in row.items()}))
        return forms


def submodule_closure(b: OperatorBasis, seed: Form) -> Subspace:
    """Smallest subspace containing `seed`, stable under all ten operators."""
    if seed.is_zero():
        raise InputError("closure seed must be nonzero")
    sub = Subspace(b.dim)
    queue = [seed]
    ops = b.op_list()
    while queue:
        f = queue.pop()
        if not sub.insert(f):
            continue
        for op in ops:
            g = op.apply(f)
            if not g.is_zero():
                queue.append(g)
    return sub


def c_operator(b: OperatorBasis) -> SparseOp:
    """The invariant Casimir C = Lam_I^2 + Lam_J^2 + Lam_K^2 (degree shift -4)."""
    acc = SparseOp.zero(b.dim)
    for r in "IJK":
        lam = b[f"Lam_{r}"]
        acc = acc + compose(lam, lam)
    return acc


def highest_weight_check(b: OperatorBasis, roots):
    """The root spaces annihilating det contain a half-plane positive system.

    `roots` is the root list of a RootSystemReport.  All three L-type root
    spaces must annihilate det; a valid 4-root positive system (open
    half-plane) inside the annihilating set must exist.
    """
    det = b.det
    annihilating = []
    for r in roots:
        op = LieElt.from_dict(r["vector"]).operator(b)
        if op.apply(det).is_zero():
            annihilating.append(r["coords"])
    ann = set(annihilating)
    l_side = {c for c in ann if c[0] == -2}  # L-type roots lower H by 2
    half_planes = [(Fraction(-1), Fraction(s, 4)) for s in (1, -1)] + \
                  [(Fraction(1), Fraction(s, 4)) for s in (1, -1)] + \
                  [(Fraction(s, 4), Fraction(1)) for s in (1, -1)] + \
                  [(Fraction(s, 4), Fraction(-1)) for s in (1, -1)]
    all_coords = {r["coords"] for r in roots}
    system = None
    for v in half_planes:
        pos = {c for c in all_coords if c[0] * v[0] + c[1] * v[1] > 0}
        if len(pos) == 4 and pos <= ann:
            system = sorted(pos)
            break
    return [
        check("lemma:L-roots-annihilate-det", len(l_side) == 3,
              data={"l_side": sorted(l_side)}),
        check("lemma:positive-system-annihilates-det", system is not None,
              data={"system": system, "annihilating": sorted(ann)}),
    ]


def ao_invariants_check(b: OperatorBasis):
    """Invariant slice of the det-closure is exactly span{C^k det} per degree."""
    q = b.q
    dim = b.dim
    sub = submodule_closure(b, b.det)
    C = c_operator(b)
    checks = []

    powers = {}  # degree -> C^k det
    f = b.det
    for k in range(q + 1):
        ok = not f.is_zero()
        checks.append(check(f"ao:C^{k}(det)-nonzero", ok))
        if not ok:
            break
        deg = 4 * q - 4 * k
        checks.append(check(f"ao:C^{k}(det)-degree", f.degrees() == [deg],
                            data={"got": f.degrees(), "expected": [deg]}))
        checks.append(check(f"ao:C^{k}(det)-invariant", is_invariant(b, f)))
        checks.append(check(f"ao:C^{k}(det)-in-closure", sub.contains(f)))
        powers[deg] = f
        f = C.apply(f)

    ads = [b["ad_I"], b["ad_J"], b["ad_K"]]
    for d in sub.degrees():
        slice_basis = sub.basis(d)
        rows = {}
        for j, v in enumerate(slice_basis):
            for i, ad in enumerate(ads):
                img = ad.apply(v)
                for S, c in img.terms.items():
                    rows.setdefault((i, S), {})[j] = c
        inv_dim = len(nullspace(rows.values(), list(range(len(slice_basis)))))
        expected = 1 if d in powers else 0
        checks.append(check(f"ao:invariant-slice-deg-{d}", inv_dim == expected,
                            data={"got": inv_dim, "expected": expected,
                                  "slice_dim": len(slice_basis)}))
    data = {"degree_dims": {str(k): v for k, v in sub.degree_dims().items()},
            "total_dim": sub.total_dim}
    return checks, data


def degree_functional(b: OperatorBasis, f: Form) -> CRat:
    """det-coefficient of L_I^{(4q-d)/2}(f) for homogeneous f of degree d."""
    d = f.degree() if not f.is_zero() else 0
    codegree = b.dim - d
    if codegree % 2:
        raise InputError(f"odd codegree {codegree}: degree functional undefined")
    top = wedge(wedge_power(b.omega["I"], codegree // 2), f)
    return top.coeff(tuple(range(1, b.dim + 1)))


def theorem21_check(b: OperatorBasis, f: Form):
    """Pointwise 2^s identity / divisibility obstruction for an invariant form.

    Even case ((m-p) even, s=(m-p)/2): Omega^s ^ conj(Omega)^s ^ f must equal
    2^s * L_I^{2s}(f) exactly.  Odd case: L_I^{m-p}(f) must vanish.
    """
    if not is_invariant(b, f):
        raise InputError("form is not isotropy-invariant")
    if f.is_zero():
        raise InputError("form is zero")
    d = f.degree()
    if d % 2:
        raise InputError("invariant forms of odd degree cannot occur here")
    p = d // 2
    m = b.m
    lef = wedge(wedge_power(b.omega["I"], m - p), f)
    if (m - p) % 2 == 0:
        s = (m - p) // 2
        lhs = wedge(wedge(wedge_power(b.Omega, s), wedge_power(b.Omega.conjugate(), s)), f)
        rhs = lef.scale(CRat(2 ** s))
        ok = lhs == rhs
        data = {"s": s, "degree": d}
        if not ok:
            # report the exact observed proportionality factor when it exists
            top = tuple(range(1, b.dim + 1))
            lc, rc = lhs.coeff(top), lef.coeff(top)
            if rc and lhs == lef.scale(lc / rc):
                data["observed_factor"] = lc / rc
        return check(f"thm:2^{s}-identity-deg-{d}", ok,
                     witness=None if ok else {"lhs": _dump_terms(lhs), "rhs": _dump_terms(rhs)},
                     data=data)
    ok = lef.is_zero()
    return check(f"thm:divisibility-deg-{d}", ok,
                 witness=None if ok else {"residual": _dump_terms(lef)},
                 data={"power": m - p, "degree": d})


def _dump_terms(f: Form):
    return [{"indices": list(S), **c.to_json()}
            for S, c in sorted(f.terms.items(), key=lambda t: (len(t[0]), t[0]))]


def general_type_scan(b: OperatorBasis, classes, samples):
    """Per-class fix loci and purity pattern over sampled induced structures.

    Classes must have integer coefficients (lattice classes of the flat
    torus model).  Returns per-class records plus the sample indices that
    avoid every exclusion set (general-type witnesses).
    """
    for f in classes:
        for S, c in f.terms.items():
            if c.im or c.re.denominator != 1:
                raise InputError(f"class coefficient {c!r} at {S} is not an integer")
    records = []
    checks = []
    excluded = set()
    sample_ops = [pure_type_operator(b, s) for s in samples]
    for idx, f in enumerate(classes):
        loc = fix_locus(b, f)
        pure_at = [i for i, (s, op) in enumerate(zip(samples, sample_ops))
                   if is_pure_type(b, f, s, op)]
        invariant = loc.tag == "All"
        if not invariant:
            excluded.update(pure_at)
            checks.append(check(f"scan:class-{idx}-bound", len(pure_at) <= 2,
                                data={"hits": pure_at}))
        records.append({"class_index": idx, "fix_locus": loc.to_json(),
                        "invariant": invariant, "pure_at_samples": pure_at})
    witnesses = [i for i in range(len(samples)) if i not in excluded]
    return {"classes": records, "witnesses": witnesses,
            "samples": [[str(x) for x in s.coords()] for s in samples]}, checks


# Seeded random sampling helpers (exact coefficients, deterministic).

def random_form(rng, dim, degree, bound=9) -> Form:
    from .exterior import monomials

    while True:
        terms = {S: CRat(rng.randint(-bound, bound)) for S in monomials(dim, degree)}
        f = Form(dim, terms)
        if not f.is_zero():
            return f


def random_combination(rng, forms, bound=9) -> Form:
    if not forms:
        raise InputError("empty basis: no invariant forms in this degree")
    while True:
        acc = Form(forms[0].dim)
        for f in forms:
            acc = acc + f.scale(CRat(rng.randint(-bound, bound)))
        if not acc.is_zero():
            return acc


def random_sphere_point(rng) -> SpherePoint:
    u = Fraction(rng.randint(-8, 8), rng.randint(1, 8))
    v = Fraction(rng.randint(-8, 8), rng.randint(1, 8))
    return rational_sphere_point(u, v)
