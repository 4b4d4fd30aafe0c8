import random
from math import comb

import pytest
import sympy

from conftest import all_pass, failed
from hkforms.exterior import Form, inner, op_bracket
from hkforms.lefschetz import (B2_ROOTS, IDX, LieElt, hodge_check, su2_check,
                               weight_decompose)
from hkforms.linalg import Echelon
from hkforms.replib import random_form
from hkforms.scalars import CRat


def mono(dim, *idx):
    return Form.monomial(dim, tuple(idx))


# -- basis construction -----------------------------------------------------

def test_lefschetz_columns_q1(basis1):
    b = basis1
    assert b["L_I"].apply(Form.unit(4)) == b.omega["I"]
    assert b["L_I"].apply(b.omega["I"]) == mono(4, 1, 2, 3, 4).scale(2)
    assert b["Lam_I"].apply(b.omega["I"]) == Form.unit(4).scale(2)
    assert b["Lam_I"].apply(mono(4, 1, 2, 3, 4)) == b.omega["I"]


def test_lambda_norm_counts_blocks(basis2):
    assert basis2["Lam_I"].apply(basis2.omega["I"]) == Form.unit(8).scale(4)


def test_degree_shifts(basis1):
    for name, shift in (("L_J", [2]), ("Lam_K", [-2]), ("ad_I", [0]), ("H", [0])):
        assert basis1[name].degree_shifts() == shift


def test_adjointness_random_pairs(basis1):
    rng = random.Random(5)
    for _ in range(20):
        d = rng.randrange(0, 3)
        f = random_form(rng, 4, d)
        g = random_form(rng, 4, d + 2)
        assert inner(basis1["L_J"].apply(f), g) == inner(f, basis1["Lam_J"].apply(g))


# -- su(2) ------------------------------------------------------------------

def test_su2_q1_q2(basis1, basis2):
    assert all_pass(su2_check(basis1)), failed(su2_check(basis1))
    assert all_pass(su2_check(basis2)), failed(su2_check(basis2))


def test_ad_bracket_with_itself(basis1):
    z = op_bracket(basis1["ad_I"], basis1["ad_I"])
    assert not z.columns


def test_ad_I_eigenvalue_on_dz(basis1):
    dz = mono(4, 1) + mono(4, 2).scale(CRat(0, 1))
    assert basis1["ad_I"].apply(dz) == dz.scale(CRat(0, -1))


# -- Hodge operator ---------------------------------------------------------

def test_hodge_q1_q2(basis1, basis2):
    for b in (basis1, basis2):
        assert all_pass(hodge_check(b)), failed(hodge_check(b))


def test_hodge_scalar_values(basis1):
    H = basis1["H"]
    m = basis1.m
    assert H.apply(Form.unit(4)) == Form.unit(4).scale(m)
    assert H.apply(basis1.det) == basis1.det.scale(-m)
    assert H.apply(basis1.omega["I"]).is_zero()


# -- so(5) structure --------------------------------------------------------

def test_wedge_operators_commute(basis1, table1):
    assert not op_bracket(basis1["L_I"], basis1["L_J"]).columns
    assert not any(table1.c(IDX["L_I"], IDX["L_J"]))


def test_bracket_table_q1_q2(table1, table2):
    for tbl in (table1, table2):
        assert tbl.independent
        assert tbl.closed
        assert tbl.jacobi_ok
        assert tbl.killing_det
        assert tbl.epsilon in (1, -1)
        assert all_pass(tbl.checks), failed(tbl.checks)


def test_epsilon_matches_direct_bracket(basis1, table1):
    lhs = op_bracket(basis1["Lam_J"], basis1["L_K"])
    assert lhs == basis1["ad_I"].scale(table1.epsilon)


def test_tables_agree_across_q(table1, table2):
    assert table1.constants == table2.constants
    assert table1.epsilon == table2.epsilon


def test_killing_det_matches_sympy(table1):
    n = len(table1.names)

    def to_sym(c):
        return sympy.Rational(c.re) + sympy.I * sympy.Rational(c.im)

    ads = [sympy.Matrix([[to_sym(x) for x in row] for row in table1.ad_matrix(i)])
           for i in range(n)]
    K = sympy.Matrix(n, n, lambda i, j: (ads[i] * ads[j]).trace())
    det = sympy.simplify(K.det())
    ours = table1.killing_det
    assert det == sympy.Rational(ours.re) + sympy.I * sympy.Rational(ours.im)
    assert det != 0


def test_antisymmetry_accessor(table1):
    for i in range(3):
        for j in range(3, 6):
            assert table1.c(i, j) == tuple(-x for x in table1.c(j, i))


# -- root system ------------------------------------------------------------

def test_root_system_q1(roots1):
    assert roots1.cartan_dim == 2
    assert roots1.label == "B2"
    assert {r["coords"] for r in roots1.roots} == B2_ROOTS
    assert all_pass(roots1.checks), failed(roots1.checks)


def test_root_system_q2(roots2):
    assert roots2.label == "B2"
    assert all_pass(roots2.checks), failed(roots2.checks)


def test_L_I_is_a_root_vector(roots1):
    hit = [r for r in roots1.roots
           if r["coords"] == (-2, 0) and list(r["vector"]) == ["L_I"]]
    assert hit


def test_root_vectors_are_eigenvectors(basis1, table1, roots1):
    H, adI = basis1["H"], basis1["ad_I"]
    for r in roots1.roots:
        op = LieElt.from_dict(r["vector"]).operator(basis1)
        h, a = r["coords"]
        assert op_bracket(H, op) == op.scale(CRat(h))
        assert op_bracket(adI, op) == op.scale(CRat(0, a))


def test_length_classes(roots1):
    lengths = sorted(r["length2"] for r in roots1.roots)
    assert lengths == [4, 4, 4, 4, 8, 8, 8, 8]  # squared ratio 2, i.e. ratio sqrt 2


# -- weight decomposition ---------------------------------------------------

def test_weight_decompose_q1(basis1):
    entries, checks = weight_decompose(basis1)
    assert all_pass(checks), failed(checks)
    table = {(e["p"], e["p_prime"]): e["dim"] for e in entries}
    assert table[(1, 1)] == 4
    assert table[(2, 0)] == 1
    assert table[(0, 0)] == 1
    assert sum(table.values()) == 2 ** 4


def test_weight_decompose_q2(basis2):
    entries, checks = weight_decompose(basis2)
    assert all_pass(checks), failed(checks)
    m = basis2.m
    for e in entries:
        assert e["dim"] == comb(m, e["p"]) * comb(m, e["p_prime"])
    assert sum(e["dim"] for e in entries) == 2 ** 8


def test_2_0_space_is_spanned_by_omega(basis1):
    from hkforms.exterior import SparseOp, monomials
    from hkforms.linalg import operator_kernel

    shifted = basis1["ad_I"] - SparseOp(4, {
        S: Form.monomial(4, S, CRat(0, -2)) for S in monomials(4, 2)})
    space = operator_kernel(shifted, 4, 2)
    assert len(space) == 1
    ech = Echelon()
    ech.insert(dict(space[0].terms))
    assert ech.contains(dict(basis1.Omega.terms))


# -- LieElt -----------------------------------------------------------------

def test_lie_elt_roundtrip(basis1):
    e = LieElt.from_dict({"H": CRat(2), "L_I": CRat(-1)})
    assert e.coeffs[IDX["H"]] == CRat(2)
    op = e.operator(basis1)
    assert op == basis1["H"].scale(2) - basis1["L_I"]


def test_lie_elt_length_checked():
    from hkforms.errors import InvariantViolation

    with pytest.raises(InvariantViolation):
        LieElt((CRat(1),))
