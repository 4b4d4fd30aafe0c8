import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from hkforms.errors import TheoryViolation
from hkforms.linalg import (Echelon, SpanSolver, determinant, nullspace,
                            primitive_direction, rref)
from hkforms.scalars import CRat, ONE


def vec(**kw):
    return {k: CRat(v) for k, v in kw.items()}


# -- Echelon ----------------------------------------------------------------

def test_echelon_insert_and_contains():
    ech = Echelon()
    assert ech.insert(vec(a=1, b=2))
    assert ech.insert(vec(b=1))
    assert not ech.insert(vec(a=3, b=7))  # dependent on the first two
    assert ech.dim == 2
    assert ech.contains(vec(a=5, b=-1))
    assert not ech.contains(vec(c=1))


def test_echelon_rref_invariant():
    rng = random.Random(7)
    ech = Echelon()
    keys = list("abcdef")
    for _ in range(12):
        ech.insert({k: CRat(rng.randint(-4, 4)) for k in keys})
    pivots = set(ech.rows)
    for pv, row in ech.rows.items():
        assert row[pv] == ONE
        # fully reduced: no row touches another row's pivot
        assert not (set(row) - {pv}) & pivots


def test_rref_is_echelon_rows():
    rows = [vec(x=2, y=4), vec(y=1, z=1), vec(x=1, y=2, z=5)]
    pivots = rref(rows)
    assert set(pivots) == {"x", "y", "z"}


# -- nullspace --------------------------------------------------------------

def test_nullspace_simple():
    # x + y = 0 over variables (x, y, z): kernel is span{(1,-1,0), (0,0,1)}
    basis = nullspace([vec(x=1, y=1)], ["x", "y", "z"])
    assert len(basis) == 2
    for b in basis:
        assert b.get("x", CRat(0)) + b.get("y", CRat(0)) == 0


def test_nullspace_full_and_empty():
    assert len(nullspace([], ["x", "y"])) == 2
    assert nullspace([vec(x=1), vec(y=1)], ["x", "y"]) == []


@given(st.lists(st.lists(st.integers(-4, 4), min_size=4, max_size=4),
                min_size=1, max_size=5))
def test_nullspace_dim_matches_sympy(rows_int):
    variables = list(range(4))
    rows = [{j: CRat(r[j]) for j in range(4) if r[j]} for r in rows_int]
    rows = [r for r in rows if r]
    ours = nullspace(rows, variables)
    M = sympy.Matrix(rows_int)
    assert len(ours) == len(M.nullspace())
    for b in ours:  # every vector really solves the system
        for r in rows:
            acc = CRat(0)
            for j, c in r.items():
                acc = acc + c * b.get(j, CRat(0))
            assert not acc


# -- SpanSolver -------------------------------------------------------------

def test_span_solver_express():
    s = SpanSolver()
    assert s.add(vec(a=1, b=1))
    assert s.add(vec(b=1, c=1))
    assert not s.add(vec(a=1, c=-1))  # dependent: gen0 - gen1
    combo = s.express(vec(a=2, b=3, c=1))
    assert combo == {0: CRat(2), 1: CRat(1)}
    assert s.express(vec(d=1)) is None


def test_span_solver_combo_reconstructs():
    rng = random.Random(3)
    gens = [{k: CRat(rng.randint(-3, 3)) for k in "pqrs"} for _ in range(6)]
    s = SpanSolver()
    for g in gens:
        s.add(g)
    target = {}
    for g in gens[:3]:
        for k, c in g.items():
            target[k] = target.get(k, CRat(0)) + c
    combo = s.express(target)
    assert combo is not None
    rebuilt = {}
    for i, c in combo.items():
        for k, v in gens[i].items():
            rebuilt[k] = rebuilt.get(k, CRat(0)) + c * v
    assert {k: v for k, v in rebuilt.items() if v} == \
        {k: v for k, v in target.items() if v}


# -- determinant ------------------------------------------------------------

def test_determinant_small():
    m = [[CRat(1), CRat(2)], [CRat(3), CRat(4)]]
    assert determinant(m) == CRat(-2)
    assert determinant([[CRat(0), CRat(1)], [CRat(0), CRat(2)]]) == CRat(0)


@given(st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4),
                min_size=4, max_size=4))
def test_determinant_matches_sympy(entries):
    ours = determinant([[CRat(x) for x in row] for row in entries])
    theirs = sympy.Matrix(entries).det()
    assert ours.im == 0 and ours.re == Fraction(theirs.p, theirs.q)


def test_determinant_complex():
    i = CRat(0, 1)
    assert determinant([[i, CRat(0)], [CRat(0), i]]) == CRat(-1)


# -- primitive_direction ----------------------------------------------------

def test_primitive_direction():
    assert primitive_direction([Fraction(1, 2), Fraction(0), Fraction(1, 4)]) == (2, 0, 1)
    assert primitive_direction([Fraction(-2), Fraction(4), Fraction(0)]) == (1, -2, 0)
    with pytest.raises(TheoryViolation):
        primitive_direction([Fraction(0), Fraction(0)])
