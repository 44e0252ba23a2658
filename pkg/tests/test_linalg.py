from __future__ import annotations

import itertools

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from bounded_paths.errors import IndexOutOfRange
from bounded_paths.linalg import (
    PolyMatrix,
    cofactor,
    cofactors_in_column,
    det,
    det_expand,
    solve_fraction_free,
)
from bounded_paths.ring import ONE, ZERO, MPoly, parse

from conftest import mpolys

entries = mpolys(max_terms=2, max_exp=2, coeff=3, names=("x", "y"))


@st.composite
def square(draw, max_n: int = 4):
    n = draw(st.integers(1, max_n))
    sparse = draw(st.booleans())
    cell = st.one_of(st.just(ZERO), entries) if sparse else entries
    return PolyMatrix([[draw(cell) for _ in range(n)] for _ in range(n)])


def leibniz(m: PolyMatrix) -> MPoly:
    """Sum over permutations: the definition, independent of any elimination."""
    n = m.rows
    acc = ZERO
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = ONE
        for i, j in enumerate(perm):
            term = term * m[i, j]
        acc = acc + (term if inv % 2 == 0 else -term)
    return acc


@settings(max_examples=80, deadline=None)
@given(square())
def test_bareiss_matches_leibniz_and_laplace(m):
    d = leibniz(m)
    assert det(m) == d
    assert det_expand(m) == d


def test_det_known_values():
    x = MPoly.var("x")
    assert det(PolyMatrix([])) == ONE
    assert det(PolyMatrix([[1, x], [x, 1]])) == parse("1 - x^2")
    # needs a row swap
    assert det(PolyMatrix([[0, 1], [1, 0]])) == -ONE
    # singular: one column has no pivot after the first step
    assert det(PolyMatrix([[1, x], [1, x]])) == ZERO


def test_det_matches_sympy_on_tridiagonal():
    t = sympy.Symbol("t")
    n = 7
    m = PolyMatrix.from_function(n, n, lambda i, j: 1 if i == j else (parse("-t") if abs(i - j) == 1 else 0))
    sm = sympy.Matrix(n, n, lambda i, j: 1 if i == j else (-t if abs(i - j) == 1 else 0))
    ours = sympy.sympify(str(det(m)).replace("^", "**"), locals={"t": t})
    assert sympy.expand(ours - sm.det()) == 0


@settings(max_examples=40, deadline=None)
@given(square(max_n=4), st.data())
def test_cofactor_is_signed_minor(m, data):
    p = data.draw(st.integers(0, m.rows - 1))
    q = data.draw(st.integers(0, m.cols - 1))
    minor = leibniz(m.delete(p, q))
    assert cofactor(m, p, q) == (minor if (p + q) % 2 == 0 else -minor)


@settings(max_examples=40, deadline=None)
@given(square(max_n=4), st.data())
def test_cofactors_in_column_match_single_cofactors(m, data):
    q = data.draw(st.integers(0, m.cols - 1))
    assert cofactors_in_column(m, q) == [cofactor(m, p, q) for p in range(m.rows)]


def test_laplace_expansion_along_column():
    m = PolyMatrix.from_function(4, 4, lambda i, j: parse(f"x^{(i * j) % 3} - {i + j}"))
    for q in range(4):
        col = cofactors_in_column(m, q)
        acc = ZERO
        for p in range(4):
            acc = acc + m[p, q] * col[p]
        assert acc == det(m)


@settings(max_examples=40, deadline=None)
@given(square(max_n=4), st.data())
def test_solve_fraction_free(m, data):
    b = [data.draw(entries) for _ in range(m.rows)]
    out = solve_fraction_free(m, b)
    if out is None:
        assert det(m) == ZERO
        return
    d, xs = out
    assert d == det(m)
    assert m @ xs == [d * bi for bi in b]


def test_delete_and_index_errors():
    m = PolyMatrix.identity(3)
    assert m.delete(0, 0) == PolyMatrix.identity(2)
    with pytest.raises(IndexOutOfRange):
        m.delete(3, 0)
    with pytest.raises(IndexOutOfRange):
        cofactor(m, 0, 5)
    with pytest.raises(ValueError):
        det(PolyMatrix([[1, 2]]))


def test_labels_and_transpose():
    m = PolyMatrix([[1, 2], [3, 4]], row_labels=["a", "b"], col_labels=["c", "d"])
    assert m.row_position("b") == 1
    t = m.transpose()
    assert t[0, 1] == MPoly.const(3)
    assert t.row_labels == ("c", "d")


def test_cofactor_examples():
    from bounded_paths.model import StepModel, one_minus_A

    dyck = StepModel.from_text("1:t,-1:t")
    assert cofactor(one_minus_A(dyck, 1), 1, 0) == parse("t")
    assert cofactor(one_minus_A(dyck, 2), 0, 0) == parse("1 - t^2")
    assert cofactor(PolyMatrix([[parse("x")]]), 0, 0) == ONE
    assert det(one_minus_A(dyck, 3)) == parse("1 - 3*t^2 + t^4")


def test_bareiss_on_family_band_and_transfer_matrices():
    from bounded_paths.model import StepModel, one_minus_A
    from bounded_paths.transfer import build_T, one_minus_zT

    from conftest import FAMILY

    for text in FAMILY:
        m = StepModel.from_text(text)
        for k in range(5):
            A = one_minus_A(m, k)
            d = det(A)
            assert d == det_expand(A)
            assert d.substitute({v: 0 for v in m.weight_variables()}) == ONE
        M = one_minus_zT(build_T(m))
        if M.rows <= 5:
            assert det(M) == det_expand(M)
