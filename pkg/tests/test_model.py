from __future__ import annotations

import pytest

from bounded_paths.errors import InvalidModel, NotSymmetric, ParseError
from bounded_paths.linalg import PolyMatrix, det
from bounded_paths.model import StepModel, beta, default_weight_name, one_minus_A, parse_steps, sym_band
from bounded_paths.ring import ONE, ZERO, parse

from conftest import BASKETBALL, DYCK, FAMILY


def test_a_and_b():
    m = StepModel.from_text("3:r,-1:s")
    assert (m.a, m.b) == (3, 1)
    assert m.steps == (-1, 3)


def test_beta_values():
    dyck = StepModel.from_text(DYCK)
    assert beta(dyck, 0) == ONE
    assert beta(dyck, 1) == parse("-t")
    assert beta(dyck, 5) == ZERO
    assert beta(StepModel.from_text(BASKETBALL), 0) == ONE
    assert beta(StepModel.from_text("0:w0,1:t,-1:t"), 0) == parse("1 - w0")


def test_default_weights():
    m = StepModel.from_text("2,-1")
    assert m.weights[2] == parse("w_2")
    assert m.weights[-1] == parse("w_m1")
    assert default_weight_name(-3) == "w_m3"


@pytest.mark.parametrize(
    "text",
    ["", "1:t,,-1:t", "1:t,1:s", "x:t", "1:(t)", "1 t"],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        StepModel.from_text(text)


@pytest.mark.parametrize(
    "text",
    ["1:z,-1:t", "1:u,-1:t", "1:1+t,-1:t", "1:1,-1:t"],
)
def test_invalid_weights(text):
    with pytest.raises(InvalidModel):
        StepModel.from_text(text)


def test_weights_for_unknown_steps_rejected():
    with pytest.raises(InvalidModel):
        StepModel((1, -1), {1: parse("t"), -1: parse("t"), 2: parse("t")})


def test_transfer_requires_both_signs():
    with pytest.raises(InvalidModel):
        StepModel.from_text("0:t,1:t").require_transfer()


def test_text_roundtrip():
    for text in FAMILY:
        m = StepModel.from_text(text)
        assert StepModel.from_text(m.to_text()) == m


def test_parse_steps_spaces():
    steps, weights = parse_steps(" 1 : t , -1:t ")
    assert steps == [1, -1]
    assert weights[-1] == parse("t")


def test_one_minus_A_examples():
    dyck = StepModel.from_text(DYCK)
    t = parse("t")
    assert one_minus_A(dyck, 1) == PolyMatrix([[1, -t], [-t, 1]])
    assert det(one_minus_A(dyck, 1)) == parse("1 - t^2")
    assert one_minus_A(dyck, 0) == PolyMatrix([[1]])
    bb = one_minus_A(StepModel.from_text(BASKETBALL), 2)
    assert bb.shape == (3, 3)
    assert bb[0, 2] == parse("-t2")


@pytest.mark.parametrize("text", FAMILY)
def test_band_toeplitz_nesting(text):
    m = StepModel.from_text(text)
    big = one_minus_A(m, 5)
    assert big.submatrix(range(5), range(5)) == one_minus_A(m, 4)
    for i in range(6):
        for j in range(6):
            assert big[i, j] == beta(m, j - i)


def test_sym_band_examples():
    t = parse("t")
    blocks = sym_band(StepModel.from_text(DYCK), 3)
    assert blocks.plus == PolyMatrix([[1, -t], [-t, 1 - t]])
    assert blocks.minus == PolyMatrix([[1, -t], [-t, 1 + t]])
    assert det(blocks.plus) == parse("1 - t - t^2")
    zero = sym_band(StepModel.from_text(DYCK), 0)
    assert zero.plus == PolyMatrix([[1]])
    assert zero.minus.shape == (0, 0)
    assert det(zero.minus) == ONE


def test_sym_band_dimensions():
    m = StepModel.from_text(BASKETBALL)
    for k in range(10):
        b = sym_band(m, k)
        assert b.plus.rows + b.minus.rows == k + 1
        assert b.plus.rows == k // 2 + 1


def test_symmetric_adjacency_mirror():
    m = StepModel.from_text("2:p,1:q,-1:q,-2:p")
    k = 6
    A = one_minus_A(m, k)
    for i in range(k + 1):
        for j in range(k + 1):
            assert A[i, j] == A[k - i, k - j]


def test_sym_band_rejects_asymmetric():
    with pytest.raises(NotSymmetric):
        sym_band(StepModel.from_text("1:x,-2:y"), 3)
    with pytest.raises(NotSymmetric):
        sym_band(StepModel.from_text("1:x,-1:y"), 3)
