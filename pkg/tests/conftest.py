from __future__ import annotations

import pytest
from hypothesis import strategies as st

from bounded_paths.model import StepModel
from bounded_paths.ring import MPoly

FAMILY = [
    "1:t,-1:t",
    "0:w0,1:t,-1:t",
    "0:0,1:t1,-1:t1,2:t2,-2:t2",
    "1:x,-2:y",
    "2:p,1:q,-1:q,-2:p",
    "3:r,-1:s",
]
SYMMETRIC = [s for s in FAMILY if StepModel.from_text(s).is_symmetric()]
DYCK = "1:t,-1:t"

# filled by test_acceptance.report, printed after the run
ACCEPTANCE_LINES: list[str] = []
BASKETBALL = "0:0,1:t1,-1:t1,2:t2,-2:t2"


@pytest.fixture(params=FAMILY)
def family_model(request) -> StepModel:
    return StepModel.from_text(request.param)


@pytest.fixture(params=SYMMETRIC)
def symmetric_model(request) -> StepModel:
    return StepModel.from_text(request.param)


VARS = ("x", "y", "z", "w1")


@st.composite
def mpolys(draw, max_terms: int = 5, max_exp: int = 3, coeff: int = 9, names=VARS) -> MPoly:
    n = draw(st.integers(0, max_terms))
    data = {}
    for _ in range(n):
        mono = tuple(
            (v, e) for v in names if (e := draw(st.integers(0, max_exp)))
        )
        c = draw(st.integers(-coeff, coeff))
        data[mono] = data.get(mono, 0) + c
    return MPoly.from_dict(data)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
