from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from companionforms import GF, Q, FieldSpec, Matrix
from companionforms.companion import CoeffVector

FIELDS = [Q, GF(2), GF(3), GF(5), GF(7)]


def field_ids(f: FieldSpec) -> str:
    return f.tag


fields = st.sampled_from(FIELDS)

small_fractions = st.builds(
    Fraction,
    st.integers(min_value=-9, max_value=9),
    st.integers(min_value=1, max_value=9),
)


def elements(field: FieldSpec):
    if field.is_finite:
        return st.integers(min_value=0, max_value=field.modulus - 1).map(field)
    return small_fractions.map(field)


def matrices(field: FieldSpec, rows: int, cols: int | None = None):
    cols = rows if cols is None else cols
    return st.lists(
        st.lists(elements(field), min_size=cols, max_size=cols), min_size=rows, max_size=rows
    ).map(lambda data: Matrix(field, data))


def coeffs(field: FieldSpec, n: int):
    return st.lists(elements(field), min_size=n, max_size=n).map(lambda xs: CoeffVector(field, xs))


@st.composite
def field_and_square(draw, max_n: int = 4, min_n: int = 1):
    f = draw(fields)
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return f, draw(matrices(f, n))


@pytest.fixture(params=FIELDS, ids=field_ids)
def field(request) -> FieldSpec:
    return request.param


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
