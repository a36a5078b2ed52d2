"""Shared hypothesis strategies and worked-example fixtures."""

from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from matdiv.matrix import Mat2
from matdiv.ring import ZZ, Poly, poly_ring

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

F5 = poly_ring(5)


def ints(bound: int = 20):
    return st.integers(min_value=-bound, max_value=bound)


def polys(p: int = 5, max_degree: int = 3):
    return st.lists(st.integers(0, p - 1), max_size=max_degree + 1).map(lambda cs: Poly(p, cs))


@st.composite
def nonsingular(draw, elements, ring):
    rows = draw(st.tuples(st.tuples(elements, elements), st.tuples(elements, elements)))
    M = Mat2(ring, rows)
    if not M.det():
        # nudge the diagonal; the result is nonsingular for all but a thin set
        M = Mat2(ring, ((rows[0][0] + 1, rows[0][1]), (rows[1][0], rows[1][1] + 1)))
    if not M.det():
        M = Mat2.identity(ring)
    return M


def int_mats(bound: int = 20):
    return nonsingular(ints(bound), ZZ)


def poly_mats(max_degree: int = 3):
    return nonsingular(polys(5, max_degree), F5)


@pytest.fixture
def example2():
    A = Mat2.diag(ZZ, 2, 210)
    B = Mat2.of(ZZ, [[450, 0], [-1350, 67500]])
    S = Mat2.of(ZZ, [[2, 0], [-30, 2700]])
    S1 = Mat2.of(ZZ, [[2, 0], [30, 2700]])
    return A, B, S, S1


@pytest.fixture
def example1():
    # a=2, b=3, c=5, f=7, m=11, n=13
    A = Mat2.diag(ZZ, 6, 6930)
    B = Mat2.of(ZZ, [[45, 0], [-315, 122850]])
    return A, B


@pytest.fixture
def example3():
    # a=2, d=3, c=5
    A = Mat2.diag(ZZ, 2, 60)
    B = Mat2.of(ZZ, [[1, 0], [3, 675]])
    return A, B
