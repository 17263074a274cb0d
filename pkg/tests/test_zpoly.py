"""Exact polynomial arithmetic in z."""

import pytest
from hypothesis import given, strategies as st

from partalg.zpoly import ZPoly, parse_zpoly

poly_st = st.builds(ZPoly, st.lists(st.integers(min_value=-9, max_value=9),
                                    max_size=5))


def test_basics():
    z = ZPoly.z()
    assert str(z * z * 3 - 1) == "3z^2-1"
    assert str(z) == "z"
    assert str(ZPoly.const(1)) == "1"
    assert str(-z) == "-z"
    assert str(ZPoly()) == "0"
    assert ZPoly((1, 0, 0)) == ZPoly((1,))
    assert z.shifted(2) == ZPoly((0, 0, 0, 1))
    assert (z + 1)(4) == 5
    assert (z * z - 2)(3) == 7


def test_parse():
    assert parse_zpoly("3z^2-1") == ZPoly((-1, 0, 3))
    assert parse_zpoly("z") == ZPoly.z()
    assert parse_zpoly("-2z") == ZPoly((0, -2))
    assert parse_zpoly("7") == ZPoly.const(7)
    assert parse_zpoly("z^3+z") == ZPoly((0, 1, 0, 1))
    with pytest.raises(ValueError):
        parse_zpoly("")
    with pytest.raises(ValueError):
        parse_zpoly("z**2")


@given(poly_st)
def test_format_parse_round_trip(p):
    if p.is_zero():
        return
    assert parse_zpoly(str(p)) == p


@given(poly_st, poly_st, poly_st)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(poly_st, st.integers(min_value=-5, max_value=5))
def test_evaluation_is_a_homomorphism(p, n):
    q = p * p + p - 3
    assert q(n) == p(n) * p(n) + p(n) - 3
