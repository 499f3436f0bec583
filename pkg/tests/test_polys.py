from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dexter.errors import DivisionNotExact
from dexter.polys import IntPoly, mul_trunc, series_inverse

ST = ("s", "t")
coeffs = st.lists(st.integers(-20, 20), min_size=1, max_size=6)


def poly(cs, var="x"):
    return IntPoly.from_coeffs(cs, var)


@given(coeffs, coeffs, coeffs)
def test_ring_axioms(a, b, c):
    p, q, r = poly(a), poly(b), poly(c)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == 0


@given(coeffs, st.integers(-3, 3))
def test_divide_linear_inverts_multiplication(cs, root):
    p = poly(cs)
    x = IntPoly.var("x")
    assert ((x - root) * p).divide_linear("x", root) == p


def test_divide_linear_rejects_remainder():
    x = IntPoly.var("x")
    with pytest.raises(DivisionNotExact):
        (x * x + 1).divide_linear("x", 1)


def test_two_variables_and_substitution():
    s, t = IntPoly.var("s", ST), IntPoly.var("t", ST)
    f = 1 + s * t + (2 * s * s + s) * t * t
    assert f.subs("s", 1) == 1 + t + 3 * t * t
    assert f.coeff("t", 2) == (2 * s * s + s).coeff("t", 0)
    assert f.truncate("t", 1) == 1 + s * t
    assert f.divide_monomial({"s": 0, "t": 0}) == f


def test_evaluate_returns_exact_values():
    p = IntPoly({(2,): 1, (0,): -1})
    assert p(3) == 8
    assert p(Fraction(1, 2)) == Fraction(-3, 4)
    assert isinstance(p(-1), int)


@given(st.lists(st.integers(-20, 20), max_size=5), st.integers(1, 8))
def test_series_inverse(cs, n):
    p = poly([1] + cs)
    inv = series_inverse(p, "x", n)
    assert mul_trunc(p, inv, "x", n) == 1


def test_string_form_is_stable():
    s, t = IntPoly.var("s", ST), IntPoly.var("t", ST)
    assert str(2 * s * s * t * t + s * t) == str(s * t + 2 * s * s * t * t)


def test_series_inverse_needs_unit_constant():
    with pytest.raises(DivisionNotExact):
        series_inverse(poly([2, 1]), "x", 3)
