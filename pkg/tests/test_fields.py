"""Scalar layer: exact arithmetic and canonical string forms."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qalg.errors import FieldMismatch, UnsupportedField
from qalg.fields import (
    NU,
    NU_POLYNOMIALS,
    RATIONALS,
    FieldSpec,
    FpScalar,
    NuPoly,
    prime_field,
    scalar_arith,
    scalar_from_string,
    scalar_to_string,
)

rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=10**4)


def test_field_spec_rejects_char_2_and_composites():
    with pytest.raises(ValueError):
        prime_field(2)
    with pytest.raises(ValueError):
        prime_field(9)
    assert prime_field(3).p == 3


def test_scalar_arith_spec_examples():
    assert scalar_arith(Fraction(1, 2), Fraction(1, 3), "add") == Fraction(5, 6)
    prod = scalar_arith(NuPoly.of([1, 2]), NU, "mul")  # (2nu+1) * nu
    assert prod == NuPoly.of([0, 1, 2])
    inv = scalar_arith(FpScalar(1, 5), FpScalar(2, 5), "div")  # 2^{-1} in F5
    assert inv == FpScalar(3, 5)


def test_scalar_arith_errors():
    with pytest.raises(ZeroDivisionError):
        scalar_arith(Fraction(1), Fraction(0), "div")
    with pytest.raises(UnsupportedField):
        scalar_arith(NU, NU, "div")
    with pytest.raises(FieldMismatch):
        scalar_arith(FpScalar(1, 3), FpScalar(1, 5), "add")


@given(rationals, rationals, rationals)
def test_nupoly_ring_laws(a, b, c):
    x = NuPoly.of([a, b])
    y = NuPoly.of([c, a])
    z = NuPoly.of([b, c, a])
    assert x + y == y + x
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x


@given(st.lists(rationals, max_size=5), st.lists(rationals, max_size=5))
def test_nupoly_product_degree(ca, cb):
    x, y = NuPoly.of(ca), NuPoly.of(cb)
    if x and y:
        assert (x * y).degree == x.degree + y.degree
    else:
        assert (x * y).degree is None


def test_nupoly_zero_degree_sentinel():
    assert NuPoly.of([0, 0]).degree is None
    assert NuPoly.of([5]).degree == 0
    assert NU.degree == 1


def test_nupoly_evaluation():
    p = NuPoly.of([1, -2, 3])  # 1 - 2 nu + 3 nu^2
    assert p.at(Fraction(1, 2)) == Fraction(3, 4)


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_fp_field_laws(a, b):
    p = 7
    x, y = FpScalar(a, p), FpScalar(b, p)
    assert x + y == FpScalar(a + b, p)
    assert x * y == FpScalar(a * b, p)
    if y:
        assert (x / y) * y == x


def test_fp_mixed_int_arithmetic():
    x = FpScalar(2, 7)
    assert 3 * x == FpScalar(6, 7)
    assert 1 - x == FpScalar(-1, 7)
    assert 5 / x == FpScalar(6, 7)  # 2^{-1} = 4, 5*4 = 20 = 6 mod 7
    assert bool(FpScalar(7, 7)) is False


@given(rationals)
def test_rational_string_round_trip(q):
    s = scalar_to_string(q)
    assert scalar_from_string(RATIONALS, s) == q
    if q.denominator == 1:
        assert "/" not in s


@given(st.lists(rationals, max_size=4))
def test_nupoly_string_round_trip(coeffs):
    p = NuPoly.of(coeffs)
    assert scalar_from_string(NU_POLYNOMIALS, scalar_to_string(p)) == p


def test_fp_string_round_trip():
    s = scalar_to_string(FpScalar(4, 7))
    assert s == "4 mod 7"
    assert scalar_from_string(prime_field(7), s) == FpScalar(4, 7)


def test_field_spec_str():
    assert str(RATIONALS) == "Q"
    assert str(prime_field(5)) == "F5"
    assert str(FieldSpec("Qnu")) == "Q[nu]"
