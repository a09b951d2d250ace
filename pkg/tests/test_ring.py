from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from symres.errors import DivisionByZero, NotDivisible, NotReal
from symres.ring import (
    Gaussian,
    bit_size,
    coerce,
    conj,
    exact_div,
    field_div,
    is_real,
    join_rings,
    prime_field,
    ring_of,
    sign,
)

from conftest import gaussians, rationals, small_ints

values = st.one_of(small_ints, gaussians, rationals)


def test_conj_examples():
    assert conj(5) == 5
    assert conj(Gaussian(3, 4)) == Gaussian(3, -4)
    assert conj(conj(Gaussian(1, -2))) == Gaussian(1, -2)


def test_exact_div_examples():
    assert exact_div(6, 3) == 2
    with pytest.raises(NotDivisible):
        exact_div(5, 2)
    assert exact_div(2, Gaussian(1, 1)) == Gaussian(1, -1)
    with pytest.raises(DivisionByZero):
        exact_div(1, 0)
    with pytest.raises(NotDivisible):
        exact_div(Gaussian(1, 0), Gaussian(1, 1))


def test_sign_examples():
    assert sign(-7) == -1
    assert sign(0) == 0
    assert sign(Fraction(3, 2)) == 1
    assert sign(Gaussian(-2, 0)) == -1
    with pytest.raises(NotReal):
        sign(Gaussian(0, 1))


def test_ring_tags_and_coercion():
    assert ring_of(3) == "int"
    assert ring_of(Fraction(1, 2)) == "rat"
    assert ring_of(Gaussian(1, 1)) == "gauss"
    assert ring_of(Gaussian(Fraction(1, 2), 0)) == "gaussrat"
    assert join_rings("rat", "gauss") == "gaussrat"
    assert coerce(2, "gaussrat") == Gaussian(Fraction(2), Fraction(0))
    with pytest.raises(TypeError):
        coerce(Gaussian(0, 1), "rat")


def test_prime_field_arithmetic():
    F = prime_field(7)
    assert F(3) * F(5) == 1
    assert field_div(F(1), F(3)) == F(5)
    assert exact_div(F(2), F(4)) == F(4)
    assert prime_field(7) is F


def test_bit_size():
    assert bit_size(-8) == 4
    assert bit_size(Gaussian(1, -300)) == 9


@given(values, values)
def test_exact_div_inverts_multiplication(x, y):
    if y:
        assert exact_div(x * y, y) == x


@given(values, values)
def test_conj_is_a_ring_automorphism(x, y):
    assert conj(x * y) == conj(x) * conj(y)
    assert conj(x + y) == conj(x) + conj(y)
    assert conj(conj(x)) == x
    assert is_real(x) == (conj(x) == x)


@given(st.one_of(small_ints, rationals), st.one_of(small_ints, rationals))
def test_sign_is_multiplicative(x, y):
    assert sign(x * y) == sign(x) * sign(y)
