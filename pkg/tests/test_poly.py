from math import inf

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from symres.errors import BothZero, DegreeOrder, ZeroDivisor
from symres.multiply import schoolbook
from symres.poly import (
    SymPoly,
    mul,
    normalize_pair,
    profile,
    reciprocal,
    sym_divide,
    sym_truncate,
)
from symres.ring import Gaussian

from conftest import coeffs, polys, small_ints


def P(*cs, fd=None):
    return SymPoly(cs, fd)


def test_profile_examples():
    assert profile(P(0, 1, 0)) == (1, 1, 1, 1)
    assert profile(SymPoly.zero(2)) == (-inf, inf, None, None)
    assert profile(P(3, 0, 4)) == (2, 0, 4, 3)


def test_formal_degree_is_kept():
    p = P(1, 2, 0, 0)
    assert p.formal_degree == 3 and p.degree == 1
    assert p == P(1, 2, 0, 0)
    assert p.same_polynomial(P(1, 2))
    with pytest.raises(ValueError):
        SymPoly([1, 2, 3], 1)


def test_normalize_pair_examples():
    A, B, m = normalize_pair(P(0, 0, 1, 1), P(0, 1))
    assert (A.coeffs, B.coeffs, m) == ((0, 1, 1), (1, 0, 0), 1)
    A, B, m = normalize_pair(P(1, 1), P(0, 1))
    assert (A, B, m) == (P(1, 1), P(0, 1), 0)
    A, B, m = normalize_pair(P(0, 1, 1), P(0, 2))
    assert (A, B, m) == (P(1, 1), P(2, 0), 1)
    with pytest.raises(BothZero):
        normalize_pair(SymPoly.zero(2), SymPoly.zero(1))


def test_sym_truncate_examples():
    assert sym_truncate(P(1, 2, 3, 4, 5), 2).coeffs == (1, 2, 4, 5)
    assert sym_truncate(P(1, 2, 3, 4, 5), 0).is_zero()
    assert sym_truncate(P(1, 2, 3), 5) == P(1, 2, 3)
    # the top half is read at the formal degree, leading zeros included
    assert sym_truncate(P(1, 2, 3, 0, 0), 2).coeffs == (1, 2, 0, 0)


def test_reciprocal_examples():
    assert reciprocal(P(1, 2, 3)) == P(3, 2, 1)
    assert reciprocal(P(Gaussian(0, 1), 1)) == P(1, Gaussian(0, -1))
    assert reciprocal(reciprocal(P(2, 1))) == P(2, 1)


def test_sym_divide_examples():
    Q, R, prof = sym_divide(P(1, 1, 1, 1), P(0, 1, 1))
    assert Q.same_polynomial(P(1, 0, 1)) and R.is_zero() and tuple(prof) == (1, 1)
    A = P(3, 1, 4, 1)
    Q, R, prof = sym_divide(A, A)
    assert Q.same_polynomial(P(1)) and R.is_zero() and tuple(prof) == (0, 0)
    Q, R, prof = sym_divide(P(1, 0, 1), P(1))
    assert Q.same_polynomial(P(1, 0, 1)) and R.is_zero() and tuple(prof) == (0, 2)
    with pytest.raises(ZeroDivisor):
        sym_divide(P(1, 1), SymPoly.zero(1))
    with pytest.raises(DegreeOrder):
        sym_divide(P(1, 1), P(1, 1, 1))


def test_mul_examples():
    assert mul(P(1, 1), P(1, -1)).same_polynomial(P(1, 0, -1))
    assert mul(P(1, 2), SymPoly.zero(3)).is_zero()
    assert mul(P(1, 1, 1), P(1, 1, 1)) == P(1, 2, 3, 2, 1)
    assert mul(P(1, 0), P(1, 0)).formal_degree == 2


@st.composite
def division_inputs(draw):
    d = draw(st.integers(0, 8))
    a = draw(st.lists(coeffs, min_size=d + 1, max_size=d + 1))
    a[d] = a[d] or 1
    db = draw(st.integers(0, d))
    alpha = draw(st.integers(0, db))
    b = [0] * alpha + draw(st.lists(coeffs, min_size=db - alpha + 1, max_size=db - alpha + 1))
    b[alpha] = b[alpha] or 1
    b[db] = b[db] or 2
    return SymPoly(a), SymPoly(b)


@given(division_inputs())
def test_sym_divide_identity_and_degrees(pair):
    A, B = pair
    Q, R, (alpha, beta) = sym_divide(A, B)
    d = A.degree
    assert alpha == B.valuation and beta == d - B.degree
    assert Q.degree <= alpha + beta
    assert R.is_zero() or R.degree < d - (alpha + beta)
    rebuilt = mul(Q, B.unshift(alpha)) + mul(R, SymPoly.monomial(1, beta))
    assert rebuilt.same_polynomial(A)


@given(polys(max_degree=12), st.integers(0, 8))
def test_sym_truncate_idempotent(p, ell):
    t = sym_truncate(p, ell)
    assert sym_truncate(t, ell) == t


@given(polys(elements=coeffs))
def test_reciprocal_involution(p):
    assume(p[0])
    assert reciprocal(reciprocal(p)) == p


@given(polys(max_degree=40, elements=st.integers(-10**30, 10**30)),
       polys(max_degree=40, elements=st.integers(-10**30, 10**30)))
def test_mul_matches_schoolbook(p, q):
    assert list(mul(p, q).coeffs) == schoolbook(list(p.coeffs), list(q.coeffs))
    for backend in ("schoolbook", "ntt", "kronecker"):
        if backend == "ntt" and max(map(abs, p.coeffs + q.coeffs)) >= 1 << 62:
            continue
        assert mul(p, q, backend) == mul(p, q)


@given(polys(elements=small_ints))
def test_shift_unshift_roundtrip(p):
    assert p.shift(3).unshift(3) == p
