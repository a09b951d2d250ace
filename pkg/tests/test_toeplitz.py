import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from symres.corpus import (
    hermitian_with_zero_minor,
    invertible_toeplitz,
    random_hermitian,
    toeplitz_with_singular_leading,
)
from symres.errors import BranchMismatch, InputError, NoSplitting, Singular, ZeroEdgeCoefficient
from symres.poly import SymPoly
from symres.ring import Gaussian
from symres.ssr_oracle import ff_determinant, leading_minors, subresultant_det
from symres.toeplitz import (
    GsGenerators,
    ToeplitzSpec,
    build_t_polynomial,
    fitm_invert,
    gs_apply,
    gs_assemble,
    hermitian_inertia,
    identity,
    mat_mul,
    principal_minors,
    signature,
    signature_by_congruence,
    toeplitz_from_pair,
)

I = Gaussian(0, 1)


def herm(*col):
    return ToeplitzSpec.hermitian_from_column(col)


def real_minors(T):
    return [getattr(m, "re", m) for m in leading_minors(T.dense())]


# ------------------------------------------------------------------ the type


def test_spec_layout_and_validation():
    T = ToeplitzSpec(3, (5, 4, 1, 2, 3))
    assert T.dense() == [[1, 4, 5], [2, 1, 4], [3, 2, 1]]
    assert ToeplitzSpec.from_matrix(T.dense()) == T
    with pytest.raises(InputError):
        ToeplitzSpec(2, (1, 2))
    with pytest.raises(InputError):
        ToeplitzSpec(2, (1, 2, 3), hermitian=True)
    with pytest.raises(InputError):
        ToeplitzSpec.from_matrix([[1, 2], [3, 4]])
    assert herm(2, Gaussian(1, 1)).t(-1) == Gaussian(1, -1)


def test_congruence_inertia():
    assert hermitian_inertia([[2, 1], [1, 2]]) == (2, 0, 0)
    assert hermitian_inertia([[0, 1], [1, 0]]) == (1, 1, 0)
    assert hermitian_inertia([[0, I], [-I, 0]]) == (1, 1, 0)
    assert hermitian_inertia([[0, 0], [0, 0]]) == (0, 0, 2)
    assert hermitian_inertia([[1, 1], [1, 1]]) == (1, 0, 1)


# ------------------------------------------------------------- series link


def test_series_link_examples():
    F = SymPoly([1, 2, 3])
    assert toeplitz_from_pair(F, F.scale(3), 2) == [[0, 0], [0, 0]]
    F, G = SymPoly([1, 1]), SymPoly([1], 1)
    T = toeplitz_from_pair(F, G, 1)
    assert T == [[1]]
    assert subresultant_det(F, G, 1)[0] == -F[0] * F[1] * ff_determinant(T)
    with pytest.raises(ZeroEdgeCoefficient):
        toeplitz_from_pair(SymPoly([0, 1]), G, 1)


@st.composite
def series_pairs(draw):
    d = draw(st.integers(1, 6))
    f = draw(st.lists(st.integers(-5, 5), min_size=d + 1, max_size=d + 1))
    f[0] = f[0] or 1
    f[d] = f[d] or -1
    g = draw(st.lists(st.integers(-5, 5), min_size=d + 1, max_size=d + 1))
    return SymPoly(f), SymPoly(g, d)


@given(series_pairs())
def test_series_link(pair):
    F, G = pair
    d = F.formal_degree
    for k in range(1, d + 1):
        lhs = subresultant_det(F, G, k)[0]
        rhs = (-1) ** k * F[0] ** k * F[d] ** k * ff_determinant(toeplitz_from_pair(F, G, k))
        assert lhs == rhs


# ------------------------------------------------------------------- minors


def test_t_polynomial_example():
    tp = build_t_polynomial(herm(2, 1))
    assert tp.S0 == SymPoly([-1, -1, 1, 1])
    assert tp.S_minus1 == SymPoly([1, 0, 0, 1])
    assert (tp.split, tp.scale) == (1, 1)


def test_minor_examples():
    assert principal_minors(herm(2, 1)) == [2, 3]
    assert principal_minors(herm(1, 2)) == [1, -3]
    assert principal_minors(herm(0, 1)) == [0, -1]
    assert principal_minors(herm(7, 0, 0)) == [7, 49, 343]
    assert principal_minors(herm(3, 1)) == [3, 8]
    assert principal_minors(herm(-4)) == [-4]


def test_splitting_choices():
    assert build_t_polynomial(herm(4, 1)).split == 2
    odd = build_t_polynomial(herm(3, 1))
    assert (odd.split, odd.scale) == (3, 2)
    assert build_t_polynomial(herm(0, 1)).split == I
    with pytest.raises(NoSplitting):
        build_t_polynomial(herm(0, 1), lift=False)
    with pytest.raises(InputError):
        build_t_polynomial(ToeplitzSpec(2, (1, 2, 3)))


@given(st.integers(1, 8), st.booleans(), st.integers(0, 10**6))
def test_minor_bridge(d, gaussian, seed):
    T = random_hermitian(random.Random(seed), d, 4, gaussian)
    assert principal_minors(T) == real_minors(T)


# ---------------------------------------------------------------- signature


def test_signature_examples():
    assert signature(herm(2, 1)).signature == 2
    assert signature(herm(1, 2)).signature == 0
    res = signature(herm(0, 1))
    assert res.signature == 0 and res.minors[0] == 0 and res.method == "zero-run"


def test_signature_on_all_small_symmetric_matrices():
    for d in (1, 2, 3):
        for col in itertools.product((-1, 0, 1), repeat=d):
            T = herm(*col)
            assert signature(T).signature == signature_by_congruence(T.dense()), col


@given(st.integers(2, 8), st.booleans(), st.integers(0, 10**6))
def test_signature_with_zero_minors(d, gaussian, seed):
    T = hermitian_with_zero_minor(random.Random(seed), d, gaussian)
    res = signature(T)
    assert res.signature == signature_by_congruence(T.dense())
    assert res.verified
    unchecked = signature(T, verify=False)
    assert unchecked.signature == res.signature or unchecked.method == "congruence"


# ---------------------------------------------------------------- inversion


def test_identity_inverse():
    for d in (1, 2, 5):
        T = ToeplitzSpec(d, tuple(int(k == d - 1) for k in range(2 * d - 1)))
        gen, W = fitm_invert(T, dense=True)
        assert gen.branch == "*" and W == identity(d)
        assert gen.x == [int(i == 0) for i in range(d)]
        assert gen.y == [int(i == d - 1) for i in range(d)]


def test_doublestar_example():
    T = ToeplitzSpec(2, (1, 0, 2))
    assert T.dense() == [[0, 1], [2, 0]]
    gen, W = fitm_invert(T, dense=True)
    assert gen.branch == "**"
    assert W == [[0, Fraction(1, 2)], [1, 0]]


def test_singular_matrix():
    with pytest.raises(Singular) as info:
        fitm_invert(ToeplitzSpec(3, (1, 1, 1, 1, 1)))
    assert info.value.witness == 0
    with pytest.raises(Singular):
        fitm_invert(ToeplitzSpec(1, (0,)))


def test_gs_assemble_examples():
    d = 4
    e = lambda i: [int(k == i) for k in range(d)]  # noqa: E731
    assert gs_assemble(GsGenerators("*", d, e(0), e(d - 1), 1)) == identity(d)
    assert gs_assemble(GsGenerators("*", 1, [1], [1], 5)) == [[Fraction(1, 5)]]
    with pytest.raises(BranchMismatch):
        gs_assemble(GsGenerators("**", d, e(0), e(d - 1), 1))
    with pytest.raises(BranchMismatch):
        gs_assemble(GsGenerators("*", d, e(0), e(d - 1), 1), d + 1)


def check_inverse(T):
    gen, W = fitm_invert(T, dense=True)
    assert mat_mul(T.dense(), W) == identity(T.d)
    assert gen.det == ff_determinant(T.dense())
    b = list(range(1, T.d + 1))
    x = gs_apply(gen, b)
    assert [sum(r * v for r, v in zip(row, x)) for row in T.dense()] == b
    return gen


@given(st.integers(1, 12), st.integers(0, 10**6))
def test_inverse_of_random_matrices(d, seed):
    check_inverse(invertible_toeplitz(random.Random(seed), d))


@given(st.integers(1, 6), st.integers(0, 10**6))
def test_inverse_of_gaussian_matrices(d, seed):
    rng = random.Random(seed)
    diags = tuple(Gaussian(rng.randint(-2, 2), rng.randint(-2, 2)) for _ in range(2 * d - 1))
    T = ToeplitzSpec(d, diags)
    if ff_determinant(T.dense()):
        gen, W = fitm_invert(T, dense=True)
        P = mat_mul(T.dense(), W)
        assert all(P[i][j] == int(i == j) for i in range(d) for j in range(d))


@given(st.integers(2, 10), st.integers(0, 10**6))
def test_inverse_with_singular_leading_block(d, seed):
    T = toeplitz_with_singular_leading(random.Random(seed), d)
    gen = check_inverse(T)
    assert gen.branch == "**" and 1 <= gen.attempts <= 3


def test_extension_retry_happens():
    rng = random.Random(8)
    attempts = set()
    for _ in range(300):
        gen = check_inverse(toeplitz_with_singular_leading(rng, rng.randint(2, 5), 2))
        attempts.add(gen.attempts)
    assert 2 in attempts and max(attempts) <= 3


@given(st.integers(2, 7), st.integers(0, 10**6))
def test_extension_determinant_is_affine_with_live_coefficients(d, seed):
    """With a singular leading block, det of the extension is affine in its corners."""
    T = toeplitz_with_singular_leading(random.Random(seed), d, 3)

    def ext(g, dl):
        diags = (-g,) + T.diagonals + (dl,)
        return ff_determinant(ToeplitzSpec(d + 1, diags).dense())

    base = ext(0, 0)
    cg, cd = ext(1, 0) - base, ext(0, 1) - base
    assert cg != 0 and cd != 0
    assert ext(2, 3) == base + 2 * cg + 3 * cd
