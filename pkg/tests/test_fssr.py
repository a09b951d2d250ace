import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from symres.corpus import adversarial_corpus, random_pair, structured_pair
from symres.errors import IrregularSeed
from symres.fssr import (
    constant_terms,
    fast_sequence,
    fssr,
    reach,
    replay_sequence,
    subresultant_constant_terms,
)
from symres.poly import SymPoly, squo, sym_truncate
from symres.ssr_oracle import subresultant_det, subresultant_sequence_det
from symres.ssr_seq import TransitionMatrix, compose_transitions, seed_pair, ssr_sequence

from conftest import pairs


def assert_same_chain(A, B, base=2):
    fast = fast_sequence(A, B, base)
    slow = ssr_sequence(A, B, full=False)
    assert [(q.alpha, q.beta) for q in fast.quotients] == [(q.alpha, q.beta) for q in slow.quotients]
    assert [q.Q for q in fast.quotients] == [q.Q for q in slow.quotients]
    if slow.steps:
        M = TransitionMatrix.identity()
        for step in slow.steps:
            M = compose_transitions(step, M)
        assert fast.matrix == M
    return fast


def test_zero_successor_gives_empty_result():
    res = fssr(SymPoly([1, 2, 1]), SymPoly.zero(2), 2)
    assert res.quotients == [] and res.matrix.is_identity


def test_irregular_seed_rejected():
    with pytest.raises(IrregularSeed):
        fssr(SymPoly([0, 2, 1]), SymPoly([1, 1, 0]), 2)


def test_worked_pair():
    A, B = SymPoly([1, 1, 1]), SymPoly([1, 2, 1])
    fast = assert_same_chain(A, B)
    terms = fast.constant_terms()
    assert terms[0] == (0, 1, 1)
    assert [(k, c) for k, c, _ in terms] == [(0, 1), (2, 1)]


def test_degree_one_constant_term():
    fast = fast_sequence(SymPoly([1, 2]), SymPoly([3, 1]))
    assert fast.constant_terms()[-1][:2] == (1, -5)


def test_proportional_inputs_stop_immediately():
    A = SymPoly([1, 3, 2, 5])
    fast = fast_sequence(A, A.scale(2))
    assert fast.quotients == [] and len(fast.constant_terms()) == 1


@given(pairs(max_degree=10))
def test_fast_chain_equals_quadratic_chain(pair):
    assert_same_chain(*pair)


@pytest.mark.parametrize("d", [16, 33, 64])
def test_fast_chain_at_larger_degrees(d):
    rng = random.Random(d)
    for _ in range(3):
        assert_same_chain(*random_pair(rng, d, 9))
        assert_same_chain(*structured_pair(rng, d))
        assert_same_chain(*random_pair(rng, d, 3, True))


@pytest.mark.parametrize("base", [1, 2, 3, 5])
def test_base_case_width_does_not_matter(base):
    rng = random.Random(base)
    for A, B, _ in adversarial_corpus(rng, 4, 12):
        assert_same_chain(A, B, base)


def test_replay_matches_oracle_on_defect_cases():
    rng = random.Random(21)
    for A, B, _ in adversarial_corpus(rng, 6, 9):
        ref = subresultant_sequence_det(A, B)
        got = replay_sequence(fast_sequence(A, B))
        for j in range(1, A.formal_degree + 1):
            assert got[j + 1].same_polynomial(ref[j + 1]), j


def test_both_final_step_paths_are_exercised():
    rng = random.Random(2)
    seen = set()
    for _ in range(200):
        A, B = structured_pair(rng, rng.randint(3, 8))
        fast = assert_same_chain(A, B)
        seen.add(fast.last_step)
    assert seen == {True, False}


@given(pairs(max_degree=9))
def test_constant_terms_match_oracle(pair):
    A, B = pair
    d = A.formal_degree
    fast = fast_sequence(A, B)
    for k, c, lc in fast.constant_terms()[1:]:
        S = subresultant_det(A, B, k)
        assert (c, lc) == (S[0], S[d - k])
    values = subresultant_constant_terms(A, B, d)
    assert values == [subresultant_det(A, B, j)[0] for j in range(1, d + 1)]


@given(pairs(max_degree=9), st.integers(1, 9))
def test_partial_bound_and_reach(pair, r):
    A, B = pair
    d = A.formal_degree
    r = min(r, d)
    S0, S1, seed, _ = seed_pair(A, B)
    res = fssr(S0, S1.with_formal_degree(d), r)
    assert res.reached < r or res.reached == 0
    for k, c, _ in constant_terms(res, (S0, S1))[1:]:
        assert k < r and c == subresultant_det(A, B, k)[0]
    R = reach(A, B, r)
    assert R.k == res.reached
    if R.k:
        u, _ = R.matrix.apply(A, B)
        assert u.same_polynomial(subresultant_det(A, B, R.k).shift(R.k - 1))


@st.composite
def division_pair(draw):
    d = draw(st.integers(4, 14))
    cs = draw(st.lists(st.integers(-9, 9), min_size=d + 1, max_size=d + 1))
    cs[0] = cs[0] or 1
    cs[d] = cs[d] or 1
    alpha = draw(st.integers(0, 2))
    beta = draw(st.integers(1, 2))
    top = d - beta
    c1 = [0] * (d + 1)
    for i in range(alpha, top + 1):
        c1[i] = draw(st.integers(-9, 9))
    c1[alpha] = c1[alpha] or 3
    c1[top] = c1[top] or -2
    return SymPoly(cs), SymPoly(c1, d)


@given(division_pair())
def test_quotient_depends_only_on_the_edges(pair):
    """The quotient only sees alpha + beta + 1 coefficients at each end."""
    P, P1 = pair
    alpha, beta = P1.valuation, P.formal_degree - P1.degree
    ell = alpha + beta + 1
    Q = squo(P, P1)
    Qt = squo(sym_truncate(P, ell), sym_truncate(P1, ell))
    assert Q.same_polynomial(Qt)


@given(pairs(max_degree=10, gaussian=False), st.integers(2, 5))
def test_truncated_pair_gives_truncated_subresultants(pair, ell):
    A, B = pair
    d = A.formal_degree
    if 2 * ell > d:
        ell = d // 2
    if ell < 2:
        return
    At, Bt = sym_truncate(A, ell), sym_truncate(B, ell)
    for j in range(1, ell):
        full = subresultant_det(A, B, j)
        trunc = subresultant_det(At, Bt, j)
        assert sym_truncate(full, ell - j) == sym_truncate(trunc, ell - j)
