"""A small embedded corpus run against the determinantal oracle, family by family."""

from __future__ import annotations

import random
from contextlib import contextmanager
from dataclasses import dataclass, field
from unittest import mock

from . import ssr_seq
from .corpus import (
    adversarial_corpus,
    hermitian_with_zero_minor,
    invertible_toeplitz,
    random_hermitian,
    random_pair,
    toeplitz_with_singular_leading,
)
from .errors import ExactnessViolation, Singular, SymresError
from .fssr import fast_sequence, replay_sequence
from .poly import SymPoly
from .ssr_oracle import leading_minors, subresultant_sequence_det
from .ssr_seq import ssr_sequence
from .toeplitz import (
    fitm_invert,
    identity,
    mat_mul,
    principal_minors,
    signature,
    signature_by_congruence,
)


@dataclass
class FamilyResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def _pairs(rng: random.Random, size: int) -> list:
    pairs = [random_pair(rng, rng.randint(1, 7), 9, rng.random() < 0.3) for _ in range(size)]
    per_case = max(1, size // 10)
    pairs += [(A, B) for A, B, _ in adversarial_corpus(rng, per_case, 7)]
    return pairs


def _family(name, items, check) -> FamilyResult:
    res = FamilyResult(name)
    for item in items:
        res.cases += 1
        try:
            msg = check(item)
        except ExactnessViolation as exc:
            msg = f"ExactnessViolation: {exc} {exc.context}"
        except SymresError as exc:
            msg = f"{type(exc).__name__}: {exc}"
        if msg:
            res.failures.append(msg)
    return res


def _check_sequence(pair):
    A, B = pair
    ref = subresultant_sequence_det(A, B)
    got = ssr_sequence(A, B).full
    if any(not g.same_polynomial(r) for g, r in zip(got, ref)):
        return f"quadratic chain differs from the oracle on {A} / {B}"
    return None


def _check_fast(pair):
    A, B = pair
    ref = subresultant_sequence_det(A, B)
    got = replay_sequence(fast_sequence(A, B))
    for j, (g, r) in enumerate(zip(got, ref), start=-1):
        if j >= 1 and not g.same_polynomial(r):
            return f"fast chain differs from the oracle at j={j} on {A} / {B}"
    return None


def _check_determinant(pair):
    A, B = pair
    seq = ssr_sequence(A, B, full=False)
    for st in seq.regular:
        k = st.k
        num, den = seq.transition(k).determinant()
        S = st.S_k
        lc, tc = S[S.formal_degree], S[0]
        want = SymPoly.monomial(-lc * tc, k - 1) if k >= 1 else SymPoly([-lc])
        if not num.same_polynomial(want.scale(den)):
            return f"transition determinant wrong at k={k} on {A} / {B}"
    return None


def _check_minors(T):
    ref = leading_minors(T.dense())
    ref = [getattr(r, "re", r) for r in ref]
    if principal_minors(T) != ref:
        return f"minors differ on {T.diagonals}"
    return None


def _check_signature(T):
    got = signature(T, verify=False).signature
    if got != signature_by_congruence(T.dense()):
        return f"signature differs on {T.diagonals}"
    return None


def _check_inverse(T):
    try:
        gen, W = fitm_invert(T, dense=True)
    except Singular:
        return f"reported singular: {T.diagonals}"
    if mat_mul(T.dense(), W) != identity(T.d):
        return f"T * inverse != I on {T.diagonals}"
    if gen.attempts > 3:
        return f"{gen.attempts} extension attempts on {T.diagonals}"
    return None


@contextmanager
def corrupted_recurrence():
    """Break the leading scalar of every step (mutation-testing hook)."""
    original = ssr_seq.step_scalars

    def broken(*args):
        num, den, D = original(*args)
        return num + 1, den, D

    with mock.patch.object(ssr_seq, "step_scalars", broken):
        yield


def selftest(size: int = 20, seed: int = 0, mutate: bool = False) -> list[FamilyResult]:
    """Run every invariant family on ``size`` random instances (0 gives a no-op pass)."""
    if size <= 0:
        return []
    rng = random.Random(seed)
    pairs = _pairs(rng, size)
    herm = [random_hermitian(rng, rng.randint(1, 6), 3, rng.random() < 0.5) for _ in range(size)]
    herm += [hermitian_with_zero_minor(rng, rng.randint(2, 5)) for _ in range(max(1, size // 4))]
    inv = [invertible_toeplitz(rng, rng.randint(1, 8)) for _ in range(size)]
    inv += [toeplitz_with_singular_leading(rng, rng.randint(2, 6)) for _ in range(max(1, size // 4))]

    def run():
        return [
            _family("oracle equivalence (quadratic)", pairs, _check_sequence),
            _family("oracle equivalence (fast)", pairs, _check_fast),
            _family("transition determinant", pairs, _check_determinant),
            _family("minor bridge", herm, _check_minors),
            _family("signature", herm, _check_signature),
            _family("Toeplitz inversion", inv, _check_inverse),
        ]

    if mutate:
        with corrupted_recurrence():
            return run()
    return run()
