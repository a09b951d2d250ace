"""Seeded generators of test instances: polynomial pairs and Toeplitz matrices.

Everything takes an explicit :class:`random.Random` so corpora are
reproducible from a seed.
"""

from __future__ import annotations

import random
from math import gcd

from .poly import SymPoly, mul
from .ring import Gaussian
from .ssr_oracle import ff_determinant
from .toeplitz import ToeplitzSpec

CASES = ("alpha>0,beta>1", "alpha=0,beta>1", "alpha>0,beta=1", "alpha=0,beta=1")


def case_of(alpha: int, beta: int) -> str:
    """Name of the defect case of a step with profile (alpha, beta)."""
    a = "alpha>0" if alpha > 0 else "alpha=0"
    b = "beta>1" if beta > 1 else "beta=1"
    return f"{a},{b}"


def _coeff(rng: random.Random, height: int, gaussian: bool):
    if gaussian:
        return Gaussian(rng.randint(-height, height), rng.randint(-height, height))
    return rng.randint(-height, height)


def _nonzero(rng, height, gaussian):
    while True:
        c = _coeff(rng, height, gaussian)
        if c:
            return c


def regular_poly(rng: random.Random, d: int, height: int = 9, gaussian: bool = False) -> SymPoly:
    """Random polynomial of degree d with nonzero constant term."""
    cs = [_coeff(rng, height, gaussian) for _ in range(d + 1)]
    cs[0] = cs[0] or _nonzero(rng, height, gaussian)
    cs[d] = cs[d] or _nonzero(rng, height, gaussian)
    return SymPoly(cs)


def random_pair(rng: random.Random, d: int, height: int = 9, gaussian: bool = False):
    """A regular A of degree d and an arbitrary B of formal degree d."""
    A = regular_poly(rng, d, height, gaussian)
    B = SymPoly([_coeff(rng, height, gaussian) for _ in range(d + 1)], d)
    return A, B


def structured_pair(rng: random.Random, d: int, gaussian: bool = False, height: int = 3):
    """Pairs that tend to produce defective steps.

    One of: B equal to A up to a small block, a shared polynomial factor,
    a sparse B, or B close to the coefficient reversal of A.
    """
    A = regular_poly(rng, d, height, gaussian)
    kind = rng.randrange(4)
    if kind == 0:
        a = rng.randint(0, d - 1)
        E = SymPoly([_coeff(rng, height, gaussian) for _ in range(rng.randint(0, max(0, d - a - 1)) + 1)])
        B = (A + E.shift(a)).with_formal_degree(d)
    elif kind == 1:
        k = rng.randint(1, d)
        C = SymPoly([_nonzero(rng, 2, gaussian) for _ in range(k + 1)])
        U = SymPoly([_nonzero(rng, 2, gaussian) for _ in range(d - k + 1)])
        V = SymPoly([_coeff(rng, 2, gaussian) for _ in range(d - k + 1)])
        A, B = mul(C, U), mul(C, V).with_formal_degree(d)
    elif kind == 2:
        B = SymPoly([_coeff(rng, height, gaussian) if rng.random() < 0.25 else 0
                     for _ in range(d + 1)], d)
    else:
        cs = list(reversed(A.coeffs))
        i = rng.randint(0, d)
        cs[i] = cs[i] + _coeff(rng, 1, gaussian)
        B = SymPoly(cs, d)
    if A.degree != d or (not A[0] and not B[0]):
        return structured_pair(rng, d, gaussian, height)
    return A, B


def pair_with_first_defect(rng: random.Random, d: int, alpha: int, beta: int,
                           gaussian: bool = False, height: int = 5):
    """A pair whose first step leaves S_0 with profile (alpha, beta).

    ``S_1 = b_d A - a_d B``; choosing a monic A and a target S_1 with valuation
    alpha and degree d - beta gives ``B = b_d A - S_1``.
    """
    if alpha < 0 or beta < 1 or alpha + beta > d:
        raise ValueError("need alpha >= 0, beta >= 1 and alpha + beta <= d")
    while True:
        A = regular_poly(rng, d, height, gaussian)
        A = SymPoly(list(A.coeffs[:d]) + [1])
        top = d - beta
        S1 = [0] * (d + 1)
        for i in range(alpha, top + 1):
            S1[i] = _coeff(rng, height, gaussian)
        S1[alpha] = _nonzero(rng, height, gaussian)
        S1[top] = _nonzero(rng, height, gaussian)
        bd = _nonzero(rng, height, gaussian)
        B = (A.scale(bd) - SymPoly(S1, d)).with_formal_degree(d)
        if B[0] and B[d]:
            return A, B


def gaussian_twist(rng: random.Random, A: SymPoly, B: SymPoly):
    """``(v A, u B + w A)`` for random Gaussian u, v != 0 and w.

    For j >= 1 this only scales S_j by ``u^j v^j``, so every defect profile of
    the chain is kept while the coefficients become genuinely complex.
    """
    u = _nonzero(rng, 2, True)
    v = _nonzero(rng, 2, True)
    w = _coeff(rng, 2, True)
    A2 = A.scale(v)
    B2 = (B.scale(u) + A.scale(w)).with_formal_degree(A.formal_degree)
    if not A2[0] and not B2[0]:
        return gaussian_twist(rng, A, B)
    return A2, B2


def chain_cases(A: SymPoly, B: SymPoly) -> set:
    """``{(case, j == 0)}`` over the steps of the chain of (A, B)."""
    from .ssr_seq import ssr_sequence

    seq = ssr_sequence(A, B, full=False)
    out = set()
    for st in seq.regular:
        if st.profile is not None:
            out.add((case_of(*st.profile), st.k == 0))
    return out


def adversarial_corpus(rng: random.Random, per_case: int, max_d: int = 10,
                       gaussian: bool = False) -> list:
    """Pairs realising every defect case both at the first step and later on.

    Returns ``(A, B, label)`` with ``label = (case, first)``.  First-step
    cases are built directly; later ones are drawn from
    :func:`structured_pair` at height 1 (where they are least rare) until each
    case has ``per_case`` witnesses, and moved into the Gaussian integers with
    :func:`gaussian_twist` when asked.
    """
    out = []
    for case in CASES[:3]:
        for _ in range(per_case):
            d = rng.randint(3, max_d)
            if case == "alpha>0,beta>1":
                alpha = rng.randint(1, d - 2)
                beta = rng.randint(2, d - alpha)
            elif case == "alpha=0,beta>1":
                alpha, beta = 0, rng.randint(2, d)
            else:
                alpha, beta = rng.randint(1, d - 1), 1
            A, B = pair_with_first_defect(rng, d, alpha, beta, gaussian)
            out.append((A, B, (case, True)))
    need = {case: per_case for case in CASES[:3]}
    tries = 0
    while any(need.values()):
        tries += 1
        if tries > 400 * per_case * 3:
            raise RuntimeError("could not realise every defect case")
        d = rng.randint(4, max_d)
        A, B = structured_pair(rng, d, False, 1)
        if gaussian:
            A, B = gaussian_twist(rng, A, B)
        hit = [c for c, first in chain_cases(A, B) if not first and need.get(c)]
        if hit:
            need[hit[0]] -= 1
            out.append((A, B, (hit[0], False)))
    return out


# -------------------------------------------------------------------- Toeplitz


def random_hermitian(rng: random.Random, d: int, height: int = 3,
                     gaussian: bool = False) -> ToeplitzSpec:
    col = [rng.randint(-height, height)]
    col += [_coeff(rng, height, gaussian) for _ in range(d - 1)]
    return ToeplitzSpec.hermitian_from_column(col)


def hermitian_with_zero_minor(rng: random.Random, d: int, gaussian: bool = False) -> ToeplitzSpec:
    """Hermitian Toeplitz matrix with at least one vanishing minor before the last."""
    from .ssr_oracle import leading_minors

    if d < 2:
        raise ValueError("a zero run before the last minor needs d >= 2")
    while True:
        T = random_hermitian(rng, d, 1, gaussian)
        if rng.random() < 0.3:
            col = [0] + [T.t(k) for k in range(1, d)]
            T = ToeplitzSpec.hermitian_from_column(col)
        if any(not m for m in leading_minors(T.dense())[:-1]):
            return T


def random_toeplitz(rng: random.Random, d: int, height: int = 9) -> ToeplitzSpec:
    return ToeplitzSpec(d, tuple(rng.randint(-height, height) for _ in range(2 * d - 1)))


def invertible_toeplitz(rng: random.Random, d: int, height: int = 9) -> ToeplitzSpec:
    while True:
        T = random_toeplitz(rng, d, height)
        if ff_determinant(T.dense()):
            return T


def toeplitz_with_singular_leading(rng: random.Random, d: int, height: int = 5) -> ToeplitzSpec:
    """Invertible T of order d whose leading block of order d - 1 is singular.

    In the leading block the diagonal ``t_{d-2}`` occurs once, in its corner,
    so its determinant is affine in that entry; the entry is solved for and
    the other diagonals are scaled to keep everything integral.
    """
    if d < 2:
        raise ValueError("needs d >= 2")
    while True:
        diags = [rng.randint(-height, height) for _ in range(2 * d - 1)]
        if d == 2:
            diags[1] = 0
        else:
            pos = (d - 2) + (d - 1)
            T0 = ToeplitzSpec(d, tuple(diags[:pos] + [0] + diags[pos + 1:]))
            T1 = ToeplitzSpec(d, tuple(diags[:pos] + [1] + diags[pos + 1:]))
            lead = d - 1
            b = ff_determinant([row[:lead] for row in T0.dense()[:lead]])
            a = ff_determinant([row[:lead] for row in T1.dense()[:lead]]) - b
            if not a:
                continue
            # scale by a/g so that the solved entry -b/a stays integral
            g = gcd(a, b)
            diags = [x * (a // g) for x in diags]
            diags[pos] = -b // g
        T = ToeplitzSpec(d, tuple(diags))
        if ff_determinant(T.dense()):
            return T
