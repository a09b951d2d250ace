"""Divide-and-conquer computation of the symmetric quotient chain.

:func:`fssr` returns the same scaled quotients and the same transition matrix
as stepping through :func:`symres.ssr_seq.ssr_sequence`, but in
O(M(d) log d) ring operations.  The key fact is locality: the steps whose
landing index stays below ``r`` depend only on the ``r`` lowest and ``r``
highest coefficients of the starting pair.  The recursion therefore

1. truncates the pair to width ``r``;
2. computes the steps below ``ceil(r/2)`` recursively;
3. pushes the truncated pair through the resulting matrix, which yields the
   intermediate regular pair at the smaller width ``r - k``;
4. takes one explicit bridging step;
5. recurses on what is left of the window;
6. composes the three matrices fraction-free.

Truncated polynomials carry garbage in their middle coefficients.  Every
matrix product and every recurrence step is re-truncated to the window that
the inputs still determine before any exact division takes place, so garbage
is never divided and exactness checks stay meaningful at every depth.

The bound is strict: a step is taken only when its landing index is ``< r``.
With ``r = d`` the final step (landing at d, the resultant position) is left
out; :func:`fast_sequence` takes it with one extra symmetric division.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInconsistency, IrregularSeed
from .poly import SymPoly, mul, sym_truncate
from .ssr_seq import (
    Quotient,
    TransitionMatrix,
    _exact,
    _exact_poly,
    advance,
    compose_transitions,
    interior_terms,
    seed_pair,
    step_scalars,
)


@dataclass
class FssrResult:
    """Quotient chain and transition matrix of one :func:`fssr` call.

    ``quotients[i]`` is the step leaving the i-th regular index; ``ks`` lists
    the regular indices reached (absolute, starting at ``start``), so
    ``ks[-1]`` is the last one, strictly below ``start + r``.  ``v`` is the
    number of steps taken.  ``matrix`` maps the starting vector to the one at
    ``ks[-1]``.
    """

    quotients: list
    matrix: TransitionMatrix
    start: int
    r: int
    ks: list
    max_depth: int = 0

    @property
    def v(self) -> int:
        return len(self.quotients)

    @property
    def reached(self) -> int:
        return self.ks[-1]


def _check_seed(P: SymPoly, P1: SymPoly) -> SymPoly:
    n = P.formal_degree
    if not P[0] or not P[n] or P.degree != n:
        raise IrregularSeed("the first polynomial of the pair is not regular")
    if P1.formal_degree > n and any(P1.coeffs[n + 1:]):
        raise IrregularSeed("the second polynomial has larger degree than the first")
    P1 = P1.with_formal_degree(n)
    if not P1.is_zero() and P1.degree >= n:
        raise IrregularSeed("the second polynomial must have degree below the first")
    return P1


def apply_transition(M: TransitionMatrix, P: SymPoly, P1: SymPoly, first: bool,
                     steps_taken: int, width: int):
    """Push a (possibly truncated) regular pair through ``M``.

    ``P`` and ``P1`` share the formal degree N and are genuine in their ``width``
    lowest and highest coefficients.  Returns the pair at the regular index
    ``k = steps_taken`` positions later, truncated to ``width - k``.
    """
    k = steps_taken
    N = P.formal_degree
    m00, m01, m10, m11 = M.entries
    if first:
        u = mul(m00, P) + mul(m01, P1)
        v = mul(m10, P) + mul(m11, P1)
        u, v = u.shift(1), v.shift(1)
    else:
        X1 = P1.shift(1)
        u = mul(m00, P) + mul(m01, X1)
        v = mul(m10, P) + mul(m11, X1)
    try:
        u = u.with_formal_degree(N).unshift(k)
        v = v.with_formal_degree(N + 1).unshift(k + 1)
    except Exception as exc:
        raise InternalInconsistency(
            f"transition product is not aligned after {k} positions"
        ) from exc
    w = width - k
    u, v = sym_truncate(u, w), sym_truncate(v, w)
    if M.denom != 1:
        u = _exact_poly(u, M.denom, "transition application")
        v = _exact_poly(v, M.denom, "transition application")
    return u, v


def _plain(P, P1, r, first, width, start):
    """Direct steps while the landing index stays below ``r``."""
    quotients, ks, M = [], [start], TransitionMatrix.identity()
    k = 0
    while not P1.is_zero():
        alpha, beta = P1.valuation, P.formal_degree - P1.degree
        if k + alpha + beta >= r:
            break
        P, P1, quo, step = advance(P, P1, first and k == 0, width - k)
        M = compose_transitions(step, M)
        quotients.append(quo)
        k += alpha + beta
        ks.append(start + k)
    return quotients, ks, M, P, P1


def fssr(P: SymPoly, P1: SymPoly, r: int, start: int = 0, base: int = 2,
         depth: int = 0) -> FssrResult:
    """Scaled symmetric quotients of the regular pair ``(P, P1)`` up to bound ``r``.

    ``start`` is the index of ``P`` in its sequence; ``start == 0`` selects the
    formulas for the first step, where ``P = S_0`` is an input rather than a
    determinant.  ``P1`` is read at the formal degree of ``P``.  Steps are taken
    while the landing index is below ``start + r``.  ``base`` is the window below
    which the recursion switches to direct steps.
    """
    if depth < 0 or r < 0 or base < 1:
        raise ValueError("invalid recursion parameters")
    P1 = _check_seed(P, P1)
    first = start == 0
    ident = TransitionMatrix.identity()
    if P1.is_zero() or r <= 0:
        return FssrResult([], ident, start, r, [start], depth)
    P, P1 = sym_truncate(P, r), sym_truncate(P1, r)
    if r <= base:
        quotients, ks, M, _, _ = _plain(P, P1, r, first, r, start)
        return FssrResult(quotients, M, start, r, ks, depth)

    half = (r + 1) // 2
    left = fssr(P, P1, half, start, base, depth + 1)
    ku = left.reached - start
    Pu, P1u = (P, P1) if not left.quotients else apply_transition(
        left.matrix, P, P1, first, ku, r)
    if P1u.is_zero():
        return FssrResult(left.quotients, left.matrix, start, r, left.ks, left.max_depth)
    alpha, beta = P1u.valuation, Pu.formal_degree - P1u.degree
    if ku + alpha + beta >= r:
        return FssrResult(left.quotients, left.matrix, start, r, left.ks, left.max_depth)

    Pb, P1b, quo, bridge = advance(Pu, P1u, first and ku == 0, r - ku)
    kb = ku + alpha + beta
    right = fssr(Pb, P1b, r - kb, start + kb, base, depth + 1) if kb < r else None
    M = compose_transitions(bridge, left.matrix)
    quotients = left.quotients + [quo]
    ks = left.ks + [start + kb]
    max_depth = left.max_depth
    if right is not None:
        M = compose_transitions(right.matrix, M)
        quotients += right.quotients
        ks += right.ks[1:]
        max_depth = max(max_depth, right.max_depth)
    return FssrResult(quotients, M, start, r, ks, max_depth)


# ---------------------------------------------------------------- consumers


def constant_terms(result: FssrResult, seed) -> list:
    """``[(k, S_k(0), lc(S_k))]`` for every regular index reached by ``result``.

    Only the scalars stored with each quotient are used, so the cost is linear
    in the number of steps.  ``seed`` is the starting pair ``(P, P1)``.
    """
    P = seed[0]
    n = P.formal_degree
    lcP, tP = P[n], P[0]
    k = result.start
    out = [(k, tP, lcP)]
    first = k == 0
    for quo in result.quotients:
        num, den, _ = _step_scalars_from(lcP, tP, quo, first)
        tP = _exact(num * quo.tc_next, den, "constant term")
        lcP = _exact(num * quo.lc_next, den, "leading coefficient")
        k += quo.alpha + quo.beta
        out.append((k, tP, lcP))
        first = False
    return out


def _step_scalars_from(lcP, tP, quo: Quotient, first: bool):
    return step_scalars(lcP, tP, quo.lc_next, quo.tc_next, quo.alpha, quo.beta, first)


def step_matrix(quo: Quotient, lcP, tP, first: bool) -> TransitionMatrix:
    """Rebuild the transition matrix of one step from its stored scalars."""
    num, den, D = _step_scalars_from(lcP, tP, quo, first)
    sk0 = _exact(num * quo.tc_next, den, "constant term")
    corner = _exact(D * num, den, "transition matrix corner")
    return TransitionMatrix(
        (
            SymPoly.zero(),
            SymPoly.monomial(corner, quo.beta - 1),
            SymPoly.monomial(-quo.lc_next * sk0, quo.alpha if first else quo.alpha + 1),
            quo.Q,
        ),
        D,
    )


@dataclass
class FastSequence:
    """Regular chain of a pair obtained through :func:`fssr`.

    ``fssr`` covers every step landing below d; ``last`` records whether the
    final step (landing exactly at d) was needed and taken separately.
    """

    d: int
    seed: TransitionMatrix
    shear: int
    S0: SymPoly
    S1: SymPoly
    result: FssrResult
    quotients: list
    ks: list
    matrix: TransitionMatrix
    last_step: bool

    def constant_terms(self) -> list:
        fake = FssrResult(self.quotients, self.matrix, 0, self.d + 1, self.ks)
        return constant_terms(fake, (self.S0, self.S1))


def fast_sequence(A: SymPoly, B: SymPoly, base: int = 2) -> FastSequence:
    """Run :func:`fssr` on ``(S_0, S_1)`` with bound d and finish the chain.

    The returned matrix maps ``(S_0, S_1)`` to the vector at the last regular
    index; compose with ``seed`` for the map from ``(A, B)``.
    """
    S0, S1, seed, shear = seed_pair(A, B)
    d = A.formal_degree
    P1 = S1.with_formal_degree(d)
    if d == 0:
        res = FssrResult([], TransitionMatrix.identity(), 0, 0, [0])
        return FastSequence(d, seed, shear, S0, S1, res, [], [0], res.matrix, False)
    res = fssr(S0, P1, d, 0, base)
    quotients, ks, M = list(res.quotients), list(res.ks), res.matrix
    last = False
    k = ks[-1]
    Pk, P1k = (S0, P1) if not quotients else apply_transition(M, S0, P1, True, k, d + 1)
    if not P1k.is_zero():
        # the final quotient: one extra symmetric division
        _, _, quo, step = advance(Pk, P1k, k == 0)
        k += quo.alpha + quo.beta
        if k != d:
            raise InternalInconsistency("the chain stopped before the last regular index")
        M = compose_transitions(step, M)
        quotients.append(quo)
        ks.append(k)
        last = True
    return FastSequence(d, seed, shear, S0, S1, res, quotients, ks, M, last)


def replay_sequence(fast: FastSequence, full: bool = True) -> list:
    """Every ``S_j`` (``j = -1 .. d``) rebuilt from the quotient chain alone.

    Each step matrix is reconstructed from its stored scalars and applied to
    the current pair; interior terms are filled as in the quadratic recurrence.
    """
    d = fast.d
    seq: list = [None] * (d + 2)
    P, P1 = fast.S0, fast.S1.with_formal_degree(d)
    seq[1] = P if not fast.shear else None
    if d >= 1:
        seq[2] = fast.S1
    first, j = True, 0
    for quo in fast.quotients:
        n = P.formal_degree
        M = step_matrix(quo, P[n], P[0], first)
        if full:
            for m, T in enumerate(interior_terms(P, P1, first), start=2):
                seq[j + m + 1] = T
        u, v = apply_transition(M, P, P1, first, quo.alpha + quo.beta, n + 1)
        j += quo.alpha + quo.beta
        P, P1 = u, v
        seq[j + 1] = P
        if j < d:
            seq[j + 2] = P1.with_formal_degree(d - j - 1)
        first = False
    if P1.is_zero():
        for i in range(j + 2, d + 1):
            seq[i + 1] = SymPoly.zero(d - i)
    return seq


@dataclass
class Reach:
    """Where :func:`reach` stopped.

    ``k`` is the last regular index below the bound, ``matrix`` maps ``(A, B)``
    to ``(X^{k-1} S_k, X^k S_{k+1})`` (``(S_0, S_1)`` when ``k = 0``) and
    ``pair`` holds ``(S_k, S_{k+1})`` truncated to ``bound - k``, both at the
    formal degree of S_k.
    """

    k: int
    matrix: TransitionMatrix
    pair: tuple
    quotients: list
    ks: list
    seed_pair: tuple


def reach(A: SymPoly, B: SymPoly, bound: int, base: int = 2) -> Reach:
    """Follow the chain of (A, B) through every step landing below ``bound``.

    Only the ``bound`` lowest and highest coefficients of the pair are read.
    """
    S0, S1, seed, _ = seed_pair(A, B)
    d = A.formal_degree
    P1 = S1.with_formal_degree(d)
    if bound < 1:
        raise ValueError("bound must be at least 1")
    res = fssr(S0, P1, bound, 0, base) if d else FssrResult(
        [], TransitionMatrix.identity(), 0, bound, [0])
    k = res.reached
    if res.quotients:
        pair = apply_transition(res.matrix, S0, P1, True, k, bound)
    else:
        pair = (sym_truncate(S0, bound), sym_truncate(P1, bound))
    M = compose_transitions(res.matrix, seed)
    return Reach(k, M, pair, res.quotients, res.ks, (S0, P1))


def subresultant_constant_terms(A: SymPoly, B: SymPoly, upto: int, base: int = 2) -> list:
    """``[S_1(0), ..., S_upto(0)]`` from the quotient chain.

    Regular indices come from the recurrence scalars, interior ones from the
    proportionality of degenerate terms, and indices past the end of the
    sequence are zero.  Linear in ``upto`` once :func:`fssr` has run.
    """
    if upto < 1:
        return []
    d = A.formal_degree
    if upto > d:
        raise ValueError(f"constant terms requested up to {upto} > {d}")
    R = reach(A, B, upto + 1, base)
    S0 = R.seed_pair[0]
    out = [0] * (upto + 1)
    tP, lcP = S0[0], S0[d]
    first, j = True, 0

    def interior(j, tc, tP, first, stop):
        # S_{j+1}(0) = tc, then S_{j+m}(0) = tc^m / tP^(m-1) (tc^m at the first step)
        for m in range(1, stop - j + 1):
            if first or m == 1:
                out[j + m] = tc**m
            else:
                out[j + m] = _exact(tc**m, tP ** (m - 1), "interior constant term")

    for quo in R.quotients:
        k = j + quo.alpha + quo.beta
        if quo.alpha == 0:
            interior(j, quo.tc_next, tP, first, min(k - 1, upto))
        num, den, _ = _step_scalars_from(lcP, tP, quo, first)
        tP = _exact(num * quo.tc_next, den, "constant term")
        lcP = _exact(num * quo.lc_next, den, "leading coefficient")
        out[k] = tP
        j, first = k, False
    if j < upto:
        P1 = R.pair[1]
        if not P1.is_zero() and P1[0]:
            interior(j, P1[0], tP, first, upto)
    return out[1:]
