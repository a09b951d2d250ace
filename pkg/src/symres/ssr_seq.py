"""Symmetric subresultant sequences by a fraction-free recurrence.

Let (A, B) have formal degree d and write ``S_{-1} = A``, ``S_0 = B``.  An index
j is *regular* when S_j has nonzero constant term and actual degree d - j.  If
the successor S_{j+1} has valuation alpha and degree ``d - j - beta``, the next
regular index is ``k = j + alpha + beta`` and everything in between is
determined by scalars read off S_j and S_{j+1}:

* interior terms ``S_{j+m}`` (``2 <= m < alpha + beta``) are zero when
  ``alpha > 0, beta > 1``; scalar multiples of S_{j+1} when ``alpha = 0``; and
  scalar multiples of ``S_{j+1} / X^{m-1}`` when ``beta = 1``;
* ``S_k`` is a scalar multiple of ``S_{j+1} / X^alpha``;
* ``S_{k+1}`` is minus the symmetric remainder of
  ``lc(S_{j+1}) S_k(0) S_j`` by ``S_{j+1}``, divided by ``lc(S_j) S_j(0)``
  (by ``lc(S_0)`` at the first step).

The constants for the first step differ from the later ones because S_0 = B is
an input rather than a determinant.  Every scalar division in the recurrence is
exact in the coefficient ring; a remainder raises :class:`ExactnessViolation`.

Verified interior formulas (ground truth: the determinantal oracle)::

    alpha = 0, beta > 1:   S_j(0)^{m-1} S_{j+m} = tc(S_{j+1})^{m-1} S_{j+1}
    alpha > 0, beta = 1:   lc(S_j)^{m-1} S_{j+m} = lc(S_{j+1})^{m-1} S_{j+1} / X^{m-1}
    first step, beta = 1:  b_d^{m-1} S_m = b_0^{m-1} lc(S_1)^{m-1} S_1 / X^{m-1}

with no alternating sign in the second line.

Transition matrices map the vector ``(X^{j-1} S_j, X^j S_{j+1})`` at one
regular index to the vector at a later one (at index 0 the vector is
``(S_0, S_1)``).  They are stored as ``entries / denom`` with polynomial
entries over the base ring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import (
    BothZero,
    DegreeOrder,
    ExactnessViolation,
    IrregularBase,
    NotDivisible,
)
from .poly import DefectProfile, SymPoly, mul, sym_divide, sym_truncate
from .ring import exact_div


def _exact(x, y, what: str, **context):
    try:
        return exact_div(x, y)
    except NotDivisible as exc:
        raise ExactnessViolation(f"inexact division in {what}", context) from exc


def _exact_poly(P: SymPoly, c, what: str, **context) -> SymPoly:
    try:
        return P.exact_quotient(c)
    except NotDivisible as exc:
        raise ExactnessViolation(f"inexact division in {what}", context) from exc


# ----------------------------------------------------------- transition data


class TransitionMatrix:
    """A 2x2 polynomial matrix ``entries / denom`` with entries over the base ring."""

    __slots__ = ("entries", "denom", "is_identity")

    def __init__(self, entries, denom=1, is_identity: bool = False):
        self.entries = tuple(entries)
        self.denom = denom
        self.is_identity = is_identity

    @classmethod
    def identity(cls) -> "TransitionMatrix":
        one, zero = SymPoly([1]), SymPoly.zero()
        return cls((one, zero, zero, one), 1, is_identity=True)

    def apply(self, u: SymPoly, v: SymPoly):
        """``(M00 u + M01 v, M10 u + M11 v)``, each divided exactly by ``denom``."""
        m00, m01, m10, m11 = self.entries
        w0 = mul(m00, u) + mul(m01, v)
        w1 = mul(m10, u) + mul(m11, v)
        if self.denom != 1:
            w0 = _exact_poly(w0, self.denom, "transition application")
            w1 = _exact_poly(w1, self.denom, "transition application")
        return w0, w1

    def determinant(self):
        """``(numerator, denominator)`` of the determinant."""
        m00, m01, m10, m11 = self.entries
        return mul(m00, m11) - mul(m01, m10), self.denom * self.denom

    def normalized(self):
        """Entries with the denominator divided out (exactness asserted)."""
        return tuple(_exact_poly(e, self.denom, "matrix normalisation") for e in self.entries)

    def __eq__(self, other):
        if not isinstance(other, TransitionMatrix):
            return NotImplemented
        mine = [e.scale(other.denom) for e in self.entries]
        theirs = [e.scale(self.denom) for e in other.entries]
        return all(a.same_polynomial(b) for a, b in zip(mine, theirs))

    def __repr__(self):
        return f"TransitionMatrix({list(self.entries)!r}, denom={self.denom!r})"


def compose_transitions(
    outer: TransitionMatrix, inner: TransitionMatrix, scale=None
) -> TransitionMatrix:
    """``outer * inner`` computed as ``((scale*M_outer) * M_inner) / scale``.

    ``outer`` stores ``scale * M_outer`` where ``scale`` is the denominator
    attached to the junction index (``lc(S_j) S_j(0)``, or ``lc(S_0)`` at index
    0), so the stored product is an integral matrix divisible by ``scale``.
    """
    if inner.is_identity:
        return outer
    if outer.is_identity:
        return inner
    if scale is None:
        scale = outer.denom
    elif scale != outer.denom:
        raise ValueError("scale must equal the denominator of the outer matrix")
    a00, a01, a10, a11 = outer.entries
    b00, b01, b10, b11 = inner.entries
    prod = (
        mul(a00, b00) + mul(a01, b10),
        mul(a00, b01) + mul(a01, b11),
        mul(a10, b00) + mul(a11, b10),
        mul(a10, b01) + mul(a11, b11),
    )
    entries = tuple(_exact_poly(e, scale, "transition composition") for e in prod)
    return TransitionMatrix(entries, inner.denom)


class Quotient(NamedTuple):
    """One recurrence step: scaled quotient, defect profile and edge scalars.

    ``lc_next``/``tc_next`` are the leading and trailing coefficients of the
    successor S_{j+1}; with the seed scalars they determine every constant term
    and leading coefficient further down the chain.
    """

    Q: SymPoly
    alpha: int
    beta: int
    lc_next: object
    tc_next: object


@dataclass(frozen=True)
class SsrStep:
    """A regular index k with its successor and, unless terminal, the step taken from it."""

    k: int
    S_k: SymPoly
    S_k1: SymPoly
    profile: DefectProfile | None
    Q: SymPoly | None


# ------------------------------------------------------------ core recurrence


def detect_defect(S_k: SymPoly, S_k1: SymPoly, d: int, k: int) -> DefectProfile | None:
    """Profile of the pair (S_k, S_{k+1}); ``None`` signals the end (S_{k+1} = 0)."""
    n = d - k
    if not S_k[0] or S_k.degree != n:
        raise IrregularBase(f"S_{k} is not regular")
    if S_k1.is_zero():
        return None
    if S_k1.degree >= n:
        raise DegreeOrder(f"S_{k + 1} has degree {S_k1.degree} >= {n}")
    return DefectProfile(S_k1.valuation, n - S_k1.degree)


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def step_scalars(lcP, tP, lc1, tc1, alpha: int, beta: int, first: bool):
    """``(num, den, D)``: S_k = (num/den) * S_{j+1} / X^alpha and D divides the remainder.

    Only the edge coefficients of the pair enter: ``lcP``/``tP`` of S_j and
    ``lc1``/``tc1`` of S_{j+1}.
    """
    eps = _sign((alpha + beta) * alpha)
    if first:
        num = eps * tP**alpha * lc1**alpha * tc1 ** (beta - 1)
        return num, lcP**alpha, lcP
    num = eps * lc1**alpha * tc1 ** (beta - 1)
    return num, lcP**alpha * tP ** (beta - 1), lcP * tP


def advance(P: SymPoly, P1: SymPoly, first: bool, width: int | None = None):
    """One recurrence step from a regular pair ``(S_j, S_{j+1})``.

    ``P1`` must sit at the formal degree n of ``P``.  Returns
    ``(S_k, S_k1, quotient, M)`` with both new polynomials at formal degree
    ``n - alpha - beta`` and ``M`` the transition matrix of the step.

    With ``width`` the pair is only known through its symmetric truncation of
    that width (the middle coefficients may be garbage).  The outputs are then
    truncated to ``width - alpha - beta``, the part still determined by the
    inputs, before anything is divided.
    """
    n = P.formal_degree
    alpha, beta = P1.valuation, n - P1.degree
    lc1, tc1 = P1.lc, P1.tc
    num, den, D = step_scalars(P[n], P[0], lc1, tc1, alpha, beta, first)
    n1 = n - alpha - beta
    core = P1.unshift(alpha).with_formal_degree(n1)
    S_k = _exact_poly(core.scale(num), den, "leading scalar of the next regular term",
                      alpha=alpha, beta=beta)
    sk0 = S_k[0]
    Q, R, _ = sym_divide(P.scale(lc1 * sk0), P1, exact=True)
    R = R.with_formal_degree(n1)
    if width is not None:
        if alpha + beta >= width:
            raise ValueError("step leaves the truncation window")
        S_k = sym_truncate(S_k, width - alpha - beta)
        R = sym_truncate(R, width - alpha - beta)
    S_k1 = _exact_poly(-R, D, "scaled symmetric remainder", alpha=alpha, beta=beta)
    corner = _exact(D * num, den, "transition matrix corner")
    M = TransitionMatrix(
        (
            SymPoly.zero(),
            SymPoly.monomial(corner, beta - 1),
            SymPoly.monomial(-lc1 * sk0, alpha if first else alpha + 1),
            Q,
        ),
        D,
    )
    return S_k, S_k1, Quotient(Q, alpha, beta, lc1, tc1), M


def ssr_step(step: SsrStep):
    """Advance from a regular :class:`SsrStep`.

    Returns ``(S_next, S_next1, M)``; ``S_next1`` is ``None`` when the next
    regular index is d itself.
    """
    d = step.k + step.S_k.formal_degree
    prof = detect_defect(step.S_k, step.S_k1, d, step.k)
    if prof is None:
        raise ValueError("the sequence has already ended")
    n = d - step.k
    S_k, S_k1, _, M = advance(step.S_k, step.S_k1.with_formal_degree(n), step.k == 0)
    k = step.k + prof.alpha + prof.beta
    if k == d:
        return S_k, None, M
    return S_k, S_k1.with_formal_degree(d - k - 1), M


def interior_terms(P: SymPoly, P1: SymPoly, first: bool) -> list:
    """``[S_{j+2}, ..., S_{j+alpha+beta-1}]`` from the regular pair ``(S_j, S_{j+1})``."""
    n = P.formal_degree
    alpha, beta = P1.valuation, n - P1.degree
    out = []
    for m in range(2, alpha + beta):
        fd = n - m
        if alpha > 0 and beta > 1:
            out.append(SymPoly.zero(fd))
        elif alpha == 0:
            c = P1.tc ** (m - 1)
            S = P1.scale(c).with_formal_degree(fd)
            if not first:
                S = _exact_poly(S, P[0] ** (m - 1), "interior term", m=m)
            out.append(S)
        else:
            shifted = P1.unshift(m - 1).with_formal_degree(fd)
            if first:
                S = shifted.scale((P[0] * P1.lc) ** (m - 1))
            else:
                S = shifted.scale(P1.lc ** (m - 1))
            out.append(_exact_poly(S, P[n] ** (m - 1), "interior term", m=m))
    return out


# --------------------------------------------------------------- sequences


def seed_pair(A: SymPoly, B: SymPoly):
    """Validate the pair and return ``(S_0, S_1, seed_matrix, shear)``.

    When B is not regular (zero constant term or degree below d) it is replaced
    by ``B + c*A`` for the smallest ``c >= 1`` that makes it regular.  Adding a
    multiple of A to B is a row operation inside every Sylvester view, so S_j is
    unchanged for j >= 1; only the name of S_0 moves.  The seed matrix maps
    (A, B) to (S_0, S_1) including the shear.
    """
    d = A.formal_degree
    if A.is_zero() and B.is_zero():
        raise BothZero("both polynomials are zero")
    if A.degree != d:
        raise DegreeOrder("A must have actual degree equal to its formal degree")
    if B.degree > d:
        raise DegreeOrder("B has larger degree than A")
    if A[0] == 0 and B[0] == 0:
        raise IrregularBase("the pair is not normalised: both constant terms vanish")
    B = B.with_formal_degree(d)
    c = 0
    B0 = B
    while not (B0[0] and B0[d]):
        c += 1
        B0 = B + A.scale(c)
    a_d, b_d = A[d], B[d]
    S1 = (A.scale(b_d) - B.scale(a_d)).with_formal_degree(max(d - 1, 0)) if d else SymPoly.zero()
    seed = TransitionMatrix(
        (SymPoly([c]), SymPoly([1]), SymPoly([b_d]), SymPoly([-a_d])), 1
    )
    return B0, S1, seed, c


@dataclass
class SsrSequence:
    """Result of :func:`ssr_sequence`.

    ``regular`` lists every regular index with its successor; ``full[j + 1]`` is
    S_j for ``j = -1 .. d`` (``None`` for interior terms when they were not
    requested).  ``steps[i]`` is the transition matrix from ``regular[i]`` to
    ``regular[i + 1]``.  Unpacks as ``regular, full``.
    """

    d: int
    regular: list
    full: list
    steps: list
    quotients: list
    seed: TransitionMatrix
    shear: int = 0
    notes: list = field(default_factory=list)

    def __iter__(self):
        yield self.regular
        yield self.full

    def S(self, j: int) -> SymPoly | None:
        return self.full[j + 1]

    @property
    def regular_indices(self) -> list:
        return [s.k for s in self.regular]

    def transition(self, upto: int) -> TransitionMatrix:
        """``M_k`` mapping (A, B) to ``(X^{k-1} S_k, X^k S_{k+1})`` for the regular index ``upto``."""
        M = self.seed
        for step, mat in zip(self.regular, self.steps):
            if step.k >= upto:
                break
            M = compose_transitions(mat, M)
        return M

    def transition_between(self, i: int, m: int) -> TransitionMatrix:
        """``M_{k_i, k_m}`` between positions i <= m of the regular chain."""
        M = TransitionMatrix.identity()
        for mat in self.steps[i:m]:
            M = compose_transitions(mat, M)
        return M


def ssr_sequence(A: SymPoly, B: SymPoly, full: bool = True) -> SsrSequence:
    """All symmetric subresultants of (A, B) by the quadratic recurrence.

    ``A`` must have actual degree equal to its formal degree d, and A and B may
    not both vanish at 0 (see :func:`symres.poly.normalize_pair`).  With
    ``full=False`` the interior degenerate terms are left as ``None``.
    """
    S0, S1, seed, shear = seed_pair(A, B)
    d = A.formal_degree
    seq: list = [None] * (d + 2)
    seq[0] = A
    seq[1] = B.with_formal_degree(d)
    notes = []
    if shear:
        notes.append(f"B is not regular; recurrence seeded with B + {shear}*A")
    regular, steps, quotients = [], [], []
    if d == 0:
        return SsrSequence(d, [SsrStep(0, S0, SymPoly.zero(), None, None)], seq, [], [], seed, shear, notes)
    seq[2] = S1
    j, P, P1, first = 0, S0, S1.with_formal_degree(d), True
    while True:
        if P1.is_zero():
            regular.append(SsrStep(j, P, P1.with_formal_degree(max(d - j - 1, 0)), None, None))
            for i in range(j + 2, d + 1):
                seq[i + 1] = SymPoly.zero(d - i)
            break
        S_k, S_k1, quo, M = advance(P, P1, first)
        k = j + quo.alpha + quo.beta
        if full:
            for m, T in enumerate(interior_terms(P, P1, first), start=2):
                seq[j + m + 1] = T
        regular.append(SsrStep(j, P, P1.with_formal_degree(d - j - 1),
                               DefectProfile(quo.alpha, quo.beta), quo.Q))
        steps.append(M)
        quotients.append(quo)
        seq[k + 1] = S_k
        if k == d:
            regular.append(SsrStep(d, S_k, SymPoly.zero(), None, None))
            break
        seq[k + 2] = S_k1.with_formal_degree(d - k - 1)
        j, P, P1, first = k, S_k, S_k1, False
    return SsrSequence(d, regular, seq, steps, quotients, seed, shear, notes)
