"""Toeplitz matrices through symmetric subresultants.

Three applications live here.

*Series link.*  For polynomials F, G of formal degree d, the constant terms
of the subresultants of (F, G) are, up to the factor ``(-1)^k f_0^k f_d^k``,
the leading minors of a Toeplitz matrix built from the expansions of G/F at
zero and at infinity (:func:`toeplitz_from_pair`).

*Minors and signature.*  A Hermitian Toeplitz matrix with diagonals t_k and
``t_0 = t + conj(t)`` has principal minors ``delta_j = S_j(0)`` for the pair

    S_{-1} = X^{2d-1} + 1,
    S_0    = -conj(t) - conj(t_1) X - ... - conj(t_{d-1}) X^{d-1}
             + t_{d-1} X^d + ... + t_1 X^{2d-2} + t X^{2d-1},

so the quotient chain gives all minors at once (:func:`principal_minors`), and
the signature follows from their signs (:func:`signature`).

*Inversion.*  A general Toeplitz matrix is inverted fraction-free by running
the same machinery on ``X^{2d+1} + 1`` and a degree 2d+1 polynomial carrying
the diagonals, reading one row of the resulting transition matrix, and
assembling the inverse from its first and last columns with the
Gohberg-Semencul formula (:func:`fitm_invert`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import ring
from .errors import (
    BranchMismatch,
    InputError,
    InternalInconsistency,
    NoSplitting,
    NotReal,
    Singular,
    ZeroEdgeCoefficient,
)
from .poly import SymPoly, mul, reciprocal
from .ring import Gaussian, conj, exact_div, field_div


@dataclass(frozen=True)
class ToeplitzSpec:
    """A d x d Toeplitz matrix ``(t_{i-j})`` given by its diagonals.

    ``diagonals`` lists ``t_{-(d-1)}, ..., t_0, ..., t_{d-1}``; entry (i, j) is
    ``t_{i-j}``, so the first column holds ``t_0, t_1, ...`` and the first row
    holds ``t_0, t_{-1}, ...``.
    """

    d: int
    diagonals: tuple
    hermitian: bool = False

    def __post_init__(self):
        object.__setattr__(self, "diagonals", tuple(self.diagonals))
        if self.d < 1:
            raise InputError("a Toeplitz matrix needs dimension at least 1")
        if len(self.diagonals) != 2 * self.d - 1:
            raise InputError(
                f"expected {2 * self.d - 1} diagonals for d={self.d}, got {len(self.diagonals)}"
            )
        if self.hermitian:
            for k in range(self.d):
                if self.t(-k) != conj(self.t(k)):
                    raise InputError(f"diagonal {k} breaks the Hermitian symmetry")

    def t(self, k: int):
        """The diagonal ``t_k`` for ``-(d-1) <= k <= d-1``."""
        return self.diagonals[k + self.d - 1]

    @classmethod
    def hermitian_from_column(cls, column: Sequence) -> "ToeplitzSpec":
        """Hermitian matrix with first column ``t_0, t_1, ..., t_{d-1}``."""
        col = list(column)
        d = len(col)
        diags = [conj(c) for c in reversed(col[1:])] + col
        return cls(d, tuple(diags), True)

    @classmethod
    def from_matrix(cls, M, hermitian: bool | None = None) -> "ToeplitzSpec":
        d = len(M)
        for i in range(d):
            for j in range(d):
                if M[i][j] != M[i - min(i, j)][j - min(i, j)]:
                    raise InputError("matrix is not Toeplitz")
        diags = [M[0][k] for k in range(d - 1, 0, -1)] + [M[k][0] for k in range(d)]
        if hermitian is None:
            hermitian = all(M[j][i] == conj(M[i][j]) for i in range(d) for j in range(d))
        return cls(d, tuple(diags), hermitian)

    def dense(self) -> list:
        return [[self.t(i - j) for j in range(self.d)] for i in range(self.d)]

    def scaled(self, c) -> "ToeplitzSpec":
        return ToeplitzSpec(self.d, tuple(c * x for x in self.diagonals), self.hermitian)


# ------------------------------------------------------------- exact algebra


def _to_field(x):
    if isinstance(x, Gaussian):
        return Gaussian(Fraction(x.re), Fraction(x.im))
    return Fraction(x)


def mat_mul(A, B) -> list:
    n, m, p = len(A), len(B), len(B[0])
    return [[sum((A[i][k] * B[k][j] for k in range(m)), 0) for j in range(p)] for i in range(n)]


def identity(d: int) -> list:
    return [[1 if i == j else 0 for j in range(d)] for i in range(d)]


def hermitian_inertia(M) -> tuple:
    """``(positive, negative, zero)`` eigenvalue counts of a Hermitian matrix.

    Exact congruence: symmetric elimination over the fraction field with a
    1x1 pivot when some diagonal entry is nonzero and a 2x2 pivot
    ``[[0, a], [conj(a), 0]]`` (one positive and one negative direction)
    otherwise.  Cost O(d^3); this is the reference the fast signature is
    checked against.
    """
    a = [[_to_field(x) for x in row] for row in M]
    n = len(a)
    for i in range(n):
        for j in range(n):
            if a[j][i] != conj(a[i][j]):
                raise NotReal("matrix is not Hermitian")
    pos = neg = 0
    idx = list(range(n))
    while idx:
        piv = next((i for i in idx if a[i][i]), None)
        if piv is not None:
            p = a[piv][piv]
            s = ring.sign(p)
            pos += s > 0
            neg += s < 0
            rest = [i for i in idx if i != piv]
            for i in rest:
                f = field_div(a[i][piv], p)
                if not f:
                    continue
                for j in rest:
                    a[i][j] = a[i][j] - f * a[piv][j]
            idx = rest
            continue
        pair = next(((i, j) for i in idx for j in idx if i < j and a[i][j]), None)
        if pair is None:
            break
        i0, j0 = pair
        # zero diagonal: row_i += c row_j, col_i += conj(c) col_j with c = a_ij
        # makes a_ii = 2|a_ij|^2, a 1x1 pivot for the next round
        c = a[i0][j0]
        cc = conj(c)
        for k in idx:
            a[i0][k] = a[i0][k] + c * a[j0][k]
        for k in idx:
            a[k][i0] = a[k][i0] + cc * a[k][j0]
    zero = n - pos - neg
    return pos, neg, zero


def signature_by_congruence(M) -> int:
    pos, neg, _ = hermitian_inertia(M)
    return pos - neg


# ------------------------------------------------------------- series link


def _series_at_zero(num: list, den: list, n: int) -> list:
    """First ``n`` coefficients of num/den around zero (``den[0] != 0``)."""
    out = []
    for i in range(n):
        s = num[i] if i < len(num) else 0
        for j in range(max(0, i - len(den) + 1), i):
            s = s - out[j] * den[i - j]
        out.append(field_div(s, den[0]))
    return out


def toeplitz_from_pair(F: SymPoly, G: SymPoly, k: int) -> list:
    """The k x k Toeplitz matrix linking (F, G) to their subresultant constant terms.

    With ``G/F = v + v_1 X + ...`` at zero and ``G/F = -u - u_1/X - ...`` at
    infinity, the entry (i, j) is ``v_{j-i}`` above the diagonal, ``u_{i-j}``
    below it and ``u + v`` on it; then
    ``S_k(0) = (-1)^k f_0^k f_d^k det(T_k)``.
    Entries are in the fraction field.
    """
    d = F.formal_degree
    if not F[0] or not F[d]:
        raise ZeroEdgeCoefficient("F needs nonzero constant and leading coefficients")
    if not 1 <= k <= d:
        raise InputError(f"order {k} outside 1..{d}")
    fc = list(F.coeffs)
    gc = [G[i] for i in range(d + 1)]
    v = _series_at_zero(gc, fc, k)
    w = _series_at_zero(gc[::-1], fc[::-1], k)
    u = [-x for x in w]

    def entry(i, j):
        if i < j:
            return v[j - i]
        if i > j:
            return u[i - j]
        return u[0] + v[0]

    return [[entry(i, j) for j in range(k)] for i in range(k)]


# ----------------------------------------------------------- minors, signature


@dataclass
class TPolynomial:
    """The pair whose constant terms are the principal minors of a Hermitian matrix.

    ``scale`` is the factor the matrix was multiplied by to make the diagonal
    split (1 or 2); the constant terms are the minors of ``scale * T``.
    """

    S_minus1: SymPoly
    S0: SymPoly
    split: object
    scale: int


def _half(x):
    """``x / 2`` in the ring of x, or None when 2 does not divide x."""
    if isinstance(x, Gaussian):
        if x.is_integral:
            if x.re % 2 or x.im % 2:
                return None
            return Gaussian(x.re // 2, x.im // 2)
        return Gaussian(Fraction(x.re) / 2, Fraction(x.im) / 2)
    if type(x) is Fraction:
        return x / 2
    return x // 2 if x % 2 == 0 else None


def build_t_polynomial(T: ToeplitzSpec, lift: bool = True) -> TPolynomial:
    """``S_{-1} = X^{2d-1} + 1`` and ``S_0`` carrying the diagonals of a Hermitian matrix.

    The diagonal is split as ``t_0 = t + conj(t)`` with ``t != 0``: ``t = t_0/2``
    when that is in the ring; for an odd integer ``t_0`` the matrix is doubled
    first (``delta_j`` then scale by ``2^j``); for ``t_0 = 0`` the split is
    ``t = i``, which needs the Gaussian integers.  Without ``lift`` a real
    matrix with zero diagonal raises :class:`NoSplitting`.
    """
    if not T.hermitian:
        raise InputError("the minor bridge needs a Hermitian matrix")
    d = T.d
    t0 = T.t(0)
    scale = 1
    if not t0:
        if not lift and not any(isinstance(x, Gaussian) for x in T.diagonals):
            raise NoSplitting("t_0 = 0 needs a non-real unit; lift to the Gaussian integers")
        t = Gaussian(0, 1)
    else:
        t = _half(t0)
        if t is None:
            scale, t = 2, t0
    col = [scale * T.t(k) for k in range(d)]
    n = 2 * d - 1
    coeffs = [0] * (n + 1)
    coeffs[0] = -conj(t)
    for k in range(1, d):
        coeffs[k] = -conj(col[k])
        coeffs[n - k] = col[k]
    coeffs[n] = t
    S_minus1 = SymPoly([1] + [0] * (n - 1) + [1]) if n else SymPoly([2])
    return TPolynomial(S_minus1, SymPoly(coeffs, n), t, scale)


def _as_real(x):
    if isinstance(x, Gaussian):
        if x.im:
            raise InternalInconsistency(f"a Hermitian minor came out non-real: {x}")
        return x.re
    return x


def principal_minors(T: ToeplitzSpec, base: int = 2) -> list:
    """``[delta_1, ..., delta_d]`` of a Hermitian Toeplitz matrix via the quotient chain."""
    from .fssr import subresultant_constant_terms

    tp = build_t_polynomial(T)
    if T.d == 1:
        return [_as_real(T.t(0))]
    terms = subresultant_constant_terms(tp.S_minus1, tp.S0, T.d, base)
    out = []
    for j, c in enumerate(terms, start=1):
        if tp.scale != 1:
            c = exact_div(c, tp.scale**j)
        out.append(_as_real(c))
    return out


def _zero_run_signature(signs: list):
    """Signature from minor signs ``[1, s_1, ..., s_d]`` with zero runs, or None.

    Pairs of consecutive nonzero minors contribute ``s_{j-1} s_j``.  A bounded
    run of p zero minors is accepted only in the shape observed for Hermitian
    Toeplitz matrices (p odd and ``s_k s_{k+p+1} = (-1)^{(p+1)/2}``) and
    contributes 0; a trailing run contributes 0.  Anything else returns None.
    """
    d = len(signs) - 1
    total, j = 0, 1
    while j <= d:
        if signs[j]:
            total += signs[j - 1] * signs[j]
            j += 1
            continue
        e = j
        while e <= d and not signs[e]:
            e += 1
        p = e - j
        if e <= d and (p % 2 == 0 or signs[j - 1] * signs[e] != (-1) ** ((p + 1) // 2)):
            return None
        j = e + 1
    return total


@dataclass
class SignatureResult:
    """Signature with the minors it was read from and how it was obtained.

    ``method`` is ``"jacobi"`` (no vanishing minor), ``"zero-run"`` (the
    zero-run rule, confirmed by congruence when ``verified``) or
    ``"congruence"`` (the rule did not apply or disagreed; ``log`` says why).
    """

    signature: int
    minors: list
    method: str
    verified: bool = False
    log: list = field(default_factory=list)


def signature(T: ToeplitzSpec, verify: bool = True, base: int = 2) -> SignatureResult:
    """Signature of a Hermitian Toeplitz matrix from its principal minors.

    When every minor is nonzero the Jacobi rule is exact.  Vanishing minors go
    through the zero-run rule; with ``verify`` (the default) that answer is
    checked against exact congruence and the congruence answer wins on any
    disagreement.
    """
    minors = principal_minors(T, base)
    signs = [1] + [ring.sign(m) for m in minors]
    if all(signs):
        return SignatureResult(sum(a * b for a, b in zip(signs, signs[1:])), minors, "jacobi", True)
    guess = _zero_run_signature(signs)
    if guess is not None and not verify:
        return SignatureResult(guess, minors, "zero-run", False)
    exact = signature_by_congruence(T.dense())
    if guess == exact:
        return SignatureResult(guess, minors, "zero-run", True)
    reason = "no zero-run rule applies" if guess is None else (
        f"zero-run rule gave {guess}, congruence gave {exact}")
    return SignatureResult(exact, minors, "congruence", True, [reason])


# ------------------------------------------------------------------ inversion


def _splitting(t0):
    return (t0 - 1, 1) if t0 != 1 else (2, -1)


def fitm_pair(T: ToeplitzSpec, gamma=0, delta=0):
    """``S_{-1} = X^{2d+1} + 1`` and ``S_0 = T_{gamma, delta}`` for a general Toeplitz matrix.

    Coefficients of ``S_0``: ``-t_-, -t_{-1}, ..., -t_{-d+1}`` at ``X^0..X^{d-1}``,
    gamma at ``X^d``, delta at ``X^{d+1}``, ``t_{d-1}, ..., t_1`` at
    ``X^{d+2}..X^{2d}`` and ``t_+`` at ``X^{2d+1}``, with ``t_+ + t_- = t_0``.
    The constant term of ``S_d`` is ``det T``; ``S_{d+1}(0)`` is the determinant
    of the extension with corners ``t_{-d} = -gamma`` and ``t_d = delta``.
    """
    d = T.d
    tp, tm = _splitting(T.t(0))
    n = 2 * d + 1
    coeffs = [0] * (n + 1)
    coeffs[0] = -tm
    for k in range(1, d):
        coeffs[k] = -T.t(-k)
        coeffs[n - k] = T.t(k)
    coeffs[d], coeffs[d + 1] = gamma, delta
    coeffs[n] = tp
    A = SymPoly([1] + [0] * (n - 1) + [1])
    return A, SymPoly(coeffs, n)


def transpose(T: ToeplitzSpec) -> ToeplitzSpec:
    return ToeplitzSpec(T.d, tuple(reversed(T.diagonals)), T.hermitian)


@dataclass
class _Column:
    """Data of one chain run: ``X^{d-1} S_d = U A + V B`` and what is needed to go one further."""

    s0: object
    V: list
    reach: object
    mu_num: object
    mu_den: object
    shift: int


def _first_column_data(T: ToeplitzSpec, base: int) -> _Column:
    from .fssr import reach
    from .ssr_seq import step_scalars

    d = T.d
    A, B = fitm_pair(T)
    R = reach(A, B, d, base)
    k, (Pk, P1) = R.k, R.pair
    lcP, tP = Pk[Pk.formal_degree], Pk[0]
    first = k == 0
    if k + 1 == d:
        mu_num, mu_den, e, s0 = 1, 1, 0, P1[0]
    elif P1.is_zero() or not any(P1.coeffs[: d - k]):
        raise Singular("the matrix is not invertible", 0)
    else:
        alpha = P1.valuation
        tc = P1[alpha]
        if alpha == 0:
            m = d - k
            mu_num = tc ** (m - 1)
            mu_den = 1 if first else tP ** (m - 1)
            e = m - 1
        else:
            beta = P1.formal_degree - P1.degree
            if alpha + beta != d - k:
                raise Singular("the matrix is not invertible", 0)
            mu_num, mu_den, _ = step_scalars(lcP, tP, P1.lc, tc, alpha, beta, first)
            e = beta - 1
        s0 = exact_div(mu_num * tc, mu_den)
    if not s0:
        raise Singular("the matrix is not invertible", s0)
    m10, m11 = R.matrix.normalized()[2:]
    V = [exact_div(mu_num * m11[i - e], mu_den) if i >= e else 0 for i in range(d)]
    return _Column(s0, V, R, mu_num, mu_den, e)


def _extended_column(T: ToeplitzSpec, col: _Column, gamma, delta):
    """``(S_{d+1}(0), V_d)`` for the pair with extension parameters gamma, delta."""
    from .ssr_seq import advance, compose_transitions

    d = T.d
    A, B = fitm_pair(T, gamma, delta)
    R = col.reach
    k = R.k
    u, v = R.matrix.apply(A, B)
    n = 2 * d + 1 - k
    if k == 0:
        Sk, Sk1 = u, v
    else:
        Sk, Sk1 = u.unshift(k - 1), v.unshift(k)
    Sk, Sk1 = Sk.with_formal_degree(n), Sk1.with_formal_degree(n)
    alpha, beta = Sk1.valuation, n - Sk1.degree
    if k + alpha + beta != d:
        raise InternalInconsistency("index d is not regular although T_{d-1} is singular")
    _, Sd1, _, step = advance(Sk, Sk1, k == 0)
    M = compose_transitions(step, R.matrix)
    m11 = M.normalized()[3]
    return Sd1[0], [m11[i] for i in range(d + 1)]


@dataclass
class GsGenerators:
    """Fraction-free generators of an inverse Toeplitz matrix.

    Branch ``"*"``: ``x = x_num / denominator`` and ``y = y_num / denominator``
    are the first and last columns of the inverse (length d).  Branch ``"**"``:
    the same for the extended matrix of order d + 1 whose corners are
    ``t_{-d} = -gamma`` and ``t_d = delta``.
    """

    branch: str
    d: int
    x_num: list
    y_num: list
    denominator: object
    gamma_delta: tuple = (0, 0)
    attempts: int = 0
    det: object = None

    @property
    def x(self) -> list:
        return [field_div(v, self.denominator) for v in self.x_num]

    @property
    def y(self) -> list:
        return [field_div(v, self.denominator) for v in self.y_num]


def fitm_invert(T: ToeplitzSpec, dense: bool = False, base: int = 2):
    """Invert a Toeplitz matrix through its subresultant chain.

    Returns ``(generators, dense_inverse_or_None)``.  Raises :class:`Singular`
    when ``det T = 0``.  When the leading minor of order d-1 vanishes the first
    column of the inverse starts with 0 and the matrix is extended by one row
    and column; up to three extensions are tried.
    """
    d = T.d
    if d == 1:
        t0 = T.t(0)
        if not t0:
            raise Singular("the matrix is not invertible", t0)
        gen = GsGenerators("*", 1, [1], [1], t0, det=t0)
        return gen, (gs_assemble(gen) if dense else None)
    col = _first_column_data(T, base)
    Tt = transpose(T)
    colt = _first_column_data(Tt, base)
    s0 = col.s0
    if colt.s0 != s0:
        raise InternalInconsistency("det T and det T^t disagree")
    x_num = [-col.V[d - 1 - i] for i in range(d)]
    y_num = [-colt.V[i] for i in range(d)]
    if x_num[0]:
        gen = GsGenerators("*", d, x_num, y_num, s0, det=s0)
        return gen, (gs_assemble(gen) if dense else None)

    # first column starts with 0: both coefficients of the extension must be live
    row_num = [-colt.V[d - 1 - i] for i in range(d)]
    c1 = sum((T.t(d - i) * x_num[i] for i in range(1, d)), 0)
    c2 = sum((row_num[i] * T.t(-(d - i)) for i in range(1, d)), 0)
    if not c1 or not c2:
        raise InternalInconsistency("a coefficient of the extension determinant vanished")
    for attempt, (g, dl) in enumerate(((0, 0), (0, 1), (1, 0)), start=1):
        st, Vd = _extended_column(T, col, g, dl)
        if not st:
            continue
        # the transposed extension has corners t'_{-d} = delta, t'_d = -gamma
        st_t, Vd_t = _extended_column(Tt, colt, -dl, -g)
        if st_t != st:
            raise InternalInconsistency("extended determinants of T and T^t disagree")
        xt = [-Vd[d - i] for i in range(d + 1)]
        yt = [-Vd_t[i] for i in range(d + 1)]
        gen = GsGenerators("**", d, xt, yt, st, (g, dl), attempt, s0)
        return gen, (gs_assemble(gen) if dense else None)
    raise InternalInconsistency("no extension among (0,0), (0,1), (1,0) is invertible")


def _gs_parts(gen: GsGenerators):
    d, X, Y = gen.d, gen.x_num, gen.y_num
    if gen.branch == "*":
        if len(X) != d or len(Y) != d:
            raise BranchMismatch("branch * needs generators of length d")
        a = X
        b = Y[::-1]
        c = [0] + Y[: d - 1]
        e = [0] + X[:0:-1]
    elif gen.branch == "**":
        if len(X) != d + 1 or len(Y) != d + 1:
            raise BranchMismatch("branch ** needs generators of length d + 1")
        a = X[:d]
        b = Y[:0:-1]
        c = Y[:d]
        e = X[:0:-1]
    else:
        raise BranchMismatch(f"unknown branch {gen.branch!r}")
    if not X[0]:
        raise BranchMismatch("the first generator entry must be nonzero")
    return a, b, c, e, gen.denominator * X[0]


def _normalize(q):
    if type(q) is Fraction and q.denominator == 1:
        return q.numerator
    if isinstance(q, Gaussian) and not q.is_integral:
        if Fraction(q.re).denominator == 1 and Fraction(q.im).denominator == 1:
            return Gaussian(int(q.re), int(q.im))
    return q


def gs_assemble(gen: GsGenerators, d: int | None = None) -> list:
    """Dense inverse ``(1/x_0) [L(a) U(b) - L(c) U(e)]`` from the generators.

    ``L(a)`` is lower triangular Toeplitz with first column a, ``U(b)`` upper
    triangular Toeplitz with first row b.  Entries satisfy
    ``W[i][j] = W[i-1][j-1] + a_i b_j - c_i e_j``, so assembly is O(d^2).
    """
    if d is not None and d != gen.d:
        raise BranchMismatch("dimension does not match the generators")
    a, b, c, e, den = _gs_parts(gen)
    n = gen.d
    W = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            prev = W[i - 1][j - 1] if i and j else 0
            W[i][j] = prev + a[i] * b[j] - c[i] * e[j]
    return [[_normalize(field_div(w, den)) if w else 0 for w in row] for row in W]


def _lower_apply(col: list, w: list, n: int) -> list:
    prod = mul(SymPoly(col), SymPoly(w))
    return [prod[i] for i in range(n)]


def _upper_apply(row: list, w: list, n: int) -> list:
    return _lower_apply(row, w[::-1], n)[::-1]


def gs_apply(gen: GsGenerators, rhs: Sequence) -> list:
    """``T^{-1} rhs`` from the generators with four triangular Toeplitz products."""
    a, b, c, e, den = _gs_parts(gen)
    n = gen.d
    w = list(rhs)
    if len(w) != n:
        raise InputError(f"right-hand side has length {len(w)}, expected {n}")
    left = _lower_apply(a, _upper_apply(b, w, n), n)
    right = _lower_apply(c, _upper_apply(e, w, n), n)
    return [_normalize(field_div(p - q, den)) if p - q else 0 for p, q in zip(left, right)]
