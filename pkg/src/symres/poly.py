"""Univariate polynomials that remember their formal degree.

A :class:`SymPoly` is a coefficient tuple ``(co_0, ..., co_D)`` where ``D`` is
the *formal* degree.  Leading coefficients may be zero: a subresultant S_j of
a pair of degree d always lives at formal degree d - j whatever its actual
degree, and the symmetric truncation below reads coefficients relative to that
formal degree.  Trimming them silently would shift the top half of every
truncation, so the formal degree is explicit state and never inferred.

The module also provides the *symmetric division*, which divides by increasing
powers of X at the bottom and by decreasing powers at the top::

    A = Q * (B / X^alpha) + X^beta * R,   deg Q = alpha + beta,
                                           deg R < d - (alpha + beta)

where ``alpha`` is the valuation of B and ``beta = deg A - deg B``.
"""

from __future__ import annotations

from math import inf
from typing import Iterable, NamedTuple

from . import ring
from .errors import (
    BothZero,
    DegreeOrder,
    ExactnessViolation,
    NotDivisible,
    ZeroDivisor,
)
from .multiply import convolve


class DefectProfile(NamedTuple):
    """Valuation ``alpha`` and degree drop ``beta`` of a successor polynomial."""

    alpha: int
    beta: int


class SymPoly:
    """Immutable polynomial with an explicit formal degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = (), formal_degree: int | None = None):
        cs = tuple(coeffs)
        if formal_degree is None:
            formal_degree = max(len(cs) - 1, 0)
        if formal_degree < 0:
            raise ValueError("formal degree must be non-negative")
        n = formal_degree + 1
        if len(cs) < n:
            cs = cs + (0,) * (n - len(cs))
        elif len(cs) > n:
            if any(cs[n:]):
                raise ValueError(
                    f"coefficients beyond formal degree {formal_degree} are nonzero"
                )
            cs = cs[:n]
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("SymPoly is immutable")

    # -- construction helpers ---------------------------------------------

    @classmethod
    def zero(cls, formal_degree: int = 0) -> "SymPoly":
        return cls((), formal_degree)

    @classmethod
    def monomial(cls, c, k: int) -> "SymPoly":
        return cls((0,) * k + (c,), k)

    # -- structure ----------------------------------------------------------

    @property
    def formal_degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def degree(self):
        """Actual degree; ``-inf`` for the zero polynomial."""
        cs = self.coeffs
        for k in range(len(cs) - 1, -1, -1):
            if cs[k]:
                return k
        return -inf

    @property
    def valuation(self):
        """Largest v with X^v dividing the polynomial; ``+inf`` for zero."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return inf

    @property
    def lc(self):
        d = self.degree
        return None if d == -inf else self.coeffs[d]

    @property
    def tc(self):
        v = self.valuation
        return None if v == inf else self.coeffs[v]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_regular(self) -> bool:
        """Nonzero constant term and nonzero coefficient at the formal degree."""
        return bool(self.coeffs[0]) and bool(self.coeffs[-1])

    @property
    def ring(self) -> str:
        tag = "int"
        for c in self.coeffs:
            tag = ring.join_rings(tag, ring.ring_of(c))
        return tag

    def __getitem__(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- comparisons ----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def same_polynomial(self, other: "SymPoly") -> bool:
        """Equality of the underlying polynomials, ignoring formal degrees."""
        n = max(len(self.coeffs), len(other.coeffs))
        return all(self[k] == other[k] for k in range(n))

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, SymPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return SymPoly(tuple(x + y for x, y in zip(a, b)) + a[len(b):])

    def __sub__(self, other):
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return SymPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, SymPoly):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "SymPoly":
        return SymPoly(tuple(x * c for x in self.coeffs))

    def exact_quotient(self, c) -> "SymPoly":
        """Divide every coefficient by the scalar ``c``; raise if inexact."""
        if c == 1:
            return self
        div = ring.exact_div
        return SymPoly(tuple(div(x, c) if x else x for x in self.coeffs))

    def shift(self, k: int) -> "SymPoly":
        """Multiply by X^k (k >= 0); the formal degree grows by k."""
        if k < 0:
            return self.unshift(-k)
        return SymPoly((0,) * k + self.coeffs)

    def unshift(self, k: int) -> "SymPoly":
        """Exact division by X^k; the formal degree drops by k."""
        if k == 0:
            return self
        if any(self.coeffs[:k]):
            raise NotDivisible(f"polynomial is not divisible by X^{k}")
        rest = self.coeffs[k:]
        return SymPoly(rest if rest else (0,))

    def with_formal_degree(self, n: int) -> "SymPoly":
        """Reinterpret at formal degree ``n`` (padding or dropping zero tops)."""
        return SymPoly(self.coeffs, n)

    def conj(self) -> "SymPoly":
        return SymPoly(tuple(ring.conj(c) for c in self.coeffs))

    # -- display ------------------------------------------------------------

    def __repr__(self):
        return f"SymPoly({list(self.coeffs)!r}, formal_degree={self.formal_degree})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("X" if k == 1 else f"X^{k}")
            coef = str(c)
            if isinstance(c, ring.Gaussian) and c.re and c.im:
                coef = f"({coef})"
            if mono and c == 1:
                terms.append(mono)
            else:
                terms.append(f"{coef}*{mono}" if mono else coef)
        body = " + ".join(terms) if terms else "0"
        return f"{body}  [formal degree {self.formal_degree}]"


# ---------------------------------------------------------------- operations


def as_poly(p, formal_degree: int | None = None) -> SymPoly:
    if isinstance(p, SymPoly):
        return p if formal_degree is None else p.with_formal_degree(formal_degree)
    return SymPoly(p, formal_degree)


def profile(P: SymPoly):
    """``(degree, valuation, lc, tc)``; the zero polynomial gives ``(-inf, inf, None, None)``."""
    return P.degree, P.valuation, P.lc, P.tc


def normalize_pair(A: SymPoly, B: SymPoly):
    """Divide both polynomials by the largest common power of X.

    Returns ``(A', B', m)``; ``A'`` sits at formal degree ``deg A'`` and ``B'`` is
    padded to the same formal degree.
    """
    if A.is_zero() and B.is_zero():
        raise BothZero("both polynomials are zero")
    m = min(A.valuation, B.valuation)
    A1, B1 = A.unshift(m), B.unshift(m)
    d = A1.degree
    if d == -inf or B1.degree > d:
        raise DegreeOrder("the first polynomial must have the larger degree")
    return A1.with_formal_degree(d), B1.with_formal_degree(d), m


def sym_truncate(P: SymPoly, ell: int) -> SymPoly:
    """Keep the ``ell`` lowest and ``ell`` highest coefficients (formal degree 2*ell - 1)."""
    if ell < 0:
        raise ValueError("truncation order must be non-negative")
    if ell == 0:
        return SymPoly.zero()
    d = P.formal_degree
    if ell > d // 2:
        return P
    cs = P.coeffs
    return SymPoly(cs[:ell] + cs[d - ell + 1:], 2 * ell - 1)


def reciprocal(P: SymPoly) -> SymPoly:
    """``X^d * conj(P)(1/X)`` at the formal degree d of P."""
    return SymPoly(tuple(ring.conj(c) for c in reversed(P.coeffs)))


def mul(P: SymPoly, Q: SymPoly, backend: str | None = None) -> SymPoly:
    """Exact product; the formal degree is the sum of the formal degrees."""
    fd = P.formal_degree + Q.formal_degree
    if P.is_zero() or Q.is_zero():
        return SymPoly.zero(fd)
    vp, dp = P.valuation, P.degree
    vq, dq = Q.valuation, Q.degree
    prod = convolve(P.coeffs[vp:dp + 1], Q.coeffs[vq:dq + 1], backend)
    return SymPoly((0,) * (vp + vq) + tuple(prod), fd)


def sym_divide(A: SymPoly, B: SymPoly, exact: bool = False):
    """Symmetric division ``A = Q*(B/X^alpha) + X^beta*R``.

    Returns ``(Q, R, DefectProfile(alpha, beta))`` with ``alpha = v(B)`` and
    ``beta = deg A - deg B``.  The low part of Q comes from division by
    increasing powers up to order beta, the high part from Euclidean division
    of the cofactor.  Coefficients are computed in the fraction field unless
    ``exact`` is set, in which case every division must be exact in the ring
    of the operands and a remainder raises :class:`ExactnessViolation`.
    """
    if B.is_zero():
        raise ZeroDivisor("symmetric division by the zero polynomial")
    d, db = A.degree, B.degree
    if d == -inf:
        alpha = B.valuation
        return SymPoly.zero(), SymPoly.zero(), DefectProfile(alpha, 0)
    if db > d:
        raise DegreeOrder(f"divisor degree {db} exceeds dividend degree {d}")
    alpha = B.valuation
    beta = d - db
    bp = B.coeffs[alpha:db + 1]
    m = len(bp) - 1
    div = ring.exact_div if exact else ring.field_div
    rem = list(A.coeffs[:d + 1])
    try:
        q = []
        t = bp[0]
        for i in range(beta):
            c = rem[i]
            if c:
                c = div(c, t)
                for k, bk in enumerate(bp):
                    if bk:
                        rem[i + k] -= c * bk
            q.append(c)
        r1 = rem[beta:]
        top = bp[-1]
        high = [0] * (len(r1) - m)
        for i in range(len(r1) - 1 - m, -1, -1):
            c = r1[i + m]
            if c:
                c = div(c, top)
                high[i] = c
                for k, bk in enumerate(bp):
                    if bk:
                        r1[i + k] -= c * bk
    except NotDivisible as exc:
        raise ExactnessViolation(
            "symmetric division expected to be exact left a remainder",
            {"dividend": A, "divisor": B},
        ) from exc
    Q = SymPoly(q + high, alpha + beta)
    R = SymPoly(r1[:m], max(m - 1, 0))
    return Q, R, DefectProfile(alpha, beta)


def squo(A: SymPoly, B: SymPoly, exact: bool = False) -> SymPoly:
    return sym_divide(A, B, exact)[0]


def srem(A: SymPoly, B: SymPoly, exact: bool = False) -> SymPoly:
    return sym_divide(A, B, exact)[1]
