"""Exact convolution of coefficient sequences.

Three interchangeable backends compute the same product:

``schoolbook``
    The quadratic double loop; works for every coefficient type.
``ntt``
    Number-theoretic transforms modulo several word-size primes of the form
    ``c*2^k + 1``, recombined by the Chinese remainder theorem.  The number of
    primes is sized from the operand bit lengths so the recombination is exact.
    Transforms are vectorised with numpy; residues stay below 2^30 so every
    butterfly product fits in an int64.
``kronecker``
    Packs each operand into one big integer (evaluation at a power of two),
    multiplies the integers, and unpacks.  With gmpy2 installed the product uses
    GMP's asymptotically fast multiplication; this is the better choice once the
    coefficients are hundreds of bits wide.

:func:`convolve` picks a backend from the operand sizes and routes Gaussian,
rational and prime-field inputs through the integer kernels.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

import numpy as np

from .ring import Gaussian, _PrimeFieldElement

try:  # optional accelerator for the big-integer product
    import gmpy2

    _mpz = gmpy2.mpz
except ImportError:  # pragma: no cover - exercised only without gmpy2
    _mpz = None

SCHOOLBOOK_CUTOFF = 24
NTT_MAX_PRIMES = 8
_WORD_BITS = 62

BACKENDS = ("schoolbook", "ntt", "kronecker")


# ---------------------------------------------------------------- schoolbook


def schoolbook(a, b) -> list:
    """Quadratic convolution, valid for any coefficient type."""
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, bj in enumerate(b):
        if not bj:
            continue
        for i, ai in enumerate(a):
            if ai:
                out[i + j] += ai * bj
    return out


# ---------------------------------------------------------------------- NTT


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _primitive_root(p: int) -> int:
    m = p - 1
    factors = []
    f = 2
    while f * f <= m:
        if m % f == 0:
            factors.append(f)
            while m % f == 0:
                m //= f
        f += 1
    if m > 1:
        factors.append(m)
    g = 2
    while any(pow(g, (p - 1) // q, p) == 1 for q in factors):
        g += 1
    return g


@lru_cache(maxsize=None)
def ntt_primes(count: int, min_two_adicity: int = 22) -> tuple:
    """The ``count`` largest primes ``p < 2^30`` with ``2^min_two_adicity | p-1``."""
    primes = []
    step = 1 << min_two_adicity
    c = ((1 << 30) - 1) // step
    while len(primes) < count and c > 0:
        p = c * step + 1
        if p < (1 << 30) and _is_prime(p):
            primes.append(p)
        c -= 1
    if len(primes) < count:
        raise ValueError("not enough transform primes")
    return tuple(primes)


@lru_cache(maxsize=None)
def _bitrev(n: int) -> np.ndarray:
    bits = n.bit_length() - 1
    idx = np.arange(n, dtype=np.int64)
    rev = np.zeros(n, dtype=np.int64)
    for b in range(bits):
        rev |= ((idx >> b) & 1) << (bits - 1 - b)
    return rev


@lru_cache(maxsize=None)
def _twiddles(p: int, h: int, inverse: bool) -> np.ndarray:
    g = _primitive_root(p)
    w = pow(g, (p - 1) // (2 * h), p)
    if inverse:
        w = pow(w, p - 2, p)
    out = np.empty(h, dtype=np.int64)
    x = 1
    for i in range(h):
        out[i] = x
        x = x * w % p
    return out


def _ntt(a: np.ndarray, p: int, inverse: bool = False) -> np.ndarray:
    n = a.shape[0]
    a = a[_bitrev(n)]
    h = 1
    while h < n:
        blocks = a.reshape(-1, 2 * h)
        u = blocks[:, :h]
        v = blocks[:, h:] * _twiddles(p, h, inverse) % p
        a = np.concatenate(((u + v) % p, (u - v) % p), axis=1).reshape(n)
        h *= 2
    if inverse:
        a = a * pow(n, p - 2, p) % p
    return a


def _ntt_residues(a: np.ndarray, b: np.ndarray, primes, size: int) -> list:
    """Cyclic products of int64 arrays modulo each prime, at transform length ``size``."""
    res = []
    for p in primes:
        fa = np.zeros(size, dtype=np.int64)
        fb = np.zeros(size, dtype=np.int64)
        fa[: a.shape[0]] = a % p
        fb[: b.shape[0]] = b % p
        prod = _ntt(fa, p) * _ntt(fb, p) % p
        res.append(_ntt(prod, p, inverse=True))
    return res


def _garner_digits(residues, primes) -> list:
    """Mixed-radix digits c_i with x = c_0 + p_0 c_1 + p_0 p_1 c_2 + ..., vectorised."""
    digits = []
    for i, (r, p) in enumerate(zip(residues, primes)):
        x = r.copy()
        for j in range(i):
            inv = pow(primes[j], p - 2, p)
            x = (x - digits[j] % p) % p * inv % p
        digits.append(x)
    return digits


def _primes_needed(bits_a: int, bits_b: int, n: int) -> int:
    need = bits_a + bits_b + max(n, 1).bit_length() + 2
    return -(-need // 29)


def ntt_convolve(a, b) -> list:
    """Exact integer convolution through multi-prime transforms."""
    if not a or not b:
        return []
    ba = max((abs(x).bit_length() for x in a), default=0)
    bb = max((abs(x).bit_length() for x in b), default=0)
    if ba == 0 or bb == 0:
        return [0] * (len(a) + len(b) - 1)
    if max(ba, bb) > _WORD_BITS:
        raise ValueError("ntt backend needs coefficients below 2^62")
    k = _primes_needed(ba, bb, min(len(a), len(b)))
    primes = ntt_primes(k)
    n_out = len(a) + len(b) - 1
    size = 1 << (n_out - 1).bit_length()
    av = np.array(a, dtype=np.int64)
    bv = np.array(b, dtype=np.int64)
    digits = _garner_digits(_ntt_residues(av, bv, primes, size), primes)
    cols = [d[:n_out].tolist() for d in digits]
    modulus = 1
    for p in primes:
        modulus *= p
    half = modulus // 2
    out = []
    for vals in zip(*cols):
        x = 0
        for p, c in zip(reversed(primes), reversed(vals)):
            x = x * p + c
        out.append(x - modulus if x > half else x)
    return out


def ntt_convolve_mod(a, b, p: int) -> list:
    """Convolution of residues modulo a word-size prime ``p`` (< 2^31)."""
    if not a or not b:
        return []
    primes = ntt_primes(3)
    n_out = len(a) + len(b) - 1
    size = 1 << (n_out - 1).bit_length()
    av = np.array(a, dtype=np.int64)
    bv = np.array(b, dtype=np.int64)
    digits = _garner_digits(_ntt_residues(av, bv, primes, size), primes)
    m0 = primes[0] % p
    m01 = primes[0] * primes[1] % p
    x = digits[0][:n_out] % p
    x = (x + digits[1][:n_out] % p * m0) % p
    x = (x + digits[2][:n_out] % p * m01) % p
    return x.tolist()


# ---------------------------------------------------------------- Kronecker


def _pack(coeffs, width: int) -> int:
    zero = bytes(width)
    pos = b"".join(c.to_bytes(width, "little") if c > 0 else zero for c in coeffs)
    neg = b"".join((-c).to_bytes(width, "little") if c < 0 else zero for c in coeffs)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def kronecker_convolve(a, b) -> list:
    """Exact integer convolution by packing into big integers."""
    if not a or not b:
        return []
    ba = max((abs(x).bit_length() for x in a), default=0)
    bb = max((abs(x).bit_length() for x in b), default=0)
    n_out = len(a) + len(b) - 1
    if ba == 0 or bb == 0:
        return [0] * n_out
    bits = ba + bb + min(len(a), len(b)).bit_length() + 2
    width = -(-bits // 8)
    x, y = _pack(a, width), _pack(b, width)
    if _mpz is not None and width * min(len(a), len(b)) > 2000:
        prod = int(_mpz(x) * _mpz(y))
    else:
        prod = x * y
    half = 1 << (8 * width - 1)
    bias = int.from_bytes((bytes(width - 1) + b"\x80") * n_out, "little")
    raw = (prod + bias).to_bytes(width * n_out, "little")
    return [
        int.from_bytes(raw[i * width : (i + 1) * width], "little") - half
        for i in range(n_out)
    ]


# ------------------------------------------------------------------ routing


def _int_convolve(a, b, backend: str | None) -> list:
    if backend == "schoolbook":
        return schoolbook(a, b)
    if backend == "ntt":
        return ntt_convolve(a, b)
    if backend == "kronecker":
        return kronecker_convolve(a, b)
    if min(len(a), len(b)) <= SCHOOLBOOK_CUTOFF:
        return schoolbook(a, b)
    ba = max(abs(x).bit_length() for x in a)
    bb = max(abs(x).bit_length() for x in b)
    if max(ba, bb) <= _WORD_BITS and _primes_needed(ba, bb, min(len(a), len(b))) <= NTT_MAX_PRIMES:
        return ntt_convolve(a, b)
    return kronecker_convolve(a, b)


def _common_denominator(vals) -> int:
    den = 1
    for v in vals:
        if type(v) is Fraction:
            d = v.denominator
            den = den // gcd(den, d) * d
    return den


def _rational_convolve(a, b, backend) -> list:
    da, db = _common_denominator(a), _common_denominator(b)
    ia = [int(x * da) for x in a]
    ib = [int(x * db) for x in b]
    den = da * db
    return [Fraction(c, den) for c in _int_convolve(ia, ib, backend)]


def convolve(a, b, backend: str | None = None) -> list:
    """Exact product of two coefficient sequences (lowest degree first).

    ``backend`` forces one of :data:`BACKENDS`; by default the choice is made
    from the operand lengths and bit sizes.
    """
    if backend is not None and backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}")
    if not a or not b:
        return []
    kinds = {type(x) for x in a} | {type(x) for x in b}
    if kinds <= {int}:
        return _int_convolve(list(a), list(b), backend)
    if backend == "schoolbook" or min(len(a), len(b)) <= SCHOOLBOOK_CUTOFF and backend is None:
        return schoolbook(a, b)
    fields = [k for k in kinds if issubclass(k, _PrimeFieldElement)]
    if fields:
        cls = fields[0]
        p = cls.P
        ia = [x.v if isinstance(x, _PrimeFieldElement) else x % p for x in a]
        ib = [x.v if isinstance(x, _PrimeFieldElement) else x % p for x in b]
        if p < (1 << 31) and backend in (None, "ntt"):
            return [cls(v) for v in ntt_convolve_mod(ia, ib, p)]
        return [cls(v) for v in _int_convolve(ia, ib, backend)]
    if Gaussian in kinds:
        ar = [x.re if isinstance(x, Gaussian) else x for x in a]
        ai = [x.im if isinstance(x, Gaussian) else 0 for x in a]
        br = [x.re if isinstance(x, Gaussian) else x for x in b]
        bi = [x.im if isinstance(x, Gaussian) else 0 for x in b]
        rr = convolve(ar, br, backend)
        ii = convolve(ai, bi, backend)
        ss = convolve([x + y for x, y in zip(ar, ai)], [x + y for x, y in zip(br, bi)], backend)
        return [Gaussian(p - q, s - p - q) for p, q, s in zip(rr, ii, ss)]
    return _rational_convolve(a, b, backend)
