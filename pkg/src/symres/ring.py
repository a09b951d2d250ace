"""Exact coefficient rings with an involution.

Coefficients are plain Python values so that arithmetic on integers stays on
the fast built-in path:

* ``int`` for the integers,
* :class:`fractions.Fraction` for the rationals,
* :class:`Gaussian` for the Gaussian integers and Gaussian rationals (its two
  parts are ``int`` or ``Fraction``),
* elements of :func:`prime_field` classes, admitted only for benchmarking.

The ring of a value is described by a short tag (``"int"``, ``"gauss"``,
``"rat"``, ``"gaussrat"``, ``"zp"``).  Mixed arithmetic lands in the smallest
ring containing both operands, mirroring how Python promotes ``int`` to
``Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import DivisionByZero, NotDivisible, NotReal

RING_TAGS = ("int", "gauss", "rat", "gaussrat")


def _check_part(x):
    if type(x) is int or type(x) is Fraction:
        return x
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return int(x)
    if isinstance(x, Fraction):
        return Fraction(x)
    raise TypeError(f"Gaussian parts must be int or Fraction, got {type(x).__name__}")


class Gaussian:
    """An element ``re + im*i`` of the Gaussian integers or Gaussian rationals."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _check_part(re))
        object.__setattr__(self, "im", _check_part(im))

    def __setattr__(self, name, value):
        raise AttributeError("Gaussian values are immutable")

    @staticmethod
    def _parts(other):
        if isinstance(other, Gaussian):
            return other.re, other.im
        if type(other) is int or type(other) is Fraction or isinstance(other, (int, Fraction)):
            return other, 0
        return None

    def __add__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return Gaussian(self.re + p[0], self.im + p[1])

    __radd__ = __add__

    def __sub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return Gaussian(self.re - p[0], self.im - p[1])

    def __rsub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return Gaussian(p[0] - self.re, p[1] - self.im)

    def __mul__(self, other):
        if isinstance(other, Gaussian):
            a, b, c, d = self.re, self.im, other.re, other.im
            return Gaussian(a * c - b * d, a * d + b * c)
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return Gaussian(self.re * p[0], self.im * p[0])

    __rmul__ = __mul__

    def __neg__(self):
        return Gaussian(-self.re, -self.im)

    def __pos__(self):
        return self

    def __truediv__(self, other):
        return field_div(self, other)

    def __rtruediv__(self, other):
        return field_div(other, self)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Gaussian(1, 0)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return self.re == p[0] and self.im == p[1]

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def conjugate(self) -> "Gaussian":
        return Gaussian(self.re, -self.im)

    def norm(self):
        return self.re * self.re + self.im * self.im

    @property
    def is_integral(self) -> bool:
        return type(self.re) is int and type(self.im) is int

    def __repr__(self):
        return f"Gaussian({self.re!r}, {self.im!r})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{abs(self.im)}i"


I = Gaussian(0, 1)


class _PrimeFieldElement:
    """Base class of the per-modulus element classes built by :func:`prime_field`."""

    __slots__ = ("v",)
    P = 0

    def __init__(self, v):
        if isinstance(v, _PrimeFieldElement):
            v = v.v
        self.v = v % self.P

    def _coerce(self, other):
        if type(other) is type(self):
            return other.v
        if isinstance(other, int):
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return type(self)(self.v + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return type(self)(self.v - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return type(self)(o - self.v)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return type(self)(self.v * o)

    __rmul__ = __mul__

    def __neg__(self):
        return type(self)(-self.v)

    def __pow__(self, n: int):
        return type(self)(pow(self.v, n, self.P))

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.v - o) % self.P == 0

    def __hash__(self):
        return hash((self.P, self.v))

    def inverse(self):
        if self.v == 0:
            raise DivisionByZero("inverse of zero in a prime field")
        return type(self)(pow(self.v, -1, self.P))

    def __truediv__(self, other):
        return field_div(self, other)

    def __repr__(self):
        return f"GF{self.P}({self.v})"


@lru_cache(maxsize=None)
def prime_field(p: int) -> type:
    """Return the element class of the prime field of order ``p``.

    Prime fields are outside the four supported coefficient rings; they exist so
    the scaling benchmark can run without coefficient growth.
    """
    if p < 2:
        raise ValueError("modulus must be a prime >= 2")
    return type(f"GF{p}", (_PrimeFieldElement,), {"__slots__": (), "P": p})


def ring_of(x) -> str:
    """Return the ring tag of a single coefficient."""
    t = type(x)
    if t is int or isinstance(x, int):
        return "int"
    if t is Fraction:
        return "rat"
    if t is Gaussian:
        return "gauss" if x.is_integral else "gaussrat"
    if isinstance(x, _PrimeFieldElement):
        return "zp"
    raise TypeError(f"unsupported coefficient type {t.__name__}")


_JOIN = {
    ("int", "int"): "int",
    ("int", "rat"): "rat",
    ("int", "gauss"): "gauss",
    ("int", "gaussrat"): "gaussrat",
    ("rat", "rat"): "rat",
    ("rat", "gauss"): "gaussrat",
    ("rat", "gaussrat"): "gaussrat",
    ("gauss", "gauss"): "gauss",
    ("gauss", "gaussrat"): "gaussrat",
    ("gaussrat", "gaussrat"): "gaussrat",
}


def join_rings(a: str, b: str) -> str:
    """Smallest supported ring containing both rings."""
    if a == b:
        return a
    if "zp" in (a, b):
        other = b if a == "zp" else a
        if other == "int":
            return "zp"
        raise TypeError("prime-field elements only mix with integers")
    key = (a, b) if (a, b) in _JOIN else (b, a)
    return _JOIN[key]


def coerce(x, tag: str):
    """Embed ``x`` into the ring named ``tag``."""
    src = ring_of(x)
    if join_rings(src, tag) != tag:
        raise TypeError(f"cannot embed a {src} value into {tag}")
    if tag == "int" or tag == src:
        return x
    if tag == "rat":
        return Fraction(x)
    if tag == "gauss":
        return x if isinstance(x, Gaussian) else Gaussian(x, 0)
    if tag == "gaussrat":
        if isinstance(x, Gaussian):
            return Gaussian(Fraction(x.re), Fraction(x.im))
        return Gaussian(Fraction(x), Fraction(0))
    raise TypeError(f"cannot embed into {tag}")


def conj(x):
    """Complex conjugation; the identity on real rings and on prime fields."""
    if isinstance(x, Gaussian):
        return Gaussian(x.re, -x.im)
    return x


def is_real(x) -> bool:
    return conj(x) == x


def sign(x) -> int:
    """Sign of a real element: -1, 0 or +1."""
    if isinstance(x, Gaussian):
        if x.im != 0:
            raise NotReal(f"{x} is not real")
        x = x.re
    elif isinstance(x, _PrimeFieldElement):
        raise NotReal("prime-field elements have no sign")
    return (x > 0) - (x < 0)


def is_zero(x) -> bool:
    return not x


def _div_int(x: int, y: int) -> int:
    q, r = divmod(x, y)
    if r:
        raise NotDivisible(f"{x} is not divisible by {y} in the integers")
    return q


def exact_div(x, y):
    """Return ``q`` with ``q*y == x`` in the ring of the operands.

    The ring is the smallest one containing ``x`` and ``y``; over the integers
    and the Gaussian integers a nonzero remainder raises :class:`NotDivisible`.
    """
    if type(x) is int and type(y) is int:
        if y == 0:
            raise DivisionByZero("exact division by zero")
        return _div_int(x, y)
    if not y:
        raise DivisionByZero("exact division by zero")
    if isinstance(y, Gaussian) or isinstance(x, Gaussian):
        xg = x if isinstance(x, Gaussian) else Gaussian(x, 0)
        yg = y if isinstance(y, Gaussian) else Gaussian(y, 0)
        if xg.is_integral and yg.is_integral:
            if yg.im == 0:
                yr = yg.re
                return Gaussian(_div_or_raise(xg.re, yr, x, y), _div_or_raise(xg.im, yr, x, y))
            n = yg.norm()
            num = xg * yg.conjugate()
            return Gaussian(_div_or_raise(num.re, n, x, y), _div_or_raise(num.im, n, x, y))
        return field_div(x, y)
    if isinstance(x, _PrimeFieldElement) or isinstance(y, _PrimeFieldElement):
        return field_div(x, y)
    if type(x) is Fraction or type(y) is Fraction:
        return Fraction(x) / Fraction(y)
    if isinstance(x, int) and isinstance(y, int):
        return _div_int(int(x), int(y))
    raise TypeError(f"unsupported operand types {type(x).__name__}, {type(y).__name__}")


def _div_or_raise(a: int, b: int, x, y) -> int:
    q, r = divmod(a, b)
    if r:
        raise NotDivisible(f"{x} is not divisible by {y} in the Gaussian integers")
    return q


def field_div(x, y):
    """Division in the fraction field; integers promote to rationals."""
    if not y:
        raise DivisionByZero("division by zero")
    if isinstance(x, _PrimeFieldElement) or isinstance(y, _PrimeFieldElement):
        cls = type(x) if isinstance(x, _PrimeFieldElement) else type(y)
        return cls(x) * cls(y).inverse()
    if isinstance(y, Gaussian):
        n = Fraction(y.norm())
        num = x * y.conjugate()
        if isinstance(num, Gaussian):
            return Gaussian(Fraction(num.re) / n, Fraction(num.im) / n)
        return Gaussian(Fraction(num) / n, Fraction(0))
    if isinstance(x, Gaussian):
        yf = Fraction(y)
        return Gaussian(Fraction(x.re) / yf, Fraction(x.im) / yf)
    return Fraction(x) / Fraction(y)


def divides(y, x) -> bool:
    """True when ``y`` divides ``x`` in the ring of the operands."""
    try:
        exact_div(x, y)
    except NotDivisible:
        return False
    return True


def one_like(x):
    """The unit element of the ring of ``x``."""
    if isinstance(x, _PrimeFieldElement):
        return type(x)(1)
    if isinstance(x, Gaussian):
        return Gaussian(type(x.re)(1), type(x.im)(0))
    if type(x) is Fraction:
        return Fraction(1)
    return 1


def bit_size(x) -> int:
    """Bit length of a coefficient; the larger part for Gaussian integers."""
    if isinstance(x, Gaussian):
        return max(bit_size(x.re), bit_size(x.im))
    if type(x) is Fraction:
        return max(abs(x.numerator).bit_length(), x.denominator.bit_length())
    if isinstance(x, _PrimeFieldElement):
        return x.v.bit_length()
    return abs(x).bit_length()
