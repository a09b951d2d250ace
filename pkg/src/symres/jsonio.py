"""JSON encodings of coefficients, polynomials, pairs and Toeplitz matrices.

Coefficients never travel as JSON numbers:

* integers are decimal strings, ``"-12"``;
* rationals are ``{"num": "3", "den": "4"}``;
* Gaussian integers are ``{"re": "1", "im": "-2"}``;
* Gaussian rationals are ``{"re": <rational>, "im": <rational>}``.

Parsers are strict about shape and report the JSON path of the offending
field.  Plain JSON integers are accepted on input for convenience, floats and
booleans are not.
"""

from __future__ import annotations

import json
import os
import tempfile
from fractions import Fraction
from typing import Any

from .errors import InputError
from .poly import SymPoly
from .ring import RING_TAGS, Gaussian, coerce, join_rings, ring_of
from .toeplitz import ToeplitzSpec


class SchemaError(InputError):
    """A JSON document does not match the expected schema."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


# ---------------------------------------------------------------- coefficients


def _encode_rational(x) -> dict:
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def encode_coeff(x, tag: str | None = None) -> Any:
    """Encode a coefficient, embedded into ``tag`` when given."""
    if tag is not None:
        x = coerce(x, tag)
    kind = ring_of(x)
    if kind == "int":
        return str(int(x))
    if kind == "rat":
        return _encode_rational(x)
    if kind == "gauss":
        return {"re": str(x.re), "im": str(x.im)}
    if kind == "gaussrat":
        return {"re": _encode_rational(x.re), "im": _encode_rational(x.im)}
    raise TypeError(f"no JSON encoding for {kind} coefficients")


def _parse_int(v, path: str) -> int:
    if isinstance(v, bool):
        raise SchemaError(path, "expected an integer, got a boolean")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        try:
            return int(v.strip(), 10)
        except ValueError:
            raise SchemaError(path, f"not a decimal integer: {v!r}") from None
    raise SchemaError(path, f"expected a decimal string, got {type(v).__name__}")


def _parse_rational(v, path: str):
    if isinstance(v, dict):
        if set(v) != {"num", "den"}:
            raise SchemaError(path, "a rational needs exactly the keys num and den")
        den = _parse_int(v["den"], path + ".den")
        if den == 0:
            raise SchemaError(path + ".den", "zero denominator")
        return Fraction(_parse_int(v["num"], path + ".num"), den)
    return _parse_int(v, path)


def decode_coeff(v, path: str = "$"):
    """Inverse of :func:`encode_coeff`; rationals with denominator 1 stay rational."""
    if isinstance(v, dict) and ("re" in v or "im" in v):
        if set(v) != {"re", "im"}:
            raise SchemaError(path, "a Gaussian needs exactly the keys re and im")
        re = _parse_rational(v["re"], path + ".re")
        im = _parse_rational(v["im"], path + ".im")
        if type(re) is Fraction or type(im) is Fraction:
            return Gaussian(Fraction(re), Fraction(im))
        return Gaussian(re, im)
    return _parse_rational(v, path)


def _common_tag(values) -> str:
    tag = "int"
    for c in values:
        tag = join_rings(tag, ring_of(c))
    return tag


def _embed_all(values: list, tag: str | None, path: str) -> tuple[list, str]:
    found = _common_tag(values)
    if tag is None:
        return values, found
    if tag not in RING_TAGS:
        raise SchemaError(path, f"unknown ring {tag!r}")
    if join_rings(found, tag) != tag:
        raise SchemaError(path, f"{found} coefficients do not fit in ring {tag}")
    return [coerce(c, tag) for c in values], tag


# ----------------------------------------------------------------- polynomials


def encode_poly(P: SymPoly, tag: str | None = None) -> dict:
    tag = tag or P.ring
    return {
        "ring": tag,
        "formal_degree": P.formal_degree,
        "coeffs": [encode_coeff(c, tag) for c in P.coeffs],
    }


def decode_poly(obj, path: str = "$", ring: str | None = None) -> SymPoly:
    """Parse ``{"ring", "formal_degree", "coeffs"}``; ``ring`` overrides the document's tag."""
    if not isinstance(obj, dict):
        raise SchemaError(path, "expected a polynomial object")
    if "coeffs" not in obj:
        raise SchemaError(path, "missing field coeffs")
    raw = obj["coeffs"]
    if not isinstance(raw, list) or not raw:
        raise SchemaError(path + ".coeffs", "expected a non-empty list")
    coeffs = [decode_coeff(c, f"{path}.coeffs[{i}]") for i, c in enumerate(raw)]
    declared = obj.get("ring")
    if declared is not None and declared not in RING_TAGS:
        raise SchemaError(path + ".ring", f"unknown ring {declared!r}")
    coeffs, _ = _embed_all(coeffs, ring or declared, path)
    fd = obj.get("formal_degree", len(coeffs) - 1)
    fd = _parse_int(fd, path + ".formal_degree")
    if fd < 0:
        raise SchemaError(path + ".formal_degree", "must be non-negative")
    if fd < len(coeffs) - 1 and any(coeffs[fd + 1:]):
        raise SchemaError(path + ".formal_degree", "smaller than the actual degree")
    return SymPoly(coeffs, fd)


def decode_pair(obj, path: str = "$", ring: str | None = None) -> tuple[SymPoly, SymPoly]:
    """Parse ``{"A": poly, "B": poly}``."""
    if not isinstance(obj, dict) or "A" not in obj or "B" not in obj:
        raise SchemaError(path, "expected an object with fields A and B")
    return decode_poly(obj["A"], path + ".A", ring), decode_poly(obj["B"], path + ".B", ring)


def encode_pair(A: SymPoly, B: SymPoly, tag: str | None = None) -> dict:
    tag = tag or join_rings(A.ring, B.ring)
    return {"A": encode_poly(A, tag), "B": encode_poly(B, tag)}


# -------------------------------------------------------------------- Toeplitz


def encode_toeplitz(T: ToeplitzSpec, tag: str | None = None) -> dict:
    tag = tag or _common_tag(T.diagonals)
    return {
        "d": T.d,
        "diagonals": [encode_coeff(c, tag) for c in T.diagonals],
        "hermitian": T.hermitian,
    }


def decode_toeplitz(obj, path: str = "$", ring: str | None = None) -> ToeplitzSpec:
    """Parse ``{"d", "diagonals": [t_{-(d-1)} .. t_{d-1}], "hermitian"}``."""
    if not isinstance(obj, dict):
        raise SchemaError(path, "expected a Toeplitz object")
    for key in ("d", "diagonals"):
        if key not in obj:
            raise SchemaError(path, f"missing field {key}")
    d = _parse_int(obj["d"], path + ".d")
    raw = obj["diagonals"]
    if not isinstance(raw, list):
        raise SchemaError(path + ".diagonals", "expected a list")
    if d < 1 or len(raw) != 2 * d - 1:
        raise SchemaError(path + ".diagonals", f"expected {2 * d - 1} entries for d={d}")
    diags = [decode_coeff(c, f"{path}.diagonals[{i}]") for i, c in enumerate(raw)]
    diags, _ = _embed_all(diags, ring, path)
    herm = obj.get("hermitian", False)
    if not isinstance(herm, bool):
        raise SchemaError(path + ".hermitian", "expected a boolean")
    try:
        return ToeplitzSpec(d, tuple(diags), herm)
    except InputError as exc:
        raise SchemaError(path, str(exc)) from None


# ------------------------------------------------------------------------ files


def dumps(obj) -> str:
    """Canonical text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def write_atomic(path: str, text: str) -> None:
    """Write through a temporary file in the target directory and rename it into place."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".symres-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"invalid JSON: {exc}") from None
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
