"""Reference symmetric subresultants computed straight from determinants.

For a pair (A, B) at common formal degree d, let ``Sylv_j`` be the
``2j x (d + j)`` matrix whose rows are the coefficient vectors of
``A, XA, ..., X^{j-1}A, B, XB, ..., X^{j-1}B``.  The square matrix
``Sylv_{j,l}`` keeps the columns

* ``0 .. j-2``   (the j-1 lowest coefficients),
* ``j-1+l``      (one middle column selected by ``l``),
* ``d .. d+j-1`` (the j highest coefficients),

and the symmetric subresultant is ``S_j = sum_l det(Sylv_{j,l}) X^l`` for
``l = 0 .. d-j``.  By convention ``S_{-1} = A`` and ``S_0 = B``.

Everything here is deliberately slow and independent of the recurrence used by
the fast modules: it is the ground truth the rest of the package is tested
against.
"""

from __future__ import annotations

from itertools import permutations

from .errors import IndexOutOfRange, InputError
from .poly import SymPoly
from .ring import exact_div


def _perm_sign(p) -> int:
    sign, seen = 1, [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def cofactor_determinant(M) -> object:
    """Determinant by the Leibniz expansion; only sensible for tiny matrices."""
    n = len(M)
    if n == 0:
        return 1
    total = 0
    for p in permutations(range(n)):
        term = _perm_sign(p)
        for i in range(n):
            term = term * M[i][p[i]]
            if not term:
                break
        total += term
    return total


def ff_determinant(M) -> object:
    """Exact determinant over an integral domain.

    Fraction-free Bareiss elimination: after pivot k every entry equals a
    (k+2)-rowed minor of the input, so the division by the previous pivot is
    exact.  Matrices of dimension at most 4 use cofactor expansion instead.
    """
    n = len(M)
    if any(len(row) != n for row in M):
        raise InputError("determinant of a non-square matrix")
    if n <= 4:
        return cofactor_determinant(M)
    a = [list(row) for row in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot, row_k = a[k][k], a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = exact_div(row_i[j] * pivot - lead * row_k[j], prev)
        prev = pivot
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


def _check_pair(A: SymPoly, B: SymPoly) -> int:
    d = A.formal_degree
    if B.formal_degree > d:
        if any(B.coeffs[d + 1:]):
            raise InputError("B has larger degree than A")
    return d


def sylvester_matrix(A: SymPoly, B: SymPoly, j: int) -> list:
    """The ``2j x (d+j)`` matrix of rows X^i A and X^i B, i < j."""
    d = _check_pair(A, B)
    width = d + j
    rows = []
    for P in (A, B):
        cs = [P[k] for k in range(d + 1)]
        for i in range(j):
            rows.append([0] * i + cs + [0] * (width - d - 1 - i))
    return rows


def sylvester_columns(d: int, j: int, ell: int) -> list:
    """Column indices of ``Sylv_j`` kept in ``Sylv_{j,ell}``."""
    return list(range(j - 1)) + [j - 1 + ell] + list(range(d, d + j))


def sylvester_view(A: SymPoly, B: SymPoly, j: int, ell: int) -> list:
    """The square matrix ``Sylv_{j,ell}(A, B)``."""
    d = _check_pair(A, B)
    if not 1 <= j <= d or not 0 <= ell <= d - j:
        raise IndexOutOfRange(f"no Sylvester view for j={j}, ell={ell}, d={d}")
    full = sylvester_matrix(A, B, j)
    cols = sylvester_columns(d, j, ell)
    return [[row[c] for c in cols] for row in full]


def subresultant_det(A: SymPoly, B: SymPoly, j: int) -> SymPoly:
    """``S_j(A, B)`` for ``-1 <= j <= d``, at formal degree ``d - j``."""
    d = _check_pair(A, B)
    if j < -1 or j > d:
        raise IndexOutOfRange(f"subresultant index {j} outside -1..{d}")
    if j == -1:
        return A
    if j == 0:
        return B.with_formal_degree(d)
    full = sylvester_matrix(A, B, j)
    coeffs = []
    for ell in range(d - j + 1):
        cols = sylvester_columns(d, j, ell)
        coeffs.append(ff_determinant([[row[c] for c in cols] for row in full]))
    return SymPoly(coeffs, d - j)


def subresultant_sequence_det(A: SymPoly, B: SymPoly) -> list:
    """``[S_{-1}, S_0, S_1, ..., S_d]`` from determinants."""
    d = _check_pair(A, B)
    return [subresultant_det(A, B, j) for j in range(-1, d + 1)]


def bezout_cofactors(A: SymPoly, B: SymPoly, j: int):
    """``(U_j, V_j)`` with ``X^j S_{j+1} = U_j A + V_j B`` and degrees at most j.

    Both are determinants of the matrix of ``S_{j+1}`` whose middle column is
    replaced by ``(1, X, ..., X^j, 0, ..., 0)`` for U_j and by
    ``(0, ..., 0, 1, X, ..., X^j)`` for V_j; they are expanded along that column.
    """
    d = _check_pair(A, B)
    if not 0 <= j <= d - 1:
        raise IndexOutOfRange(f"cofactor index {j} outside 0..{d - 1}")
    full = sylvester_matrix(A, B, j + 1)
    cols = list(range(j)) + list(range(d, d + j + 1))
    # the replaced column sits at position j; the kept columns fill the rest
    base = [[row[c] for c in cols] for row in full]
    n = 2 * (j + 1)
    u, v = [], []
    for i in range(n):
        minor = [base[r] for r in range(n) if r != i]
        value = ff_determinant(minor)
        signed = value if (i + j) % 2 == 0 else -value
        if i <= j:
            u.append(signed)
        else:
            v.append(signed)
    return SymPoly(u, j), SymPoly(v, j)


def leading_minors(M) -> list:
    """``[det M[:k, :k] for k = 1..n]`` by fraction-free elimination."""
    n = len(M)
    return [ff_determinant([row[:k] for row in M[:k]]) for k in range(1, n + 1)]

