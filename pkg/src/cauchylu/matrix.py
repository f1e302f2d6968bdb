"""Dense exact matrices and the Cauchy-like family 1/((2l)^2 - t^2(2i-1)^2).

Matrices are immutable, with entries drawn from one exact field: Fraction
when the scalar t is numeric, RationalFunction when t is symbolic (pass
``SYMBOLIC_T``); plain ints coerce into either.  Logical indices are 1-based
everywhere in this API; ``at(i, l) == rows[i-1][l-1]`` is the one place the
0-based row-major storage mapping appears.

Two independent determinant oracles live here -- recursive cofactor
expansion and Gaussian elimination with row swaps -- deliberately sharing no
code with ``lu_doolittle`` so each can check the others.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import (
    DimensionMismatch,
    DomainError,
    SingularEntry,
    SizeCapExceeded,
    ZeroPivot,
)
from .ratfunc import coerce_scalar

COFACTOR_CAP_DEFAULT = 7


class ExactMatrix:
    __slots__ = ("_rows",)

    def __init__(self, rows):
        data = tuple(tuple(row) for row in rows)
        if not data or not data[0]:
            raise DomainError("matrix needs at least one row and one column")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise DomainError("ragged rows")
        self._rows = data

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def rows(self) -> tuple[tuple, ...]:
        return self._rows

    @property
    def n_rows(self) -> int:
        return len(self._rows)

    @property
    def n_cols(self) -> int:
        return len(self._rows[0])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self._rows), len(self._rows[0])

    def at(self, i: int, l: int):
        """Entry at 1-based (row i, column l)."""
        if not (1 <= i <= self.n_rows and 1 <= l <= self.n_cols):
            raise DomainError(f"index ({i}, {l}) outside {self.shape}")
        return self._rows[i - 1][l - 1]

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(zip(*self._rows))

    def matmul(self, other: ExactMatrix) -> ExactMatrix:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.n_cols != other.n_rows:
            raise DimensionMismatch(self.shape, other.shape)
        cols = other.transpose()._rows
        return ExactMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self._rows
            )
        )

    __matmul__ = matmul

    def map(self, fn) -> ExactMatrix:
        return ExactMatrix(tuple(tuple(fn(x) for x in row) for row in self._rows))

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        return all(
            a == b for ra, rb in zip(self._rows, other._rows) for a, b in zip(ra, rb)
        )

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in row) for row in self._rows)
        return f"ExactMatrix[{body}]"


class LUFactors(NamedTuple):
    L: ExactMatrix
    U: ExactMatrix


def _require_square(m: ExactMatrix) -> int:
    if m.n_rows != m.n_cols:
        raise DomainError(f"operation needs a square matrix, got {m.shape}")
    return m.n_rows


def build_matrix(s: int, t) -> ExactMatrix:
    """The s-by-s matrix with entry 1/((2l)^2 - t^2 (2i-1)^2) at (i, l).

    Numeric t values that zero any entry denominator raise SingularEntry
    listing every offending (i, l) pair.
    """
    if s < 1:
        raise DomainError(f"matrix size must be >= 1, got {s}")
    t = coerce_scalar(t)
    tt = t * t
    rows = []
    singular = []
    for i in range(1, s + 1):
        row = []
        for l in range(1, s + 1):
            den = (2 * l) ** 2 - tt * (2 * i - 1) ** 2
            if den == 0:
                singular.append((i, l))
                row.append(None)
            else:
                row.append(1 / den)
        rows.append(row)
    if singular:
        raise SingularEntry(singular, t=t)
    return ExactMatrix(rows)


def lu_doolittle(m: ExactMatrix) -> LUFactors:
    """LU factorization by forward elimination: unit-diagonal L, no pivoting.

    A vanishing pivot at step k (equivalently, a vanishing k-th leading
    principal minor) raises ZeroPivot; there is deliberately no row
    exchange, so the factor ordering is the one the closed forms predict.
    """
    n = _require_square(m)
    zero = m.at(1, 1) * 0
    one = zero + 1
    a = [list(row) for row in m.rows]
    low = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for k in range(n):
        pivot = a[k][k]
        if pivot == 0:
            raise ZeroPivot(k + 1)
        for r in range(k + 1, n):
            f = a[r][k] / pivot
            low[r][k] = f
            if f == 0:
                continue
            for c in range(k, n):
                a[r][c] = a[r][c] - f * a[k][c]
    upper = [[a[i][j] if j >= i else zero for j in range(n)] for i in range(n)]
    return LUFactors(ExactMatrix(low), ExactMatrix(upper))


def det_cofactor(m: ExactMatrix, cap: int = COFACTOR_CAP_DEFAULT):
    """Determinant by recursive first-row cofactor expansion.

    Factorial cost, so refuses sizes above ``cap``; this is the slow,
    obviously-correct oracle.
    """
    n = _require_square(m)
    if n > cap:
        raise SizeCapExceeded(n, cap)
    return _cofactor(m.rows)


def _cofactor(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = rows[0][0] * 0
    sign = 1
    for col in range(n):
        entry = rows[0][col]
        if entry != 0:
            minor = tuple(r[:col] + r[col + 1 :] for r in rows[1:])
            total = total + sign * entry * _cofactor(minor)
        sign = -sign
    return total


def det_elimination(m: ExactMatrix):
    """Determinant by Gaussian elimination with row swaps and sign tracking.

    Independent of lu_doolittle by construction (swaps are allowed here), so
    the two can serve as mutual oracles; a singular matrix returns the
    field's exact zero rather than raising.
    """
    n = _require_square(m)
    zero = m.at(1, 1) * 0
    a = [list(row) for row in m.rows]
    sign = 1
    for k in range(n):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = a[k][k]
        for r in range(k + 1, n):
            if a[r][k] == 0:
                continue
            f = a[r][k] / pivot
            for c in range(k, n):
                a[r][c] = a[r][c] - f * a[k][c]
    det = a[0][0] if sign == 1 else -a[0][0]
    for k in range(1, n):
        det = det * a[k][k]
    return det
