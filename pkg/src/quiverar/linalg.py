"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction`, which keeps every value reduced with a
positive denominator.  Matrices are immutable row-major tuples.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

Rational = Fraction
Vector = tuple  # tuple[Fraction, ...]


class InputError(ValueError):
    """Malformed or inconsistent input."""


class SingularMatrixError(ArithmeticError):
    pass


def to_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    return Fraction(x)


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational number: {text!r}") from exc


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def vec(values: Iterable) -> Vector:
    return tuple(to_rational(v) for v in values)


def dot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise InputError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum((Fraction(a) * b for a, b in zip(u, v)), Fraction(0))


class RationalMatrix:
    """An immutable exact matrix over the rationals."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, entries: Iterable = ()):
        data = tuple(to_rational(x) for x in entries)
        if not data and rows * cols:
            data = (Fraction(0),) * (rows * cols)
        if len(data) != rows * cols:
            raise InputError(f"expected {rows * cols} entries, got {len(data)}")
        self.rows = rows
        self.cols = cols
        self._data = data

    # construction -----------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: Optional[int] = None) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise InputError("ragged matrix rows")
        return cls(len(rows), cols, [x for r in rows for x in r])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "RationalMatrix":
        return cls.from_rows([[c[i] for c in columns] for i in range(rows)], cols=len(columns))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def block_diagonal(cls, blocks: Sequence["RationalMatrix"]) -> "RationalMatrix":
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        out = [[Fraction(0)] * cols for _ in range(rows)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[r0 + i][c0 + j] = b[i, j]
            r0 += b.rows
            c0 += b.cols
        return cls.from_rows(out, cols=cols)

    # access -----------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self._data[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self._data[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self._data[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __iter__(self):
        return (self.row(i) for i in range(self.rows))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalMatrix)
            and self.shape == other.shape
            and self._data == other._data
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(format_rational(x) for x in r) + "]" for r in self)
        return f"RationalMatrix([{body}])"

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self._data)

    def is_zero(self) -> bool:
        return not any(self._data)

    # arithmetic -------------------------------------------------------
    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise InputError(f"shape mismatch {self.shape} + {other.shape}")
        return RationalMatrix(self.rows, self.cols, [a + b for a, b in zip(self._data, other._data)])

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise InputError(f"shape mismatch {self.shape} - {other.shape}")
        return RationalMatrix(self.rows, self.cols, [a - b for a, b in zip(self._data, other._data)])

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix(self.rows, self.cols, [-a for a in self._data])

    def scale(self, c) -> "RationalMatrix":
        c = to_rational(c)
        return RationalMatrix(self.rows, self.cols, [c * a for a in self._data])

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise InputError(f"cannot multiply {self.shape} by {other.shape}")
        cols = [other.column(j) for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for c in cols:
                s = Fraction(0)
                for a, b in zip(r, c):
                    if a and b:
                        s += a * b
                out.append(s)
        return RationalMatrix(self.rows, other.cols, out)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise InputError(f"vector of length {len(v)} for {self.shape} matrix")
        return tuple(dot(self.row(i), v) for i in range(self.rows))

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(self.cols, self.rows, [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    @property
    def T(self) -> "RationalMatrix":
        return self.transpose()

    def __pow__(self, n: int) -> "RationalMatrix":
        if self.rows != self.cols:
            raise InputError("power of a non-square matrix")
        if n < 0:
            return inverse(self) ** (-n)
        result = RationalMatrix.identity(self.rows)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise InputError("trace of a non-square matrix")
        return sum((self[i, i] for i in range(self.rows)), Fraction(0))

    def rank(self) -> int:
        return len(rref(self)[1])


def rref(A: RationalMatrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form with leftmost nonzero pivots.

    Returns the reduced rows (zero rows dropped) and the pivot columns.
    """
    rows = A.to_rows()
    pivots: list[int] = []
    r = 0
    for c in range(A.cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][c]
        if p != 1:
            rows[r] = [x / p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(A: RationalMatrix) -> int:
    return A.rank()


def solve_linear(A: RationalMatrix, b: Sequence) -> Optional[Vector]:
    """Solve ``A x = b``; ``None`` when inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    if len(b) != A.rows:
        raise InputError(f"right-hand side has length {len(b)}, matrix has {A.rows} rows")
    aug = RationalMatrix(A.rows, A.cols + 1, [x for i in range(A.rows) for x in (*A.row(i), to_rational(b[i]))])
    rows, pivots = rref(aug)
    if pivots and pivots[-1] == A.cols:
        return None
    x = [Fraction(0)] * A.cols
    for r, c in zip(rows, pivots):
        x[c] = r[-1]
    return tuple(x)


def kernel_basis(A: RationalMatrix) -> list[Vector]:
    """Null-space basis, one vector per free column.

    Each basis vector has a 1 in its free column, zeros in the other free
    columns, and is the unique such kernel element.
    """
    rows, pivots = rref(A)
    pivot_set = set(pivots)
    basis = []
    for free in range(A.cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * A.cols
        v[free] = Fraction(1)
        for r, c in zip(rows, pivots):
            v[c] = -r[free]
        basis.append(tuple(v))
    return basis


def image_basis(A: RationalMatrix) -> list[Vector]:
    """Basis of the column space, taken from the pivot columns of ``A``."""
    _, pivots = rref(A)
    return [A.column(c) for c in pivots]


def inverse(A: RationalMatrix) -> RationalMatrix:
    if A.rows != A.cols:
        raise InputError("inverse of a non-square matrix")
    n = A.rows
    aug = RationalMatrix(n, 2 * n, [x for i in range(n) for x in (*A.row(i), *(1 if i == j else 0 for j in range(n)))])
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(rows) < n:
        raise SingularMatrixError("matrix is singular")
    return RationalMatrix.from_rows([r[n:] for r in rows], cols=n)


def matrix_order(A: RationalMatrix, max_n: int) -> Optional[int]:
    """Smallest ``n <= max_n`` with ``A**n == I``, else ``None``."""
    if A.rows != A.cols:
        raise InputError("order of a non-square matrix")
    eye = RationalMatrix.identity(A.rows)
    P = A
    for n in range(1, max_n + 1):
        if P == eye:
            return n
        P = P @ A
    return None


def parse_matrix(text: str) -> RationalMatrix:
    """Rows of whitespace-separated rationals, one row per nonblank line."""
    rows = [[parse_rational(t) for t in line.split()] for line in text.splitlines() if line.strip()]
    return RationalMatrix.from_rows(rows)


def format_matrix(A: RationalMatrix) -> str:
    return "[" + ", ".join("[" + ", ".join(format_rational(x) for x in r) + "]" for r in A) + "]"


def format_vector(v: Sequence) -> str:
    return ",".join(format_rational(Fraction(x)) for x in v)
