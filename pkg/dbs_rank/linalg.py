#!/usr/bin/env python3
"""
Exact Rational Linear Algebra

Dense matrices and vectors over the rationals. Scalars are
``fractions.Fraction`` values, which are always kept in lowest terms with a
positive denominator, so equality between matrices is plain structural
equality. Nothing in this module ever rounds.

The module is the numerical kernel shared by the matrix-power back-end
(adjacency matrix powers and column sums) and the automata back-end (linear
representations, forward-space bases, orthogonality tests).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .exceptions import DimensionError

BigRational = Fraction

RationalLike = Union[int, str, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_rational(value: RationalLike) -> Fraction:
    """
    Convert an integer, a Fraction or a ``p/q`` string into a Fraction.

    Raises:
        ValueError: if the value is not an exact rational (floats included).
    """
    if isinstance(value, bool):
        raise ValueError(f"not a rational weight: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"not a rational weight: {value!r}") from e
    raise ValueError(f"not a rational weight: {value!r}")


def format_rational(value: Fraction) -> str:
    """Render a rational as ``p`` or ``p/q``."""
    return str(value)


class Orientation(enum.Enum):
    """Orientation of a RatVector"""
    ROW = "row"
    COLUMN = "column"


@dataclass(frozen=True)
class RatMatrix:
    """
    Dense row-major matrix of exact rationals.

    Attributes:
        rows: number of rows
        cols: number of columns
        entries: row-major tuple of ``rows * cols`` Fractions
    """
    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError(f"negative matrix shape {self.rows}x{self.cols}")
        coerced = tuple(to_rational(x) for x in self.entries)
        if len(coerced) != self.rows * self.cols:
            raise DimensionError(
                f"{len(coerced)} entries do not fill a {self.rows}x{self.cols} matrix"
            )
        object.__setattr__(self, "entries", coerced)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]], cols: Optional[int] = None) -> "RatMatrix":
        """Build a matrix from nested row sequences. ``cols`` is needed only for 0 rows."""
        n_rows = len(rows)
        if n_rows == 0:
            return cls(0, cols or 0, ())
        n_cols = len(rows[0])
        for r in rows:
            if len(r) != n_cols:
                raise DimensionError("rows of unequal length")
        return cls(n_rows, n_cols, tuple(x for r in rows for x in r))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, key: Tuple[int, int]) -> Fraction:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index ({i}, {j}) outside {self.rows}x{self.cols} matrix")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[Fraction, ...]:
        if not 0 <= i < self.rows:
            raise IndexError(f"row {i} outside {self.rows}x{self.cols} matrix")
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Tuple[Fraction, ...]:
        if not 0 <= j < self.cols:
            raise IndexError(f"column {j} outside {self.rows}x{self.cols} matrix")
        return self.entries[j::self.cols]

    def to_rows(self) -> List[List[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.entries)

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        return mat_mul(self, other)

    def __str__(self) -> str:
        return format_matrix(self)


@dataclass(frozen=True)
class RatVector:
    """Dense vector of exact rationals with a fixed row or column orientation."""
    entries: Tuple[Fraction, ...]
    orientation: Orientation = Orientation.ROW

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(to_rational(x) for x in self.entries))

    @classmethod
    def row(cls, entries: Iterable[RationalLike]) -> "RatVector":
        return cls(tuple(entries), Orientation.ROW)

    @classmethod
    def column(cls, entries: Iterable[RationalLike]) -> "RatVector":
        return cls(tuple(entries), Orientation.COLUMN)

    @classmethod
    def zeros(cls, n: int, orientation: Orientation = Orientation.ROW) -> "RatVector":
        return cls((ZERO,) * n, orientation)

    @classmethod
    def unit(cls, n: int, index: int, orientation: Orientation = Orientation.ROW) -> "RatVector":
        return cls(tuple(ONE if i == index else ZERO for i in range(n)), orientation)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> Fraction:
        return self.entries[i]

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.entries)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def negated(self) -> "RatVector":
        return RatVector(tuple(-x for x in self.entries), self.orientation)

    def __str__(self) -> str:
        body = ", ".join(format_rational(x) for x in self.entries)
        return f"[{body}]" if self.orientation is Orientation.ROW else f"[{body}]^T"


def format_matrix(m: RatMatrix) -> str:
    """Fixed row-major bracketed rendering, e.g. ``[[0, 1], [1, 0]]``."""
    rows = ", ".join(
        "[" + ", ".join(format_rational(x) for x in m.row(i)) + "]" for i in range(m.rows)
    )
    return f"[{rows}]"


def mat_mul(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    """Exact product ``a · b`` (schoolbook, zero entries of ``a`` skipped)."""
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    n, m, p = a.rows, a.cols, b.cols
    out: List[Fraction] = [ZERO] * (n * p)
    a_entries, b_entries = a.entries, b.entries
    for i in range(n):
        base = i * p
        for k in range(m):
            a_ik = a_entries[i * m + k]
            if not a_ik:
                continue
            row_k = k * p
            for j in range(p):
                b_kj = b_entries[row_k + j]
                if b_kj:
                    out[base + j] += a_ik * b_kj
    return RatMatrix(n, p, tuple(out))


def mat_pow(m: RatMatrix, k: int) -> RatMatrix:
    """``m`` to the power ``k`` (k >= 0) by repeated squaring."""
    if m.rows != m.cols:
        raise DimensionError(f"matrix power needs a square matrix, got {m.rows}x{m.cols}")
    if k < 0:
        raise ValueError(f"negative exponent {k}")
    result = RatMatrix.identity(m.rows)
    base = m
    while k:
        if k & 1:
            result = mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result


def transpose(m: RatMatrix) -> RatMatrix:
    return RatMatrix(m.cols, m.rows, tuple(m[i, j] for j in range(m.cols) for i in range(m.rows)))


def column_sum(m: RatMatrix, col: int) -> Fraction:
    """Sum of the entries of column ``col``."""
    if not 0 <= col < m.cols:
        raise IndexError(f"column {col} outside {m.rows}x{m.cols} matrix")
    return sum(m.column(col), ZERO)


def column_sums(m: RatMatrix) -> Tuple[Fraction, ...]:
    """All column sums of ``m`` in column order."""
    sums = [ZERO] * m.cols
    for i in range(m.rows):
        for j, x in enumerate(m.row(i)):
            if x:
                sums[j] += x
    return tuple(sums)


def vec_mat(v: RatVector, m: RatMatrix) -> RatVector:
    """Row vector times matrix."""
    if v.orientation is not Orientation.ROW:
        raise DimensionError("vec_mat needs a row vector")
    if len(v) != m.rows:
        raise DimensionError(f"cannot multiply 1x{len(v)} by {m.rows}x{m.cols}")
    out = [ZERO] * m.cols
    for k, v_k in enumerate(v.entries):
        if not v_k:
            continue
        for j, m_kj in enumerate(m.row(k)):
            if m_kj:
                out[j] += v_k * m_kj
    return RatVector(tuple(out), Orientation.ROW)


def mat_vec(m: RatMatrix, v: RatVector) -> RatVector:
    """Matrix times column vector."""
    if v.orientation is not Orientation.COLUMN:
        raise DimensionError("mat_vec needs a column vector")
    if len(v) != m.cols:
        raise DimensionError(f"cannot multiply {m.rows}x{m.cols} by {len(v)}x1")
    return RatVector(tuple(_dot(m.row(i), v.entries) for i in range(m.rows)), Orientation.COLUMN)


def _dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    total = ZERO
    for x, y in zip(a, b):
        if x and y:
            total += x * y
    return total


def dot(a: RatVector, b: RatVector) -> Fraction:
    """Exact inner product; orientations are ignored (row · column is the usual case)."""
    if len(a) != len(b):
        raise DimensionError(f"inner product of vectors of length {len(a)} and {len(b)}")
    return _dot(a.entries, b.entries)


def row_reduce(m: RatMatrix) -> Tuple[RatMatrix, int]:
    """
    Reduced row echelon form of ``m`` and its rank.

    Pivoting: columns are scanned left to right, the first row at or below the
    current pivot row with a nonzero entry becomes the pivot row, it is scaled
    so the pivot is 1, and the pivot column is cleared above and below.
    The input is not modified.
    """
    rows = m.to_rows()
    pivot_row = 0
    for col in range(m.cols):
        if pivot_row >= m.rows:
            break
        found = next((r for r in range(pivot_row, m.rows) if rows[r][col]), None)
        if found is None:
            continue
        rows[pivot_row], rows[found] = rows[found], rows[pivot_row]
        pivot = rows[pivot_row][col]
        if pivot != 1:
            rows[pivot_row] = [x / pivot for x in rows[pivot_row]]
        prow = rows[pivot_row]
        for r in range(m.rows):
            if r == pivot_row:
                continue
            factor = rows[r][col]
            if factor:
                rows[r] = [x - factor * y for x, y in zip(rows[r], prow)]
        pivot_row += 1
    return RatMatrix.from_rows(rows, cols=m.cols), pivot_row


def rank(m: RatMatrix) -> int:
    return row_reduce(m)[1]


def _check_vectors(vectors: Sequence[RatVector]) -> None:
    if not vectors:
        return
    length, orientation = len(vectors[0]), vectors[0].orientation
    for v in vectors:
        if len(v) != length:
            raise DimensionError(f"vector lengths differ: {len(v)} vs {length}")
        if v.orientation is not orientation:
            raise DimensionError("vector orientations differ")


def in_span(basis: Sequence[RatVector], v: RatVector) -> bool:
    """
    True iff ``v`` lies in the span of ``basis``.

    Decided by comparing the rank of the basis with the rank of the basis
    extended by ``v``. The span of no vectors is {0}.
    """
    _check_vectors(list(basis) + [v])
    if not basis:
        return v.is_zero()
    n = len(v)
    without = rank(RatMatrix.from_rows([b.entries for b in basis], cols=n))
    with_v = rank(RatMatrix.from_rows([b.entries for b in basis] + [v.entries], cols=n))
    return without == with_v


class EchelonSpan:
    """
    Incrementally maintained span of row vectors.

    Every stored row is normalised so that its pivot (first nonzero entry) is 1
    and it is zero in the pivot columns of all rows stored before it, so a
    candidate is reduced against the rows in insertion order in O(k·n).
    """

    def __init__(self, dimension: int):
        self.dimension = dimension
        self._rows: List[Tuple[int, List[Fraction]]] = []

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, entries: Sequence[Fraction]) -> List[Fraction]:
        if len(entries) != self.dimension:
            raise DimensionError(f"vector of length {len(entries)} in span of dimension {self.dimension}")
        residue = list(entries)
        for pivot_col, row in self._rows:
            factor = residue[pivot_col]
            if factor:
                residue = [x - factor * y if y else x for x, y in zip(residue, row)]
        return residue

    def contains(self, v: RatVector) -> bool:
        return not any(self.reduce(v.entries))

    def add(self, v: RatVector) -> bool:
        """Add ``v`` if it is independent of the stored rows; report whether it was added."""
        residue = self.reduce(v.entries)
        pivot_col = next((j for j, x in enumerate(residue) if x), None)
        if pivot_col is None:
            return False
        pivot = residue[pivot_col]
        self._rows.append((pivot_col, [x / pivot for x in residue]))
        return True
