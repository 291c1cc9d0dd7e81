"""Exact rational sparse linear algebra for chain-complex rank computations.

Coefficients are `fractions.Fraction` (arbitrary-precision, always reduced,
positive denominator), so every rank here is exact; no floating point enters
this module.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple

Rational = Fraction


def rational(value) -> Fraction:
    """Coerce ints, strings like '-3/4', or Fractions to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational number")


class SparseMatrix:
    """Immutable sparse matrix over the rationals.

    Only nonzero entries are stored; indices are 0-based and bounds-checked.
    """

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: int, cols: int,
                 entries: Mapping[Tuple[int, int], Fraction] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        self.rows = rows
        self.cols = cols
        data: Dict[Tuple[int, int], Fraction] = {}
        if entries:
            for (i, j), v in entries.items():
                if not (0 <= i < rows and 0 <= j < cols):
                    raise IndexError(f"entry ({i},{j}) out of bounds for "
                                     f"{rows}x{cols} matrix")
                v = rational(v)
                if v != 0:
                    data[(i, j)] = v
        self._entries = data

    @classmethod
    def from_columns(cls, rows: int, columns: Iterable[Mapping[int, Fraction]]):
        """Build from an iterable of {row: coeff} column dictionaries."""
        cols = list(columns)
        entries = {}
        for j, col in enumerate(cols):
            for i, v in col.items():
                if v != 0:
                    entries[(i, j)] = rational(v)
        return cls(rows, len(cols), entries)

    def entry(self, i: int, j: int) -> Fraction:
        return self._entries.get((i, j), Fraction(0))

    def items(self):
        return self._entries.items()

    @property
    def nnz(self) -> int:
        return len(self._entries)

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows,
                            {(j, i): v for (i, j), v in self._entries.items()})

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise ValueError("inner dimensions do not match")
        by_row: Dict[int, Dict[int, Fraction]] = {}
        for (i, k), v in self._entries.items():
            by_row.setdefault(i, {})[k] = v
        other_by_row: Dict[int, Dict[int, Fraction]] = {}
        for (k, j), w in other._entries.items():
            other_by_row.setdefault(k, {})[j] = w
        out: Dict[Tuple[int, int], Fraction] = {}
        for i, row in by_row.items():
            for k, v in row.items():
                for j, w in other_by_row.get(k, {}).items():
                    key = (i, j)
                    s = out.get(key, Fraction(0)) + v * w
                    if s == 0:
                        out.pop(key, None)
                    else:
                        out[key] = s
        return SparseMatrix(self.rows, other.cols, out)

    def is_zero(self) -> bool:
        return not self._entries

    def __repr__(self):
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={self.nnz})"


def rank(m: SparseMatrix) -> int:
    """Exact rank over Q by sparse Gaussian elimination.

    Pivot choice: smallest |numerator|+|denominator| nonzero in the active
    column, which keeps intermediate coefficients small.
    """
    # working copy: list of row dicts
    rows = [dict() for _ in range(m.rows)]
    for (i, j), v in m.items():
        rows[i][j] = v
    rk = 0
    active = list(range(m.rows))
    for col in range(m.cols):
        # pick pivot row among active rows with nonzero in this column
        best = None
        best_size = None
        for ri in active:
            v = rows[ri].get(col)
            if v:
                size = abs(v.numerator) + v.denominator
                if best is None or size < best_size:
                    best, best_size = ri, size
        if best is None:
            continue
        pivot_row = rows[best]
        pivot = pivot_row[col]
        active.remove(best)
        rk += 1
        for ri in active:
            v = rows[ri].get(col)
            if not v:
                continue
            factor = v / pivot
            row = rows[ri]
            for j, w in pivot_row.items():
                s = row.get(j, Fraction(0)) - factor * w
                if s == 0:
                    row.pop(j, None)
                else:
                    row[j] = s
        if rk == min(m.rows, m.cols):
            break
    return rk


def homology_rank(d_in: SparseMatrix, d_out: SparseMatrix) -> int:
    """dim ker(d_out) - rank(d_in) for a composable pair d_out . d_in = 0.

    `d_in` maps into the graded piece (its columns index the previous group),
    `d_out` maps out of it, so cols(d_out) = rows(d_in).
    """
    if d_out.cols != d_in.rows:
        raise ValueError(
            f"chain group mismatch: d_out has {d_out.cols} columns but "
            f"d_in has {d_in.rows} rows")
    if not (d_out @ d_in).is_zero():
        raise ValueError("not a chain complex: d_out . d_in != 0")
    ker = d_out.cols - rank(d_out)
    return ker - rank(d_in)
