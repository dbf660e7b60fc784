"""Dense bit-packed linear algebra over F2.

Vectors and matrix rows are Python ints used as bitsets; addition is XOR.
Everything here is small and dense at desk scale, where bit-parallel XOR
beats sparse bookkeeping.
"""

from __future__ import annotations

from typing import Iterable, Iterator

__all__ = ["Gf2Vector", "EdgeFunction", "Gf2Matrix", "RankAccumulator", "gf2_rank"]


class Gf2Vector:
    """Fixed-length 0-1 coefficient vector packed into an int."""

    __slots__ = ("bits", "length")

    def __init__(self, bits: int = 0, length: int = 0):
        if bits < 0 or bits >> length:
            raise ValueError(f"bits 0x{bits:x} do not fit in length {length}")
        self.bits = bits
        self.length = length

    @classmethod
    def from_support(cls, positions: Iterable[int], length: int) -> "Gf2Vector":
        bits = 0
        for i in positions:
            bits |= 1 << i
        return cls(bits, length)

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __xor__(self, other: "Gf2Vector") -> "Gf2Vector":
        if self.length != other.length:
            raise ValueError("length mismatch")
        return type(self)(self.bits ^ other.bits, self.length)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Gf2Vector):
            return NotImplemented
        return self.bits == other.bits and self.length == other.length

    def __hash__(self) -> int:
        return hash((self.bits, self.length))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(bits=0b{self.bits:0{max(self.length, 1)}b}, length={self.length})"

    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> list[int]:
        """Positions of 1-bits, ascending."""
        out = []
        bits = self.bits
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return out


class EdgeFunction(Gf2Vector):
    """0-1 function on the edges of a complex (bit i = value on edge id i)."""


class RankAccumulator:
    """Incremental F2 row space: insert rows one by one, rank never decreases.

    Rows are reduced against kept pivot rows (pivot = highest set bit), so
    each insertion raises the rank by exactly 0 or 1.
    """

    __slots__ = ("pivots",)

    def __init__(self):
        self.pivots: dict[int, int] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: int) -> int:
        pivots = self.pivots
        while row:
            p = row.bit_length() - 1
            piv = pivots.get(p)
            if piv is None:
                break
            row ^= piv
        return row

    def insert(self, row: int) -> bool:
        """Add a row; True if it was independent (rank grew by 1)."""
        row = self.reduce(row)
        if row:
            self.pivots[row.bit_length() - 1] = row
            return True
        return False

    def contains(self, row: int) -> bool:
        """Membership of row in the current span."""
        return self.reduce(row) == 0


class Gf2Matrix:
    """Row-major bit-packed F2 matrix."""

    __slots__ = ("rows", "ncols")

    def __init__(self, rows: Iterable[int], ncols: int):
        self.rows = list(rows)
        self.ncols = ncols
        for r in self.rows:
            if r < 0 or r >> ncols:
                raise ValueError(f"row 0x{r:x} does not fit in {ncols} columns")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[int]:
        return iter(self.rows)

    def transpose(self) -> "Gf2Matrix":
        cols = [0] * self.ncols
        for i, row in enumerate(self.rows):
            bit = 1 << i
            r = row
            while r:
                low = r & -r
                cols[low.bit_length() - 1] |= bit
                r ^= low
        return Gf2Matrix(cols, len(self.rows))

    def rank(self) -> int:
        acc = RankAccumulator()
        for row in self.rows:
            acc.insert(row)
        return acc.rank

    def rref(self) -> tuple[list[int], list[int]]:
        """Reduced row echelon form: (rows, pivot column per row).

        Pivot columns are scanned left to right; returned rows each have a
        leading 1 in their pivot column and zeros in every other row's
        pivot column.
        """
        work = list(self.rows)
        pivot_cols: list[int] = []
        r = 0
        for col in range(self.ncols):
            mask = 1 << col
            pivot = None
            for i in range(r, len(work)):
                if work[i] & mask:
                    pivot = i
                    break
            if pivot is None:
                continue
            work[r], work[pivot] = work[pivot], work[r]
            for i in range(len(work)):
                if i != r and (work[i] & mask):
                    work[i] ^= work[r]
            pivot_cols.append(col)
            r += 1
            if r == len(work):
                break
        return work[:r], pivot_cols

    def nullspace_basis(self) -> list[int]:
        """Basis (as bitsets over columns) of {x : every row r has parity(r & x) = 0}."""
        rows, pivot_cols = self.rref()
        pivot_set = set(pivot_cols)
        free_cols = [c for c in range(self.ncols) if c not in pivot_set]
        basis = []
        for f in free_cols:
            vec = 1 << f
            fmask = 1 << f
            for row, pc in zip(rows, pivot_cols):
                if row & fmask:
                    vec |= 1 << pc
            basis.append(vec)
        return basis


def gf2_rank(m: Gf2Matrix) -> int:
    """Rank of an F2 matrix via row elimination."""
    return m.rank()
