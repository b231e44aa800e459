#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Exact integer matrices and Smith normal form.

Entries are Python ints, so nothing overflows however large intermediate
values grow. The Smith decomposition returns unimodular U and V with

    D = U A V

where D is diagonal with a nonnegative divisibility chain d_1 | d_2 | ...
and every zero after every nonzero entry.
"""

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Iterable, List, Sequence, Tuple

from loguru import logger

from grouprank_mcp.errors import ErrorCode
from grouprank_mcp.errors import GroupRankError


@dataclass(frozen=True)
class IntMatrix:
    """
    A rows x cols integer matrix with row-major entries.
    Either dimension may be zero.
    """

    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise GroupRankError(f"negative matrix shape {self.rows}x{self.cols}", ErrorCode.VALIDATION_ERROR)
        if len(self.entries) != self.rows * self.cols:
            raise GroupRankError(
                f"{len(self.entries)} entries do not fill a {self.rows}x{self.cols} matrix",
                ErrorCode.VALIDATION_ERROR,
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int = None) -> "IntMatrix":
        """
        Build a matrix from a list of rows.

        Args:
            rows: Equal-length integer rows.
            cols: Column count; required only when there are no rows.
        """
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != cols:
                raise GroupRankError(f"ragged row of length {len(row)}, expected {cols}", ErrorCode.VALIDATION_ERROR)
        return cls(len(rows), cols, tuple(int(x) for row in rows for x in row))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, rows: int, cols: int, values: Iterable[int]) -> "IntMatrix":
        grid = [[0] * cols for _ in range(rows)]
        for i, value in enumerate(values):
            grid[i][i] = value
        return cls.from_rows(grid, cols)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_lists(self) -> List[List[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows([[self[i, j] for i in range(self.rows)] for j in range(self.cols)], self.rows)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise GroupRankError(f"cannot multiply {self.shape} by {other.shape}", ErrorCode.VALIDATION_ERROR)
        columns = [other._column(j) for j in range(other.cols)]
        grid = [
            [sum(a * b for a, b in zip(self.row(i), column)) for column in columns]
            for i in range(self.rows)
        ]
        return IntMatrix.from_rows(grid, other.cols)

    def _column(self, j: int) -> Tuple[int, ...]:
        return self.entries[j::self.cols] if self.cols else ()

    def is_diagonal(self) -> bool:
        return all(self[i, j] == 0 for i in range(self.rows) for j in range(self.cols) if i != j)

    def determinant(self) -> int:
        """
        Exact determinant by fraction-free (Bareiss) elimination.

        Raises:
            GroupRankError: If the matrix is not square.
        """
        if self.rows != self.cols:
            raise GroupRankError(f"determinant of non-square {self.shape} matrix", ErrorCode.VALIDATION_ERROR)
        n = self.rows
        m = self.to_lists()
        sign, previous = 1, 1
        for k in range(n - 1):
            if m[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
                if swap is None:
                    return 0
                m[k], m[swap] = m[swap], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // previous
            previous = m[k][k]
        return sign * m[n - 1][n - 1] if n else 1

    def minors(self, k: int) -> List[int]:
        """All k x k minors, rows and columns chosen in lexicographic order."""
        return [
            IntMatrix.from_rows([[self[i, j] for j in cols] for i in rows], k).determinant()
            for rows in combinations(range(self.rows), k)
            for cols in combinations(range(self.cols), k)
        ]


@dataclass(frozen=True)
class SnfResult:
    """Smith decomposition D = U A V."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    diag: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diag if d != 0)


class _Reduction:
    """Working state of one Smith reduction: D, U and V as mutable grids."""

    def __init__(self, matrix: IntMatrix):
        self.m, self.n = matrix.shape
        self.D = matrix.to_lists()
        self.U = IntMatrix.identity(self.m).to_lists()
        self.V = IntMatrix.identity(self.n).to_lists()

    # Row operations act on D and U, column operations on D and V.

    def swap_rows(self, i: int, j: int):
        if i != j:
            for grid in (self.D, self.U):
                grid[i], grid[j] = grid[j], grid[i]

    def swap_cols(self, i: int, j: int):
        if i != j:
            for grid in (self.D, self.V):
                for row in grid:
                    row[i], row[j] = row[j], row[i]

    def add_row(self, target: int, source: int, factor: int):
        # row[target] += factor * row[source]
        for grid in (self.D, self.U):
            src, dst = grid[source], grid[target]
            for j in range(len(dst)):
                dst[j] += factor * src[j]

    def add_col(self, target: int, source: int, factor: int):
        for grid in (self.D, self.V):
            for row in grid:
                row[target] += factor * row[source]

    def negate_row(self, i: int):
        for grid in (self.D, self.U):
            grid[i] = [-x for x in grid[i]]

    def min_pivot(self, t: int):
        best = None
        for i in range(t, self.m):
            for j in range(t, self.n):
                value = abs(self.D[i][j])
                if value and (best is None or value < best[0]):
                    best = (value, i, j)
                    if value == 1:
                        return best
        return best

    def clear_cross(self, t: int) -> bool:
        """Reduce column t below and row t right of the pivot; True if both are now zero."""
        D = self.D
        pivot = D[t][t]
        clean = True
        for i in range(t + 1, self.m):
            if D[i][t]:
                self.add_row(i, t, -(D[i][t] // pivot))
                clean = clean and D[i][t] == 0
        for j in range(t + 1, self.n):
            if D[t][j]:
                self.add_col(j, t, -(D[t][j] // pivot))
                clean = clean and D[t][j] == 0
        return clean

    def non_divisible_row(self, t: int):
        pivot = self.D[t][t]
        for i in range(t + 1, self.m):
            for j in range(t + 1, self.n):
                if self.D[i][j] % pivot:
                    return i
        return None

    def run(self) -> Tuple[int, ...]:
        diag = []
        for t in range(min(self.m, self.n)):
            while True:
                best = self.min_pivot(t)
                if best is None:
                    # Remaining block is zero.
                    diag.extend([0] * (min(self.m, self.n) - t))
                    return tuple(diag)
                _, i, j = best
                self.swap_rows(t, i)
                self.swap_cols(t, j)
                if not self.clear_cross(t):
                    continue
                row = self.non_divisible_row(t)
                if row is None:
                    break
                # Pull an entry the pivot does not divide into row t.
                self.add_row(t, row, 1)
            if self.D[t][t] < 0:
                self.negate_row(t)
            diag.append(self.D[t][t])
        return tuple(diag)


def snf(matrix: IntMatrix) -> SnfResult:
    """
    Smith normal form with transform recovery.

    The pivot at each step is the nonzero entry of least absolute value in
    the remaining block.

    Args:
        matrix: Any integer matrix, possibly empty.

    Returns:
        SnfResult: U, D, V with D = U A V and the canonical diagonal.
    """
    reduction = _Reduction(matrix)
    diag = reduction.run()
    m, n = matrix.shape
    result = SnfResult(
        U=IntMatrix.from_rows(reduction.U, m),
        D=IntMatrix.diagonal(m, n, diag),
        V=IntMatrix.from_rows(reduction.V, n),
        diag=diag,
    )
    logger.debug(f"SNF of {m}x{n} matrix: diag={list(diag)}")
    return result


def int_rank(matrix: IntMatrix) -> int:
    """Rank of the matrix over the integers (equivalently the rationals)."""
    return snf(matrix).rank


def gcd_all(values: Iterable[int]) -> int:
    result = 0
    for value in values:
        result = gcd(result, value)
    return result
