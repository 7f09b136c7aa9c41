"""Binomial coefficients and exact submatrices of the upper-triangular Pascal matrix.

The infinite matrix ``T`` has entry ``(i, j) = C(j, i)``, which vanishes
below the diagonal.  A submatrix ``T[r, c]`` is picked out by two
selections: strictly increasing lists of row and column indices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

Scalar = Union[int, Fraction]


class SelectionError(ValueError):
    """Raised for index lists that are negative or not strictly increasing."""


class DimensionError(ValueError):
    """Raised when matrix or vector shapes do not fit together."""


@dataclass(frozen=True)
class Selection:
    """Strictly increasing tuple of non-negative row or column indices."""

    indices: tuple[int, ...] = ()

    def __init__(self, indices: Iterable[int] = ()):
        values = tuple(indices)
        for pos, v in enumerate(values):
            if isinstance(v, bool) or not isinstance(v, int):
                raise SelectionError(f"entry {pos} is not an integer: {v!r}")
            if v < 0:
                raise SelectionError(f"entry {pos} is negative: {v}")
            if pos and values[pos - 1] >= v:
                raise SelectionError(
                    f"entry {pos} ({v}) does not exceed entry {pos - 1} "
                    f"({values[pos - 1]}); selections must be strictly increasing"
                )
        object.__setattr__(self, "indices", values)

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __getitem__(self, k):
        return self.indices[k]

    def __bool__(self) -> bool:
        return bool(self.indices)

    def pick(self, positions: Iterable[int]) -> "Selection":
        """Return the sub-selection at the given positions."""
        return Selection(self.indices[k] for k in positions)

    def __repr__(self) -> str:
        return f"Selection({list(self.indices)})"


def as_selection(value: Union[Selection, Iterable[int]]) -> Selection:
    return value if isinstance(value, Selection) else Selection(value)


@dataclass(frozen=True)
class ExactMatrix:
    """Dense, immutable matrix of Python ints or Fractions.

    ``rows`` and ``cols`` are stored explicitly so that ``0 x k`` and
    ``k x 0`` matrices keep their shape.
    """

    rows: int
    cols: int
    entries: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows or any(len(row) != self.cols for row in self.entries):
            raise DimensionError(
                f"entries do not form a {self.rows}x{self.cols} grid"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]], cols: int | None = None) -> "ExactMatrix":
        grid = tuple(tuple(row) for row in rows)
        if cols is None:
            cols = len(grid[0]) if grid else 0
        return cls(len(grid), cols, grid)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self.entries[i][j]

    def tolist(self) -> list[list[Scalar]]:
        return [list(row) for row in self.entries]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            self.cols,
            self.rows,
            tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)),
        )

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        ot = other.transpose().entries
        return ExactMatrix(
            self.rows,
            other.cols,
            tuple(
                tuple(sum((a * b for a, b in zip(row, col)), 0) for col in ot)
                for row in self.entries
            ),
        )

    def apply(self, vector: Sequence[Scalar]) -> list[Scalar]:
        """Matrix-vector product."""
        if len(vector) != self.cols:
            raise DimensionError(f"vector of length {len(vector)} does not fit {self.shape}")
        return [sum((a * x for a, x in zip(row, vector)), 0) for row in self.entries]

    def __str__(self) -> str:
        return format_grid(self)


def format_grid(matrix: ExactMatrix) -> str:
    """Right-aligned text rendering, one matrix row per line."""
    if matrix.rows == 0 or matrix.cols == 0:
        return f"<empty {matrix.rows}x{matrix.cols} matrix>"
    cells = [[str(v) for v in row] for row in matrix.entries]
    widths = [max(len(cells[i][j]) for i in range(matrix.rows)) for j in range(matrix.cols)]
    return "\n".join(
        "[ " + "  ".join(cell.rjust(w) for cell, w in zip(row, widths)) + " ]" for row in cells
    )


def binomial(n: int, k: int) -> int:
    """C(n, k), with C(n, k) = 0 for k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be non-negative")
    return math.comb(n, k)


def submatrix(r, c) -> ExactMatrix:
    """``T[r, c]``: entry ``(i, j)`` is ``C(c[j], r[i])``."""
    r, c = as_selection(r), as_selection(c)
    return ExactMatrix(
        len(r), len(c), tuple(tuple(binomial(cj, ri) for cj in c) for ri in r)
    )


def _scaled_derivative_at_one(order: int, power: int) -> int:
    # d^order/dx^order x^power at x = 1, divided by order!
    falling = 1
    for t in range(order):
        falling *= power - t
        if falling == 0:
            return 0
    quotient, remainder = divmod(falling, math.factorial(order))
    assert remainder == 0
    return quotient


def generalized_vandermonde(r, c) -> ExactMatrix:
    """Scaled derivative functionals at 1 applied to the power basis.

    Entry ``(i, j)`` is ``D^{r_i} x^{c_j}`` at ``x = 1`` divided by ``r_i!``.
    This is built from falling factorials rather than :func:`binomial`, so
    comparing it against :func:`submatrix` is an independent check.
    """
    r, c = as_selection(r), as_selection(c)
    return ExactMatrix(
        len(r),
        len(c),
        tuple(tuple(_scaled_derivative_at_one(ri, cj) for cj in c) for ri in r),
    )
