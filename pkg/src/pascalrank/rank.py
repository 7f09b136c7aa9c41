"""Rank, bases and invertible core of Pascal submatrices.

:func:`rank_report` reads everything off the greedy sub-pair.  The Bareiss
routines at the bottom are independent exact oracles used to check it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .pascal_core import DimensionError, ExactMatrix, Selection, as_selection, submatrix
from .subpair import SubPairIndices, maximal_subpair


@dataclass(frozen=True)
class RankReport:
    rank: int
    pair: SubPairIndices
    rhat: Selection
    chat: Selection
    core: ExactMatrix
    row_basis: Selection
    col_basis: Selection


def rank_report(r, c) -> RankReport:
    """Rank of ``T[r, c]`` together with the sub-pair that certifies it.

    The rows ``rhat`` span the row space, the columns ``chat`` span the
    column space, and ``core = T[rhat, chat]`` is invertible.  A zero
    matrix gives rank 0 and empty selections throughout.
    """
    r, c = as_selection(r), as_selection(c)
    pair = maximal_subpair(r, c)
    rhat, chat = pair.rows(r), pair.cols(c)
    return RankReport(
        rank=len(pair),
        pair=pair,
        rhat=rhat,
        chat=chat,
        core=submatrix(rhat, chat),
        row_basis=rhat,
        col_basis=chat,
    )


def is_invertible(r, c) -> bool:
    """Square ``T[r, c]`` is invertible iff ``r[i] <= c[i]`` for every i."""
    r, c = as_selection(r), as_selection(c)
    if len(r) != len(c):
        raise DimensionError(
            f"invertibility needs a square submatrix, got {len(r)}x{len(c)}"
        )
    return all(a <= b for a, b in zip(r, c))


def _bareiss(matrix: ExactMatrix) -> tuple[int, int]:
    """Fraction-free elimination on a private copy.

    Returns ``(rank, sign * last_pivot)``; for a square full-rank input the
    second value is the determinant.  Pivot: first nonzero in the column.
    """
    a = [list(row) for row in matrix.entries]
    rows, cols = matrix.rows, matrix.cols
    prev = 1
    sign = 1
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        pivot = next((i for i in range(rank, rows) if a[i][col] != 0), None)
        if pivot is None:
            continue
        if pivot != rank:
            a[rank], a[pivot] = a[pivot], a[rank]
            sign = -sign
        p = a[rank][col]
        for i in range(rank + 1, rows):
            lead = a[i][col]
            for j in range(col + 1, cols):
                # exact division is guaranteed by Sylvester's identity
                a[i][j] = (p * a[i][j] - lead * a[rank][j]) // prev
            a[i][col] = 0
        prev = p
        rank += 1
    return rank, sign * prev


def _require_integer(matrix: ExactMatrix) -> None:
    if any(not isinstance(v, int) for row in matrix.entries for v in row):
        raise TypeError("the elimination oracle works on integer matrices")


def oracle_rank(matrix: ExactMatrix) -> int:
    _require_integer(matrix)
    return _bareiss(matrix)[0]


def oracle_determinant(matrix: ExactMatrix) -> int:
    _require_integer(matrix)
    if matrix.rows != matrix.cols:
        raise DimensionError(f"determinant needs a square matrix, got {matrix.shape}")
    rank, det = _bareiss(matrix)
    return det if rank == matrix.rows else 0
