"""Ordered sub-pairs of two selections.

An ordered sub-pair of ``(r, c)`` is an equal-length pair of subsequences
``rhat`` of ``r`` and ``chat`` of ``c`` with ``rhat[i] <= chat[i]``.  The
longest such pair gives the rank of ``T[r, c]``.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .pascal_core import DimensionError, ExactMatrix, Selection, as_selection


@dataclass(frozen=True)
class SubPairIndices:
    """Positions ``alpha`` into ``r`` and ``beta`` into ``c``."""

    alpha: tuple[int, ...] = ()
    beta: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(self.alpha))
        object.__setattr__(self, "beta", tuple(self.beta))
        if len(self.alpha) != len(self.beta):
            raise ValueError("alpha and beta must have equal length")
        for name, seq in (("alpha", self.alpha), ("beta", self.beta)):
            if any(k < 0 for k in seq) or any(a >= b for a, b in zip(seq, seq[1:])):
                raise ValueError(f"{name} must be strictly increasing and non-negative")

    def __len__(self) -> int:
        return len(self.alpha)

    def rows(self, r) -> Selection:
        return as_selection(r).pick(self.alpha)

    def cols(self, c) -> Selection:
        return as_selection(c).pick(self.beta)


def _is_subsequence(sub: Selection, seq: Selection) -> bool:
    it = iter(seq)
    return all(any(x == y for y in it) for x in sub)


def is_ordered_subpair(rhat, chat, r, c) -> bool:
    rhat, chat, r, c = map(as_selection, (rhat, chat, r, c))
    return (
        len(rhat) == len(chat)
        and _is_subsequence(rhat, r)
        and _is_subsequence(chat, c)
        and all(a <= b for a, b in zip(rhat, chat))
    )


def maximal_subpair(r, c) -> SubPairIndices:
    """Greedy first-occurrence pairing of rows with columns.

    Row ``r[i]`` is matched with the first column ``c[k]`` that satisfies
    ``r[i] <= c[k]`` and lies past the column used for ``r[i-1]``.  The rows
    used are always a prefix ``[0, ..., p]`` of ``r``; the pairing stops at
    the first row that can no longer be matched.

    >>> maximal_subpair([2, 7, 11, 14, 17, 20], [0, 4, 9, 10, 15])
    SubPairIndices(alpha=(0, 1, 2), beta=(1, 2, 4))
    """
    r, c = as_selection(r), as_selection(c)
    if not r or not c or r[0] > c[-1]:
        return SubPairIndices()
    n = len(c) - 1
    # rows past this cannot be paired with any column
    last_row = bisect_left(r.indices, c[-1] + 1) - 1
    beta: list[int] = []
    for i in range(last_row + 1):
        k = bisect_left(c.indices, r[i])
        if beta:
            k = max(k, beta[-1] + 1)
        if k > n:
            break
        beta.append(k)
    return SubPairIndices(tuple(range(len(beta))), tuple(beta))


def oracle_max_length(r, c) -> int:
    """Longest ordered sub-pair length by dynamic programming.

    ``L[i][j]`` is the longest ordered sub-pair using ``r[:i]`` and
    ``c[:j]``; it is computed like a longest common subsequence where a
    row "matches" a column when ``r[i-1] <= c[j-1]``.
    """
    r, c = as_selection(r), as_selection(c)
    m, n = len(r), len(c)
    L = [[0] * (n + 1) for _ in range(m + 1)]
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            best = max(L[i - 1][j], L[i][j - 1])
            if r[i - 1] <= c[j - 1]:
                best = max(best, L[i - 1][j - 1] + 1)
            L[i][j] = best
    return L[m][n]


def index_matrix(pair: SubPairIndices, m_plus_1: int, n_plus_1: int) -> ExactMatrix:
    """0/1 matrix of shape ``m_plus_1 x n_plus_1`` with ones at ``(alpha[i], beta[i])``."""
    if any(a >= m_plus_1 for a in pair.alpha) or any(b >= n_plus_1 for b in pair.beta):
        raise DimensionError(
            f"sub-pair indices do not fit a {m_plus_1}x{n_plus_1} matrix"
        )
    grid = [[0] * n_plus_1 for _ in range(m_plus_1)]
    for a, b in zip(pair.alpha, pair.beta):
        grid[a][b] = 1
    return ExactMatrix(m_plus_1, n_plus_1, tuple(tuple(row) for row in grid))
