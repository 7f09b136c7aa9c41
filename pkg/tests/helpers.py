from fractions import Fraction
from itertools import combinations


def selections(universe, max_len):
    """Every strictly increasing tuple drawn from ``universe`` with length <= max_len."""
    for k in range(max_len + 1):
        yield from combinations(universe, k)


def brute_max_subpair_length(r, c):
    """Enumerate all equal-length subsequence pairs; keep the longest ordered one."""
    for k in range(min(len(r), len(c)), 0, -1):
        for rh in combinations(r, k):
            for ch in combinations(c, k):
                if all(a <= b for a, b in zip(rh, ch)):
                    return k
    return 0


def fraction_rank(rows):
    """Plain Gauss-Jordan over Fractions, independent of the Bareiss oracle."""
    a = [[Fraction(v) for v in row] for row in rows]
    if not a:
        return 0
    rank = 0
    for col in range(len(a[0])):
        piv = next((i for i in range(rank, len(a)) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for i in range(len(a)):
            if i != rank and a[i][col] != 0:
                f = a[i][col] / a[rank][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


def laplace_det(rows):
    """Cofactor expansion along the first row."""
    if not rows:
        return 1
    total = 0
    for j, v in enumerate(rows[0]):
        if v:
            minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
            total += (-1) ** j * v * laplace_det(minor)
    return total
