"""One-point lacunary least squares at x = 1.

Given derivative orders ``r``, candidate exponents ``c`` and data ``y``,
fit ``f(x) = sum_j b_j x**chat_j`` so that the scaled derivatives
``D^{r_i} f(1) / r_i!`` match ``y`` in the least-squares sense.  The
design matrix is ``T[r, chat]``, which has full column rank whenever
``(rhat, chat)`` is an ordered sub-pair, so the normal equations have a
unique solution.  Everything is solved over the rationals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .pascal_core import DimensionError, ExactMatrix, Selection, as_selection, submatrix
from .subpair import is_ordered_subpair, maximal_subpair

RationalLike = Union[int, Fraction, Decimal, str]


class EmptyModelError(ValueError):
    """No ordered sub-pair exists, so there is nothing to fit."""


def to_rational(value: RationalLike) -> Fraction:
    """Parse exactly: ``"0.5"`` becomes ``1/2``.  Floats are refused."""
    if isinstance(value, bool):
        raise TypeError("booleans are not data values")
    if isinstance(value, float):
        raise TypeError(
            f"float {value!r} rejected; pass a string or Fraction to stay exact"
        )
    if isinstance(value, str):
        value = value.strip()
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {value!r}") from exc


@dataclass(frozen=True)
class LacunaryFit:
    degrees: Selection
    coefficients: tuple[Fraction, ...]
    residual_sq: Fraction
    design: ExactMatrix

    def __call__(self, x: RationalLike) -> Fraction:
        x = to_rational(x)
        return sum((b * x**d for b, d in zip(self.coefficients, self.degrees)), Fraction(0))


def solve_normal_equations(design: ExactMatrix, y: Sequence[Fraction]) -> list[Fraction]:
    """Solve ``A^T A b = A^T y`` for full-column-rank integer ``A``.

    The right-hand side is scaled to integers, the augmented Gram system is
    reduced fraction-free, and only back substitution uses Fractions.
    """
    if len(y) != design.rows:
        raise DimensionError(f"{len(y)} data values for {design.rows} design rows")
    n = design.cols
    scale = math.lcm(*(v.denominator for v in y)) if y else 1
    yi = [int(v * scale) for v in y]
    at = design.transpose()
    gram = at @ design
    rhs = at.apply(yi)
    a = [list(gram.entries[i]) + [rhs[i]] for i in range(n)]

    prev = 1
    for k in range(n):
        pivot = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pivot is None:
            raise ArithmeticError("design matrix does not have full column rank")
        a[k], a[pivot] = a[pivot], a[k]
        p = a[k][k]
        for i in range(k + 1, n):
            lead = a[i][k]
            for j in range(k + 1, n + 1):
                a[i][j] = (p * a[i][j] - lead * a[k][j]) // prev
            a[i][k] = 0
        prev = p

    b = [Fraction(0)] * n
    for i in reversed(range(n)):
        acc = Fraction(a[i][n]) - sum((a[i][j] * b[j] for j in range(i + 1, n)), Fraction(0))
        b[i] = acc / a[i][i]
    return [v / scale for v in b]


def _fit_on_degrees(r: Selection, degrees: Selection, y: Sequence[Fraction]) -> LacunaryFit:
    design = submatrix(r, degrees)
    b = solve_normal_equations(design, y)
    res = [ab - yv for ab, yv in zip(design.apply(b), y)]
    return LacunaryFit(
        degrees=degrees,
        coefficients=tuple(b),
        residual_sq=sum((v * v for v in res), Fraction(0)),
        design=design,
    )


def _checked_data(r: Selection, y: Iterable[RationalLike]) -> list[Fraction]:
    data = [to_rational(v) for v in y]
    if len(data) != len(r):
        raise DimensionError(f"got {len(data)} data values for {len(r)} derivative orders")
    return data


def fit(r, c, y: Iterable[RationalLike]) -> LacunaryFit:
    """Least-squares fit on the exponents of the greedy maximal sub-pair.

    >>> f = fit([2, 7, 11, 14, 17, 20], [0, 4, 9, 10, 15], [1] * 6)
    >>> f.degrees
    Selection([4, 9, 15])
    >>> [format_decimal(b) for b in f.coefficients]
    ['.7813', '-.1046', '.0007']
    """
    r, c = as_selection(r), as_selection(c)
    data = _checked_data(r, y)
    if not r or not c:
        raise EmptyModelError("no model: the row or column selection is empty")
    if r[0] > c[-1]:
        raise EmptyModelError(
            f"no model: r_0 = {r[0]} exceeds c_n = {c[-1]}, so T[r, c] is zero"
        )
    pair = maximal_subpair(r, c)
    return _fit_on_degrees(r, pair.cols(c), data)


def fit_subpair(r, c, rhat, chat, y: Iterable[RationalLike]) -> LacunaryFit:
    """Like :func:`fit`, but with a caller-chosen (possibly non-maximal) ordered sub-pair."""
    r, c, rhat, chat = map(as_selection, (r, c, rhat, chat))
    data = _checked_data(r, y)
    if not chat:
        raise EmptyModelError("no model: the sub-pair is empty")
    if not is_ordered_subpair(rhat, chat, r, c):
        raise ValueError(f"{list(rhat)}, {list(chat)} is not an ordered sub-pair of r, c")
    return _fit_on_degrees(r, chat, data)


def derivative_at_one(fitted: LacunaryFit, order: int, scaled: bool = False) -> Fraction:
    """``order``-th derivative of the fitted polynomial at x = 1.

    With ``scaled=True`` the result is divided by ``order!``, which is the
    quantity a row of the design matrix produces.
    """
    if order < 0:
        raise ValueError("derivative order must be non-negative")
    total = Fraction(0)
    for b, d in zip(fitted.coefficients, fitted.degrees):
        falling = 1
        for t in range(order):
            falling *= d - t
        total += b * falling
    return total / math.factorial(order) if scaled else total


def residual_vector(fitted: LacunaryFit, y: Iterable[RationalLike]) -> list[Fraction]:
    data = [to_rational(v) for v in y]
    if len(data) != fitted.design.rows:
        raise DimensionError(f"{len(data)} data values for {fitted.design.rows} design rows")
    return [ab - yv for ab, yv in zip(fitted.design.apply(list(fitted.coefficients)), data)]


def format_decimal(value: RationalLike, places: int = 4) -> str:
    """Round half-even to ``places`` decimals; a bare leading zero is dropped (``.7813``)."""
    if places < 0:
        raise ValueError("places must be non-negative")
    q = to_rational(value)
    scaled = round(q * 10**places)  # Fraction.__round__ is half-even
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(places + 1, "0")
    whole, frac = digits[: len(digits) - places], digits[len(digits) - places :]
    if whole == "0" and places:
        whole = ""
    return f"{sign}{whole}.{frac}" if places else f"{sign}{whole}"


def polynomial_string(fitted: LacunaryFit, places: int = 4) -> str:
    """E.g. ``.7813 x^4 - .1046 x^9 + .0007 x^15``."""
    terms = []
    for b, d in zip(fitted.coefficients, fitted.degrees):
        mag = format_decimal(abs(b), places)
        mono = "" if d == 0 else (" x" if d == 1 else f" x^{d}")
        terms.append((b < 0, mag + mono))
    if not terms:
        return "0"
    neg, body = terms[0]
    out = ("-" if neg else "") + body
    for neg, body in terms[1:]:
        out += (" - " if neg else " + ") + body
    return out
