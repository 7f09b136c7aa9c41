"""Command-line front end.

    pascalrank rank --rows 2,7,11,14,17,20 --cols 0,4,9,10,15 --format json

Big integers are written as decimal strings and rationals as ``p/q``
strings so JSON output never passes through floating point.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .lacunary import (
    EmptyModelError,
    fit,
    format_decimal,
    polynomial_string,
    residual_vector,
    to_rational,
)
from .pascal_core import (
    DimensionError,
    ExactMatrix,
    Selection,
    SelectionError,
    format_grid,
    submatrix,
)
from .rank import is_invertible, rank_report
from .subpair import index_matrix, maximal_subpair

EXIT_USAGE = 2
EXIT_DOMAIN = 3


def parse_selection(text: str) -> Selection:
    """Parse ``"2, 7,11"``; errors name the offending position."""
    text = text.strip()
    if not text:
        return Selection()
    values = []
    for pos, item in enumerate(text.split(",")):
        item = item.strip()
        try:
            values.append(int(item))
        except ValueError:
            raise SelectionError(f"entry {pos} is not an integer: {item!r}") from None
    return Selection(values)


def parse_data(text: str) -> list:
    text = text.strip()
    if not text:
        return []
    out = []
    for pos, item in enumerate(text.split(",")):
        try:
            out.append(to_rational(item))
        except ValueError:
            raise ValueError(f"data entry {pos} is not a rational number: {item.strip()!r}") from None
    return out


def _grid(matrix: ExactMatrix) -> list[list[str]]:
    return [[str(v) for v in row] for row in matrix.entries]


def _ints(seq) -> list[int]:
    return [int(v) for v in seq]


def matrix_payload(r: Selection, c: Selection) -> dict[str, Any]:
    t = submatrix(r, c)
    return {
        "command": "matrix",
        "inputs": {"rows": _ints(r), "cols": _ints(c)},
        "results": {"shape": [t.rows, t.cols], "matrix": _grid(t)},
    }


def subpair_payload(r: Selection, c: Selection) -> dict[str, Any]:
    pair = maximal_subpair(r, c)
    return {
        "command": "subpair",
        "inputs": {"rows": _ints(r), "cols": _ints(c)},
        "results": {
            "length": len(pair),
            "alpha": list(pair.alpha),
            "beta": list(pair.beta),
            "rhat": _ints(pair.rows(r)),
            "chat": _ints(pair.cols(c)),
        },
    }


def rank_payload(r: Selection, c: Selection) -> dict[str, Any]:
    rep = rank_report(r, c)
    return {
        "command": "rank",
        "inputs": {"rows": _ints(r), "cols": _ints(c)},
        "results": {
            "rank": rep.rank,
            "alpha": list(rep.pair.alpha),
            "beta": list(rep.pair.beta),
            "rhat": _ints(rep.rhat),
            "chat": _ints(rep.chat),
            "row_basis": _ints(rep.row_basis),
            "col_basis": _ints(rep.col_basis),
            "core": _grid(rep.core),
            "index_matrix": _grid(index_matrix(rep.pair, len(r), len(c))),
        },
    }


def invertible_payload(r: Selection, c: Selection) -> dict[str, Any]:
    return {
        "command": "invertible",
        "inputs": {"rows": _ints(r), "cols": _ints(c)},
        "results": {"invertible": is_invertible(r, c)},
    }


def fit_payload(r: Selection, c: Selection, y: list, places: int) -> dict[str, Any]:
    f = fit(r, c, y)
    return {
        "command": "fit",
        "inputs": {"rows": _ints(r), "cols": _ints(c), "data": [str(v) for v in y]},
        "results": {
            "degrees": _ints(f.degrees),
            "coefficients": [str(b) for b in f.coefficients],
            "coefficients_rounded": [format_decimal(b, places) for b in f.coefficients],
            "residual_sq": str(f.residual_sq),
            "residual": [str(v) for v in residual_vector(f, y)],
            "design": _grid(f.design),
            "polynomial": polynomial_string(f, places),
        },
    }


def render_payload(payload: dict[str, Any]) -> str:
    return json.dumps(payload, indent=2)


def parse_payload(text: str) -> dict[str, Any]:
    return json.loads(text)


def _text_matrix(grid: list[list[str]]) -> str:
    return format_grid(ExactMatrix.from_rows(grid, cols=len(grid[0]) if grid else 0))


def render_text(payload: dict[str, Any]) -> str:
    res = payload["results"]
    cmd = payload["command"]
    lines: list[str] = []
    if cmd == "matrix":
        rows, cols = res["shape"]
        lines.append(f"T[r, c] ({rows}x{cols}):")
        grid = res["matrix"]
        lines.append(_text_matrix(grid) if rows and cols else f"<empty {rows}x{cols} matrix>")
    elif cmd == "subpair":
        for key in ("length", "alpha", "beta", "rhat", "chat"):
            lines.append(f"{key:<7}{res[key]}")
    elif cmd == "rank":
        for key in ("rank", "alpha", "beta", "rhat", "chat"):
            lines.append(f"{key:<6}{res[key]}")
        lines.append("core T[rhat, chat]:")
        lines.append(_text_matrix(res["core"]) if res["core"] else "<empty 0x0 matrix>")
        lines.append("index matrix:")
        im = res["index_matrix"]
        lines.append(_text_matrix(im) if im and im[0] else f"<empty {len(im)}x{len(payload['inputs']['cols'])} matrix>")
    elif cmd == "invertible":
        lines.append("invertible" if res["invertible"] else "singular")
    elif cmd == "fit":
        lines.append(f"degrees       {res['degrees']}")
        lines.append(f"coefficients  {', '.join(res['coefficients'])}")
        lines.append(f"rounded       {', '.join(res['coefficients_rounded'])}")
        lines.append(f"residual_sq   {res['residual_sq']}")
        lines.append(f"f(x) = {res['polynomial']}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pascalrank",
        description="Rank and lacunary fitting for submatrices of the Pascal matrix.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, data=False):
        p.add_argument("--rows", required=True, help="comma-separated row selection r")
        p.add_argument("--cols", required=True, help="comma-separated column selection c")
        if data:
            p.add_argument("--data", required=True, help="comma-separated rationals y")
            p.add_argument("--places", type=int, default=4, help="decimal places for rounding")
        p.add_argument("--format", choices=("text", "json"), default="text")

    common(sub.add_parser("matrix", help="print T[r, c]"))
    common(sub.add_parser("subpair", help="greedy maximal ordered sub-pair"))
    common(sub.add_parser("rank", help="rank, bases, core and index matrix"))
    common(sub.add_parser("invertible", help="invertibility of a square T[r, c]"))
    common(sub.add_parser("fit", help="lacunary least-squares fit at x = 1"), data=True)
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        r = parse_selection(args.rows)
        c = parse_selection(args.cols)
    except SelectionError as exc:
        print(f"pascalrank: error: invalid selection: {exc}", file=stderr)
        return EXIT_USAGE

    try:
        if args.command == "matrix":
            payload = matrix_payload(r, c)
        elif args.command == "subpair":
            payload = subpair_payload(r, c)
        elif args.command == "rank":
            payload = rank_payload(r, c)
        elif args.command == "invertible":
            payload = invertible_payload(r, c)
        else:
            if args.places < 0:
                print("pascalrank: error: --places must be non-negative", file=stderr)
                return EXIT_USAGE
            y = parse_data(args.data)
            payload = fit_payload(r, c, y, args.places)
    except EmptyModelError as exc:
        print(f"pascalrank: error: {exc}", file=stderr)
        return EXIT_DOMAIN
    except (DimensionError, ValueError, TypeError) as exc:
        print(f"pascalrank: error: {exc}", file=stderr)
        return EXIT_USAGE

    print(render_payload(payload) if args.format == "json" else render_text(payload), file=stdout)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
