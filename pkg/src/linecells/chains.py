"""Cups, caps and unbounded staircase cells.

A family S is a cup when the cell above every line of S is bounded by all
of them (the "top" cell touches each line in a positive-length segment); a
cap is the mirror notion for the cell below every line. Equivalently, in
the dual plane (m, c) the points of a cup form a strictly concave chain in
slope order and those of a cap a strictly convex one. is_cup/is_cap use the
primal cell test; the longest-chain search uses the dual characterization.
Keeping the two independent lets each check the other.

Unbounded cells admit a closed sign-vector form. In slope order, a cell
unbounded to the right must lie above a prefix of the lines and below the
rest (far right, higher slope means higher line), so its sign vector is
(+1)^r (-1)^(n-r) with 0 < r < n; unbounded to the left is the mirror
(-1)^r (+1)^(n-r). Scanning the n-1 staircases per side is exhaustive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional, Tuple

from .arrangement import Cell, _line_interval, _scaled, bounding_lines, classify_cell
from .errors import ParameterRangeError
from .geometry import LineFamily, Point

ChainKind = Literal["cup", "cap"]


@dataclass(frozen=True)
class ChainResult:
    size: int
    witness: Tuple[int, ...]
    kind: ChainKind


def is_cup(family: LineFamily) -> bool:
    """True iff the cell above all lines is bounded by every one of them."""
    return len(bounding_lines(family, (1,) * len(family))) == len(family)


def is_cap(family: LineFamily) -> bool:
    """True iff the cell below all lines is bounded by every one of them."""
    return len(bounding_lines(family, (-1,) * len(family))) == len(family)


def _orient(a, b, c) -> int:
    d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (d > 0) - (d < 0)


def _longest_chain(family: LineFamily, turn: int, kind: ChainKind) -> ChainResult:
    """Longest subfamily whose dual points turn strictly in one direction.

    turn = -1 picks concave chains (cups), +1 convex chains (caps). Standard
    cubic DP over ordered pairs; duals are already in x-order because the
    family is slope-sorted.
    """
    pts = _scaled(family)
    n = len(pts)
    if n == 1:
        return ChainResult(1, (0,), kind)
    length = [[2] * n for _ in range(n)]
    parent = [[-1] * n for _ in range(n)]
    for mid in range(n):
        for first in range(mid):
            base = length[first][mid]
            for last in range(mid + 1, n):
                if _orient(pts[first], pts[mid], pts[last]) == turn:
                    if base + 1 > length[mid][last]:
                        length[mid][last] = base + 1
                        parent[mid][last] = first
    best = 2
    best_edge = (0, 1)
    for i in range(n):
        for j in range(i + 1, n):
            if length[i][j] > best:
                best = length[i][j]
                best_edge = (i, j)
    chain = [best_edge[1], best_edge[0]]
    i, j = best_edge
    while parent[i][j] >= 0:
        i, j = parent[i][j], i
        chain.append(i)
    chain.reverse()
    return ChainResult(best, tuple(chain), kind)


def longest_cup(family: LineFamily) -> ChainResult:
    return _longest_chain(family, -1, "cup")


def longest_cap(family: LineFamily) -> ChainResult:
    return _longest_chain(family, +1, "cap")


def find_unbounded_cell(family: LineFamily, k: int, side: str) -> Optional[Cell]:
    """First staircase cell unbounded on the given side with >= k bounding
    lines, or None. side is "right" or "left"."""
    if side not in ("right", "left"):
        raise ValueError(f"side must be 'right' or 'left': {side!r}")
    if k < 2:
        raise ParameterRangeError(f"k must be >= 2: {k}")
    n = len(family)
    scaled = _scaled(family)
    for r in range(1, n):
        if side == "right":
            signs = (1,) * r + (-1,) * (n - r)
        else:
            signs = (-1,) * r + (1,) * (n - r)
        count = sum(
            1 for i in range(n) if _line_interval(scaled, i, signs) is not None
        )
        if count < k:
            continue
        witness = _far_witness(family, r, side)
        return Cell(signs, bounding_lines(family, signs), classify_cell(family, signs), witness)
    return None


def _far_witness(family: LineFamily, r: int, side: str) -> Point:
    # Beyond the last vertex the envelope order is slope order, so between
    # the two rail lines at a far enough abscissa we are inside the cell.
    xs = [Fraction(0)]
    n = len(family)
    for i in range(n):
        for j in range(i + 1, n):
            a, b = family[i], family[j]
            if a.m != b.m:
                xs.append((b.c - a.c) / (a.m - b.m))
    if side == "right":
        x = max(xs) + 1
        lower, upper = family[r - 1], family[r]
    else:
        x = min(xs) - 1
        lower, upper = family[r], family[r - 1]
    return Point(x, (lower.y_at(x) + upper.y_at(x)) / 2)


def has_k_cell_unbounded(family: LineFamily, k: int, side: str) -> bool:
    """True iff some cell unbounded on the given side has >= k bounding lines."""
    return find_unbounded_cell(family, k, side) is not None
