"""Cells of a line arrangement over exact rationals.

A cell is an open region cut out by strict sign constraints, one per line:
sign vector sigma assigns each line +1 (cell above it) or -1 (below). The
boundary structure of the cell named by sigma is recovered one line at a
time: substituting line i's parametrization x -> (x, m_i*x + c_i) into the
other constraints leaves a 1-D system whose solution set is an open
x-interval. Line i bounds the cell iff that interval is nonempty (it then
automatically has positive length). A sign vector is feasible iff at least
one line has a nonempty interval.

Boundedness is read off the interval ends: each interval unbounded toward
+x (-x) contributes one boundary ray pointing right (left). A cell has
either zero rays (bounded) or exactly two; both right gives unbounded_right,
both left unbounded_left, one each unbounded_other (wedges, half-planes and
the top/bottom cells).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Dict, FrozenSet, Literal, Optional, Sequence, Tuple

from .errors import InfeasibleSignVectorError
from .geometry import LineFamily, Point, intersect, side_of

SignVector = Tuple[int, ...]

BoundClass = Literal["bounded", "unbounded_left", "unbounded_right", "unbounded_other"]


@dataclass(frozen=True)
class Cell:
    """One cell: its sign vector, boundary data and an interior point."""

    signs: SignVector
    bounding: FrozenSet[int]
    bound_class: BoundClass
    witness_point: Point


@dataclass(frozen=True)
class ConcurrencyReport:
    max_count: int
    point: Optional[Point]
    all_points_at_max: Tuple[Point, ...]


def _check_signs(family: LineFamily, signs: Sequence[int]) -> SignVector:
    signs = tuple(signs)
    if len(signs) != len(family):
        raise ValueError(f"sign vector length {len(signs)} != family size {len(family)}")
    if any(s not in (-1, 1) for s in signs):
        raise ValueError(f"sign vector entries must be +1 or -1: {signs}")
    return signs


@lru_cache(maxsize=512)
def _scaled(family: LineFamily) -> Tuple[Tuple[int, int], ...]:
    # Common positive scale clears every denominator; x-coordinates of
    # pairwise intersections and all orientation signs are unchanged.
    scale = 1
    for line in family:
        scale = lcm(scale, line.m.denominator, line.c.denominator)
    return tuple((int(line.m * scale), int(line.c * scale)) for line in family)


def _line_interval(scaled, i: int, signs: SignVector):
    """Open x-interval of line i inside the cell named by signs.

    Bounds are (num, den) pairs with den > 0 so comparisons stay in integer
    cross products; None stands for an infinite end. Returns None when the
    interval is empty.
    """
    mi, ci = scaled[i]
    lo = None
    hi = None
    for j, (mj, cj) in enumerate(scaled):
        if j == i:
            continue
        # height of line i over line j at abscissa x is (mi-mj)*x + (ci-cj)
        g = signs[j] * (mi - mj)
        s = signs[j] * (ci - cj)
        if g > 0:
            if lo is None or -s * lo[1] > lo[0] * g:
                lo = (-s, g)
        else:
            if hi is None or s * hi[1] < hi[0] * -g:
                hi = (s, -g)
    if lo is not None and hi is not None and lo[0] * hi[1] >= hi[0] * lo[1]:
        return None
    return (lo, hi)


def _interval_x(lo, hi) -> Fraction:
    """Some abscissa strictly inside the open interval (lo, hi)."""
    if lo is None and hi is None:
        return Fraction(0)
    if lo is None:
        return Fraction(hi[0], hi[1]) - 1
    if hi is None:
        return Fraction(lo[0], lo[1]) + 1
    return (Fraction(lo[0], lo[1]) + Fraction(hi[0], hi[1])) / 2


def bounding_lines(family: LineFamily, signs: Sequence[int]) -> FrozenSet[int]:
    """Indices of lines contributing a positive-length piece of the boundary.

    Raises InfeasibleSignVectorError when no point realizes the signs (the
    cell is empty exactly when every line's interval is).
    """
    signs = _check_signs(family, signs)
    scaled = _scaled(family)
    out = frozenset(
        i for i in range(len(scaled)) if _line_interval(scaled, i, signs) is not None
    )
    if not out:
        raise InfeasibleSignVectorError(f"no cell has sign vector {signs}")
    return out


def classify_cell(family: LineFamily, signs: Sequence[int]) -> BoundClass:
    """Boundedness class from the directions of the cell's boundary rays."""
    signs = _check_signs(family, signs)
    scaled = _scaled(family)
    rays_right = 0
    rays_left = 0
    feasible = False
    for i in range(len(scaled)):
        iv = _line_interval(scaled, i, signs)
        if iv is None:
            continue
        feasible = True
        lo, hi = iv
        if hi is None:
            rays_right += 1
        if lo is None:
            rays_left += 1
    if not feasible:
        raise InfeasibleSignVectorError(f"no cell has sign vector {signs}")
    if rays_right == 0 and rays_left == 0:
        return "bounded"
    if rays_right == 2 and rays_left == 0:
        return "unbounded_right"
    if rays_left == 2 and rays_right == 0:
        return "unbounded_left"
    return "unbounded_other"


@lru_cache(maxsize=512)
def _vertex_items(family: LineFamily) -> Tuple[Tuple[Point, Tuple[int, ...]], ...]:
    """Sorted (vertex, incident line indices) pairs."""
    by_point: Dict[Point, set] = {}
    n = len(family)
    for i in range(n):
        for j in range(i + 1, n):
            p = intersect(family[i], family[j])
            by_point.setdefault(p, set()).update((i, j))
    return tuple(sorted((p, tuple(sorted(inc))) for p, inc in by_point.items()))


def _angle_key(d):
    # Total angular order of rational direction vectors, CCW from +x axis.
    x, y = d
    if y > 0 or (y == 0 and x > 0):
        half = 0
    else:
        half = 1
        x, y = -x, -y
    if x > 0:
        return (half, 0, Fraction(y, x))
    if x == 0:
        return (half, 1, Fraction(0))
    return (half, 2, Fraction(y, x))


def _step_from(family: LineFamily, v: Point, s, incident) -> Point:
    """Point v + eps*s with eps small enough that no non-incident line's
    side changes between v and the result."""
    eps = Fraction(1)
    for j, line in enumerate(family):
        if j in incident:
            continue
        height = v.y - line.y_at(v.x)
        drift = s[1] - line.m * s[0]
        if drift != 0:
            bound = abs(height) / abs(drift)
            if bound < eps:
                eps = bound
    eps = eps / 2
    return Point(v.x + eps * s[0], v.y + eps * s[1])


def enumerate_cells(family: LineFamily) -> Tuple[Cell, ...]:
    """Every cell of the arrangement, sorted by sign vector.

    Sampling walks each vertex's angular sectors: with at least two
    pairwise non-parallel lines every cell has a vertex on its closure, so
    the sweep is exhaustive. A single line is handled directly.
    """
    n = len(family)
    if n == 1:
        c = family[0].c
        return tuple(
            Cell((sign,), frozenset({0}), "unbounded_other", Point(0, c + sign))
            for sign in (-1, 1)
        )
    witnesses: Dict[SignVector, Point] = {}
    for v, incident in _vertex_items(family):
        dirs = []
        for i in incident:
            m = family[i].m
            dirs.append((Fraction(1), m))
            dirs.append((Fraction(-1), -m))
        dirs.sort(key=_angle_key)
        inc_set = frozenset(incident)
        for d_a, d_b in zip(dirs, dirs[1:] + dirs[:1]):
            s = (d_a[0] + d_b[0], d_a[1] + d_b[1])
            p = _step_from(family, v, s, inc_set)
            signs = tuple(side_of(line, p) for line in family)
            if signs not in witnesses:
                witnesses[signs] = p
    cells = []
    for signs in sorted(witnesses):
        cells.append(
            Cell(
                signs,
                bounding_lines(family, signs),
                classify_cell(family, signs),
                witnesses[signs],
            )
        )
    return tuple(cells)


def max_concurrency(family: LineFamily) -> ConcurrencyReport:
    """Largest number of family lines through a common point."""
    if len(family) < 2:
        return ConcurrencyReport(len(family), None, ())
    items = _vertex_items(family)
    best = max(len(inc) for _, inc in items)
    points = tuple(p for p, inc in items if len(inc) == best)
    return ConcurrencyReport(best, points[0], points)


def concurrency_profile(family: LineFamily) -> Dict[int, int]:
    """Map from concurrency count (>= 2) to number of vertices attaining it."""
    profile: Dict[int, int] = {}
    for _, inc in _vertex_items(family):
        profile[len(inc)] = profile.get(len(inc), 0) + 1
    return profile


def convex_position_cell(family: LineFamily) -> Optional[Cell]:
    """A cell bounded by every line of the family, or None.

    Sign vectors are scanned in a fixed order (bit i set means the cell lies
    above line i), so the witness is deterministic.
    """
    n = len(family)
    if n < 2:
        return None
    scaled = _scaled(family)
    for mask in range(1 << n):
        signs = tuple(1 if (mask >> i) & 1 else -1 for i in range(n))
        intervals = []
        for i in range(n):
            iv = _line_interval(scaled, i, signs)
            if iv is None:
                break
            intervals.append(iv)
        if len(intervals) < n:
            continue
        x0 = _interval_x(*intervals[0])
        boundary = Point(x0, family[0].y_at(x0))
        w = _step_from(family, boundary, (Fraction(0), Fraction(signs[0])), frozenset({0}))
        return Cell(signs, frozenset(range(n)), classify_cell(family, signs), w)
    return None


def is_convex_position(family: LineFamily) -> bool:
    """True iff the family defines a cell bounded by all of its lines."""
    return convex_position_cell(family) is not None
