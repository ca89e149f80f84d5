"""Exact primitives: rationals, points, non-vertical lines, line families.

Everything downstream works over Q. Floats never enter a computation; they
are rejected at the constructors so a stray literal fails loudly instead of
silently poisoning an exact result.

Sign conventions used throughout the package:

* ``orientation(a, b, c)`` is the sign of the cross product (b-a) x (c-a):
  +1 when the walk a->b->c turns left (counterclockwise), -1 when it turns
  right, 0 when the three points are collinear.
* ``side_of(line, p)`` is the sign of ``p.y - (m*p.x + c)``: +1 strictly
  above the line, -1 strictly below, 0 on it. Equivalently it is
  ``orientation((0, c), (1, m + c), p)``.
* The duality ``D`` maps the line y = m*x + c to the point (m, c) and the
  point (a, b) to the line y = a*x + b. It preserves incidence, and above /
  below flips: p above L iff D(L) above D(p).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Tuple

from .errors import DuplicateSlopeError, ParallelLinesError

Rat = Fraction

_RAT_RE = re.compile(r"^[+-]?\d+(?:/(\d+))?$")


def parse_rat(text: str) -> Rat:
    """Parse an integer or a/b fraction literal into an exact rational.

    Accepts an optional leading sign on the numerator only; the denominator
    must be a positive decimal integer. Anything else (floats, whitespace
    inside the token, signs on the denominator) raises ValueError.
    """
    m = _RAT_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    if m.group(1) == "0":
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(text)


def format_rat(value: Rat) -> str:
    """Render a rational the way parse_rat reads it back."""
    return str(value)


def _as_rat(value) -> Rat:
    # Fraction(float) would succeed and quietly encode binary rounding
    # error as an exact value, so floats are banned outright.
    if isinstance(value, float):
        raise TypeError(f"refusing float {value!r}; pass Fraction, int or str")
    return Fraction(value)


@dataclass(frozen=True, order=True)
class Point:
    """A point of the rational plane."""

    x: Rat
    y: Rat

    def __post_init__(self):
        object.__setattr__(self, "x", _as_rat(self.x))
        object.__setattr__(self, "y", _as_rat(self.y))


@dataclass(frozen=True, order=True)
class Line:
    """The non-vertical line y = m*x + c. Ordering is by (m, c)."""

    m: Rat
    c: Rat

    def __post_init__(self):
        object.__setattr__(self, "m", _as_rat(self.m))
        object.__setattr__(self, "c", _as_rat(self.c))

    def y_at(self, x) -> Rat:
        return self.m * _as_rat(x) + self.c


def intersect(a: Line, b: Line) -> Point:
    """Intersection point of two non-parallel lines."""
    if a.m == b.m:
        raise ParallelLinesError(f"equal slopes: {a} and {b}")
    x = (b.c - a.c) / (a.m - b.m)
    return Point(x, a.y_at(x))


def dual_line(line: Line) -> Point:
    """D maps y = m*x + c to the point (m, c)."""
    return Point(line.m, line.c)


def dual_point(p: Point) -> Line:
    """D maps the point (a, b) to the line y = a*x + b."""
    return Line(p.x, p.y)


def orientation(a: Point, b: Point, c: Point) -> int:
    """Sign of the signed area of the triangle a, b, c (CCW positive)."""
    d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    return (d > 0) - (d < 0)


def side_of(line: Line, p: Point) -> int:
    """+1 if p lies strictly above the line, -1 strictly below, 0 on it."""
    d = p.y - line.y_at(p.x)
    return (d > 0) - (d < 0)


@dataclass(frozen=True)
class LineFamily:
    """An immutable family of lines in nearly general position.

    Lines are stored sorted by slope. Slopes must be pairwise distinct
    (DuplicateSlopeError otherwise); three or more lines through a common
    point are permitted. ``name`` and ``provenance`` are carried for file
    round-trips; provenance is a tuple of (key, value) string pairs.
    """

    lines: Tuple[Line, ...]
    name: Optional[str] = None
    provenance: Optional[Tuple[Tuple[str, str], ...]] = None

    def __post_init__(self):
        lines = tuple(sorted(self.lines))
        if not lines:
            raise ValueError("a family needs at least one line")
        for a, b in zip(lines, lines[1:]):
            if a.m == b.m:
                raise DuplicateSlopeError(f"slope {a.m} appears twice")
        object.__setattr__(self, "lines", lines)
        if self.provenance is not None:
            prov = tuple((str(k), str(v)) for k, v in self.provenance)
            object.__setattr__(self, "provenance", prov)

    def __len__(self) -> int:
        return len(self.lines)

    def __iter__(self) -> Iterator[Line]:
        return iter(self.lines)

    def __getitem__(self, i) -> Line:
        return self.lines[i]

    def slopes(self) -> Tuple[Rat, ...]:
        return tuple(line.m for line in self.lines)

    def duals(self) -> Tuple[Point, ...]:
        """Dual points in slope order, i.e. sorted by x."""
        return tuple(dual_line(line) for line in self.lines)

    def with_meta(self, name=None, provenance=None) -> "LineFamily":
        """Same lines, new metadata."""
        return LineFamily(self.lines, name=name, provenance=provenance)
