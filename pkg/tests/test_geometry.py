from fractions import Fraction

import pytest

from linecells import (
    DuplicateSlopeError,
    Line,
    LineFamily,
    ParallelLinesError,
    Point,
    dual_line,
    dual_point,
    format_rat,
    intersect,
    orientation,
    parse_rat,
    side_of,
)


def test_parse_rat_literals():
    assert parse_rat("3") == 3
    assert parse_rat("-5/2") == Fraction(-5, 2)
    assert parse_rat("+7/3") == Fraction(7, 3)
    assert parse_rat("0") == 0


@pytest.mark.parametrize("bad", ["1.5", "1/0", "1 /2", "", "a", "1/-2", "--3", "1e3"])
def test_parse_rat_rejects(bad):
    with pytest.raises(ValueError):
        parse_rat(bad)


def test_format_rat_round_trips():
    for v in (Fraction(3), Fraction(-5, 2), Fraction(0), Fraction(7, 3)):
        assert parse_rat(format_rat(v)) == v


def test_floats_are_banned():
    with pytest.raises(TypeError):
        Line(0.5, 1)
    with pytest.raises(TypeError):
        Point(1, 2.0)


def test_line_accepts_ints_strings_fractions():
    line = Line("1/2", 3)
    assert line.m == Fraction(1, 2)
    assert line.c == 3
    assert line.y_at(4) == 5


def test_intersect_fixture():
    assert intersect(Line(2, 3), Line(1, 1)) == Point(-2, -1)


def test_intersect_parallel_raises():
    with pytest.raises(ParallelLinesError):
        intersect(Line(1, 0), Line(1, 5))


def test_duality_round_trip():
    line = Line(Fraction(2, 3), Fraction(-7, 5))
    assert dual_point(dual_line(line)) == line
    p = Point(Fraction(1, 4), Fraction(9))
    assert dual_line(dual_point(p)) == p


def test_duality_incidence_preserved():
    # p on l iff the dual of l is on the dual of p... up to the usual sign:
    # y = mx + c through (a, b) iff b = ma + c iff (m, c) satisfies c = -am + b
    line = Line(Fraction(3, 2), -1)
    p = Point(2, line.y_at(2))
    image = dual_line(line)
    assert p.y == line.m * p.x + line.c
    assert image.y == -p.x * image.x + p.y


def test_orientation_signs():
    a, b, c = Point(0, 0), Point(1, 0), Point(0, 1)
    assert orientation(a, b, c) == 1
    assert orientation(a, c, b) == -1
    assert orientation(a, b, Point(2, 0)) == 0


def test_side_of():
    line = Line(1, 0)
    assert side_of(line, Point(0, 1)) == 1
    assert side_of(line, Point(0, -1)) == -1
    assert side_of(line, Point(5, 5)) == 0


def test_family_sorts_by_slope():
    fam = LineFamily((Line(1, 0), Line(-1, 0), Line(0, 1)))
    assert [line.m for line in fam] == [-1, 0, 1]
    assert fam.slopes() == (-1, 0, 1)


def test_family_rejects_duplicate_slopes():
    with pytest.raises(DuplicateSlopeError):
        LineFamily((Line(1, 0), Line(1, 5)))


def test_family_rejects_empty():
    with pytest.raises(ValueError):
        LineFamily(())


def test_family_metadata():
    fam = LineFamily((Line(0, 0),))
    assert fam.name is None and fam.provenance is None
    tagged = fam.with_meta(name="demo", provenance=(("kind", "pencil"),))
    assert tagged.name == "demo"
    assert tagged.provenance == (("kind", "pencil"),)
    assert tagged.lines == fam.lines
