import random
from fractions import Fraction

import pytest

from linecells import (
    Line,
    LineFamily,
    ParameterRangeError,
    Point,
    exists_n_convex,
    f_L_bound,
    find_n_convex,
    format_report,
    known_exact,
    largest_convex_subset,
    lower_bound_value,
    pencil,
    upper_bound_value,
    verify_properties,
)

from conftest import random_family, subfamily

TRIANGLE = LineFamily((Line(1, 0), Line(-1, 0), Line(0, 1)))


def test_known_exact_small_n():
    for l in (3, 4, 5, 6):
        assert known_exact(l, 2) == 2
        assert known_exact(l, 3) == l
        assert known_exact(l, 4) == l + 1
        assert known_exact(l, 5) is None
        assert known_exact(l, 9) is None


def test_known_exact_validation():
    with pytest.raises(ParameterRangeError):
        known_exact(2, 3)
    with pytest.raises(ParameterRangeError):
        known_exact(3, 1)


def test_lower_bound_table():
    assert lower_bound_value(3, 6) == 8
    assert lower_bound_value(3, 5) == 6
    assert lower_bound_value(4, 5) == 7
    for l in (3, 4, 5, 6):
        assert lower_bound_value(l, 5) == l + 3


def test_upper_bound_values():
    assert upper_bound_value(3, 5) == 140
    assert upper_bound_value(3, 6) == 560
    assert upper_bound_value(3, 3) == 10
    assert upper_bound_value(3, 5, c=2) == 280


def test_f_L_bound():
    assert f_L_bound(3, 3, 3) == 10
    assert f_L_bound(3, 3, 3, c=3) == 30


def test_bound_validation():
    with pytest.raises(ParameterRangeError):
        lower_bound_value(3, 4)
    with pytest.raises(ParameterRangeError):
        upper_bound_value(3, 2)
    with pytest.raises(ParameterRangeError):
        f_L_bound(3, 2, 3)


def test_find_n_convex_triangle():
    assert find_n_convex(TRIANGLE, 3) == (0, 1, 2)
    assert exists_n_convex(TRIANGLE, 2)
    # beyond the family size the existence question is vacuously false
    assert not exists_n_convex(TRIANGLE, 9)


def test_find_n_convex_validation():
    with pytest.raises(ParameterRangeError):
        find_n_convex(TRIANGLE, 4)
    with pytest.raises(ParameterRangeError):
        find_n_convex(TRIANGLE, 1)
    with pytest.raises(ValueError):
        find_n_convex(TRIANGLE, 3, prune="fast")


def test_pencil_has_no_triple_in_convex_position():
    fam = pencil(Point(0, -1), 5, (1, 2, 3, 4, 5))
    assert find_n_convex(fam, 3) is None
    assert largest_convex_subset(fam) == (2, (0, 1))


def test_prune_modes_agree():
    rng = random.Random(1105)
    for _ in range(15):
        fam = random_family(rng, min_lines=4, max_lines=7)
        for n in range(2, len(fam) + 1):
            assert find_n_convex(fam, n) == find_n_convex(fam, n, prune="hereditary")
        assert largest_convex_subset(fam) == largest_convex_subset(
            fam, prune="hereditary"
        )


def test_largest_convex_subset_single():
    assert largest_convex_subset(LineFamily((Line(1, 1),))) == (1, (0,))


def test_verify_properties_pass_and_fail():
    fam = pencil(Point(0, -1), 4, (1, 2, 3, 4))
    good = verify_properties(fam, l=5, p=2, q=2)
    assert good.passed
    assert all(ok for _, ok in good.checks)
    bad = verify_properties(fam, l=4, p=2, q=2)
    assert not bad.passed
    failed = [name for name, ok in bad.checks if not ok]
    assert failed == ["concurrency < 4"]


def test_verify_properties_unbounded_sides():
    fig2 = LineFamily(
        (Line(0, 0), Line(Fraction(1, 2), -2), Line(2, -10), Line(3, Fraction(-76, 5)))
    )
    report = verify_properties(fig2, l=3, p=4, q=4, check_unbounded=("right", "left"))
    by_name = dict(report.checks)
    assert by_name["no 4-cell unbounded right"] is False
    assert by_name["no 4-cell unbounded left"] is True


def test_format_report_shape():
    fam = pencil(Point(0, -1), 3, (1, 2, 3))
    report = verify_properties(fam, l=4, p=2, q=2)
    text = format_report(report)
    lines = text.splitlines()
    assert lines[0] == "family size: 3"
    assert lines[1].startswith("max concurrency: 3 at ")
    assert lines[-1] == "result: PASS"
    assert any(line == "check concurrency < 4: pass" for line in lines)
