"""Property checks, convex-position search and the bound formulas."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Optional, Sequence, Tuple

from .arrangement import ConcurrencyReport, is_convex_position, max_concurrency
from .chains import ChainResult, has_k_cell_unbounded, longest_cap, longest_cup
from .errors import ParameterRangeError
from .geometry import LineFamily, Rat, _as_rat

PRUNE_MODES = ("off", "hereditary")


def known_exact(l: int, n: int) -> Optional[int]:
    """Exact threshold for small n, None where only bounds are known."""
    if l < 3:
        raise ParameterRangeError(f"l must be >= 3: {l}")
    if n < 2:
        raise ParameterRangeError(f"n must be >= 2: {n}")
    if n == 2:
        return 2
    if n == 3:
        return l
    if n == 4:
        return l + 1
    return None


def lower_bound_value(l: int, n: int) -> int:
    """Size of the extremal construction: thresholds exceed this value."""
    if l < 3:
        raise ParameterRangeError(f"l must be >= 3: {l}")
    if n < 5:
        raise ParameterRangeError(f"n must be >= 5: {n}")
    if n % 2 == 0:
        k = (n - 2) // 2
        big = comb(2 * k - 2, k - 1)
        return (l - 1) * big * big - (l - 3) * comb(2 * k - 4, k - 2) * big
    k = (n - 1) // 2
    big = comb(2 * k - 2, k - 1)
    return (l - 1) * (big + 1) * comb(2 * k - 3, k - 1) - (l - 3) * comb(2 * k - 4, k - 2) * big


def upper_bound_value(l: int, n: int, c=1) -> Rat:
    """c * (n + l - 1) * C(2n-4, n-2); c >= 1 is the absolute constant knob."""
    if l < 3:
        raise ParameterRangeError(f"l must be >= 3: {l}")
    if n < 3:
        raise ParameterRangeError(f"n must be >= 3: {n}")
    c = _as_rat(c)
    if c < 1:
        raise ParameterRangeError(f"c must be >= 1: {c}")
    return c * (n + l - 1) * comb(2 * n - 4, n - 2)


def f_L_bound(l: int, p: int, q: int, c=1) -> Rat:
    """c * (min(p-1, q-1) + l) * C(p+q-4, q-2)."""
    for name, v in (("l", l), ("p", p), ("q", q)):
        if v < 3:
            raise ParameterRangeError(f"{name} must be >= 3: {v}")
    c = _as_rat(c)
    if c < 1:
        raise ParameterRangeError(f"c must be >= 1: {c}")
    return c * (min(p - 1, q - 1) + l) * comb(p + q - 4, q - 2)


def _subfamily(family: LineFamily, indices) -> LineFamily:
    return LineFamily(tuple(family[i] for i in indices))


def find_n_convex(family: LineFamily, n: int, prune: str = "off") -> Optional[Tuple[int, ...]]:
    """First n-subset (lexicographic over slope-sorted indices) in convex
    position, or None. prune="hereditary" skips extensions of subsets that
    are already not in convex position; convex position is inherited by
    subsets, so both modes return the same witness.
    """
    if prune not in PRUNE_MODES:
        raise ValueError(f"prune must be one of {PRUNE_MODES}: {prune!r}")
    size = len(family)
    if not 2 <= n <= size:
        raise ParameterRangeError(f"need 2 <= n <= {size}: {n}")
    if prune == "off":
        for combo in combinations(range(size), n):
            if is_convex_position(_subfamily(family, combo)):
                return combo
        return None
    return _find_pruned(family, n, (), 0)


def _find_pruned(family, n, prefix, start):
    size = len(family)
    need = n - len(prefix)
    for i in range(start, size - need + 1):
        cand = prefix + (i,)
        # pairs are always in convex position, no point testing them
        if len(cand) >= 3 and not is_convex_position(_subfamily(family, cand)):
            continue
        if len(cand) == n:
            return cand
        found = _find_pruned(family, n, cand, i + 1)
        if found is not None:
            return found
    return None


def exists_n_convex(family: LineFamily, n: int, prune: str = "off") -> bool:
    """True iff some n lines of the family are in convex position.

    Unlike find_n_convex this tolerates n beyond the family size, where the
    answer is plainly False.
    """
    if prune not in PRUNE_MODES:
        raise ValueError(f"prune must be one of {PRUNE_MODES}: {prune!r}")
    if n > len(family):
        return False
    return find_n_convex(family, n, prune) is not None


def largest_convex_subset(family: LineFamily, prune: str = "off"):
    """(size, witness indices) of a largest subset in convex position."""
    if len(family) == 1:
        return (1, (0,))
    for n in range(len(family), 1, -1):
        witness = find_n_convex(family, n, prune)
        if witness is not None:
            return (n, witness)
    return (2, (0, 1))  # unreachable: two lines are always in convex position


@dataclass(frozen=True)
class VerifyReport:
    family_size: int
    l: int
    p: int
    q: int
    k: int
    concurrency: ConcurrencyReport
    cup: ChainResult
    cap: ChainResult
    unbounded: Tuple[Tuple[str, bool], ...]
    checks: Tuple[Tuple[str, bool], ...]
    passed: bool


def verify_properties(
    family: LineFamily,
    l: int,
    p: int,
    q: int,
    check_unbounded: Sequence[str] = ("right",),
    k: int = 4,
) -> VerifyReport:
    """Check the defining properties: fewer than l concurrent, no (p+1)-cup,
    no (q+1)-cap, and no k-fold unbounded cell on each requested side."""
    if l < 3:
        raise ParameterRangeError(f"l must be >= 3: {l}")
    if p < 2 or q < 2:
        raise ParameterRangeError(f"p and q must be >= 2: p={p} q={q}")
    if k < 2:
        raise ParameterRangeError(f"k must be >= 2: {k}")
    sides = tuple(check_unbounded)
    for side in sides:
        if side not in ("left", "right"):
            raise ValueError(f"check_unbounded entries must be 'left'/'right': {side!r}")
    conc = max_concurrency(family)
    cup = longest_cup(family)
    cap = longest_cap(family)
    unbounded = tuple((side, has_k_cell_unbounded(family, k, side)) for side in sides)
    checks = [
        (f"concurrency < {l}", conc.max_count < l),
        (f"longest cup <= {p}", cup.size <= p),
        (f"longest cap <= {q}", cap.size <= q),
    ]
    for side, has in unbounded:
        checks.append((f"no {k}-cell unbounded {side}", not has))
    checks = tuple(checks)
    return VerifyReport(
        family_size=len(family),
        l=l,
        p=p,
        q=q,
        k=k,
        concurrency=conc,
        cup=cup,
        cap=cap,
        unbounded=unbounded,
        checks=checks,
        passed=all(ok for _, ok in checks),
    )


def format_report(report: VerifyReport) -> str:
    lines = [f"family size: {report.family_size}"]
    conc = report.concurrency
    if conc.point is None:
        lines.append(f"max concurrency: {conc.max_count}")
    else:
        lines.append(
            f"max concurrency: {conc.max_count} at ({conc.point.x}, {conc.point.y})"
        )
    lines.append(f"longest cup: {report.cup.size} lines {list(report.cup.witness)}")
    lines.append(f"longest cap: {report.cap.size} lines {list(report.cap.witness)}")
    for name, ok in report.checks:
        lines.append(f"check {name}: {'pass' if ok else 'FAIL'}")
    lines.append(f"result: {'PASS' if report.passed else 'FAIL'}")
    return "\n".join(lines)
