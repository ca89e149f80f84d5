"""Plain-text family files.

One line record per row, "slope intercept", both exact rational literals.
Rows starting with "#!" carry metadata as key=value headers (the key
"name" names the family, anything else lands in provenance, order kept);
rows starting with a single "#" are comments and are dropped. serialize
followed by parse reproduces the family and its metadata exactly;
comments do not survive the trip.
"""

from __future__ import annotations

from .errors import DuplicateSlopeError, FamilyParseError
from .geometry import Line, LineFamily, format_rat, parse_rat

__all__ = ["parse_family", "serialize_family"]


def parse_family(text: str) -> LineFamily:
    name = None
    provenance = []
    records = []
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped:
            continue
        if stripped.startswith("#!"):
            body = stripped[2:].strip()
            key, sep, value = body.partition("=")
            key = key.strip()
            if not sep or not key:
                raise FamilyParseError(f"malformed header {stripped!r}", lineno)
            if key == "name":
                name = value.strip()
            else:
                provenance.append((key, value.strip()))
            continue
        if stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if len(tokens) != 2:
            raise FamilyParseError(
                f"expected 'slope intercept', got {len(tokens)} fields", lineno
            )
        try:
            m = parse_rat(tokens[0])
            c = parse_rat(tokens[1])
        except ValueError as exc:
            raise FamilyParseError(str(exc), lineno) from None
        if m in seen:
            raise DuplicateSlopeError(
                f"line {lineno}: slope {format_rat(m)} already used at line {seen[m]}"
            )
        seen[m] = lineno
        records.append(Line(m, c))
    if not records:
        raise FamilyParseError("no line records")
    return LineFamily(tuple(records)).with_meta(
        name=name, provenance=tuple(provenance) if provenance else None
    )


def serialize_family(family: LineFamily) -> str:
    rows = []
    if family.name is not None:
        rows.append(f"#! name={family.name}")
    if family.provenance:
        for key, value in family.provenance:
            rows.append(f"#! {key}={value}")
    for line in family:
        rows.append(f"{format_rat(line.m)} {format_rat(line.c)}")
    return "\n".join(rows) + "\n"
