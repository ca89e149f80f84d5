"""Command line front end.

Exit codes: 0 success, 1 a requested property failed to hold (or a
generator could not stabilize), 2 bad usage or unreadable input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .constructions import KINDS, ConstructionSpec
from .errors import ConstructionError, LinecellsError
from .familyfile import parse_family, serialize_family
from .geometry import parse_rat
from .svg import RenderOptions, render_svg
from .verify import (
    PRUNE_MODES,
    exists_n_convex,
    f_L_bound,
    find_n_convex,
    format_report,
    known_exact,
    largest_convex_subset,
    lower_bound_value,
    upper_bound_value,
    verify_properties,
)


def _read_family(path: str):
    if path == "-":
        return parse_family(sys.stdin.read())
    return parse_family(Path(path).read_text())


def _write_text(path, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _cmd_generate(args) -> int:
    params = {}
    for name in ("p", "q", "l", "k", "n"):
        value = getattr(args, name)
        if value is not None:
            params[name] = value
    spec = ConstructionSpec(kind=args.kind, **params)
    scale = parse_rat(args.epsilon_scale)
    family = spec.build(epsilon_scale=scale)
    if scale != 1:
        extra = (("epsilon_scale", str(scale)),)
        family = family.with_meta(
            name=family.name, provenance=(family.provenance or ()) + extra
        )
    _write_text(args.output, serialize_family(family))
    return 0


def _cmd_verify(args) -> int:
    family = _read_family(args.family)
    sides = tuple(args.check_unbounded) if args.check_unbounded else ("right",)
    report = verify_properties(
        family, l=args.l, p=args.p, q=args.q, check_unbounded=sides, k=args.k
    )
    passed = report.passed
    # hold the result line back until the optional convex check has printed
    for line in format_report(report).splitlines():
        if not line.startswith("result:"):
            print(line)
    if args.no_convex is not None:
        ok = not exists_n_convex(family, args.no_convex, prune=args.prune)
        print(f"check no {args.no_convex} in convex position: {'pass' if ok else 'FAIL'}")
        passed = passed and ok
    print(f"result: {'PASS' if passed else 'FAIL'}")
    return 0 if passed else 1


def _cmd_search(args) -> int:
    family = _read_family(args.family)
    if args.largest:
        size, witness = largest_convex_subset(family, prune=args.prune)
        print(f"largest convex position subset: {size} lines {list(witness)}")
        return 0
    witness = find_n_convex(family, args.n, prune=args.prune)
    if witness is None:
        print(f"no {args.n} lines in convex position")
        return 0
    print(f"found {args.n} lines in convex position: {list(witness)}")
    return 1


def _cmd_bounds(args) -> int:
    exact = known_exact(args.l, args.n)
    if exact is not None:
        print(f"exact: {exact}")
    if args.n >= 5:
        print(f"lower: {lower_bound_value(args.l, args.n)}")
    if args.n >= 3:
        print(f"upper: {upper_bound_value(args.l, args.n, args.c)}")
    if args.p is not None and args.q is not None:
        print(f"f_L upper: {f_L_bound(args.l, args.p, args.q, args.c)}")
    return 0


def _parse_viewport(text: str):
    parts = [piece.strip() for piece in text.split(",")]
    if len(parts) != 4:
        raise ValueError(f"viewport needs 4 comma separated values: {text!r}")
    return tuple(parse_rat(piece) for piece in parts)


def _parse_signs(text: str):
    signs = []
    for ch in text:
        if ch == "+":
            signs.append(1)
        elif ch == "-":
            signs.append(-1)
        else:
            raise ValueError(f"cell spec must use only '+' and '-': {text!r}")
    return tuple(signs)


def _parse_indices(text: str):
    return tuple(int(piece) for piece in text.split(",") if piece.strip())


def _cmd_render(args) -> int:
    family = _read_family(args.family)
    options = RenderOptions(
        viewport=_parse_viewport(args.viewport) if args.viewport else None,
        highlight=_parse_signs(args.highlight_cell) if args.highlight_cell else None,
        highlight_lines=_parse_indices(args.highlight_lines)
        if args.highlight_lines
        else None,
        width=args.width,
    )
    _write_text(args.output, render_svg(family, options))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linecells",
        description="Build and check line families with bounded concurrency "
        "and no large subfamily in convex position.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="build a family and write it out")
    gen.add_argument("--kind", required=True, choices=KINDS)
    gen.add_argument("--p", type=int)
    gen.add_argument("--q", type=int)
    gen.add_argument("--l", type=int)
    gen.add_argument("--k", type=int)
    gen.add_argument("--n", type=int)
    gen.add_argument("--epsilon-scale", default="1", help="rational slope spread knob")
    gen.add_argument("-o", "--output", help="output path (default stdout)")
    gen.set_defaults(func=_cmd_generate)

    ver = sub.add_parser("verify", help="check the defining properties of a family")
    ver.add_argument("family", help="family file ('-' for stdin)")
    ver.add_argument("--l", "--max-concurrency", dest="l", type=int, required=True)
    ver.add_argument("--p", type=int, required=True, help="longest allowed cup")
    ver.add_argument("--q", type=int, required=True, help="longest allowed cap")
    ver.add_argument(
        "--check-unbounded",
        action="append",
        choices=("left", "right"),
        help="also require no k-fold unbounded cell on this side (repeatable)",
    )
    ver.add_argument("--k", type=int, default=4, help="unbounded cell size to exclude")
    ver.add_argument("--no-convex", type=int, help="also require no N in convex position")
    ver.add_argument("--prune", choices=PRUNE_MODES, default="off")
    ver.set_defaults(func=_cmd_verify)

    sea = sub.add_parser("search", help="look for subsets in convex position")
    sea.add_argument("family", help="family file ('-' for stdin)")
    group = sea.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int, help="subset size to search for")
    group.add_argument("--largest", action="store_true", help="report the maximum size")
    sea.add_argument("--prune", choices=PRUNE_MODES, default="off")
    sea.set_defaults(func=_cmd_search)

    bnd = sub.add_parser("bounds", help="print threshold bounds")
    bnd.add_argument("--l", type=int, required=True)
    bnd.add_argument("--n", type=int, required=True)
    bnd.add_argument("--c", type=int, default=1, help="constant in the upper bounds")
    bnd.add_argument("--p", type=int)
    bnd.add_argument("--q", type=int)
    bnd.set_defaults(func=_cmd_bounds)

    ren = sub.add_parser("render", help="draw a family as an SVG")
    ren.add_argument("family", help="family file ('-' for stdin)")
    ren.add_argument("-o", "--output", help="output path (default stdout)")
    ren.add_argument("--viewport", help="x0,y0,x1,y1 in family coordinates")
    ren.add_argument("--highlight-cell", help="sign vector like '++-' to fill")
    ren.add_argument("--highlight-lines", help="comma separated line indices to accent")
    ren.add_argument("--width", type=int, default=640)
    ren.set_defaults(func=_cmd_render)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except ConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (LinecellsError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
