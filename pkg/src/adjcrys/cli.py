"""Command-line front end: graph export, theorem verification, operator words.

Exit codes: 0 all checks pass / output written, 1 a verification check
failed, 2 usage error.  Identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from typing import Optional

from . import affine_a, affine_c, affine_d2
from .crystal_graph import (
    all_passed,
    axiom_checks,
    build_graph,
    export,
    render_report,
    restrict_to_component,
)

SIZE_LIMIT = 10**6

CHECK_NAMES = (
    "all", "axioms", "embedding", "commute", "boundary",
    "multiplicity", "f0-landing", "promotion", "alpha",
)
A1_ONLY_CHECKS = ("promotion", "alpha")


def _fail_usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _build_model(family: str, rank: int, level: int):
    if family == "a1":
        return affine_a.CrystalA(rank, level)
    if family == "c1":
        return affine_c.CrystalC(rank, level)
    return affine_d2.CrystalD2(rank, level)


def _model_size(family: str, rank: int, level: int) -> int:
    mod = {"a1": affine_a, "c1": affine_c, "d2": affine_d2}[family]
    return mod.expected_size(rank, level)


def _check_bounds(args) -> Optional[int]:
    if args.rank < 2:
        return _fail_usage(f"rank must be >= 2, got {args.rank}")
    if args.level < 0:
        return _fail_usage(f"level must be >= 0, got {args.level}")
    size = _model_size(args.family, args.rank, args.level)
    if size > SIZE_LIMIT and not args.force:
        return _fail_usage(
            f"crystal has {size} elements (> {SIZE_LIMIT}); pass --force to proceed"
        )
    return None


def _write_output(data: bytes, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(data.decode("utf-8"))
    else:
        with open(out, "wb") as handle:
            handle.write(data)


def cmd_graph(args) -> int:
    bad = _check_bounds(args)
    if bad is not None:
        return bad
    model = _build_model(args.family, args.rank, args.level)
    if args.component is not None:
        if not 0 <= args.component <= args.level:
            return _fail_usage(
                f"component {args.component} out of range 0..{args.level}"
            )
        model = restrict_to_component(model, args.component)
    graph = build_graph(model)
    _write_output(export(graph, args.format), args.out)
    return 0


def _verification_report(family: str, rank: int, level: int, selector: str):
    sections = {
        "a1": affine_a.verify_theorems,
        "c1": affine_c.verify_theorems,
        "d2": affine_d2.verify_theorems,
    }
    report = []
    if selector in ("all", "axioms"):
        report.extend(axiom_checks(_build_model(family, rank, level)))
        if family == "a1":
            for prefix, factor in (
                ("row", affine_a.RowCrystal(rank, level)),
                ("col", affine_a.ColCrystal(rank, level)),
            ):
                report.extend(
                    replace(c, name=f"{prefix}-{c.name}") for c in axiom_checks(factor)
                )
    if selector in ("all", "embedding", "commute", "boundary", "multiplicity", "f0-landing"):
        section = sections[family](rank, level)
        if selector == "all":
            report.extend(section)
        else:
            report.extend(c for c in section if c.category == selector)
    if family == "a1":
        if selector in ("all", "promotion"):
            report.extend(affine_a.promotion_checks(rank, level))
        if selector in ("all", "alpha"):
            report.extend(affine_a.alpha_checks(rank, level))
    return report


def cmd_verify(args) -> int:
    bad = _check_bounds(args)
    if bad is not None:
        return bad
    if args.check in A1_ONLY_CHECKS and args.family != "a1":
        return _fail_usage(f"check {args.check!r} only applies to family a1")
    report = _verification_report(args.family, args.rank, args.level, args.check)
    header = (
        f"== adjcrys verify family={args.family} rank={args.rank}"
        f" level={args.level} check={args.check} ==\n"
    )
    _write_output((header + render_report(report)).encode("utf-8"), args.out)
    return 0 if all_passed(report) else 1


def _parse_start(args):
    n, l = args.rank, args.level
    text = args.start.strip()
    if text == "highest-of":
        k = args.k if args.k is not None else l
        if args.family == "a1":
            return affine_a.highest(n, l, k)
        if args.family == "c1":
            return affine_c.highest(n, l, k)
        return affine_d2.highest(n, l, k)
    text = text.strip("()")
    try:
        coords = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse coordinates from {args.start!r}")
    if args.family == "a1":
        if len(coords) != 2 * (n + 1):
            raise ValueError(f"expected {2 * (n + 1)} coordinates, got {len(coords)}")
        row = affine_a.RowElem(coords[: n + 1])
        col = affine_a.ColElem(coords[n + 1:])
        if row.level != l or col.level != l:
            raise ValueError(f"coordinates do not describe a level-{l} element")
        return affine_a.AdjElemA(row, col)
    if args.family == "c1":
        if len(coords) != 2 * n:
            raise ValueError(f"expected {2 * n} coordinates, got {len(coords)}")
        return affine_c.ElemC(coords, l)
    if len(coords) != 2 * n + 1:
        raise ValueError(f"expected {2 * n + 1} coordinates, got {len(coords)}")
    return affine_d2.ElemD(coords[:n], coords[n], coords[n + 1:], l)


def _format_element(family: str, b) -> str:
    coords = b.coords() if family == "a1" else b.coords
    return "(" + ",".join(str(c) for c in coords) + ")"


def _parse_word(text: str) -> list[tuple[str, int]]:
    ops = []
    for token in text.split():
        if len(token) < 2 or token[0] not in ("e", "f") or not token[1:].isdigit():
            raise ValueError(f"cannot parse operator token {token!r}")
        ops.append((token[0], int(token[1:])))
    return ops


def cmd_apply(args) -> int:
    bad = _check_bounds(args)
    if bad is not None:
        return bad
    try:
        current = _parse_start(args)
        ops = _parse_word(args.word)
    except ValueError as err:
        return _fail_usage(str(err))
    n = args.rank
    lines = [_format_element(args.family, current)]
    for direction, i in ops:
        if not 0 <= i <= n:
            return _fail_usage(f"operator index {i} out of range 0..{n}")
        current = current.f(i) if direction == "f" else current.e(i)
        if current is None:
            lines.append("0")
            break
        lines.append(_format_element(args.family, current))
    _write_output(("\n".join(lines) + "\n").encode("utf-8"), args.out)
    return 0


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--family", required=True, choices=("a1", "c1", "d2"))
    parser.add_argument("--rank", required=True, type=int, help="classical rank n (>= 2)")
    parser.add_argument("--level", required=True, type=int, help="level l (>= 0)")
    parser.add_argument("--out", help="write output to this path instead of stdout")
    parser.add_argument(
        "--force", action="store_true",
        help=f"allow crystals larger than {SIZE_LIMIT} elements",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adjcrys",
        description="Adjoint-type affine crystals: graphs, verification, operator words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    graph = sub.add_parser("graph", help="export the crystal graph")
    _add_common(graph)
    graph.add_argument("--component", type=int, default=None,
                       help="restrict to one classical component (labels 1..n only)")
    graph.add_argument("--format", choices=("dot", "json"), default="json")
    graph.set_defaults(func=cmd_graph)

    verify = sub.add_parser("verify", help="run the exhaustive structure checks")
    _add_common(verify)
    verify.add_argument("--check", choices=CHECK_NAMES, default="all")
    verify.set_defaults(func=cmd_verify)

    apply_ = sub.add_parser("apply", help="apply a word of operators to an element")
    _add_common(apply_)
    apply_.add_argument(
        "--start", required=True,
        help="comma-separated coordinates in model order, or the token highest-of",
    )
    apply_.add_argument("--word", default="", help='operator word, e.g. "f0 f1 e2"')
    apply_.add_argument("--k", type=int, default=None,
                        help="component for highest-of (default: the level)")
    apply_.set_defaults(func=cmd_apply)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
