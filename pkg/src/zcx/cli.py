"""Command-line interface: enumerate, census, series, gentree, verify, render.

All machine-readable output is deterministic: counts are serialized as
decimal strings (they outgrow 64-bit integers), CSV is plain UTF-8 with no
locale formatting, and ordering never depends on the worker count.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import classify, gentree, series, verify
from .core import PolyominoError, decode, size
from .enumerate import all_convex, count_convex


def _default_workers() -> int:
    env = os.environ.get("ZCX_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zcx",
        description="Exact census and generating-function cross-checks for "
        "convex polyominoes classified by NE/NW convexity degree.",
    )
    parser.add_argument("--out", metavar="FILE", help="write output to FILE")
    parser.add_argument(
        "--threads",
        type=int,
        default=None,
        metavar="K",
        help="worker count for census sweeps (default: ZCX_THREADS or all cores)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="stream convex polyominoes of one size")
    p.add_argument("--size", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--count", action="store_true", help="print the count only (default)")
    group.add_argument("--list", action="store_true", help="list every polyomino")
    p.add_argument("--format", choices=("lines", "json", "ascii"), default="lines")

    p = sub.add_parser("census", help="classification counts for sizes 2..N")
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("series", help="expand a catalog generating function")
    p.add_argument("--name", required=True,
                   help="catalog name, e.g. A, H, Rect, C22, C21, Cp, Np, S111")
    p.add_argument("--terms", type=int, default=series.DEFAULT_ORDER)
    p.add_argument("--x", type=_fraction, default=None)
    p.add_argument("--y", type=_fraction, default=None)
    p.add_argument("--z", type=_fraction, default=None)
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("gentree", help="generating-tree levels for ascending polyominoes")
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--mode", choices=("labels", "construct"), default="labels")
    p.add_argument("--dump-level", type=int, default=None, metavar="K",
                   help="also dump the label multiset at size K")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify", help="run the cross-check suites")
    p.add_argument(
        "--suite",
        default="all",
        help="comma-separated subset of: all,"
        + ",".join(verify.SUITES),
    )
    p.add_argument("--max-size", type=int, default=None)
    p.add_argument("--fixtures", metavar="PATH", default=None,
                   help="JSON file with reference sequence prefixes")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("render", help="ASCII picture of one encoded polyomino")
    p.add_argument("--encoding", required=True)
    return parser


def _cmd_enumerate(args) -> tuple[str, int]:
    n = args.size
    if n < 2:
        raise PolyominoError("size must be >= 2")
    if args.list:
        polys = list(all_convex(n))
        if args.format == "json":
            payload = {
                "size": n,
                "count": str(len(polys)),
                "polyominoes": [p.encode() for p in polys],
            }
            return json.dumps(payload, indent=2) + "\n", 0
        if args.format == "ascii":
            return "\n\n".join(p.render() for p in polys) + "\n", 0
        return "\n".join(p.encode() for p in polys) + "\n", 0
    count = count_convex(n)
    if args.format == "json":
        return json.dumps({"size": n, "count": str(count)}, indent=2) + "\n", 0
    return f"{count}\n", 0


def _cmd_census(args, workers: int) -> tuple[str, int]:
    if args.max_size < 2:
        raise PolyominoError("max size must be >= 2")
    rows = [classify.census(n, workers=workers) for n in range(2, args.max_size + 1)]
    if args.format == "json":
        return json.dumps({"rows": [r.to_dict() for r in rows]}, indent=2) + "\n", 0
    return classify.census_csv(rows), 0


def _cmd_series(args) -> tuple[str, int]:
    g = series.gf(args.name, args.terms, x=args.x, y=args.y, z=args.z)
    params = {
        k: (str(v) if v is not None else None)
        for k, v in (("x", args.x), ("y", args.y), ("z", args.z))
    }
    if args.format == "csv":
        lines = ["n,coefficient"]
        lines += [f"{i},{c}" for i, c in enumerate(g.coeffs)]
        return "\n".join(lines) + "\n", 0
    payload = {
        "name": series.resolve_name(args.name),
        "params": params,
        "terms": g.order,
        "coeffs": [str(c) for c in g.coeffs],
    }
    return json.dumps(payload, indent=2) + "\n", 0


def _label_lines(counts: dict[gentree.TreeLabel, int]) -> list[str]:
    lines = [
        f"{lab.family},{lab.b},{lab.w},{lab.r},{str(lab.rect).lower()},{cnt}"
        for lab, cnt in counts.items()
    ]
    return sorted(lines)


_CONSTRUCT_CAP = 11


def _cmd_gentree(args) -> tuple[str, int]:
    if args.max_size < 2:
        raise PolyominoError("max size must be >= 2")
    if args.mode == "construct" and args.max_size > _CONSTRUCT_CAP:
        raise PolyominoError(
            f"construct mode materializes whole levels and is capped at "
            f"--max-size {_CONSTRUCT_CAP}; use --mode labels beyond that"
        )
    if args.mode == "labels":
        levels = gentree.count_levels(args.max_size)
        level_counts = {
            lv.level: lv.counts for lv in levels
        }
        summary = [
            {
                "level": lv.level,
                "total": str(lv.total),
                "centered": str(lv.centered_total),
                "non_centered": str(lv.non_centered_total),
                "rectangular": str(lv.rectangular_total),
            }
            for lv in levels
        ]
    else:
        levels = gentree.constructive_levels(args.max_size)
        level_counts = {}
        summary = []
        for level in levels:
            n = size(level[0])
            counts: dict[gentree.TreeLabel, int] = {}
            rect = centered = 0
            for p in level:
                lab = gentree.label_of(p)
                counts[lab] = counts.get(lab, 0) + 1
                rect += lab.rect
                centered += lab.family != "NC"
            level_counts[n] = counts
            summary.append(
                {
                    "level": n,
                    "total": str(len(level)),
                    "centered": str(centered),
                    "non_centered": str(len(level) - centered),
                    "rectangular": str(rect),
                }
            )
    dump = None
    if args.dump_level is not None:
        if args.dump_level not in level_counts:
            raise PolyominoError(
                f"--dump-level {args.dump_level} outside 2..{args.max_size}"
            )
        dump = _label_lines(level_counts[args.dump_level])
    if args.format == "json":
        payload = {"mode": args.mode, "max_size": args.max_size, "levels": summary}
        if dump is not None:
            payload["dump_level"] = args.dump_level
            payload["labels"] = dump
        return json.dumps(payload, indent=2) + "\n", 0
    lines = ["level,total,centered,non_centered,rectangular"]
    lines += [
        f"{s['level']},{s['total']},{s['centered']},{s['non_centered']},{s['rectangular']}"
        for s in summary
    ]
    if dump is not None:
        lines.append(f"labels at level {args.dump_level}:")
        lines += dump
    return "\n".join(lines) + "\n", 0


def _cmd_verify(args, workers: int) -> tuple[str, int]:
    verify.set_workers(workers)
    names = [s.strip() for s in args.suite.split(",") if s.strip()]
    try:
        reports = verify.run_suites(
            names, max_size=args.max_size, fixtures=args.fixtures
        )
    except KeyError as exc:
        raise PolyominoError(str(exc)) from exc
    all_pass = all(r.passed for r in reports)
    if args.format == "json":
        text = json.dumps(
            {"passed": all_pass, "reports": [r.to_dict() for r in reports]},
            indent=2,
        ) + "\n"
    else:
        text = "\n".join(r.to_text() for r in reports) + "\n"
        text += f"overall: {'PASS' if all_pass else 'FAIL'}\n"
    return text, 0 if all_pass else 1


def _cmd_render(args) -> tuple[str, int]:
    return decode(args.encoding).render() + "\n", 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    workers = args.threads if args.threads else _default_workers()
    try:
        if args.command == "enumerate":
            text, code = _cmd_enumerate(args)
        elif args.command == "census":
            text, code = _cmd_census(args, workers)
        elif args.command == "series":
            text, code = _cmd_series(args)
        elif args.command == "gentree":
            text, code = _cmd_gentree(args)
        elif args.command == "verify":
            text, code = _cmd_verify(args, workers)
        else:
            text, code = _cmd_render(args)
    except (PolyominoError, series.SeriesError, gentree.NotAscending,
            gentree.InvalidLabel, KeyError, ValueError) as exc:
        print(f"zcx: error: {exc}", file=sys.stderr)
        return 2
    _emit(text, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
