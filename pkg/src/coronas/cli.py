"""Command-line interface: ``coronas {count,verify,gf,table,render}``."""

from __future__ import annotations

import argparse
import itertools
import json
import sys
import time
from dataclasses import dataclass

from . import bruteforce, closedform, transfer
from .lattice import Shape, build_region
from .render import write_coronas

SHAPES = ("hexagon", "diamond", "gen-hexagon", "gen-diamond")
METHODS = ("closed", "transfer", "brute")
DEFAULT_MAX_PERIMETER = 30


class BruteForceRefused(Exception):
    pass


@dataclass
class CountReport:
    shape: Shape
    method: str
    by_size: dict[int, int]
    elapsed_ms: float

    @property
    def total(self) -> int:
        return sum(self.by_size.values())

    def to_json(self) -> dict:
        sizes = sorted(self.by_size)
        return {
            "shape": self.shape.kind,
            "sides": list(self.shape.sides),
            "method": self.method,
            "sizes": sizes,
            "counts": [self.by_size[k] for k in sizes],
            "total": str(self.total),
            "elapsed_ms": round(self.elapsed_ms, 3),
        }

    def to_text(self) -> str:
        lines = [f"{self.shape} [{self.method}]: total {self.total}"]
        lines += [f"  {k} lozenges: {v}" for k, v in sorted(self.by_size.items())]
        return "\n".join(lines)


def compute(shape: Shape, method: str, force: bool = False,
            max_perimeter: int = DEFAULT_MAX_PERIMETER, workers: int | None = None) -> CountReport:
    start = time.perf_counter()
    if method == "closed":
        by_size = closedform.counts_for(shape.kind, shape.sides).by_size
    elif method == "transfer":
        by_size = transfer.trace_polynomial(shape).terms
    elif method == "brute":
        if shape.perimeter > max_perimeter and not force:
            raise BruteForceRefused(
                f"{shape} has perimeter {shape.perimeter} > {max_perimeter}; pass --force to run anyway"
            )
        by_size = bruteforce.enumerate_count_only(build_region(shape), workers=workers).by_size
    else:
        raise ValueError(f"unknown method {method!r}")
    elapsed = (time.perf_counter() - start) * 1000.0
    return CountReport(shape, method, dict(sorted(by_size.items())), elapsed)


def _parse_shape(parser: argparse.ArgumentParser, kind: str, sides: str, min_side: int = 1) -> Shape:
    try:
        values = tuple(int(s) for s in sides.split(","))
        shape = Shape(kind, values)
    except ValueError as exc:
        parser.error(f"invalid --sides {sides!r}: {exc}")
    if any(v < min_side for v in shape.sides):
        parser.error(f"side lengths must be at least {min_side}")
    return shape


def _parse_methods(parser: argparse.ArgumentParser, text: str) -> list[str]:
    methods = [m.strip() for m in text.split(",") if m.strip()]
    bad = [m for m in methods if m not in METHODS]
    if bad or not methods:
        parser.error(f"invalid --methods {text!r}; choose from {', '.join(METHODS)}")
    return methods


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coronas", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def brute_opts(p):
        p.add_argument("--force", action="store_true", help="run brute force beyond the size ceiling")
        p.add_argument("--max-perimeter", type=int, default=DEFAULT_MAX_PERIMETER,
                       help="largest perimeter brute force accepts without --force")
        p.add_argument("--workers", type=int, default=None, help="processes for brute force")

    p = sub.add_parser("count", help="count coronas of one region")
    p.add_argument("--shape", choices=SHAPES, required=True)
    p.add_argument("--sides", required=True, help="n, or n1,n2[,n3] for generalized shapes")
    p.add_argument("--method", choices=METHODS, default="closed")
    p.add_argument("--json", action="store_true")
    brute_opts(p)

    p = sub.add_parser("verify", help="compare counting methods on one region")
    p.add_argument("--shape", choices=SHAPES, required=True)
    p.add_argument("--sides", required=True)
    p.add_argument("--methods", default=",".join(METHODS))
    p.add_argument("--json", action="store_true")
    brute_opts(p)

    p = sub.add_parser("gf", help="expand a generating function")
    p.add_argument("--shape", choices=("hexagon", "diamond"), required=True)
    p.add_argument("--terms", type=int, required=True)

    p = sub.add_parser("table", help="totals for all side tuples with entries 1..max")
    p.add_argument("--shape", choices=SHAPES, required=True)
    p.add_argument("--max", type=int, required=True, dest="max_side")
    p.add_argument("--method", choices=METHODS, default="closed")
    p.add_argument("--json", action="store_true")
    brute_opts(p)

    p = sub.add_parser("render", help="write SVG files for the first coronas")
    p.add_argument("--shape", choices=SHAPES, required=True)
    p.add_argument("--sides", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--limit", type=int, default=None)
    return parser


def _arity(kind: str) -> int:
    return {"hexagon": 1, "diamond": 1, "gen-hexagon": 3, "gen-diamond": 2}[kind]


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)

    def say(text: str) -> None:
        print(text, file=out)

    try:
        if args.command == "count":
            # the closed forms extend algebraically to side length 0
            shape = _parse_shape(parser, args.shape, args.sides, 0 if args.method == "closed" else 1)
            report = compute(shape, args.method, args.force, args.max_perimeter, args.workers)
            say(json.dumps(report.to_json()) if args.json else report.to_text())
            return 0

        if args.command == "verify":
            shape = _parse_shape(parser, args.shape, args.sides)
            methods = _parse_methods(parser, args.methods)
            reports = [compute(shape, m, args.force, args.max_perimeter, args.workers) for m in methods]
            agree = all(r.by_size == reports[0].by_size for r in reports)
            if args.json:
                say(json.dumps({"agree": agree, "reports": [r.to_json() for r in reports]}))
            else:
                for r in reports:
                    say(f"{r.method}: total {r.total} {r.by_size}")
                if not agree:
                    sizes = sorted(set().union(*(r.by_size for r in reports)))
                    say("MISMATCH")
                    for k in sizes:
                        row = [r.by_size.get(k, 0) for r in reports]
                        if len(set(row)) > 1:
                            say(f"  size {k}: " + ", ".join(f"{r.method}={v}" for r, v in zip(reports, row)))
                else:
                    say("OK")
            return 0 if agree else 1

        if args.command == "gf":
            if args.terms < 1:
                parser.error("--terms must be at least 1")
            series = closedform.hexagon_gf_series if args.shape == "hexagon" else closedform.diamond_gf_series
            say(", ".join(map(str, series(args.terms))))
            return 0

        if args.command == "table":
            if args.max_side < 1:
                parser.error("--max must be at least 1")
            rows = []
            for sides in itertools.product(range(1, args.max_side + 1), repeat=_arity(args.shape)):
                rows.append(compute(Shape(args.shape, sides), args.method, args.force,
                                    args.max_perimeter, args.workers))
            if args.json:
                say(json.dumps([r.to_json() for r in rows]))
            else:
                for r in rows:
                    say(f"{','.join(map(str, r.shape.sides))}\t{r.total}")
            return 0

        if args.command == "render":
            shape = _parse_shape(parser, args.shape, args.sides)
            if args.limit is not None and args.limit < 0:
                parser.error("--limit must be non-negative")
            region = build_region(shape)
            paths = write_coronas(region, bruteforce.first_coronas(region, args.limit), args.out)
            say(f"wrote {len(paths)} file(s) to {args.out}")
            return 0
    except BruteForceRefused as exc:
        print(f"coronas: {exc}", file=sys.stderr)
        return 2
    return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
