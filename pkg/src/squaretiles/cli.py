"""Command-line interface.

Thin client over the library: every subcommand parses flags, calls one
core function, prints, and exits. Exit codes are stable so scripts can
dispatch on them:

    0  success
    1  unexpected error
    2  usage error (bad flags)
    3  parse error in a tiling file
    4  invalid tiling
    5  unsupported tile count
    6  precondition unmet
    7  node budget exceeded
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .checks import construction_corpus, enumerated_corpus, run_suite
from .constructions import (
    build_even,
    build_odd_quadrant,
    build_odd_subdivide,
    min_length_table,
    min_total_length,
)
from .enumeration import survey_grid
from .errors import (
    InvalidTilingError,
    PreconditionUnmetError,
    ResourceLimitError,
    SquareTilesError,
    TilingParseError,
    UnsupportedCountError,
)
from .geometry import Tiling, total_length, validate
from .profiles import integrate, vertical_profile
from .render import RenderSpec, decimal_string, render_svg
from .textformat import parse, serialize

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_INVALID = 4
EXIT_UNSUPPORTED = 5
EXIT_PRECONDITION = 6
EXIT_RESOURCE = 7

_EXIT_BY_ERROR = (
    (TilingParseError, EXIT_PARSE),
    (InvalidTilingError, EXIT_INVALID),
    (UnsupportedCountError, EXIT_UNSUPPORTED),
    (PreconditionUnmetError, EXIT_PRECONDITION),
    (ResourceLimitError, EXIT_RESOURCE),
)


def _load(path: str) -> Tiling:
    return parse(Path(path).read_text(encoding="utf-8"))


def cmd_construct(args) -> int:
    n = args.n
    if n % 2 == 0:
        if args.variant is not None:
            print("error: --variant applies only to odd tile counts", file=sys.stderr)
            return EXIT_USAGE
        minimum = min_total_length(n)  # rejects n < 4
        t = build_even(n // 2)
    else:
        minimum = min_total_length(n)  # rejects n in {1, 3, 5}
        k = (n - 3) // 2
        variant = args.variant or "subdivide"
        t = build_odd_subdivide(k) if variant == "subdivide" else build_odd_quadrant(k)
    sigma = total_length(t)
    if sigma != minimum:
        print(f"error: construction length {sigma} != minimum {minimum}", file=sys.stderr)
        return EXIT_ERROR
    text = serialize(t)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"sigma = {sigma}")
        print(f"minimum = {minimum}")
    else:
        sys.stdout.write(text)
        print(f"sigma = {sigma}", file=sys.stderr)
        print(f"minimum = {minimum}", file=sys.stderr)
    return EXIT_OK


def cmd_validate(args) -> int:
    t = _load(args.file)
    report = validate(t)
    if report.ok:
        print(f"ok: {t.n} tiles")
        return EXIT_OK
    for v in report.violations:
        print(f"violation: {v.message}")
    return EXIT_INVALID


def cmd_sigma(args) -> int:
    print(total_length(_load(args.file)))
    return EXIT_OK


def cmd_profile(args) -> int:
    t = _load(args.file)
    p = vertical_profile(t)
    for a, b, v in p.intervals():
        print(f"[{a}, {b}) -> {v}")
    total = integrate(p)
    sigma = total_length(t)
    print(f"integral = {total}")
    print(f"sigma = {sigma}")
    if total != sigma:
        print("error: profile integral does not match sigma", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_OK


def cmd_enumerate(args) -> int:
    witness_ns = [args.n] if args.n is not None else None
    report = survey_grid(
        args.q,
        witness_ns=witness_ns,
        canonical=args.canonical,
        node_budget=args.node_budget,
        workers=args.workers,
    )
    rows = sorted(report.per_n)
    if args.n is not None:
        rows = [n for n in rows if n == args.n]
        if not rows:
            print(f"no tilings with n={args.n} at q={args.q}")
            return EXIT_OK
    header = "n raw"
    if args.canonical:
        header += " canonical"
    header += " min_sigma"
    print(header)
    for n in rows:
        stats = report.per_n[n]
        line = f"{n} {stats.count_raw}"
        if args.canonical:
            line += f" {stats.count_canonical}"
        line += f" {stats.min_sigma}"
        print(line)
    if args.emit_dir:
        out = Path(args.emit_dir)
        out.mkdir(parents=True, exist_ok=True)
        written = 0
        if args.min_only:
            for n in rows:
                for i, w in enumerate(report.per_n[n].witnesses):
                    (out / f"q{args.q}-n{n}-min-{i:04d}.tiling").write_text(
                        serialize(w), encoding="utf-8"
                    )
                    written += 1
        else:
            from .enumeration import iter_grid_tilings

            for i, gt in enumerate(iter_grid_tilings(args.q, args.node_budget)):
                if args.n is not None and gt.n != args.n:
                    continue
                (out / f"q{args.q}-{i:06d}.tiling").write_text(
                    serialize(gt.to_tiling()), encoding="utf-8"
                )
                written += 1
        print(f"wrote {written} files to {out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    reports = run_suite(
        construction_corpus(args.k_max), f"constructions k<={args.k_max}"
    )
    reports += run_suite(
        enumerated_corpus(args.q_max, args.n_max, args.node_budget),
        f"grid tilings q<={args.q_max}"
        + (f" n<={args.n_max}" if args.n_max is not None else ""),
    )
    failed = False
    for r in reports:
        status = "ok" if r.ok else f"{len(r.violations)} VIOLATIONS"
        print(f"{r.check}: corpus [{r.corpus}] checked {r.checked}: {status}")
        for v in r.violations:
            print(f"  violation: {v.details}")
            failed = True
    return EXIT_ERROR if failed else EXIT_OK


def cmd_render(args) -> int:
    t = _load(args.file)
    spec = RenderSpec(canvas=args.canvas, stroke_width=args.stroke_width, fill=args.fill)
    svg = render_svg(t, spec)
    out = args.out or str(Path(args.file).with_suffix(".svg"))
    Path(out).write_text(svg, encoding="utf-8")
    print(f"wrote {out}")
    return EXIT_OK


def cmd_table(args) -> int:
    print("n parity minimum decimal")
    for n, parity, value in min_length_table(args.k_max):
        print(f"{n} {parity} {value} {decimal_string(value)}")
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("squaretiles.service.app:app", host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="squaretiles",
        description="Exact square tilings of the unit square: construct, measure,"
        " enumerate, verify, render.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit a minimum-length tiling with n tiles")
    p.add_argument("--n", type=int, required=True, help="tile count (>= 4, != 5)")
    p.add_argument(
        "--variant",
        choices=["subdivide", "quadrant"],
        default=None,
        help="odd-count construction to use (default: subdivide)",
    )
    p.add_argument("--out", "-o", help="output file (default: tiling text to stdout)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("validate", help="check a tiling file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("sigma", help="print the exact total side length")
    p.add_argument("file")
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("profile", help="print the vertical-line count profile")
    p.add_argument("file")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("enumerate", help="enumerate grid tilings at one resolution")
    p.add_argument("--q", type=int, default=6, help="grid resolution (default 6)")
    p.add_argument("--n", type=int, default=None, help="restrict output to one tile count")
    p.add_argument("--min-only", action="store_true", help="emit only minimum-length witnesses")
    p.add_argument("--canonical", action="store_true", help="also count tilings up to symmetry")
    p.add_argument("--emit-dir", help="write tiling files into this directory")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--node-budget", type=int, default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run the property suite over corpora")
    p.add_argument("--q-max", type=int, default=6, help="grid resolutions to sweep (default 6)")
    p.add_argument("--n-max", type=int, default=None, help="skip grid tilings with more tiles")
    p.add_argument("--k-max", type=int, default=20, help="construction range (default 20)")
    p.add_argument("--node-budget", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="render a tiling file to SVG")
    p.add_argument("file")
    p.add_argument("--out", "-o", help="output SVG path (default: alongside input)")
    p.add_argument("--canvas", type=int, default=1000, help="canvas size in pixels")
    p.add_argument("--stroke-width", type=float, default=2.0)
    p.add_argument("--fill", action=argparse.BooleanOptionalAction, default=True)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("table", help="print the minimum-length table")
    p.add_argument("--k-max", type=int, required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SquareTilesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        for cls, code in _EXIT_BY_ERROR:
            if isinstance(exc, cls):
                return code
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
