"""Command-line front end.

Subcommands expose the engines over a small, reproducible surface: identical
configurations produce byte-identical output files.  Exit codes: 0 on
success, 1 when a verify suite fails, 2 on usage or configuration errors.
"""

from __future__ import annotations

import argparse
import contextlib
import os
import sys

from .analysis import (
    certified_lower_bounds,
    constancy_report,
    diff_stat,
    summary_lines,
    write_diff_csv,
)
from .backend import EXACT, FLOAT, ValueBackend, get_backend
from .checks import SUITE_NAMES, run_suite
from .errors import BudgetError
from .forward import DEFAULT_FLOAT_EPS, regret_series_fixed, write_series_csv
from .game import RankSubset, all_strategies
from .optimal import best_fixed_subset, value_adaptive

# ceiling for sweep-style commands; the packed-state engines verify their own
# tighter limits, this just catches typos early
SWEEP_LIMIT = 400

FIGURE_K = 5
FIGURE_A = (1, 3)
FIGURE_B = (1, 3, 5)


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def _parse_eps(text: str) -> float:
    """Prune threshold: '0', a float literal, or a power like '2^-50'."""
    s = text.strip()
    if s.startswith("2^"):
        return 2.0 ** int(s[2:])
    value = float(s)
    if value < 0:
        raise argparse.ArgumentTypeError(f"prune threshold must be nonnegative, got {text}")
    return value


def _default_threads() -> int:
    env = os.environ.get("REGRET_THREADS", "")
    try:
        return max(1, int(env)) if env else 1
    except ValueError:
        return 1


def _resolve_backend(name: str | None, t_max: int) -> ValueBackend:
    # small horizons default to exact arithmetic, sweeps to float
    if name is not None:
        return get_backend(name)
    return EXACT if t_max <= 30 else FLOAT


def _resolve_eps(eps: float | None, backend: ValueBackend) -> float:
    if eps is not None:
        return eps
    return 0.0 if backend.is_exact else DEFAULT_FLOAT_EPS


@contextlib.contextmanager
def _open_out(path: str):
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as f:
            yield f


def _parse_family(k: int, text: str) -> list[RankSubset]:
    if text.strip() == "all":
        return list(all_strategies(k))
    return [RankSubset.parse(k, part) for part in text.split(":")]


def _value_lines(prefix: str, value, backend: ValueBackend) -> list[str]:
    if backend.is_exact:
        return [f"{prefix}={value.decimal()} ({value.interchange()})"]
    return [f"{prefix}={float(value):.17g}"]


# ----------------------------------------------------------------------
# subcommands

def _cmd_eval(args) -> int:
    subset = RankSubset.parse(args.k, args.subset)
    backend = _resolve_backend(args.backend, args.t_max)
    eps = _resolve_eps(args.prune, backend)
    series = regret_series_fixed(args.k, subset, args.t_max, backend, eps)
    with _open_out(args.out) as f:
        write_series_csv(series, f)
    return 0


def _cmd_compare(args) -> int:
    a = RankSubset.parse(args.k, args.a)
    b = RankSubset.parse(args.k, args.b)
    backend = _resolve_backend(args.backend, args.t_max)
    eps = _resolve_eps(args.prune, backend)
    sa = regret_series_fixed(args.k, a, args.t_max, backend, eps)
    sb = regret_series_fixed(args.k, b, args.t_max, backend, eps)
    d = diff_stat(sa, sb, args.scale)

    if args.window is not None:
        try:
            lo_txt, hi_txt = args.window.split(":")
            lo, hi = int(lo_txt), int(hi_txt)
        except ValueError:
            raise ValueError(f"window must be LO:HI, got {args.window!r}")
        lines = summary_lines(constancy_report(d, lo, hi))
    else:
        if args.t_max > 100:
            lo, hi = 100, args.t_max
        else:
            lo, hi = max(1, args.t_max // 2), args.t_max
        lines = summary_lines(constancy_report(d, lo, hi)) if lo < hi else []

    with _open_out(args.out) as f:
        write_diff_csv(d, f)
        if args.out == "-":
            for line in lines:
                f.write(f"# {line}\n")
    if args.out != "-":
        for line in lines:
            print(line)
    return 0


def _cmd_optimal(args) -> int:
    family = _parse_family(args.k, args.family)
    backend = get_backend(args.backend)
    result = value_adaptive(args.k, family, args.t, backend)
    print(f"family={result.family_label()}")
    print(f"t={args.t}")
    print(f"nodes={result.node_count}")
    for line in _value_lines("expected_max", result.expected_max, backend):
        print(line)
    for line in _value_lines("regret", result.regret, backend):
        print(line)
    if args.trace is not None:
        with open(args.trace, "w", encoding="utf-8") as f:
            for state, remaining, maxers in result.solver.trace(args.t):
                state_txt = "(" + ",".join(str(g) for g in state) + ")"
                f.write(f"{state_txt} {remaining} -> {':'.join(s.label() for s in maxers)}\n")
    return 0


def _cmd_best_fixed(args) -> int:
    backend = get_backend(args.backend)
    result = best_fixed_subset(args.k, args.t, backend)
    print(f"t={args.t}")
    print(f"scanned={result.scanned}")
    print(f"best={result.primary().label()}")
    print(f"maximizers={':'.join(s.label() for s in result.maximizers)}")
    for line in _value_lines("expected_max", result.expected_max, backend):
        print(line)
    for line in _value_lines("regret", result.regret, backend):
        print(line)
    return 0


def _svg_chart(d) -> str:
    """Minimal SVG polyline of D(T): axes, title, one path, no styling."""
    width, height = 720, 440
    ml, mr, mt, mb = 60, 20, 40, 50
    t_max = d.t_max
    ys = [float(v) for v in d.values[1:]]
    y_hi = max(max(ys), 0.0) * 1.05 or 1.0
    y_lo = min(min(ys), 0.0)
    span = y_hi - y_lo or 1.0

    def x(t: float) -> float:
        return ml + (t - 1) / max(t_max - 1, 1) * (width - ml - mr)

    def y(v: float) -> float:
        return height - mb - (v - y_lo) / span * (height - mt - mb)

    points = " ".join(f"{x(t):.2f},{y(v):.2f}" for t, v in enumerate(ys, start=1))
    title = f"{d.scale}*(R[{d.label_a}]^2 - R[{d.label_b}]^2)/T, k={d.k}"
    zero_y = y(0.0)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<text x="{width / 2:.0f}" y="24" text-anchor="middle" font-size="15">{title}</text>',
        f'<line x1="{ml}" y1="{mt}" x2="{ml}" y2="{height - mb}" stroke="black"/>',
        f'<line x1="{ml}" y1="{zero_y:.2f}" x2="{width - mr}" y2="{zero_y:.2f}" stroke="black"/>',
        f'<text x="{ml - 8}" y="{y(y_hi / 1.05):.2f}" text-anchor="end" font-size="11">{y_hi / 1.05:.3g}</text>',
        f'<text x="{ml - 8}" y="{zero_y + 4:.2f}" text-anchor="end" font-size="11">0</text>',
        f'<text x="{x(t_max):.2f}" y="{height - mb + 16}" text-anchor="end" font-size="11">T={t_max}</text>',
        f'<polyline fill="none" stroke="steelblue" stroke-width="1.5" points="{points}"/>',
        "</svg>",
    ]
    return "\n".join(parts)


def _cmd_figure1(args) -> int:
    if args.t_max > SWEEP_LIMIT:
        raise ValueError(f"t-max {args.t_max} exceeds the sweep limit {SWEEP_LIMIT}")
    a = RankSubset.of(FIGURE_K, FIGURE_A)
    b = RankSubset.of(FIGURE_K, FIGURE_B)
    eps = args.prune if args.prune is not None else DEFAULT_FLOAT_EPS
    sa = regret_series_fixed(FIGURE_K, a, args.t_max, FLOAT, eps)
    sb = regret_series_fixed(FIGURE_K, b, args.t_max, FLOAT, eps)
    d = diff_stat(sa, sb, args.scale)
    with open(args.out_csv, "w", encoding="utf-8") as f:
        write_diff_csv(d, f)
    with open(args.out_svg, "w", encoding="utf-8") as f:
        f.write(_svg_chart(d))
    if args.t_max >= 5:
        # positivity that survives the pruning error, from T=5 on
        lower = certified_lower_bounds(sa, sb, args.scale)
        print(f"certified_min_from_t5={min(lower[5:]):.17g}")
    if args.t_max > 100:
        for line in summary_lines(constancy_report(d, 100, args.t_max)):
            print(line)
    print(f"csv={args.out_csv}")
    print(f"svg={args.out_svg}")
    return 0


def _cmd_verify(args) -> int:
    results = run_suite(args.suite, k=args.k, t_max=args.t_max)
    failures = 0
    for r in results:
        print(r.line())
        if not r.passed:
            failures += 1
    print(f"{len(results) - failures}/{len(results)} checks passed")
    return 1 if failures else 0


# ----------------------------------------------------------------------
# parser

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="combregret",
        description="Exact expected-regret computations for balanced rank-subset adversaries.",
    )
    parser.add_argument(
        "--threads",
        type=_positive_int,
        default=_default_threads(),
        help="upper bound on worker threads (engines are single-threaded; "
        "results never depend on this; env REGRET_THREADS sets the default)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_backend(p, *, forced: str | None = None):
        if forced is None:
            p.add_argument("--backend", choices=("exact", "float"), default=None,
                           help="arithmetic backend (default: exact up to T=30, float beyond)")
        else:
            p.add_argument("--backend", choices=("exact", "float"), default=forced,
                           help=f"arithmetic backend (default {forced})")
        p.add_argument("--prune", type=_parse_eps, default=None, metavar="EPS",
                       help="drop states below this weight, e.g. 2^-50 "
                       "(default: 0 exact, 2^-50 float)")

    p = sub.add_parser("eval", help="regret series of one fixed subset strategy")
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--subset", required=True, help="comma-separated ranks, e.g. 1,3, or comb")
    p.add_argument("--t-max", type=_positive_int, required=True)
    add_backend(p)
    p.add_argument("--out", default="-", help="output CSV path ('-' for stdout)")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("compare", help="difference statistic D(T) between two strategies")
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--a", required=True, help="first subset, e.g. 1,3")
    p.add_argument("--b", required=True, help="second subset, e.g. 1,3,5")
    p.add_argument("--t-max", type=_positive_int, required=True)
    p.add_argument("--scale", type=_positive_int, default=1000)
    p.add_argument("--window", default=None, metavar="LO:HI",
                   help="constancy window (default 100:T_MAX when T_MAX > 100)")
    add_backend(p)
    p.add_argument("--out", default="-", help="output CSV path ('-' for stdout)")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("optimal", help="best adaptive value over a family of subsets")
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--family", required=True,
                   help="colon-separated subsets, e.g. 1,3,6:1,4,6, or 'all'")
    p.add_argument("--t", type=_positive_int, required=True)
    add_backend(p, forced="exact")
    p.add_argument("--trace", default=None, metavar="PATH",
                   help="dump 'state remaining -> maximizers' lines to PATH")
    p.set_defaults(func=_cmd_optimal)

    p = sub.add_parser("best-fixed", help="best single subset strategy at one horizon")
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--t", type=_positive_int, required=True)
    add_backend(p, forced="exact")
    p.set_defaults(func=_cmd_best_fixed)

    p = sub.add_parser("figure1", help="D(T) sweep for k=5, [1,3] vs [1,3,5]: CSV plus SVG")
    p.add_argument("--t-max", type=_positive_int, default=350)
    p.add_argument("--scale", type=_positive_int, default=1000)
    p.add_argument("--prune", type=_parse_eps, default=None, metavar="EPS")
    p.add_argument("--out-csv", default="figure1.csv")
    p.add_argument("--out-svg", default="figure1.svg")
    p.set_defaults(func=_cmd_figure1)

    p = sub.add_parser("verify", help="run a named check suite")
    p.add_argument("--suite", choices=SUITE_NAMES, required=True)
    p.add_argument("--k", type=_positive_int, default=None)
    p.add_argument("--t-max", type=_positive_int, default=None)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, BudgetError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
