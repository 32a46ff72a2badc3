"""Statistics derived from regret series.

The headline quantity is the scaled difference of normalized squared regrets,

    D(T) = scale * (R_a(T)^2 - R_b(T)^2) / T,

whose strict positivity (a = [1,3], b = [1,3,5], k = 5) is the evidence that
the comb strategy is dominated.  Exact input series give exact D values;
division by T leaves the dyadics, so those are held as Fractions.  For pruned
float sweeps, a certified lower bound widens each regret by its error bound
in the adverse direction, so positivity claims survive the lost mass.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass
from fractions import Fraction

from .forward import RegretSeries


@dataclass(frozen=True)
class DiffStatSeries:
    """D(T) for T = 1..t_max; values[0] is a zero placeholder."""

    k: int
    label_a: str
    label_b: str
    scale: int
    exact: bool
    values: tuple

    @property
    def t_max(self) -> int:
        return len(self.values) - 1


def diff_stat(a: RegretSeries, b: RegretSeries, scale: int = 1000) -> DiffStatSeries:
    """Scaled difference of normalized squared regrets, entry per horizon."""
    if a.k != b.k:
        raise ValueError(f"series disagree on k: {a.k} vs {b.k}")
    if a.t_max != b.t_max:
        raise ValueError(f"series cover different ranges: {a.t_max} vs {b.t_max}")
    if scale <= 0:
        raise ValueError(f"scale must be positive, got {scale}")
    exact = a.backend.is_exact and b.backend.is_exact
    if exact:
        values = [Fraction(0)]
        for t in range(1, a.t_max + 1):
            ra = a.values[t].as_fraction()
            rb = b.values[t].as_fraction()
            values.append(Fraction(scale) * (ra * ra - rb * rb) / t)
    else:
        values = [0.0]
        for t in range(1, a.t_max + 1):
            ra = float(a.values[t])
            rb = float(b.values[t])
            values.append(scale * (ra * ra - rb * rb) / t)
    return DiffStatSeries(
        k=a.k,
        label_a=a.subset.label(),
        label_b=b.subset.label(),
        scale=scale,
        exact=exact,
        values=tuple(values),
    )


def certified_lower_bounds(a: RegretSeries, b: RegretSeries, scale: int = 1000) -> tuple:
    """Per-horizon lower bounds on the true D(T), safe against pruning.

    Computed values underestimate the truth by at most the error bound, so
    the true difference is at least scale*(R_a^2 - (R_b + e_b)^2)/T
    (regrets are nonnegative, hence squaring is monotone).
    """
    if a.k != b.k or a.t_max != b.t_max:
        raise ValueError("series must cover the same game and range")
    out = [0.0]
    for t in range(1, a.t_max + 1):
        ra = float(a.values[t])
        rb = float(b.values[t]) + float(b.error_bounds[t])
        out.append(scale * (ra * ra - rb * rb) / t)
    return tuple(out)


@dataclass(frozen=True)
class ConstancySummary:
    t_lo: int
    t_hi: int
    minimum: float
    maximum: float
    mean: float
    slope: float


def constancy_report(d: DiffStatSeries, t_lo: int, t_hi: int) -> ConstancySummary:
    """Window statistics of D: min, max, mean, and least-squares slope in T."""
    if not 1 <= t_lo < t_hi <= d.t_max:
        raise ValueError(f"window [{t_lo}, {t_hi}] not inside 1..{d.t_max}")
    ys = [float(d.values[t]) for t in range(t_lo, t_hi + 1)]
    ts = list(range(t_lo, t_hi + 1))
    n = len(ys)
    mean_t = sum(ts) / n
    mean_y = sum(ys) / n
    sxx = sum((t - mean_t) ** 2 for t in ts)
    sxy = sum((t - mean_t) * (y - mean_y) for t, y in zip(ts, ys))
    return ConstancySummary(
        t_lo=t_lo,
        t_hi=t_hi,
        minimum=min(ys),
        maximum=max(ys),
        mean=mean_y,
        slope=sxy / sxx,
    )


def summary_lines(cs: ConstancySummary) -> list[str]:
    return [
        f"window={cs.t_lo}..{cs.t_hi}",
        f"min={cs.minimum:.17g}",
        f"max={cs.maximum:.17g}",
        f"mean={cs.mean:.17g}",
        f"slope={cs.slope:.17g}",
    ]


@dataclass(frozen=True)
class ConstantEstimate:
    """R(T)/sqrt(T) per horizon, with a tail summary for eyeballing limits."""

    k: int
    label: str
    values: tuple
    at_t_max: float
    window: tuple[int, int]
    win_min: float
    win_max: float

    @property
    def t_max(self) -> int:
        return len(self.values) - 1


def sqrt_normalized(s: RegretSeries, window: tuple[int, int] | None = None) -> ConstantEstimate:
    """Normalize a regret series by sqrt(T)."""
    values = [0.0]
    for t in range(1, s.t_max + 1):
        values.append(float(s.values[t]) / math.sqrt(t))
    if window is None:
        lo = max(1, min(100, s.t_max))
        window = (lo, s.t_max)
    lo, hi = window
    if not 1 <= lo <= hi <= s.t_max:
        raise ValueError(f"window {window} not inside 1..{s.t_max}")
    tail = values[lo : hi + 1]
    return ConstantEstimate(
        k=s.k,
        label=s.subset.label(),
        values=tuple(values),
        at_t_max=values[-1],
        window=window,
        win_min=min(tail),
        win_max=max(tail),
    )


# ----------------------------------------------------------------------
# CSV interchange

DIFF_HEADER = "T,D"
CONSTANT_HEADER = "T,R_over_sqrtT"


def write_diff_csv(d: DiffStatSeries, out) -> None:
    """Rows "T,D" for T = 1..t_max; exact values as fractions, else 17 digits."""
    out.write(DIFF_HEADER + "\n")
    for t in range(1, d.t_max + 1):
        v = d.values[t]
        text = str(v) if d.exact else f"{v:.17g}"
        out.write(f"{t},{text}\n")


def read_diff_csv(text_or_file) -> list[tuple[int, object]]:
    """Parse rows written by write_diff_csv; '#'-prefixed lines are skipped.

    Values containing '/' (or bare integers) parse as Fractions, the rest as
    floats.
    """
    f = io.StringIO(text_or_file) if isinstance(text_or_file, str) else text_or_file
    header = f.readline().strip()
    if header != DIFF_HEADER:
        raise ValueError(f"unexpected diff header: {header!r}")
    rows = []
    for line in f:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        t_txt, v_txt = line.split(",")
        if "/" in v_txt or v_txt.lstrip("-").isdigit():
            value: object = Fraction(v_txt)
        else:
            value = float(v_txt)
        rows.append((int(t_txt), value))
    return rows


def write_constant_csv(c: ConstantEstimate, out) -> None:
    out.write(CONSTANT_HEADER + "\n")
    for t in range(1, c.t_max + 1):
        out.write(f"{t},{c.values[t]:.17g}\n")


def read_constant_csv(text_or_file) -> list[tuple[int, float]]:
    f = io.StringIO(text_or_file) if isinstance(text_or_file, str) else text_or_file
    header = f.readline().strip()
    if header != CONSTANT_HEADER:
        raise ValueError(f"unexpected header: {header!r}")
    rows = []
    for line in f:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        t_txt, v_txt = line.split(",")
        rows.append((int(t_txt), float(v_txt)))
    return rows
