"""Forward propagation of the gap-state distribution under a fixed strategy.

The frontier is a sparse map from encoded states to probability weights.  One
day of play splits every state into its two equally likely branch successors
and accumulates the expected leader delta; the regret after T days is the sum
of the daily expected deltas minus T/2.

Two backends share this contract.  The exact backend keeps dyadic weights and
is the reference.  The float backend runs the same recurrence vectorized over
numpy arrays and supports pruning: states whose merged weight falls below a
threshold are dropped (without renormalizing), and the lost mass is logged
per day so a rigorous error interval can be reported.  A trajectory lost at
day t contributes between 0 and 1 to each of the T - t remaining leader
deltas, so the true regret lies in [R(T), R(T) + sum_t pruned_t * (T - t)].
"""

from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np

from .backend import EXACT, FLOAT, ValueBackend
from .dyadic import HALF, ZERO, Dyadic
from .game import (
    ENCODE_BITS,
    GapState,
    RankSubset,
    apply_gains,
    decode_state,
    encode_state,
    initial_state,
)

# default prune threshold for float sweeps; exact runs default to no pruning
DEFAULT_FLOAT_EPS = 2.0**-50


@dataclass(frozen=True)
class SparseDistribution:
    """Frontier of the forward DP after ``day`` days.

    entries maps encode_state keys to weights (Dyadic or float, per backend).
    pruned_by_day[t-1] is the mass dropped at day t; retained weight plus all
    pruned mass always accounts for the whole unit of probability.
    """

    k: int
    day: int
    backend: ValueBackend
    entries: dict
    pruned_by_day: tuple

    def total_weight(self):
        if self.backend.is_exact:
            total = ZERO
            for w in self.entries.values():
                total = total + w
            return total
        return float(sum(self.entries.values()))

    def total_pruned(self):
        if self.backend.is_exact:
            total = ZERO
            for w in self.pruned_by_day:
                total = total + w
            return total
        return float(sum(self.pruned_by_day))

    def states(self) -> dict:
        """Entries keyed by decoded gap tuples (for inspection and tests)."""
        return {decode_state(key, self.k): w for key, w in self.entries.items()}


def initial_distribution(k: int, backend: ValueBackend = EXACT) -> SparseDistribution:
    start = encode_state(initial_state(k))
    one = Dyadic(1) if backend.is_exact else 1.0
    return SparseDistribution(k, 0, backend, {start: one}, ())


# ----------------------------------------------------------------------
# float fast path: the same recurrence on packed int64 keys

def _float_width(k: int) -> int:
    # k-1 packed fields must fit 63 bits to stay within int64
    return min(ENCODE_BITS, 63 // (k - 1))


def _to_internal(code: int, k: int, width: int) -> int:
    if width == ENCODE_BITS:
        return code
    mask = (1 << ENCODE_BITS) - 1
    out = 0
    for i in range(k - 1):
        out |= ((code >> (ENCODE_BITS * i)) & mask) << (width * i)
    return out


def _to_public(code: int, k: int, width: int) -> int:
    if width == ENCODE_BITS:
        return code
    mask = (1 << width) - 1
    out = 0
    for i in range(k - 1):
        out |= ((code >> (width * i)) & mask) << (ENCODE_BITS * i)
    return out


def _float_step(keys, weights, gains_a, gains_b, k: int, width: int, eps: float):
    """One day of the float recurrence.

    keys are internal-width packed states sorted ascending; the merge keeps
    them sorted, and every reduction runs in that fixed order, so results are
    reproducible bit for bit.  Returns (keys, weights, expected_delta,
    pruned_mass); expected_delta is accumulated before pruning.
    """
    n = keys.shape[0]
    mask = np.int64((1 << width) - 1)
    gaps = np.zeros((n, k), dtype=np.int64)
    for i in range(1, k):
        gaps[:, i] = (keys >> np.int64(width * (i - 1))) & mask

    half = weights * 0.5
    expected_delta = 0.0
    codes_parts = []
    for gains in (gains_a, gains_b):
        rel = gains[None, :] - gaps
        delta = rel.max(axis=1)
        nxt = delta[:, None] - rel
        nxt.sort(axis=1)
        code = np.zeros(n, dtype=np.int64)
        for i in range(1, k):
            code |= nxt[:, i] << np.int64(width * (i - 1))
        codes_parts.append(code)
        expected_delta += float(np.sum(half * delta))

    codes = np.concatenate(codes_parts)
    ws = np.concatenate([half, half])
    order = np.argsort(codes, kind="stable")
    codes = codes[order]
    ws = ws[order]

    first = np.empty(codes.shape[0], dtype=bool)
    first[0] = True
    np.not_equal(codes[1:], codes[:-1], out=first[1:])
    group = np.cumsum(first) - 1
    merged_keys = codes[first]
    merged_w = np.bincount(group, weights=ws)

    keep = merged_w >= eps if eps > 0.0 else np.ones(merged_w.shape, dtype=bool)
    pruned = float(np.sum(merged_w[~keep])) if eps > 0.0 else 0.0
    return merged_keys[keep], merged_w[keep], expected_delta, pruned


# ----------------------------------------------------------------------
# exact path: dyadic weights in a plain dict

def _exact_step(entries: dict, subset: RankSubset, k: int, eps, cache: dict | None = None):
    # cache maps key -> (child_key_a, delta_a, child_key_b, delta_b); states
    # recur day after day, so a per-series cache skips most decode/sort work
    if cache is None:
        cache = {}
    gains_a = subset.gains()
    gains_b = subset.complement_gains()
    nxt: dict = {}
    delta_acc = ZERO
    for key in sorted(entries):
        wh = entries[key].half()
        tr = cache.get(key)
        if tr is None:
            state = decode_state(key, k)
            child_a, delta_a = apply_gains(state, gains_a)
            child_b, delta_b = apply_gains(state, gains_b)
            tr = (encode_state(child_a), delta_a, encode_state(child_b), delta_b)
            cache[key] = tr
        for ck, delta in ((tr[0], tr[1]), (tr[2], tr[3])):
            prev = nxt.get(ck)
            nxt[ck] = wh if prev is None else prev + wh
            if delta:
                delta_acc = delta_acc + wh

    pruned = ZERO
    if eps is not None and eps > 0.0:
        threshold = eps if isinstance(eps, Dyadic) else Dyadic.from_float(float(eps))
        for key in sorted(nxt):
            if nxt[key] < threshold:
                pruned = pruned + nxt.pop(key)
    return nxt, delta_acc, pruned


def evolve_step(
    dist: SparseDistribution,
    subset: RankSubset,
    backend: ValueBackend | None = None,
    eps: float = 0.0,
):
    """Advance the frontier one day under ``subset``.

    Returns (next_distribution, expected_delta, pruned_mass).  The subset is
    canonicalized first; pruning happens after the merge, so mass reaching a
    surviving state through any branch is never dropped.
    """
    if backend is None:
        backend = dist.backend
    elif backend.kind != dist.backend.kind:
        raise ValueError(f"distribution is {dist.backend.kind} but backend argument is {backend.kind}")
    subset = subset.canonical()
    if subset.k != dist.k:
        raise ValueError(f"subset is for k={subset.k}, distribution for k={dist.k}")

    if backend.is_exact:
        entries, expected_delta, pruned = _exact_step(dist.entries, subset, dist.k, eps)
    else:
        k, width = dist.k, _float_width(dist.k)
        pub_keys = sorted(dist.entries)
        keys = np.fromiter(
            (_to_internal(c, k, width) for c in pub_keys), dtype=np.int64, count=len(pub_keys)
        )
        weights = np.fromiter((dist.entries[c] for c in pub_keys), dtype=np.float64, count=len(pub_keys))
        ga = np.array(subset.gains(), dtype=np.int64)
        gb = np.array(subset.complement_gains(), dtype=np.int64)
        out_keys, out_w, expected_delta, pruned = _float_step(keys, weights, ga, gb, k, width, eps)
        entries = {
            _to_public(int(c), k, width): float(w) for c, w in zip(out_keys, out_w)
        }

    nxt = SparseDistribution(
        dist.k, dist.day + 1, dist.backend, entries, dist.pruned_by_day + (pruned,)
    )
    return nxt, expected_delta, pruned


# ----------------------------------------------------------------------
# series over a horizon

@dataclass(frozen=True)
class RegretSeries:
    """R(T) for one strategy at every horizon 1..t_max.

    values[T] is the expected regret after T days (values[0] is zero); with
    pruning, the true value lies within error_bounds[T] above the stored one.
    """

    k: int
    subset: RankSubset
    backend: ValueBackend
    eps: float
    values: tuple
    error_bounds: tuple
    frontier_peak: int

    @property
    def t_max(self) -> int:
        return len(self.values) - 1

    def regret_at(self, t: int):
        return self.values[t]

    def bound_at(self, t: int):
        return self.error_bounds[t]


def regret_series_fixed(
    k: int,
    subset: RankSubset,
    t_max: int,
    backend: ValueBackend = EXACT,
    eps: float | None = None,
) -> RegretSeries:
    """Expected-regret series of a fixed subset strategy up to horizon t_max."""
    if t_max < 1:
        raise ValueError(f"t_max must be at least 1, got {t_max}")
    subset = subset.canonical()
    if subset.k != k:
        raise ValueError(f"subset is for k={subset.k}, not k={k}")
    if eps is None:
        eps = 0.0 if backend.is_exact else DEFAULT_FLOAT_EPS

    if backend.is_exact:
        return _series_exact(k, subset, t_max, eps)
    return _series_float(k, subset, t_max, eps)


def _series_exact(k: int, subset: RankSubset, t_max: int, eps) -> RegretSeries:
    entries = initial_distribution(k, EXACT).entries
    cache: dict = {}
    values = [ZERO]
    bounds = [ZERO]
    regret = ZERO
    # pruned-mass ledger: bound(T) = S0*T - S1 with S0 = sum m_t, S1 = sum m_t*t
    s0 = ZERO
    s1 = ZERO
    peak = 1
    for day in range(1, t_max + 1):
        entries, expected_delta, pruned = _exact_step(entries, subset, k, eps, cache)
        regret = regret + expected_delta - HALF
        s0 = s0 + pruned
        s1 = s1 + pruned * day
        values.append(regret)
        bounds.append(s0 * day - s1)
        if len(entries) > peak:
            peak = len(entries)
    return RegretSeries(k, subset, EXACT, float(eps), tuple(values), tuple(bounds), peak)


def _series_float(k: int, subset: RankSubset, t_max: int, eps: float) -> RegretSeries:
    width = _float_width(k)
    if t_max > (1 << width) - 1:
        raise ValueError(f"t_max {t_max} exceeds packed-gap range for k={k}")
    keys = np.zeros(1, dtype=np.int64)
    weights = np.ones(1, dtype=np.float64)
    ga = np.array(subset.gains(), dtype=np.int64)
    gb = np.array(subset.complement_gains(), dtype=np.int64)
    values = [0.0]
    bounds = [0.0]
    regret = 0.0
    s0 = 0.0
    s1 = 0.0
    peak = 1
    for day in range(1, t_max + 1):
        keys, weights, expected_delta, pruned = _float_step(keys, weights, ga, gb, k, width, eps)
        regret += expected_delta - 0.5
        s0 += pruned
        s1 += pruned * day
        values.append(regret)
        bounds.append(s0 * day - s1)
        if keys.shape[0] > peak:
            peak = int(keys.shape[0])
    return RegretSeries(k, subset, FLOAT, eps, tuple(values), tuple(bounds), peak)


# ----------------------------------------------------------------------
# CSV interchange

SERIES_HEADER = "T,regret,regret_exact,error_bound"


def _fmt_float(x: float) -> str:
    return f"{x:.17g}"


def write_series_csv(series: RegretSeries, out) -> None:
    """Write "T,regret,regret_exact,error_bound" rows for T = 1..t_max.

    ``out`` is a writable text file object.  Exact values print as exact
    decimals plus the n/2^e form; float values print with 17 significant
    digits and an empty exact column.
    """
    out.write(SERIES_HEADER + "\n")
    exact = series.backend.is_exact
    for t in range(1, series.t_max + 1):
        v = series.values[t]
        b = series.error_bounds[t]
        if exact:
            out.write(f"{t},{v.decimal()},{v.interchange()},{b.decimal()}\n")
        else:
            out.write(f"{t},{_fmt_float(v)},,{_fmt_float(b)}\n")


@dataclass(frozen=True)
class SeriesRow:
    t: int
    regret: float
    regret_exact: Dyadic | None
    error_bound: float


def read_series_csv(text_or_file) -> list[SeriesRow]:
    """Parse the CSV written by write_series_csv."""
    if isinstance(text_or_file, str):
        f = io.StringIO(text_or_file)
    else:
        f = text_or_file
    header = f.readline().strip()
    if header != SERIES_HEADER:
        raise ValueError(f"unexpected series header: {header!r}")
    rows = []
    for line in f:
        line = line.strip()
        if not line:
            continue
        t_txt, regret_txt, exact_txt, bound_txt = line.split(",")
        exact = Dyadic.parse(exact_txt) if exact_txt else None
        rows.append(SeriesRow(int(t_txt), float(regret_txt), exact, float(bound_txt)))
    return rows
