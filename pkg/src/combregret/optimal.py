"""Best adaptive play over a family of subset strategies, and best fixed subset.

The adaptive adversary may pick a different subset from the family at every
state and day.  With r days remaining, the value of a state is

    V(s, 0) = 0
    V(s, r) = max over A in the family of
              (delta_A + V(s_A, r-1) + delta_B + V(s_B, r-1)) / 2

where (s_A, delta_A) and (s_B, delta_B) are the two branches of one day under
A.  V(initial, T) is the expected maximum total gain after T days; subtracting
T/2 (the expected gain any player is pinned to) gives the expected regret.

The memo is keyed by (state, remaining), which is sound because the value is
horizon-dependent but day-translation-invariant.  Exact arithmetic is the
default: optimality claims here are equality assertions, where float ties
cannot be trusted.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .backend import EXACT, ValueBackend
from .dyadic import ZERO, Dyadic
from .errors import BudgetError
from .forward import regret_series_fixed
from .game import GapState, RankSubset, all_strategies, initial_state, step

# hard ceilings; exceeding them is an error, never a silent approximation
MAX_MEMO_NODES = 20_000_000
MAX_HORIZON = 400


def _canonical_family(family: Iterable[RankSubset]) -> tuple[RankSubset, ...]:
    seen = {}
    for s in family:
        c = s.canonical()
        seen[c.ranks] = c
    if not seen:
        raise ValueError("strategy family must be nonempty")
    ks = {s.k for s in seen.values()}
    if len(ks) != 1:
        raise ValueError(f"family mixes expert counts: {sorted(ks)}")
    return tuple(seen[r] for r in sorted(seen))


class AdaptiveSolver:
    """Memoized evaluator for one (k, family, backend) triple.

    A single solver can value several horizons; the memo is shared, so asking
    for T after T_max costs almost nothing extra.
    """

    def __init__(self, k: int, family: Iterable[RankSubset], backend: ValueBackend = EXACT):
        self.family = _canonical_family(family)
        if self.family[0].k != k:
            raise ValueError(f"family is for k={self.family[0].k}, not k={k}")
        self.k = k
        self.backend = backend
        self.memo: dict = {}
        self._succ_cache: dict = {}
        self._zero = ZERO if backend.is_exact else 0.0

    def _succ(self, state: GapState):
        cached = self._succ_cache.get(state)
        if cached is None:
            cached = tuple(
                (a.state, a.leader_delta, b.state, b.leader_delta)
                for a, b in (step(state, s) for s in self.family)
            )
            self._succ_cache[state] = cached
        return cached

    def _node_value(self, succ_entry, r: int):
        sa, da, sb, db = succ_entry
        va = self._eval(sa, r - 1)
        vb = self._eval(sb, r - 1)
        if self.backend.is_exact:
            return (va + vb + (da + db)).half()
        return 0.5 * (va + vb + da + db)

    def _eval(self, state: GapState, r: int):
        if r == 0:
            return self._zero
        key = (state, r)
        v = self.memo.get(key)
        if v is not None:
            return v
        best = None
        for entry in self._succ(state):
            cand = self._node_value(entry, r)
            if best is None or cand > best:
                best = cand
        if len(self.memo) >= MAX_MEMO_NODES:
            raise BudgetError(f"adaptive memo exceeded {MAX_MEMO_NODES} nodes")
        self.memo[key] = best
        return best

    def expected_max(self, t: int):
        """E[max total gain] after t days of best adaptive play."""
        if t < 0:
            raise ValueError(f"horizon must be nonnegative, got {t}")
        if t > MAX_HORIZON:
            raise BudgetError(f"horizon {t} exceeds the adaptive engine cap {MAX_HORIZON}")
        return self._eval(initial_state(self.k), t)

    def value(self, t: int) -> "AdaptivePolicyValue":
        emax = self.expected_max(t)
        if self.backend.is_exact:
            regret = emax - Dyadic(t, 1)
        else:
            regret = emax - t / 2.0
        return AdaptivePolicyValue(
            k=self.k,
            t=t,
            family=self.family,
            backend=self.backend,
            expected_max=emax,
            regret=regret,
            node_count=len(self.memo),
            solver=self,
        )

    def maximizers(self, state: GapState, remaining: int) -> tuple[RankSubset, ...]:
        """All family members achieving the max at a computed memo node."""
        key = (state, remaining)
        target = self.memo.get(key)
        if target is None:
            raise ValueError(f"node not computed: state={state}, remaining={remaining}")
        return tuple(
            subset
            for subset, entry in zip(self.family, self._succ(state))
            if self._node_value(entry, remaining) == target
        )

    def trace(self, t: int) -> Iterator[tuple[GapState, int, tuple[RankSubset, ...]]]:
        """Nodes reachable under optimal play from the start, breadth-first.

        Yields (state, remaining, maximizers); children follow every
        maximizing subset, both branches, so the dump covers the whole set of
        positions an optimal adversary can face.
        """
        start = initial_state(self.k)
        if (start, t) not in self.memo:
            self.expected_max(t)
        queue = deque([(start, t)])
        seen = {(start, t)}
        while queue:
            state, r = queue.popleft()
            if r == 0:
                continue
            maxers = self.maximizers(state, r)
            yield state, r, maxers
            for subset, entry in zip(self.family, self._succ(state)):
                if subset not in maxers:
                    continue
                for child in (entry[0], entry[2]):
                    node = (child, r - 1)
                    if r - 1 > 0 and node not in seen:
                        seen.add(node)
                        queue.append(node)


@dataclass(frozen=True)
class AdaptivePolicyValue:
    """Result of valuing one horizon: both the raw expected maximum and the
    centered regret (their difference is exactly t/2)."""

    k: int
    t: int
    family: tuple[RankSubset, ...]
    backend: ValueBackend
    expected_max: object
    regret: object
    node_count: int
    solver: AdaptiveSolver = field(repr=False, compare=False)

    def maximizers(self, state: GapState, remaining: int) -> tuple[RankSubset, ...]:
        return self.solver.maximizers(state, remaining)

    def family_label(self) -> str:
        return ":".join(s.label() for s in self.family)


def value_adaptive(
    k: int,
    family: Iterable[RankSubset],
    t: int,
    backend: ValueBackend = EXACT,
) -> AdaptivePolicyValue:
    """Expected regret of the best adaptive policy over ``family`` at horizon t."""
    return AdaptiveSolver(k, family, backend).value(t)


def policy_trace(result: AdaptivePolicyValue, state: GapState, remaining: int) -> tuple[RankSubset, ...]:
    """Maximizing subsets at one memo node of a computed adaptive value."""
    return result.maximizers(state, remaining)


@dataclass(frozen=True)
class BestFixedResult:
    """Outcome of scanning every canonical subset at one horizon."""

    k: int
    t: int
    backend: ValueBackend
    maximizers: tuple[RankSubset, ...]
    regret: object
    expected_max: object
    scanned: int

    def primary(self) -> RankSubset:
        return self.maximizers[0]


def best_fixed_subset(k: int, t: int, backend: ValueBackend = EXACT) -> BestFixedResult:
    """The best single subset strategy at horizon t, with all tied maximizers.

    Scans all 2^(k-1) canonical subsets; ties are reported in lexicographic
    rank order, so the primary maximizer is deterministic.
    """
    if t < 1:
        raise ValueError(f"horizon must be at least 1, got {t}")
    best = None
    winners: list[RankSubset] = []
    scanned = 0
    for subset in all_strategies(k):
        scanned += 1
        series = regret_series_fixed(k, subset, t, backend, eps=0.0)
        v = series.regret_at(t)
        if best is None or v > best:
            best = v
            winners = [subset]
        elif v == best:
            winners.append(subset)
    if backend.is_exact:
        emax = best + Dyadic(t, 1)
    else:
        emax = best + t / 2.0
    return BestFixedResult(
        k=k,
        t=t,
        backend=backend,
        maximizers=tuple(winners),
        regret=best,
        expected_max=emax,
        scanned=scanned,
    )
