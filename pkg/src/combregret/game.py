"""Core mechanics of the expert game in gap coordinates.

A position is summarized by the sorted vector of gaps behind the current
leader: ``gaps[0] == 0`` and ``gaps`` is nondecreasing.  Ranks are 1-based
positions in that vector, so rank 1 is the leader and rank k the trailer.

A balanced rank-subset strategy names a set S of ranks; each day the experts
at ranks in S gain 1 (and the rest 0) with probability 1/2, otherwise the
complement gains.  Balance pins the player's expected total at half the
horizon regardless of the player's algorithm, which reduces expected regret
to the expected maximum total gain minus that constant.  The day index and
absolute totals therefore never need to be part of the state.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

GapState = tuple[int, ...]

MIN_K = 2
MAX_K = 8

# encode_state packs each gap after the leading zero into this many bits
ENCODE_BITS = 12
MAX_ENCODE_GAP = (1 << ENCODE_BITS) - 1


def initial_state(k: int) -> GapState:
    """Day-zero state: everyone tied with the leader."""
    if not MIN_K <= k <= MAX_K:
        raise ValueError(f"expert count must be in {MIN_K}..{MAX_K}, got k={k}")
    return (0,) * k


def validate_state(gaps: GapState) -> None:
    """Raise ValueError unless ``gaps`` is a valid sorted gap vector."""
    if not MIN_K <= len(gaps) <= MAX_K:
        raise ValueError(f"state length must be in {MIN_K}..{MAX_K}: {gaps!r}")
    if gaps[0] != 0:
        raise ValueError(f"leader gap must be zero: {gaps!r}")
    for a, b in zip(gaps, gaps[1:]):
        if b < a:
            raise ValueError(f"gaps must be nondecreasing: {gaps!r}")
    if any(g < 0 for g in gaps):
        raise ValueError(f"gaps must be nonnegative: {gaps!r}")


def apply_gains(gaps: GapState, gains: tuple[int, ...]) -> tuple[GapState, int]:
    """Apply one day of 0/1 gains (indexed by rank) to a gap state.

    Returns the re-sorted next state and the leader delta, i.e. how much the
    maximum total gain rose that day.  The delta is always 0 or 1: nobody can
    overtake the leader by more than a single unit in one day.
    """
    # relative scores: the expert at rank i moves to gains[i] - gaps[i]
    rel = [a - g for a, g in zip(gains, gaps)]
    delta = max(rel)
    nxt = tuple(sorted(delta - r for r in rel))
    return nxt, delta


@dataclass(frozen=True)
class RankSubset:
    """A validated subset of ranks 1..k, kept sorted.

    A subset and its complement induce the same balanced strategy; the
    canonical representative of the pair is the one containing rank 1.
    Construction does not canonicalize (complement inputs are legal), but
    every engine canonicalizes before computing.
    """

    k: int
    ranks: tuple[int, ...]

    def __post_init__(self):
        if not MIN_K <= self.k <= MAX_K:
            raise ValueError(f"expert count must be in {MIN_K}..{MAX_K}, got k={self.k}")
        if not self.ranks:
            raise ValueError("rank subset must be nonempty")
        if list(self.ranks) != sorted(set(self.ranks)):
            raise ValueError(f"ranks must be strictly increasing: {self.ranks!r}")
        if self.ranks[0] < 1 or self.ranks[-1] > self.k:
            raise ValueError(f"ranks must lie in 1..{self.k}: {self.ranks!r}")

    @classmethod
    def of(cls, k: int, ranks: Iterable[int]) -> "RankSubset":
        return cls(k, tuple(sorted(ranks)))

    @classmethod
    def comb(cls, k: int) -> "RankSubset":
        """The odd ranks 1, 3, 5, ... up to k."""
        return cls(k, tuple(range(1, k + 1, 2)))

    @classmethod
    def parse(cls, k: int, text: str) -> "RankSubset":
        """Parse a comma-separated rank list such as ``1,3``, or ``comb``."""
        s = text.strip()
        if s == "comb":
            return cls.comb(k)
        try:
            ranks = tuple(int(part) for part in s.split(","))
        except ValueError:
            raise ValueError(f"bad rank list: {text!r}") from None
        try:
            return cls.of(k, ranks)
        except ValueError as e:
            raise ValueError(f"rank out of range or malformed subset {text!r}: {e}") from None

    def complement_ranks(self) -> tuple[int, ...]:
        mine = set(self.ranks)
        return tuple(r for r in range(1, self.k + 1) if r not in mine)

    def canonical(self) -> "RankSubset":
        """The representative of the {S, complement} pair containing rank 1."""
        if 1 in self.ranks:
            return self
        return RankSubset(self.k, self.complement_ranks())

    def is_full(self) -> bool:
        return len(self.ranks) == self.k

    def gains(self) -> tuple[int, ...]:
        """Per-rank 0/1 gains of the branch where this subset receives gain 1."""
        mine = set(self.ranks)
        return tuple(1 if r in mine else 0 for r in range(1, self.k + 1))

    def complement_gains(self) -> tuple[int, ...]:
        return tuple(1 - a for a in self.gains())

    def label(self) -> str:
        return ",".join(str(r) for r in self.ranks)

    def __str__(self):
        return self.label()


def canonical_subset(members: Iterable[int], k: int) -> RankSubset:
    """Canonicalize a raw rank set: return it, or its complement, so that
    rank 1 is included.  An empty set maps to the full set."""
    mine = set(members)
    for r in mine:
        if not 1 <= r <= k:
            raise ValueError(f"rank {r} out of range 1..{k}")
    if 1 not in mine:
        mine = set(range(1, k + 1)) - mine
    return RankSubset.of(k, mine)


@dataclass(frozen=True)
class BranchOutcome:
    """One of the two equally likely results of playing a subset for a day."""

    gains: tuple[int, ...]
    state: GapState
    leader_delta: int


def step(gaps: GapState, subset: RankSubset) -> tuple[BranchOutcome, BranchOutcome]:
    """Both outcomes of one day under ``subset``, each with probability 1/2.

    The first outcome is the branch in which ``subset`` itself receives the
    gains, the second is the complement branch.
    """
    if len(gaps) != subset.k:
        raise ValueError(f"state has {len(gaps)} entries but subset expects k={subset.k}")
    out = []
    for gains in (subset.gains(), subset.complement_gains()):
        nxt, delta = apply_gains(gaps, gains)
        out.append(BranchOutcome(gains, nxt, delta))
    return out[0], out[1]


def all_strategies(k: int) -> Iterator[RankSubset]:
    """Every distinct balanced strategy, one per {S, complement} pair.

    Representatives all contain rank 1, so there are exactly 2^(k-1) of them,
    including the full set (whose strategy never changes the gaps).  Emitted
    in lexicographic rank order, which fixes tie-breaking everywhere a scan
    reports an argmax.
    """
    if not MIN_K <= k <= MAX_K:
        raise ValueError(f"expert count must be in {MIN_K}..{MAX_K}, got k={k}")
    others = range(2, k + 1)
    subsets = []
    for size in range(0, k):
        for rest in combinations(others, size):
            subsets.append((1,) + rest)
    for ranks in sorted(subsets):
        yield RankSubset(k, ranks)


def encode_state(gaps: GapState) -> int:
    """Pack a gap vector into an int, 12 bits per gap.

    The leading gap is always zero and is omitted, so k gaps use 12(k-1)
    bits; keys fit an int64 through k=6.  Supports gaps up to 4095,
    comfortably beyond any state a 350-day run can reach.  Keys compare in
    reverse-lexicographic order of the gap tuples (trailer gap is the most
    significant field); engines rely on that order for deterministic sums.
    """
    if not MIN_K <= len(gaps) <= MAX_K:
        raise ValueError(f"state length must be in {MIN_K}..{MAX_K}: {gaps!r}")
    if gaps[0] != 0:
        raise ValueError(f"leader gap must be zero: {gaps!r}")
    code = 0
    for i, g in enumerate(gaps[1:]):
        if not 0 <= g <= MAX_ENCODE_GAP:
            raise ValueError(f"gap {g} out of encodable range 0..{MAX_ENCODE_GAP}")
        code |= g << (ENCODE_BITS * i)
    return code


def decode_state(code: int, k: int) -> GapState:
    """Inverse of encode_state."""
    if code < 0:
        raise ValueError("state code must be nonnegative")
    if code >> (ENCODE_BITS * (k - 1)):
        raise ValueError(f"code {code} has bits beyond k={k} gaps")
    return (0,) + tuple(
        (code >> (ENCODE_BITS * i)) & MAX_ENCODE_GAP for i in range(k - 1)
    )
