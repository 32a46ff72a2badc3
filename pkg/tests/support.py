"""Shared helpers for the test suite: state enumeration and an independent
raw-totals reference for the one-day transition."""

from __future__ import annotations

from itertools import combinations_with_replacement


def enumerate_states(k: int, gap_max: int) -> list[tuple[int, ...]]:
    """All valid sorted gap states with every gap at most gap_max."""
    return [
        (0,) + rest for rest in combinations_with_replacement(range(gap_max + 1), k - 1)
    ]


def tied_states(k: int, gap_max: int) -> list[tuple[int, ...]]:
    return [s for s in enumerate_states(k, gap_max) if len(set(s)) < len(s)]


def tie_consistent_perms(gaps: tuple[int, ...]) -> list[list[int]]:
    """Nontrivial permutations of rank positions that only shuffle tied ranks.

    For each maximal run of equal gaps the run is rotated by one and,
    separately, reversed; states without ties yield no permutations.
    """
    k = len(gaps)
    runs = []
    start = 0
    for i in range(1, k + 1):
        if i == k or gaps[i] != gaps[start]:
            if i - start > 1:
                runs.append(range(start, i))
            start = i
    if not runs:
        return []
    perms = []
    rotated = list(range(k))
    reversed_ = list(range(k))
    for run in runs:
        idx = list(run)
        for a, b in zip(idx, idx[1:] + idx[:1]):
            rotated[a] = b
        for a, b in zip(idx, reversed(idx)):
            reversed_[a] = b
    for p in (rotated, reversed_):
        if p != list(range(k)) and p not in perms:
            perms.append(p)
    return perms


def raw_reference_step(
    gaps: tuple[int, ...], gains: tuple[int, ...], perm: list[int]
) -> tuple[tuple[int, ...], int]:
    """One day computed on raw totals with an explicit rank-to-expert map.

    Expert i starts at total -gaps[i]; the ranking assigns rank j (and hence
    gains[j]) to expert perm[j], which is legitimate whenever perm only
    permutes tied positions.  Returns the sorted successor gaps and the rise
    of the maximum total.
    """
    k = len(gaps)
    totals = [-g for g in gaps]
    for j in range(k):
        totals[perm[j]] += gains[j]
    new_max = max(totals)
    next_gaps = tuple(sorted(new_max - t for t in totals))
    return next_gaps, new_max  # old max total is 0 by construction
