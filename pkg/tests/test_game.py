import itertools

import pytest

from combregret.game import (
    RankSubset,
    all_strategies,
    apply_gains,
    canonical_subset,
    decode_state,
    encode_state,
    initial_state,
    step,
    validate_state,
)
from tests.support import raw_reference_step, tie_consistent_perms, tied_states


def test_initial_state():
    assert initial_state(2) == (0, 0)
    assert initial_state(6) == (0,) * 6
    with pytest.raises(ValueError):
        initial_state(1)
    with pytest.raises(ValueError):
        initial_state(9)


def test_validate_state():
    validate_state((0, 1, 5))
    with pytest.raises(ValueError):
        validate_state((1, 2))
    with pytest.raises(ValueError):
        validate_state((0, 2, 1))
    with pytest.raises(ValueError):
        validate_state((0,))


def test_comb_construction():
    s = RankSubset.comb(5)
    assert s.ranks == (1, 3, 5)
    assert RankSubset.comb(2).ranks == (1,)
    assert RankSubset.comb(6).ranks == (1, 3, 5)
    assert RankSubset.comb(7).ranks == (1, 3, 5, 7)


def test_canonical_subset():
    assert canonical_subset({2, 4, 5}, 5) == RankSubset.of(5, (1, 3))
    assert canonical_subset({1, 3}, 5) == RankSubset.of(5, (1, 3))
    # empty set of members means its complement, the full set
    assert canonical_subset((), 4) == RankSubset.of(4, (1, 2, 3, 4))
    with pytest.raises(ValueError):
        canonical_subset({0, 1}, 5)
    with pytest.raises(ValueError):
        canonical_subset({6}, 5)


def test_parse():
    assert RankSubset.parse(5, "1,3,5").ranks == (1, 3, 5)
    assert RankSubset.parse(6, "comb").ranks == (1, 3, 5)
    with pytest.raises(ValueError, match="rank out of range"):
        RankSubset.parse(5, "6")
    with pytest.raises(ValueError):
        RankSubset.parse(5, "0")
    with pytest.raises(ValueError):
        RankSubset.parse(5, "2,2")
    with pytest.raises(ValueError):
        RankSubset.parse(5, "")


def test_labels():
    assert RankSubset.of(5, (1, 3)).label() == "1,3"
    assert RankSubset.of(6, (1, 3, 6)).label() == "1,3,6"


def test_worked_step_examples():
    a, b = step((0, 0, 0, 0, 0), RankSubset.of(5, (1, 3)))
    assert a.state == (0, 0, 1, 1, 1) and a.leader_delta == 1
    assert b.state == (0, 0, 0, 1, 1) and b.leader_delta == 1

    a, b = step((0, 2, 2, 3, 7), RankSubset.of(5, (1, 3, 5)))
    assert a.state == (0, 2, 3, 4, 7) and a.leader_delta == 1
    assert b.state == (0, 1, 2, 2, 7) and b.leader_delta == 0

    a, b = step((0, 0, 3), RankSubset.of(3, (1, 3)))
    assert a.state == (0, 1, 3) and a.leader_delta == 1
    assert b.state == (0, 1, 4) and b.leader_delta == 1


def _small_states(k, gap_max):
    for tail in itertools.combinations_with_replacement(range(gap_max + 1), k - 1):
        yield (0,) + tail


def test_step_enumeration_properties():
    for k in range(2, 6):
        subsets = list(all_strategies(k))
        for gaps in _small_states(k, 6):
            total = sum(gaps)
            for subset in subsets:
                a, b = step(gaps, subset)
                # branch A plays the subset itself, whose ranks include 1
                assert a.leader_delta == 1
                for out, n_gains in ((a, len(subset.ranks)), (b, k - len(subset.ranks))):
                    validate_state(out.state)
                    got = sum(out.state)
                    assert got == total + k * out.leader_delta - n_gains


def test_complement_swap():
    # playing the complement subset swaps the two branches
    for k in (3, 5):
        for gaps in _small_states(k, 4):
            for subset in all_strategies(k):
                if subset.is_full():
                    continue
                comp = RankSubset(k, subset.complement_ranks())
                a, b = step(gaps, subset)
                ca, cb = step(gaps, comp)
                assert (a.state, a.leader_delta) == (cb.state, cb.leader_delta)
                assert (b.state, b.leader_delta) == (ca.state, ca.leader_delta)


def test_apply_gains_matches_step():
    for gaps in _small_states(4, 5):
        for subset in all_strategies(4):
            a, b = step(gaps, subset)
            assert apply_gains(gaps, subset.gains()) == (a.state, a.leader_delta)
            assert apply_gains(gaps, subset.complement_gains()) == (b.state, b.leader_delta)


def test_tie_permutation_invariance():
    # ranks within a tie block are interchangeable: permuting which tied
    # expert receives a gain must not change the successor state
    states = tied_states(5, 20) + tied_states(6, 12)
    assert len(states) >= 10_000
    checked = 0
    for gaps in states:
        k = len(gaps)
        perms = tie_consistent_perms(gaps)
        if not perms:
            continue
        for subset in (RankSubset.comb(k), RankSubset.of(k, (1,))):
            base = apply_gains(gaps, subset.gains())
            for perm in perms:
                assert raw_reference_step(gaps, subset.gains(), perm) == base
                checked += 1
    assert checked >= 10_000


def test_encode_decode_roundtrip():
    for k in range(2, 7):
        for gaps in _small_states(k, 9):
            key = encode_state(gaps)
            assert decode_state(key, k) == gaps
    assert encode_state((0,) * 5) == 0


def test_encode_injective():
    seen = {}
    count = 0
    for gaps in _small_states(5, 20):
        key = encode_state(gaps)
        assert key not in seen
        seen[key] = gaps
        count += 1
    assert count == 10626


def test_encode_errors():
    with pytest.raises(ValueError):
        encode_state((0, 4096))
    with pytest.raises(ValueError):
        decode_state(1 << 12, 2)
    with pytest.raises(ValueError):
        decode_state(-1, 3)


def test_all_strategies():
    for k, n in ((2, 2), (3, 4), (4, 8), (5, 16), (6, 32)):
        subs = list(all_strategies(k))
        assert len(subs) == n
        labels = [s.label() for s in subs]
        assert labels == sorted(labels)
        assert len(set(labels)) == n
        for s in subs:
            assert s.ranks[0] == 1
        full = tuple(range(1, k + 1))
        assert any(s.ranks == full for s in subs)
