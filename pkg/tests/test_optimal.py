import pytest

from combregret.backend import EXACT, FLOAT
from combregret.dyadic import ZERO, Dyadic
from combregret.errors import BudgetError
from combregret.forward import regret_series_fixed
from combregret.game import RankSubset, all_strategies, initial_state
from combregret.optimal import (
    MAX_HORIZON,
    AdaptiveSolver,
    best_fixed_subset,
    policy_trace,
    value_adaptive,
)


def test_singleton_family_equals_fixed_series():
    for k in range(2, 6):
        for subset in all_strategies(k):
            series = regret_series_fixed(k, subset, 8)
            solver = AdaptiveSolver(k, [subset])
            for t in range(1, 9):
                assert solver.value(t).regret == series.regret_at(t)


def test_family_monotonicity():
    # a larger family can only help the adversary
    base = value_adaptive(5, [RankSubset.of(5, (1, 3))], 10).regret
    for extra in all_strategies(5):
        grown = value_adaptive(5, [RankSubset.of(5, (1, 3)), extra], 10).regret
        assert grown >= base


def test_dominated_member_changes_nothing():
    alone = value_adaptive(5, [RankSubset.of(5, (1, 3))], 10)
    both = value_adaptive(5, [RankSubset.of(5, (1, 3)), RankSubset.comb(5)], 10)
    assert both.regret == alone.regret
    assert both.expected_max == alone.expected_max


def test_k6_t13_two_subset_family(k6_family):
    res = value_adaptive(6, k6_family, 13)
    assert res.expected_max == Dyadic(2341, 8)
    assert res.regret == Dyadic(677, 8)
    assert res.expected_max - res.regret == Dyadic(13, 1)
    assert res.family_label() == "1,3,6:1,4,6"
    assert res.node_count > 0


def test_k6_t13_best_fixed():
    res = best_fixed_subset(6, 13)
    assert res.expected_max == Dyadic(37451, 12)
    assert res.regret == Dyadic(10827, 12)
    assert res.scanned == 32
    assert res.maximizers == (RankSubset.of(6, (1, 3, 6)),)
    assert res.primary().ranks == (1, 3, 6)


def test_best_fixed_small_cases():
    for t in range(1, 13):
        res = best_fixed_subset(2, t)
        assert res.maximizers[0].ranks == (1,)
    res5 = best_fixed_subset(5, 5)
    assert res5.primary().ranks == (1, 3)
    assert res5.scanned == 16


def test_adaptive_trace_k6(k6_family):
    solver = AdaptiveSolver(6, k6_family)
    solver.expected_max(13)
    nodes = list(solver.trace(13))
    state0, r0, maxers0 = nodes[0]
    assert state0 == initial_state(6)
    assert r0 == 13
    assert maxers0
    # the family is genuinely adaptive: somewhere along optimal play each
    # member is the unique best reply
    uniques = {maxers[0].ranks for _, _, maxers in nodes if len(maxers) == 1}
    assert (1, 3, 6) in uniques
    assert (1, 4, 6) in uniques
    assert solver.maximizers((0, 1, 2, 3, 3, 3), 9) == (RankSubset.of(6, (1, 4, 6)),)
    for state, r, maxers in nodes:
        assert r >= 1
        assert maxers
        assert state[0] == 0


def test_full_set_never_unique_at_start():
    full = RankSubset.of(3, (1, 2, 3))
    res = value_adaptive(3, [full, RankSubset.of(3, (1,))], 4)
    start = res.maximizers(initial_state(3), 4)
    assert start == (RankSubset.of(3, (1,)),)
    assert policy_trace(res, initial_state(3), 4) == start


def test_maximizers_on_missing_node():
    solver = AdaptiveSolver(2, [RankSubset.of(2, (1,))])
    solver.expected_max(3)
    with pytest.raises(ValueError, match="node not computed"):
        solver.maximizers((0, 9), 1)


def test_reproducible_and_shared_memo():
    fam = [RankSubset.of(4, (1, 3)), RankSubset.of(4, (1, 4))]
    a = AdaptiveSolver(4, fam)
    b = AdaptiveSolver(4, fam)
    assert a.value(9).regret == b.value(9).regret
    # a smaller horizon afterwards reuses the memo almost entirely
    n_before = len(a.memo)
    five_shared = a.value(5)
    fresh = AdaptiveSolver(4, fam).value(5)
    assert five_shared.regret == fresh.regret
    assert len(a.memo) - n_before < fresh.node_count


def test_family_validation():
    with pytest.raises(ValueError):
        AdaptiveSolver(5, [])
    with pytest.raises(ValueError):
        AdaptiveSolver(5, [RankSubset.of(5, (1,)), RankSubset.of(4, (1,))])
    with pytest.raises(ValueError):
        AdaptiveSolver(4, [RankSubset.of(5, (1,))])
    solver = AdaptiveSolver(5, [RankSubset(5, (2, 4, 5)), RankSubset.of(5, (1, 3))])
    assert solver.family == (RankSubset.of(5, (1, 3)),)


def test_horizon_limits():
    solver = AdaptiveSolver(2, [RankSubset.of(2, (1,))])
    assert solver.value(0).regret == ZERO
    with pytest.raises(ValueError):
        solver.expected_max(-1)
    with pytest.raises(BudgetError):
        solver.expected_max(MAX_HORIZON + 1)
    with pytest.raises(ValueError):
        best_fixed_subset(2, 0)


def test_float_backend_agrees(k6_family):
    exact = value_adaptive(6, k6_family, 13)
    approx = value_adaptive(6, k6_family, 13, backend=FLOAT)
    assert approx.backend is FLOAT
    assert abs(approx.expected_max - float(exact.expected_max)) < 1e-9
    assert abs(approx.regret - float(exact.regret)) < 1e-9
