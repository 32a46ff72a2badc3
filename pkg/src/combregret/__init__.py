"""Exact expected-regret computations for balanced rank-subset adversaries
in the prediction-with-expert-advice game."""

from .analysis import (
    ConstancySummary,
    ConstantEstimate,
    DiffStatSeries,
    certified_lower_bounds,
    constancy_report,
    diff_stat,
    read_constant_csv,
    read_diff_csv,
    sqrt_normalized,
    write_constant_csv,
    write_diff_csv,
)
from .backend import EXACT, FLOAT, ValueBackend, get_backend
from .dyadic import HALF, ONE, ZERO, Dyadic, average2, compare
from .errors import BudgetError
from .forward import (
    DEFAULT_FLOAT_EPS,
    RegretSeries,
    SparseDistribution,
    evolve_step,
    initial_distribution,
    read_series_csv,
    regret_series_fixed,
    write_series_csv,
)
from .game import (
    BranchOutcome,
    GapState,
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
from .optimal import (
    AdaptivePolicyValue,
    AdaptiveSolver,
    BestFixedResult,
    best_fixed_subset,
    policy_trace,
    value_adaptive,
)
from .oracle import brute_regret_fixed, brute_value_adaptive, k2_closed_form

__version__ = "0.1.0"
