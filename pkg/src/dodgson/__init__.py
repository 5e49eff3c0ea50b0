"""Dodgson-election toolkit: certified greedy heuristics, exact oracles,
uniform sampling, and Monte Carlo checks of the correctness-frequency bounds.
"""

from .election import (
    DodgsonTriple,
    Election,
    PairwiseStats,
    condorcet_winner,
    pairwise_stats,
)
from .greedy import (
    Confidence,
    GreedyScoreResult,
    GreedyWinnerResult,
    GreedyWinnersResult,
    greedy_all_winners,
    greedy_score,
    greedy_winner,
)
from .oracle import (
    BudgetExceededError,
    ScoreMode,
    bfs_swap_score,
    dodgson_winners,
    exact_dodgson_score,
    flips_needed,
)
from .sampling import SamplerConfig, sample_election, sample_stream, substream_seed
from .bounds import (
    BoundParams,
    ExperimentReport,
    SelfCheckError,
    bound_pair,
    bound_winner,
    pair_condition_holds,
    run_trials,
)

__version__ = "0.1.0"

__all__ = [
    "BoundParams",
    "BudgetExceededError",
    "Confidence",
    "DodgsonTriple",
    "Election",
    "ExperimentReport",
    "GreedyScoreResult",
    "GreedyWinnerResult",
    "GreedyWinnersResult",
    "PairwiseStats",
    "SamplerConfig",
    "ScoreMode",
    "SelfCheckError",
    "bfs_swap_score",
    "bound_pair",
    "bound_winner",
    "condorcet_winner",
    "dodgson_winners",
    "exact_dodgson_score",
    "flips_needed",
    "greedy_all_winners",
    "greedy_score",
    "greedy_winner",
    "pair_condition_holds",
    "pairwise_stats",
    "run_trials",
    "sample_election",
    "sample_stream",
    "substream_seed",
]
