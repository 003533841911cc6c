"""Empirical-likelihood confidence intervals for sample average approximation.

Computes statistically calibrated bounds on the optimal value and the
optimality gap of stochastic programs observed through i.i.d. data, by
solving a max-min / min-min pair of distributionally robust problems over
a Burg-entropy divergence ball, alongside CLT-style baselines and a Monte
Carlo coverage-experiment harness.
"""

from .divergence import DivergenceBall, ball_contains, burg_statistic, pinsker_tv_bound
from .drosolve import DroBounds, dro_bounds, gap_bounds, maximize_minvalue, minimize_minvalue
from .elweights import InnerSolution, max_linear_over_ball, min_linear_over_ball
from .estimators import (
    ConfidenceInterval,
    clt2_ci,
    clt_ci,
    el_ci_gap,
    el_ci_optimal_value,
    srp_gap_ci,
)
from .harness import CoverageReport, ExperimentConfig, emit_report, run_coverage_experiment, true_value_oracle
from .lp import LinearProgram, solve_lp
from .problems import (
    StochasticProgram,
    WeightedSaaSolution,
    cvar_problem,
    portfolio_problem,
    problem_from_config,
    quadratic_problem,
    solve_weighted_saa,
)
from .stats import RandomSource, chi2_quantile, normal_quantile, sample_mvnormal

__version__ = "0.1.0"

__all__ = [
    "DivergenceBall",
    "ball_contains",
    "burg_statistic",
    "pinsker_tv_bound",
    "DroBounds",
    "dro_bounds",
    "gap_bounds",
    "maximize_minvalue",
    "minimize_minvalue",
    "InnerSolution",
    "max_linear_over_ball",
    "min_linear_over_ball",
    "ConfidenceInterval",
    "clt_ci",
    "clt2_ci",
    "el_ci_optimal_value",
    "el_ci_gap",
    "srp_gap_ci",
    "CoverageReport",
    "ExperimentConfig",
    "emit_report",
    "run_coverage_experiment",
    "true_value_oracle",
    "LinearProgram",
    "solve_lp",
    "StochasticProgram",
    "WeightedSaaSolution",
    "quadratic_problem",
    "cvar_problem",
    "portfolio_problem",
    "problem_from_config",
    "solve_weighted_saa",
    "RandomSource",
    "chi2_quantile",
    "normal_quantile",
    "sample_mvnormal",
]
