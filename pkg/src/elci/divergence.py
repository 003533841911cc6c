"""Burg-entropy divergence geometry: the ball constraint and diagnostics.

Probability weights are plain numpy vectors on the n-simplex. The
divergence statistic of a weight vector w against the uniform empirical
weights is ``-2 sum(log(n w_i))``; the constraint set is the sublevel set
of that statistic at a chi-square quantile. Infeasible weights (any zero
entry) carry an infinite statistic rather than raising, so solvers can
treat boundary weights uniformly as infinite-cost points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .stats import chi2_quantile

__all__ = [
    "DivergenceBall",
    "BallMembership",
    "validate_weights",
    "burg_statistic",
    "ball_contains",
    "pinsker_tv_bound",
    "exact_tv_distance",
]

#: Slack tolerance on ball membership, consistent with solver stopping rules.
MEMBERSHIP_TOL = 1e-8


@dataclass(frozen=True)
class DivergenceBall:
    """Sublevel set of the Burg divergence statistic at a chi-square quantile.

    ``threshold`` equals ``chi2_quantile(df, beta)`` when built through
    :meth:`from_beta`; direct construction with an explicit threshold is
    allowed for degenerate cases (threshold 0 collapses the ball to the
    uniform weights).
    """

    df: int
    beta: float
    threshold: float
    n: int

    @classmethod
    def from_beta(cls, df: int, beta: float, n: int) -> "DivergenceBall":
        if n < 2:
            raise ValueError(f"divergence ball needs n >= 2 samples, got n={n}")
        return cls(df=df, beta=beta, threshold=chi2_quantile(df, beta), n=n)


class BallMembership(NamedTuple):
    contains: bool
    slack: float


def validate_weights(w: np.ndarray, n: int | None = None, tol: float = 1e-10) -> np.ndarray:
    """Check simplex invariants and return ``w`` as a float array."""
    w = np.asarray(w, dtype=float)
    if w.ndim != 1:
        raise ValueError(f"weights must be a vector, got shape {w.shape}")
    if n is not None and w.shape[0] != n:
        raise ValueError(f"expected {n} weights, got {w.shape[0]}")
    if np.any(w < -tol):
        raise ValueError("weights must be nonnegative")
    total = float(np.sum(w))
    if abs(total - 1.0) > tol:
        raise ValueError(f"weights must sum to 1, got {total!r}")
    return w


def burg_statistic(w: np.ndarray) -> float:
    """Divergence statistic ``-2 sum(log(n w_i))``; +inf on any zero weight."""
    w = np.asarray(w, dtype=float)
    n = w.shape[0]
    if np.any(w <= 0.0):
        return math.inf
    return -2.0 * float(np.sum(np.log(n * w)))


def ball_contains(w: np.ndarray, ball: DivergenceBall) -> BallMembership:
    """Membership test with slack ``threshold - statistic``."""
    w = np.asarray(w, dtype=float)
    if w.shape[0] != ball.n:
        raise ValueError(f"weight length {w.shape[0]} does not match ball n={ball.n}")
    stat = burg_statistic(w)
    return BallMembership(stat <= ball.threshold + MEMBERSHIP_TOL, ball.threshold - stat)


def pinsker_tv_bound(w: np.ndarray) -> float:
    """Pinsker upper bound on total variation to the uniform weights.

    Returns ``sqrt((-sum(log(n w_i))) / (2 n))``, infinite if any weight
    is zero. Every weight vector inside a ball of threshold tau obeys
    ``bound <= sqrt(tau / (4 n))``.
    """
    w = np.asarray(w, dtype=float)
    n = w.shape[0]
    if np.any(w <= 0.0):
        return math.inf
    kl = -float(np.sum(np.log(n * w))) / n
    # Tiny negative values can appear at the uniform center from rounding.
    return math.sqrt(max(kl, 0.0) / 2.0)


def exact_tv_distance(w: np.ndarray) -> float:
    """Exact total variation distance between ``w`` and uniform weights."""
    w = np.asarray(w, dtype=float)
    n = w.shape[0]
    return 0.5 * float(np.sum(np.abs(w - 1.0 / n)))
