"""Exact solver for linear objectives over the Burg divergence ball.

This is the computational kernel behind every confidence bound in the
package: maximize (or minimize) ``sum(w_i c_i)`` over probability weights
w constrained to ``-2 sum(log(n w_i)) <= threshold``.

Stationarity of the Lagrangian gives ``w_i = 2 lambda / (mu - c_i)`` with
``mu > max(c)`` and ``lambda >= 0``. Feeding that form into the simplex
constraint determines lambda in closed form for any mu, so the whole
problem reduces to a single scalar root-find: pick mu so that the
divergence constraint is active. The divergence statistic is strictly
decreasing in mu (Cauchy-Schwarz), so the root is unique and bracketed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .divergence import DivergenceBall, burg_statistic
from .exceptions import SolverFailure

__all__ = ["InnerSolution", "max_linear_over_ball", "min_linear_over_ball"]

_MAX_ITER = 120
_STAT_TOL = 1e-11


@dataclass(frozen=True)
class InnerSolution:
    """Optimal value and certificate for one inner linear problem.

    ``dual_lambda`` multiplies the divergence constraint, ``dual_mu`` the
    simplex constraint; ``kkt_residual`` is the largest normalized
    violation among stationarity, simplex feasibility and constraint
    activity.
    """

    value: float
    weights: np.ndarray
    dual_lambda: float
    dual_mu: float
    kkt_residual: float


def _uniform_solution(c: np.ndarray, mu: float, lam: float) -> InnerSolution:
    n = c.shape[0]
    w = np.full(n, 1.0 / n)
    return InnerSolution(
        value=float(np.mean(c)),
        weights=w,
        dual_lambda=lam,
        dual_mu=mu,
        kkt_residual=0.0,
    )


def _burg_stat_and_slope(t: float, d: np.ndarray, n: int) -> tuple[float, float, np.ndarray]:
    """Statistic of the weights w(t) with w_i proportional to 1/(t + d_i).

    Returns (statistic, d statistic / d log t, weights). ``d`` holds the
    scaled cost gaps (max(c) - c_i) / range(c) in [0, 1].
    """
    a = 1.0 / (t + d)
    s = float(np.sum(a))
    w = a / s
    stat = -2.0 * float(np.sum(np.log(n * w)))
    # d stat / dt = 2 s - 2 n sum(a^2) / s; chain rule for u = log t.
    slope = t * (2.0 * s - 2.0 * n * float(np.sum(a * a)) / s)
    return stat, slope, w


def max_linear_over_ball(c: np.ndarray, ball: DivergenceBall) -> InnerSolution:
    """Maximize ``sum(w_i c_i)`` over the divergence ball.

    A zero threshold degenerates to uniform weights (the sample mean);
    constant costs short-circuit to the same point with an inactive
    divergence constraint. Otherwise the divergence constraint is active
    at the optimum (the unconstrained simplex maximizer is a vertex with
    infinite statistic) and the active-constraint equation is solved by
    safeguarded Newton in log(mu - max(c)).
    """
    c = np.asarray(c, dtype=float)
    n = c.shape[0]
    if n < 2:
        raise ValueError(f"inner problem needs n >= 2 costs, got n={n}")
    if n != ball.n:
        raise ValueError(f"cost length {n} does not match ball n={ball.n}")
    if not np.all(np.isfinite(c)):
        raise ValueError("costs must be finite")
    tau = float(ball.threshold)
    if tau < 0.0:
        raise ValueError(f"ball threshold must be nonnegative, got {tau}")

    c_max = float(np.max(c))
    c_min = float(np.min(c))
    rng = c_max - c_min
    mean = float(np.mean(c))
    if rng <= 1e-12 * (1.0 + abs(mean)):
        # Near-constant costs: dual equations are ill-conditioned, answer known.
        return _uniform_solution(c, mu=mean, lam=0.0)
    if tau == 0.0:
        return _uniform_solution(c, mu=mean, lam=math.inf)

    d = (c_max - c) / rng

    # Bracket the root of stat(t) = tau in t = (mu - max(c)) / range(c).
    t_lo = t_hi = 1.0
    stat, _, _ = _burg_stat_and_slope(1.0, d, n)
    if stat > tau:
        for _ in range(400):
            t_hi *= 4.0
            stat, _, _ = _burg_stat_and_slope(t_hi, d, n)
            if stat <= tau:
                break
        else:  # pragma: no cover
            raise SolverFailure("failed to bracket divergence root from above")
    elif stat < tau:
        for _ in range(400):
            t_lo *= 0.25
            stat, _, _ = _burg_stat_and_slope(t_lo, d, n)
            if stat >= tau:
                break
            if t_lo < 1e-280:  # pragma: no cover
                raise SolverFailure("failed to bracket divergence root from below")

    # Safeguarded Newton on u = log t; stat is decreasing in u.
    u_lo, u_hi = math.log(t_lo), math.log(t_hi)
    u = 0.5 * (u_lo + u_hi)
    gtol = _STAT_TOL * max(1.0, tau)
    g = math.inf
    w = None
    for _ in range(_MAX_ITER):
        t = math.exp(u)
        stat, slope, w = _burg_stat_and_slope(t, d, n)
        g = stat - tau
        if g > 0.0:
            u_lo = u
        else:
            u_hi = u
        if abs(g) <= gtol:
            break
        if slope < 0.0:
            u_new = u - g / slope
        else:
            u_new = math.nan
        if not (u_lo < u_new < u_hi):
            u_new = 0.5 * (u_lo + u_hi)
        if u_hi - u_lo <= 1e-15 * (1.0 + abs(u_lo)):
            break
        u = u_new
    else:  # pragma: no cover
        raise SolverFailure(f"inner dual root-find stalled, residual {g:.3e}")

    t = math.exp(u)
    a = 1.0 / (t + d)
    s = float(np.sum(a))
    w = a / s
    lam = rng / (2.0 * s)
    mu = c_max + t * rng
    value = float(np.dot(w, c))

    stat_final = burg_statistic(w)
    simplex_res = abs(float(np.sum(w)) - 1.0)
    div_res = abs(stat_final - tau) / (1.0 + tau)
    # Stationarity holds by construction; measure the floating-point drift.
    stat_res = float(np.max(np.abs(w * (mu - c) - 2.0 * lam))) / (2.0 * lam)
    return InnerSolution(
        value=value,
        weights=w,
        dual_lambda=lam,
        dual_mu=mu,
        kkt_residual=max(simplex_res, div_res, stat_res),
    )


def min_linear_over_ball(c: np.ndarray, ball: DivergenceBall) -> InnerSolution:
    """Minimize ``sum(w_i c_i)`` over the divergence ball (by negation)."""
    neg = max_linear_over_ball(-np.asarray(c, dtype=float), ball)
    return InnerSolution(
        value=-neg.value,
        weights=neg.weights,
        dual_lambda=neg.dual_lambda,
        dual_mu=-neg.dual_mu,
        kkt_residual=neg.kkt_residual,
    )
