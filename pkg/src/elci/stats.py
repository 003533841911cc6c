"""Statistical primitives: chi-square and normal quantiles, seeded sampling.

Quantiles are computed by bisection on hand-evaluated CDFs (regularized
incomplete gamma) so that accuracy follows from bracket width alone, with
no fitted approximation constants. Random sampling is built on a small
counter-based generator whose state transition is documented below, so
fixtures are reproducible across platforms and languages.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "chi2_quantile",
    "normal_quantile",
    "normal_cdf",
    "RandomSource",
    "sample_mvnormal",
]


# ---------------------------------------------------------------------------
# Regularized lower incomplete gamma, after the classic series / continued
# fraction split (series converges fast for x < a+1, Lentz's continued
# fraction elsewhere).
# ---------------------------------------------------------------------------

_GAMMA_EPS = 1e-15
_GAMMA_MAX_ITER = 500


def _reg_lower_gamma_series(a: float, x: float) -> float:
    if x <= 0.0:
        return 0.0
    ap = a
    term = 1.0 / a
    total = term
    for _ in range(_GAMMA_MAX_ITER):
        ap += 1.0
        term *= x / ap
        total += term
        if abs(term) < abs(total) * _GAMMA_EPS:
            break
    return total * math.exp(-x + a * math.log(x) - math.lgamma(a))


def _reg_upper_gamma_contfrac(a: float, x: float) -> float:
    # Lentz's algorithm for Q(a, x); tiny guards against zero divisors.
    tiny = 1e-300
    b = x + 1.0 - a
    c = 1.0 / tiny
    d = 1.0 / b if b != 0.0 else 1.0 / tiny
    h = d
    for i in range(1, _GAMMA_MAX_ITER + 1):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _GAMMA_EPS:
            break
    return math.exp(-x + a * math.log(x) - math.lgamma(a)) * h


def _reg_lower_gamma(a: float, x: float) -> float:
    """P(a, x), the regularized lower incomplete gamma function."""
    if x < 0.0 or a <= 0.0:
        raise ValueError(f"invalid incomplete gamma arguments a={a}, x={x}")
    if x == 0.0:
        return 0.0
    if x < a + 1.0:
        return _reg_lower_gamma_series(a, x)
    return 1.0 - _reg_upper_gamma_contfrac(a, x)


def chi2_cdf(q: float, df: int) -> float:
    """CDF of the chi-square distribution with ``df`` degrees of freedom."""
    if q <= 0.0:
        return 0.0
    return _reg_lower_gamma(0.5 * df, 0.5 * q)


def chi2_quantile(df: int, beta: float) -> float:
    """Upper quantile of the chi-square distribution.

    Returns q with ``chi2_cdf(q, df) = 1 - beta``, found by bisection on
    the regularized incomplete gamma. The default bracket
    ``[0, df + 40 sqrt(df)]`` covers every tail probability down to about
    1e-9 and is grown if the target lies beyond it.

    Parameters
    ----------
    df : int
        Degrees of freedom, at least 1.
    beta : float
        Tail probability in (0, 1); the result is the 1-beta quantile.
    """
    if not isinstance(df, (int, np.integer)) or df < 1:
        raise ValueError(f"df must be an integer >= 1, got {df!r}")
    if not 0.0 < beta < 1.0:
        raise ValueError(f"beta must lie in (0, 1), got {beta!r}")
    target = 1.0 - beta
    lo = 0.0
    hi = df + 40.0 * math.sqrt(df)
    while chi2_cdf(hi, df) < target:
        hi *= 2.0
        if hi > 1e12:
            raise ValueError(f"chi2 quantile bracket failed for beta={beta}")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if chi2_cdf(mid, df) < target:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-13 * max(1.0, hi):
            break
    return 0.5 * (lo + hi)


def normal_cdf(x: float) -> float:
    """Standard normal CDF via the incomplete gamma relation.

    Phi(x) = (1 + sign(x) P(1/2, x^2/2)) / 2.
    """
    if x == 0.0:
        return 0.5
    p = _reg_lower_gamma(0.5, 0.5 * x * x)
    return 0.5 * (1.0 + p) if x > 0.0 else 0.5 * (1.0 - p)


def normal_quantile(p: float) -> float:
    """Standard normal inverse CDF by bisection on ``normal_cdf``.

    Exactly antisymmetric: ``normal_quantile(p) == -normal_quantile(1-p)``
    because the lower half is evaluated through the upper half.
    """
    if not 0.0 < p < 1.0:
        raise ValueError(f"p must lie in (0, 1), got {p!r}")
    if p == 0.5:
        return 0.0
    if p < 0.5:
        return -normal_quantile(1.0 - p)
    lo, hi = 0.0, 40.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if normal_cdf(mid) < p:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-14 * max(1.0, hi):
            break
    return 0.5 * (lo + hi)


# ---------------------------------------------------------------------------
# Counter-based splitmix64 random source.
# ---------------------------------------------------------------------------

_U64 = np.uint64
_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_SPAWN_SALT = 0x5851F42D4C957F2D


def _mix64_int(z: int) -> int:
    """Scalar splitmix64 finalizer on Python ints (mod 2^64)."""
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def _mix64_array(z: np.ndarray) -> np.ndarray:
    z = z ^ (z >> _U64(30))
    z = z * _U64(0xBF58476D1CE4E5B9)
    z = z ^ (z >> _U64(27))
    z = z * _U64(0x94D049BB133111EB)
    return z ^ (z >> _U64(31))


class RandomSource:
    """Deterministic 64-bit random stream (splitmix64, counter form).

    The k-th raw 64-bit output of a source with seed s is

        out_k = mix64((s + k * 0x9E3779B97F4A7C15) mod 2^64),  k = 1, 2, ...

    where mix64 is the splitmix64 finalizer (xor-shift 30, multiply
    0xBF58476D1CE4E5B9, xor-shift 27, multiply 0x94D049BB133111EB,
    xor-shift 31). Uniform doubles take the top 53 bits. Normal variates
    use the Box-Muller transform on consecutive uniform pairs.

    A source owns its counter and is not safe for concurrent mutation;
    parallel work should draw one child per task via :meth:`spawn`, which
    derives an independent seed as

        child_seed = mix64(seed ^ mix64(key_1 * G + SALT) ...)  (folded per key)

    so child streams never share counter positions with the parent.
    """

    algorithm = "splitmix64"

    def __init__(self, seed: int):
        self.seed = int(seed) & _MASK64
        self._counter = 0

    def __repr__(self) -> str:  # pragma: no cover
        return f"RandomSource(seed={self.seed:#018x}, drawn={self._counter})"

    def spawn(self, *keys: int) -> "RandomSource":
        """Derive a reproducible child source from integer keys."""
        s = _mix64_int(self.seed ^ _SPAWN_SALT)
        for k in keys:
            s = _mix64_int(s ^ _mix64_int(((int(k) + 1) * _GOLDEN + _SPAWN_SALT) & _MASK64))
        return RandomSource(s)

    def raw(self, n: int) -> np.ndarray:
        """Next ``n`` raw uint64 outputs; advances the counter by ``n``."""
        idx = np.arange(self._counter + 1, self._counter + n + 1, dtype=np.uint64)
        self._counter += n
        return _mix64_array(idx * _U64(_GOLDEN) + _U64(self.seed))

    def uniforms(self, n: int) -> np.ndarray:
        """``n`` doubles uniform on (0, 1]."""
        bits = self.raw(n) >> _U64(11)
        return (bits.astype(np.float64) + 1.0) * (0.5 ** 53)

    def normals(self, n: int) -> np.ndarray:
        """``n`` standard normal draws (Box-Muller on uniform pairs)."""
        m = (n + 1) // 2
        u1 = self.uniforms(m)
        u2 = self.uniforms(m)
        r = np.sqrt(-2.0 * np.log(u1))
        theta = (2.0 * math.pi) * u2
        out = np.empty(2 * m)
        out[0::2] = r * np.cos(theta)
        out[1::2] = r * np.sin(theta)
        return out[:n]

    def exponentials(self, n: int) -> np.ndarray:
        """``n`` unit-rate exponential draws."""
        return -np.log(self.uniforms(n))


def _cholesky_psd(cov: np.ndarray, pivot_tol: float = -1e-12) -> np.ndarray:
    """Lower Cholesky factor allowing semidefinite pivots down to ``pivot_tol``."""
    a = np.asarray(cov, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"covariance must be square, got shape {a.shape}")
    if not np.allclose(a, a.T, atol=1e-10):
        raise ValueError("covariance must be symmetric")
    d = a.shape[0]
    scale = max(1.0, float(np.max(np.abs(np.diag(a)))))
    L = np.zeros_like(a)
    for j in range(d):
        pivot = a[j, j] - L[j, :j] @ L[j, :j]
        if pivot < pivot_tol * scale:
            raise ValueError(f"covariance not positive semidefinite (pivot {pivot:.3e})")
        L[j, j] = math.sqrt(max(pivot, 0.0))
        if L[j, j] > 0.0:
            for i in range(j + 1, d):
                L[i, j] = (a[i, j] - L[i, :j] @ L[j, :j]) / L[j, j]
    return L


def sample_mvnormal(
    source: RandomSource,
    mean: np.ndarray,
    cov: np.ndarray,
    n: int,
) -> np.ndarray:
    """Draw ``n`` i.i.d. multivariate normal rows.

    Applies the Cholesky factor of ``cov`` to independent standard
    normals from ``source``; deterministic given the source state.
    """
    mean = np.atleast_1d(np.asarray(mean, dtype=float))
    cov = np.atleast_2d(np.asarray(cov, dtype=float))
    d = mean.shape[0]
    if cov.shape != (d, d):
        raise ValueError(f"cov shape {cov.shape} incompatible with mean length {d}")
    if n < 1:
        raise ValueError("n must be positive")
    L = _cholesky_psd(cov)
    z = source.normals(n * d).reshape(n, d)
    return mean + z @ L.T
