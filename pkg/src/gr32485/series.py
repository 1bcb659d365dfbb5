"""Series machinery: the kernel U(t), the Hankel sum S(t), and the
conditionally convergent double series for the target integral.

Definitions (all signs explicit, k! and factorial ratios folded into a
term recurrence so nothing overflows):

    U(t)  = sum_k (-1)^k/k! * 4^k * ((2k)!)^2/(4k+1)! * (4t/3)^k
          = int_0^1 exp(-(16/3) u^2 (1-u)^2 t) du

    S(t)  = sum_n (-1)^n * binom(2n,n)/4^n * t^((n-1)/2) / Gamma((n+1)/2)

    I     = sum_n (-1)^n * binom(2n,n)/4^n * inner(n),
    inner(n) = sum_k (-1)^k/k! * (Gamma((n+1)/2+k)/Gamma((n+1)/2))
               * (16/3)^k * ((2k)!)^2/(4k+1)!

The outer n-sum converges only conditionally (terms ~ 1/n); inner(n) is
absolutely convergent with term ratio -> -1/3. The outer coefficients
form a moment sequence, so the Cohen-Rodriguez Villegas-Zagier
Chebyshev acceleration applies and converges geometrically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .quadrature import DEFAULT_CONFIG, Interval, QuadratureConfig, integrate
from .special import central_binomial_ratio

__all__ = [
    "SeriesConfig",
    "SeriesResult",
    "DEFAULT_SERIES",
    "u_series",
    "u_integral",
    "u_value",
    "hankel_series",
    "hankel_series_term",
    "inner_k_sum",
    "double_series_I",
    "U_SERIES_T_SWITCH",
]

_EPS = 2.220446049250313e-16

# the series is used below this t, the integral form above it
U_SERIES_T_SWITCH = 2.0


@dataclass(frozen=True)
class SeriesConfig:
    max_terms: int = 500
    tail_tol: float = 1e-13
    accelerate: bool = True

    def __post_init__(self) -> None:
        if self.max_terms < 4:
            raise ValueError("max_terms must be at least 4")
        if not self.tail_tol > 0.0:
            raise ValueError("tail_tol must be > 0")


DEFAULT_SERIES = SeriesConfig()


@dataclass(frozen=True)
class SeriesResult:
    value: float
    terms_used: int
    tail_estimate: float
    converged: bool


def _nonconvergent(value: float, terms: int, tail: float) -> SeriesResult:
    return SeriesResult(value, terms, tail, False)


def u_series(t: float, cfg: SeriesConfig = DEFAULT_SERIES) -> SeriesResult:
    """U(t) by its alternating power series; truncation bound from the
    first omitted term once the terms decay."""
    if t < 0.0:
        raise ValueError("u_series: t must be >= 0")
    total = 0.0
    term = 1.0
    for k in range(cfg.max_terms):
        total += term
        ratio = (
            -4.0
            * ((2 * k + 1) * (2 * k + 2)) ** 2
            * (4.0 * t / 3.0)
            / ((k + 1) * (4 * k + 2) * (4 * k + 3) * (4 * k + 4) * (4 * k + 5))
        )
        nxt = term * ratio
        if abs(nxt) <= abs(term) and abs(nxt) <= 0.5 * cfg.tail_tol:
            return SeriesResult(total, k + 1, abs(nxt), True)
        term = nxt
    return _nonconvergent(total, cfg.max_terms, abs(term))


def u_integral(t: float, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """U(t) by quadrature of exp(-(16/3) u^2 (1-u)^2 t) over [0, 1]."""
    if t < 0.0:
        raise ValueError("u_integral: t must be >= 0")

    def f(u: float) -> float:
        w = u * (1.0 - u)
        return math.exp(-16.0 / 3.0 * w * w * t)

    res = integrate(f, Interval(0.0, 1.0), cfg)
    if not res.converged:
        raise ArithmeticError(f"u_integral({t}) did not converge")
    return res.value


def u_value(
    t: float,
    scfg: SeriesConfig = DEFAULT_SERIES,
    qcfg: QuadratureConfig = DEFAULT_CONFIG,
) -> float:
    """U(t) through whichever route is stable: series for small t,
    integral beyond ``U_SERIES_T_SWITCH``."""
    if t <= U_SERIES_T_SWITCH:
        res = u_series(t, scfg)
        if res.converged:
            return res.value
    return u_integral(t, qcfg)


def hankel_series_term(n: int, t: float) -> float:
    """Unsigned magnitude of the n-th Hankel-sum term at parameter t (log-space)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not t > 0.0:
        raise ValueError("t must be > 0")
    log_cbr = math.lgamma(2 * n + 1) - 2.0 * math.lgamma(n + 1) - n * math.log(4.0)
    return math.exp(
        log_cbr + 0.5 * (n - 1) * math.log(t) - math.lgamma(0.5 * (n + 1))
    )


def hankel_series(t: float, cfg: SeriesConfig = DEFAULT_SERIES) -> SeriesResult:
    """S(t) by direct summation.

    Term magnitudes grow until n ~ 2t (peaking near exp(t)/(2 pi t)) and
    decrease beyond, so the alternating truncation bound is applied only
    once n >= 2t. The roundoff floor max_term * eps joins the tail
    estimate; for large t it dominates and the sum honestly reports
    non-convergence (the contour route takes over there).
    """
    if not t > 0.0:
        raise ValueError("hankel_series: t must be > 0")
    if t > 600.0:
        raise OverflowError("hankel_series: term peak exp(t)/(2 pi t) overflows")
    sqrt_t = math.sqrt(t)
    b = 1.0 / math.sqrt(math.pi * t)  # n = 0 magnitude
    g = 1.0 / math.sqrt(math.pi)  # Gamma((n+2)/2)/Gamma((n+1)/2) at n = 0
    sign = 1.0
    total = 0.0
    peak = 0.0
    for n in range(cfg.max_terms):
        total += sign * b
        peak = max(peak, b)
        nxt = b * (2 * n + 1) / (2 * n + 2) * sqrt_t / g
        g = 0.5 * (n + 1) / g
        sign = -sign
        tail = nxt + 2.0 * peak * _EPS
        if n + 1 >= 2.0 * t and tail <= cfg.tail_tol:
            return SeriesResult(total, n + 1, tail, True)
        b = nxt
    return _nonconvergent(total, cfg.max_terms, b + 2.0 * peak * _EPS)


@lru_cache(maxsize=4096)
def _inner_sum(n: int, max_terms: int, tail_tol: float):
    total = 0.0
    term = 1.0
    half = 0.5 * (n + 1)
    for k in range(max_terms):
        total += term
        ratio = (
            -(half + k)
            / (k + 1)
            * (16.0 / 3.0)
            * ((2 * k + 1) * (2 * k + 2)) ** 2
            / ((4 * k + 2) * (4 * k + 3) * (4 * k + 4) * (4 * k + 5))
        )
        nxt = term * ratio
        if abs(ratio) <= 0.5 and abs(nxt) <= 0.25 * tail_tol:
            return total, k + 1, 2.0 * abs(nxt), True
        term = nxt
    return total, max_terms, 2.0 * abs(term), False


def inner_k_sum(n: int, cfg: SeriesConfig = DEFAULT_SERIES) -> SeriesResult:
    """The absolutely convergent k-sum inner(n); geometric tail bound from
    the eventual term ratio < 1/2. Results are memoized (idempotent)."""
    if n < 0:
        raise ValueError("inner_k_sum: n must be nonnegative")
    value, terms, tail, ok = _inner_sum(n, cfg.max_terms, cfg.tail_tol)
    return SeriesResult(value, terms, tail, ok)


def _cvz(a: list[float]) -> float:
    """Chebyshev acceleration of sum_k (-1)^k a_k (Cohen, Rodriguez
    Villegas, Zagier 2000, Algorithm 1)."""
    n = len(a)
    d = (3.0 + math.sqrt(8.0)) ** n
    d = 0.5 * (d + 1.0 / d)
    b = -1.0
    c = -d
    s = 0.0
    for k in range(n):
        c = b - c
        s += c * a[k]
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0))
    return s / d


def _averaged_partial_sums(a: list[float]) -> tuple[float, float]:
    """Fallback for sign patterns that are not strictly alternating:
    iterated averaging of the partial sums."""
    sums = []
    acc = 0.0
    sign = 1.0
    for v in a:
        acc += sign * v
        sums.append(acc)
        sign = -sign
    rounds = min(len(sums) - 1, 24)
    estimate = math.inf
    for _ in range(rounds):
        previous = sums[-1]
        sums = [0.5 * (sums[i] + sums[i + 1]) for i in range(len(sums) - 1)]
        estimate = abs(sums[-1] - previous)
    return sums[-1], estimate


def double_series_I(cfg: SeriesConfig = DEFAULT_SERIES) -> SeriesResult:
    """The iterated double series for the target integral I.

    The outer sum is only conditionally convergent, so the inner k-sums
    are evaluated first (at a tightened tolerance) and the outer
    alternating sum is accelerated; plain partial sums would need ~1/eps
    terms. Falls back to averaged partial sums if the computed outer
    coefficients ever fail to alternate strictly.
    """
    n_terms = min(48, cfg.max_terms)
    inner_cfg = SeriesConfig(cfg.max_terms, 0.25 * cfg.tail_tol, cfg.accelerate)
    inner = [inner_k_sum(n, inner_cfg) for n in range(n_terms)]
    coeffs = [central_binomial_ratio(n) * r.value for n, r in enumerate(inner)]
    inner_tail = max(r.tail_estimate for r in inner)
    inner_ok = all(r.converged for r in inner)

    if cfg.accelerate and all(v > 0.0 for v in coeffs):
        value = _cvz(coeffs)
        consistency = abs(value - _cvz(coeffs[:-4]))
    else:
        value, consistency = _averaged_partial_sums(coeffs)
    tail = consistency + 2.0 * inner_tail
    converged = inner_ok and tail <= cfg.tail_tol
    return SeriesResult(value, n_terms, tail, converged)
