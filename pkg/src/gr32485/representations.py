"""Catalog of equivalent expressions for the Gradshteyn-Ryzhik 3.248.5 integral.

The target value is

    I = int_0^inf dx / ((1+x^2)^(3/2) sqrt(phi(x) + sqrt(phi(x)))),
    phi(x) = 1 + 4 x^2 / (3 (1+x^2)^2),

whose tabulated value pi/(2 sqrt(6)) is wrong (I = 0.666377..., the
table says 0.641275...). The catalog evaluates I through thirteen
routes R0..R12: direct quadrature, a substituted finite form, the
conditionally convergent double series, a Hankel-contour Laplace form,
a residue-reduced form, rationalizing-substitution chains, and finally
the closed form in complete elliptic integrals

    sqrt(2) I = (sqrt(3)-1) Pi(2-sqrt(3), 1/sqrt(3)) - F(alpha, 1/sqrt(3)),

with alpha = arcsin(sqrt(2-sqrt(3))). All routes must agree; the engine
tolerances leave roughly ten orders of margin against the wrong value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .contour import DEFAULT_PATH, hankel_exp_integral
from .elliptic import complete_K, complete_Pi, incomplete_F
from .quadrature import (
    DEFAULT_CONFIG,
    Interval,
    QuadratureConfig,
    QuadratureResult,
    integrate,
)
from .series import (
    DEFAULT_SERIES,
    SeriesConfig,
    double_series_I,
    hankel_series,
    u_value,
)

__all__ = [
    "Constants",
    "CONSTANTS",
    "constant_residuals",
    "phi",
    "h",
    "A",
    "B",
    "Representation",
    "REPRESENTATIONS",
    "representation_ids",
    "eval_representation",
    "delta_radicand",
    "bf_identity",
    "BF_IDENTITIES",
    "double_angle_form",
    "h1_integral",
    "h2_integral",
    "j1_integral",
    "j2_integral",
    "NORMAL_FORM_COEFF",
]

_SQRT3 = math.sqrt(3.0)
_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class Constants:
    """Exact algebraic constants of the evaluation, as floats."""

    k: float  # modulus 2 - sqrt(3)
    k_prime: float  # complementary modulus
    inv_k: float  # 2 + sqrt(3)
    alpha: float  # arcsin(sqrt(k))
    a_upper: float  # (1 + sqrt(3))/2 = 1/(1 - k)
    coeff_a: float  # sqrt(3) / (2 sqrt(2))
    coeff_b: float  # (2 sqrt(3) - 3) / (2 sqrt(2))
    c0: float  # sqrt(21 + 12 sqrt(3))/sqrt(2) * log((3 + 2 sqrt(3))/6)
    wrong_value: float  # pi / (2 sqrt(6)), the erroneous table entry


def _make_constants() -> Constants:
    k = 2.0 - _SQRT3
    return Constants(
        k=k,
        k_prime=math.sqrt((1.0 - k) * (1.0 + k)),
        inv_k=2.0 + _SQRT3,
        alpha=math.asin(math.sqrt(k)),
        a_upper=0.5 * (1.0 + _SQRT3),
        coeff_a=_SQRT3 / (2.0 * _SQRT2),
        coeff_b=(2.0 * _SQRT3 - 3.0) / (2.0 * _SQRT2),
        c0=math.sqrt(21.0 + 12.0 * _SQRT3) / _SQRT2 * math.log((3.0 + 2.0 * _SQRT3) / 6.0),
        wrong_value=math.pi / (2.0 * math.sqrt(6.0)),
    )


CONSTANTS = _make_constants()

# coefficient 2 sqrt(3) / sqrt(2 - sqrt(3)) shared by the substitution chain
NORMAL_FORM_COEFF = 2.0 * _SQRT3 / math.sqrt(2.0 - _SQRT3)


def constant_residuals() -> dict[str, float]:
    """Residuals of the exact algebraic relations among the constants."""
    c = CONSTANTS
    return {
        "k-times-inverse": c.k * c.inv_k - 1.0,
        "a-upper": c.a_upper - 1.0 / (1.0 - c.k),
        "sin-squared-alpha": math.sin(c.alpha) ** 2 - c.k,
        "modulus-pair": c.k * c.k + c.k_prime * c.k_prime - 1.0,
        "constant-cancellation": c.c0
        + NORMAL_FORM_COEFF * (1.0 + _SQRT3) / 4.0 * math.log(4.0 * _SQRT3 - 6.0),
        "nested-surd": math.sqrt(21.0 + 12.0 * _SQRT3) - (3.0 + 2.0 * _SQRT3),
        "bilinear-surd": math.sqrt(2.0 - _SQRT3) * math.sqrt(698.0 + 391.0 * _SQRT3)
        - (14.0 + 3.0 * _SQRT3),
        "denominator-shift": 4.0 * (4.0 + 3.0 * _SQRT3) - ((3.0 + 2.0 * _SQRT3) ** 2 - 5.0),
    }


def phi(x: float) -> float:
    """1 + 4 x^2 / (3 (1+x^2)^2), written overflow-safe; range [1, 4/3]."""
    r = x / (1.0 + x * x)
    return 1.0 + 4.0 / 3.0 * r * r


def h(y: float) -> float:
    """1 + (4/3)(y^2 - y^4) on [0, 1]; range [1, 4/3]."""
    if not 0.0 <= y <= 1.0:
        raise ValueError(f"h: argument must lie in [0, 1], got {y!r}")
    y2 = y * y
    return 1.0 + 4.0 / 3.0 * y2 * (1.0 - y2)


def A(y: float) -> float:
    """(3 + 4 y^2) / ((1 - 4 y^2)(9 - 4 y^2)); poles at |y| = 1/2, 3/2."""
    q = 4.0 * y * y
    if q == 1.0 or q == 9.0:
        raise ValueError(f"A: pole at y = {y!r}")
    return (3.0 + q) / ((1.0 - q) * (9.0 - q))


def B(t: float) -> float:
    """(1 + 10 t - sqrt(1 + 32 t + 64 t^2)) / (8 t) for t > 0.

    B increases to 1/4 as t -> inf, vanishes at t = 1/3, and is negative
    below that; the logarithmic representation only evaluates it on
    t >= (2 + sqrt(3))/8 where it is positive.
    """
    if not t > 0.0:
        raise ValueError(f"B: argument must be > 0, got {t!r}")
    return (1.0 + 10.0 * t - math.sqrt(1.0 + t * (32.0 + 64.0 * t))) / (8.0 * t)


# ---------------------------------------------------------------------------
# shared integrands


def _sqrt_term(v: float) -> float:
    return math.sqrt(v + math.sqrt(v))


def _integrand_r0(x: float) -> float:
    p = phi(x)
    return 1.0 / ((1.0 + x * x) ** 1.5 * _sqrt_term(p))


def delta_radicand(x: float) -> float:
    """(x^2 - 1)(1 - k^2 x^2) with k = 2 - sqrt(3); vanishes at 1 and 1/k."""
    k = CONSTANTS.k
    return (x * x - 1.0) * (1.0 - k * k * x * x)


def _inv_sqrt_delta(x: float) -> float:
    return 1.0 / math.sqrt(delta_radicand(x))


# ---------------------------------------------------------------------------
# representation evaluators


def _eval_r0(cfg: QuadratureConfig, scfg: SeriesConfig) -> QuadratureResult:
    return integrate(_integrand_r0, Interval(0.0, math.inf), cfg)


def _eval_r1(cfg: QuadratureConfig, scfg: SeriesConfig) -> QuadratureResult:
    return integrate(lambda y: 1.0 / _sqrt_term(h(y)), Interval(0.0, 1.0), cfg)


def _eval_r2(cfg: QuadratureConfig, scfg: SeriesConfig) -> QuadratureResult:
    r = double_series_I(scfg)
    return QuadratureResult(r.value, r.tail_estimate, r.terms_used, r.converged)


_R3_SWITCH_T = 8.0  # Hankel sum below, contour integral above
_R3_CUTOFF_T = 50.0


def _eval_r3(cfg: QuadratureConfig, scfg: SeriesConfig) -> QuadratureResult:
    """int_0^inf S(t) U(t) exp(-t) dt with S from the route stable at each t."""
    inner_cfg = QuadratureConfig(max(cfg.abs_tol * 10.0, 1e-11), cfg.max_evals)
    series_cfg = SeriesConfig(scfg.max_terms, 1e-12, scfg.accelerate)
    outer_cfg = QuadratureConfig(max(cfg.abs_tol * 100.0, 1e-9), cfg.max_evals)

    def s_factor(t: float) -> float:
        if t <= _R3_SWITCH_T:
            return hankel_series(t, series_cfg).value
        # the exp(-t) weight outside means S(t) only needs absolute
        # accuracy ~ tol * exp(t); the contour integrand grows like
        # exp(t * delta) on the arc, so a fixed tight tolerance would
        # fight pure roundoff at large t
        tol_t = min(1e-3, inner_cfg.abs_tol * math.exp(0.9 * (t - _R3_SWITCH_T)))
        return hankel_exp_integral(
            t, DEFAULT_PATH, QuadratureConfig(tol_t, inner_cfg.max_evals)
        ).value

    def f(t: float) -> float:
        return s_factor(t) * u_value(t, series_cfg, inner_cfg) * math.exp(-t)

    low = integrate(f, Interval(0.0, _R3_SWITCH_T, singular_lower=True), outer_cfg)
    high = integrate(f, Interval(_R3_SWITCH_T, _R3_CUTOFF_T), outer_cfg)
    # |S(t)| <= 1/sqrt(t) and 0 < U <= 1, so the discarded tail is below
    # exp(-T)/sqrt(T); inner evaluations contribute at most their abs_tol
    # per unit length of the outer range.
    tail = math.exp(-_R3_CUTOFF_T) / math.sqrt(_R3_CUTOFF_T)
    err = low.error_estimate + high.error_estimate + tail + _R3_CUTOFF_T * inner_cfg.abs_tol
    return QuadratureResult(
        low.value + high.value,
        err,
        low.evals + high.evals,
        low.converged and high.converged,
    )


def _eval_r4(cfg: QuadratureConfig, scfg: SeriesConfig) -> QuadratureResult:
    def f(x: float) -> float:
        w = x * (1.0 - x)
        return 1.0 / _sqrt_term(1.0 + 16.0 / 3.0 * w * w)

    return integrate(f, Interval(0.0, 1.0), cfg)


def _eval_r5(cfg: QuadratureConfig, scfg: SeriesConfig) -> QuadratureResult:
    def f(x: float) -> float:
        return 1.0 / (2.0 * math.sqrt(1.0 - x)) / _sqrt_term(1.0 + x * x / 3.0)

    return integrate(f, Interval(0.0, 1.0, singular_upper=True), cfg)


def _rationalized_core(x: float) -> float:
    return math.sqrt((1.0 - x + x * x) / (x * (1.0 - x * x) * (2.0 - x)))


def _eval_r6(cfg: QuadratureConfig, scfg: SeriesConfig) -> QuadratureResult:
    c = CONSTANTS

    def f(x: float) -> float:
        return _rationalized_core(x) / (c.inv_k - x)

    res = integrate(f, Interval(0.0, c.k, singular_lower=True), cfg)
    scale = _SQRT3 / math.sqrt(c.k)
    return QuadratureResult(
        scale * res.value, scale * res.error_estimate, res.evals, res.converged
    )


def _eval_r7(cfg: QuadratureConfig, scfg: SeriesConfig) -> QuadratureResult:
    c = CONSTANTS

    def f(x: float) -> float:
        return _rationalized_core(x) / (x - c.k)

    res = integrate(f, Interval(2.0, c.inv_k, singular_lower=True), cfg)
    scale = _SQRT3 / math.sqrt(c.inv_k)
    return QuadratureResult(
        scale * res.value, scale * res.error_estimate, res.evals, res.converged
    )


_LOG_T0 = (2.0 + _SQRT3) / 8.0  # where sqrt(B) reaches sqrt(3) - 3/2


def _eval_r8(cfg: QuadratureConfig, scfg: SeriesConfig) -> QuadratureResult:
    c = CONSTANTS

    def f(t: float) -> float:
        val = B(t)
        num = c.inv_k
        den = 1.5 + _SQRT3 + math.sqrt(val if val > 0.0 else 0.0)
        return math.log(num / den) / (2.0 * math.sqrt(t))

    res = integrate(f, Interval(_LOG_T0, math.inf), cfg)
    return QuadratureResult(
        c.c0 + NORMAL_FORM_COEFF * res.value,
        NORMAL_FORM_COEFF * res.error_estimate,
        res.evals,
        res.converged,
    )


_M_UPPER = 4.0 * (3.0 * _SQRT3 - 4.0)
_M_SHIFT = 4.0 * (4.0 + 3.0 * _SQRT3)


def h1_integral(cfg: QuadratureConfig = DEFAULT_CONFIG) -> QuadratureResult:
    """First half of the pre-normal-form pair on [4, 4(3 sqrt(3) - 4)]."""

    def f(x: float) -> float:
        return (
            0.5
            * math.sqrt((8.0 - x) / (x * x - 16.0))
            * (3.0 + 2.0 * _SQRT3)
            / (_M_SHIFT + x)
            / math.sqrt(5.0 - x)
        )

    return integrate(f, Interval(4.0, _M_UPPER, singular_lower=True), cfg)


def h2_integral(cfg: QuadratureConfig = DEFAULT_CONFIG) -> QuadratureResult:
    """Second half of the pre-normal-form pair."""

    def f(x: float) -> float:
        return 0.5 * math.sqrt((8.0 - x) / (x * x - 16.0)) / (_M_SHIFT + x)

    return integrate(f, Interval(4.0, _M_UPPER, singular_lower=True), cfg)


def _eval_r9(cfg: QuadratureConfig, scfg: SeriesConfig) -> QuadratureResult:
    r1 = h1_integral(cfg)
    r2 = h2_integral(cfg)
    return QuadratureResult(
        NORMAL_FORM_COEFF * (r1.value - r2.value),
        NORMAL_FORM_COEFF * (r1.error_estimate + r2.error_estimate),
        r1.evals + r2.evals,
        r1.converged and r2.converged,
    )


def j1_integral(cfg: QuadratureConfig = DEFAULT_CONFIG) -> QuadratureResult:
    """int_{(1+sqrt3)/2}^{2+sqrt3} (x+1)/(x+1+sqrt3) dx/sqrt(Delta)."""
    c = CONSTANTS

    def f(x: float) -> float:
        return (x + 1.0) / (x + 1.0 + _SQRT3) * _inv_sqrt_delta(x)

    return integrate(f, Interval(c.a_upper, c.inv_k, singular_upper=True), cfg)


def j2_integral(cfg: QuadratureConfig = DEFAULT_CONFIG) -> QuadratureResult:
    """int_1^{(1+sqrt3)/2} (x-2-sqrt3)/(x+1+sqrt3) dx/sqrt(Delta); negative."""
    c = CONSTANTS

    def f(x: float) -> float:
        return (x - c.inv_k) / (x + 1.0 + _SQRT3) * _inv_sqrt_delta(x)

    return integrate(f, Interval(1.0, c.a_upper, singular_lower=True), cfg)


def _eval_r10(cfg: QuadratureConfig, scfg: SeriesConfig) -> QuadratureResult:
    c = CONSTANTS
    r1 = j1_integral(cfg)
    r2 = j2_integral(cfg)
    return QuadratureResult(
        c.coeff_a * r1.value + c.coeff_b * r2.value,
        c.coeff_a * r1.error_estimate + c.coeff_b * r2.error_estimate,
        r1.evals + r2.evals,
        r1.converged and r2.converged,
    )


def _eval_r11(cfg: QuadratureConfig, scfg: SeriesConfig) -> QuadratureResult:
    c = CONSTANTS
    whole = integrate(
        _inv_sqrt_delta,
        Interval(1.0, c.inv_k, singular_lower=True, singular_upper=True),
        cfg,
    )
    partial = integrate(
        _inv_sqrt_delta, Interval(1.0, c.a_upper, singular_lower=True), cfg
    )
    shifted = integrate(
        lambda x: _inv_sqrt_delta(x) / (x + 1.0 + _SQRT3),
        Interval(1.0, c.inv_k, singular_lower=True, singular_upper=True),
        cfg,
    )
    value = (
        _SQRT3 * whole.value + (_SQRT3 - 3.0) * partial.value - 3.0 * shifted.value
    ) / (2.0 * _SQRT2)
    err = (
        _SQRT3 * whole.error_estimate
        + (3.0 - _SQRT3) * partial.error_estimate
        + 3.0 * shifted.error_estimate
    ) / (2.0 * _SQRT2)
    return QuadratureResult(
        value,
        err,
        whole.evals + partial.evals + shifted.evals,
        whole.converged and partial.converged and shifted.converged,
    )


def _eval_r12(cfg: QuadratureConfig, scfg: SeriesConfig) -> QuadratureResult:
    c = CONSTANTS
    k1 = 1.0 / _SQRT3
    value = ((_SQRT3 - 1.0) * complete_Pi(c.k, k1) - incomplete_F(c.alpha, k1)) / _SQRT2
    # Carlson evaluation is correct to a few ulps
    return QuadratureResult(value, 8.0 * abs(value) * 2.2e-16, 0, True)


def double_angle_form(cfg: QuadratureConfig = DEFAULT_CONFIG) -> QuadratureResult:
    """int_0^{pi/4} 2 sin(2 theta) dtheta / sqrt(1 + sin^4(2 theta)/3 + sqrt(...))."""

    def f(theta: float) -> float:
        s = math.sin(2.0 * theta)
        w = 1.0 + s * s * s * s / 3.0
        return 2.0 * s / _sqrt_term(w)

    return integrate(f, Interval(0.0, math.pi / 4.0), cfg)


# ---------------------------------------------------------------------------
# catalog


@dataclass(frozen=True)
class Representation:
    id: str
    description: str
    anchor: str
    kind: str  # "quadrature" | "series" | "closed-form"


_EVALUATORS = {
    "R0": _eval_r0,
    "R1": _eval_r1,
    "R2": _eval_r2,
    "R3": _eval_r3,
    "R4": _eval_r4,
    "R5": _eval_r5,
    "R6": _eval_r6,
    "R7": _eval_r7,
    "R8": _eval_r8,
    "R9": _eval_r9,
    "R10": _eval_r10,
    "R11": _eval_r11,
    "R12": _eval_r12,
}

REPRESENTATIONS: tuple[Representation, ...] = (
    Representation("R0", "defining integral over [0, inf)", "GR 3.248.5 left side", "quadrature"),
    Representation("R1", "finite form after x -> 1/y, x -> 1 + y^2, x y^2 = 1", "substituted integral on [0, 1]", "quadrature"),
    Representation("R2", "conditionally convergent double series, accelerated", "binomial double expansion", "series"),
    Representation("R3", "Laplace form int S(t) U(t) exp(-t) dt", "Hankel-contour kernel times Gaussian-type kernel", "series"),
    Representation("R4", "residue-reduced integral on [0, 1]", "resolvent pole at 1 + (16/3)u^2(1-u)^2", "quadrature"),
    Representation("R5", "half-interval form with 1/(2 sqrt(1-x)) weight", "double-angle reduction", "quadrature"),
    Representation("R6", "hyperbola-rationalized form on [0, 2-sqrt(3)]", "x^2+3=y^2 rational point (1,2), lower branch", "quadrature"),
    Representation("R7", "companion rationalized form on [2, 2+sqrt(3)]", "x^2+3=y^2 rational point (1,2), upper branch", "quadrature"),
    Representation("R8", "logarithmic form C0 + weighted log integral", "order swap via indicator bracket", "quadrature"),
    Representation("R9", "pre-normal-form pair on [4, 4(3 sqrt(3)-4)]", "rationalized sqrt(1+32t+64t^2)", "quadrature"),
    Representation("R10", "elliptic normal form a J1 + b J2, modulus 2-sqrt(3)", "bilinear reduction to Delta(x)", "quadrature"),
    Representation("R11", "three-integral normal form over [1, 2+sqrt(3)]", "partial fractions of a J1 + b J2", "quadrature"),
    Representation("R12", "closed form ((sqrt3-1) Pi - F)/sqrt(2)", "BF 256.00, 256.39, 340.01 + DLMF 19.8.12", "closed-form"),
)


def representation_ids() -> list[str]:
    return [rep.id for rep in REPRESENTATIONS]


def eval_representation(
    rep_id: str,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
    scfg: SeriesConfig = DEFAULT_SERIES,
) -> QuadratureResult:
    """Evaluate one representation of I; every id returns an estimate of
    the same number."""
    try:
        fn = _EVALUATORS[rep_id]
    except KeyError:
        raise KeyError(f"unknown representation id {rep_id!r}") from None
    return fn(cfg, scfg)


# ---------------------------------------------------------------------------
# Byrd-Friedman reductions of the three-integral form (modulus 1/sqrt(3))


@dataclass(frozen=True)
class BfIdentity:
    id: str
    description: str
    anchor: str


BF_IDENTITIES: tuple[BfIdentity, ...] = (
    BfIdentity(
        "V0-kprime",
        "int_1^{1/k} dx/sqrt(Delta) = K(k')",
        "Whittaker-Watson p.501",
    ),
    BfIdentity(
        "V1-bf25600",
        "int_1^a dx/sqrt(Delta) = (3+sqrt3)/3 F(arcsin sqrt(k), 1/sqrt3)",
        "Byrd-Friedman 256.00",
    ),
    BfIdentity(
        "V2-bf25639",
        "int_1^{1/k} dx/((x+1+sqrt3) sqrt(Delta)) = "
        "(1+sqrt3)/3 K(1/sqrt3) - 2(sqrt3-1)/3 Pi(2-sqrt3, 1/sqrt3)",
        "Byrd-Friedman 256.39 with 340.01",
    ),
)


def bf_identity(which: int, cfg: QuadratureConfig = DEFAULT_CONFIG):
    """Return (lhs, rhs, evals): lhs by raw singular quadrature of the
    Delta-form, rhs through the elliptic module."""
    c = CONSTANTS
    k1 = 1.0 / _SQRT3
    if which == 0:
        lhs = integrate(
            _inv_sqrt_delta,
            Interval(1.0, c.inv_k, singular_lower=True, singular_upper=True),
            cfg,
        )
        rhs = complete_K(c.k_prime)
    elif which == 1:
        lhs = integrate(
            _inv_sqrt_delta, Interval(1.0, c.a_upper, singular_lower=True), cfg
        )
        rhs = (3.0 + _SQRT3) / 3.0 * incomplete_F(c.alpha, k1)
    elif which == 2:
        lhs = integrate(
            lambda x: _inv_sqrt_delta(x) / (x + 1.0 + _SQRT3),
            Interval(1.0, c.inv_k, singular_lower=True, singular_upper=True),
            cfg,
        )
        rhs = (1.0 + _SQRT3) / 3.0 * complete_K(k1) - 2.0 * (_SQRT3 - 1.0) / 3.0 * complete_Pi(c.k, k1)
    else:
        raise ValueError(f"bf_identity: which must be 0, 1 or 2, got {which!r}")
    if not lhs.converged:
        raise ArithmeticError(f"bf_identity({which}): quadrature side did not converge")
    return lhs.value, rhs, lhs.evals
