"""Elliptic integrals in the conventions of the Gradshteyn-Ryzhik tables.

    F(phi, k)  = int_0^phi d(alpha) / sqrt(1 - k^2 sin^2 alpha)
               = int_0^sin(phi) dx / sqrt((1 - x^2)(1 - k^2 x^2))
    K(k)       = F(pi/2, k)
    Pi(n, k)   = int_0^1 dx / ((1 - n x^2) sqrt((1 - x^2)(1 - k^2 x^2)))

Convention note: the characteristic n of the complete third-kind
integral multiplies x^2 directly (it is NOT squared first). That is the
form entry 3.248.5's correction is stated in, e.g. Pi(2 - sqrt(3),
1/sqrt(3)); tables that write Pi(phi, n^2, k) square their second
argument before it reaches this form.

Evaluation goes through Carlson's symmetric forms R_F and R_J with the
duplication theorem (Carlson, Numerical computation of real or complex
elliptic integrals, 1994). Direct quadrature of the defining x-form
integrands is kept as an independent oracle in the test suite.

The descending Landen transformation (DLMF 19.8.12)

    K(sqrt(1 - k^2)) = 2/(1 + k) * K((1 - k)/(1 + k))

is exposed as a residual for verification.
"""

from __future__ import annotations

import math

__all__ = [
    "carlson_rf",
    "carlson_rj",
    "incomplete_F",
    "complete_K",
    "complete_Pi",
    "landen_residual",
]

_EPS = 2.220446049250313e-16
_MAX_ITER = 40


def _rf_state(x: float, y: float, z: float) -> tuple[float, int]:
    A = A0 = (x + y + z) / 3.0
    Q = (3.0 * _EPS) ** -0.125 * max(abs(A - x), abs(A - y), abs(A - z))
    x0, y0 = x, y
    scale = 1.0
    iters = 0
    while Q * scale > abs(A) and iters < _MAX_ITER:
        sx, sy, sz = math.sqrt(x), math.sqrt(y), math.sqrt(z)
        lam = sx * sy + sx * sz + sy * sz
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        z = 0.25 * (z + lam)
        A = 0.25 * (A + lam)
        scale *= 0.25
        iters += 1
    X = (A0 - x0) * scale / A
    Y = (A0 - y0) * scale / A
    Z = -X - Y
    E2 = X * Y - Z * Z
    E3 = X * Y * Z
    series = (
        1.0
        - E2 / 10.0
        + E3 / 14.0
        + E2 * E2 / 24.0
        - 3.0 * E2 * E3 / 44.0
    )
    return series / math.sqrt(A), iters


def _rc(x: float, y: float) -> float:
    # R_C(x, y) for y > 0; duplication plus the degenerate series
    A = A0 = (x + 2.0 * y) / 3.0
    y0 = y
    Q = (3.0 * _EPS) ** -0.125 * abs(A0 - x)
    scale = 1.0
    iters = 0
    while Q * scale > abs(A) and iters < _MAX_ITER:
        lam = 2.0 * math.sqrt(x) * math.sqrt(y) + y
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        A = 0.25 * (A + lam)
        scale *= 0.25
        iters += 1
    s = (y0 - A0) * scale / A
    poly = 1.0 + s * s * (
        0.3 + s * (1.0 / 7.0 + s * (0.375 + s * (9.0 / 22.0 + s * (159.0 / 208.0 + s * 9.0 / 8.0))))
    )
    return poly / math.sqrt(A)


def _rj_state(x: float, y: float, z: float, p: float) -> tuple[float, int]:
    A = A0 = (x + y + z + 2.0 * p) / 5.0
    delta = (p - x) * (p - y) * (p - z)
    Q = (0.25 * _EPS) ** (-1.0 / 6.0) * max(
        abs(A - x), abs(A - y), abs(A - z), abs(A - p)
    )
    x0, y0, z0 = x, y, z
    scale = 1.0
    rc_sum = 0.0
    iters = 0
    while Q * scale > abs(A) and iters < _MAX_ITER:
        sx, sy, sz, sp = math.sqrt(x), math.sqrt(y), math.sqrt(z), math.sqrt(p)
        lam = sx * sy + sx * sz + sy * sz
        d = (sp + sx) * (sp + sy) * (sp + sz)
        e = delta * scale**3 / (d * d)
        rc_sum += scale / d * _rc(1.0, 1.0 + e)
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        z = 0.25 * (z + lam)
        p = 0.25 * (p + lam)
        A = 0.25 * (A + lam)
        scale *= 0.25
        iters += 1
    X = (A0 - x0) * scale / A
    Y = (A0 - y0) * scale / A
    Z = (A0 - z0) * scale / A
    P = 0.5 * (-X - Y - Z)
    XYZ = X * Y * Z
    E2 = X * Y + X * Z + Y * Z - 3.0 * P * P
    E3 = XYZ + 2.0 * E2 * P + 4.0 * P**3
    E4 = (2.0 * XYZ + E2 * P + 3.0 * P**3) * P
    E5 = XYZ * P * P
    series = (
        1.0
        - 3.0 * E2 / 14.0
        + E3 / 6.0
        + 9.0 * E2 * E2 / 88.0
        - 3.0 * E4 / 22.0
        - 9.0 * E2 * E3 / 52.0
        + 3.0 * E5 / 26.0
    )
    return scale * series / (A * math.sqrt(A)) + 6.0 * rc_sum, iters


def _check_rf_args(x: float, y: float, z: float) -> None:
    args = (x, y, z)
    if any(v < 0.0 for v in args):
        raise ValueError("carlson arguments must be nonnegative")
    if sum(1 for v in args if v == 0.0) > 1:
        raise ValueError("at most one carlson argument may vanish")


def carlson_rf(x: float, y: float, z: float) -> float:
    """Carlson's symmetric integral of the first kind R_F(x, y, z)."""
    _check_rf_args(x, y, z)
    return _rf_state(x, y, z)[0]


def carlson_rj(x: float, y: float, z: float, p: float) -> float:
    """Carlson's symmetric integral of the third kind R_J(x, y, z, p), p > 0."""
    _check_rf_args(x, y, z)
    if not p > 0.0:
        raise ValueError("carlson_rj: p must be > 0")
    return _rj_state(x, y, z, p)[0]


def _check_modulus(k: float) -> None:
    if not 0.0 < k < 1.0:
        raise ValueError(f"modulus must satisfy 0 < k < 1, got {k!r}")


def incomplete_F(phi: float, k: float) -> float:
    """F(phi, k) for amplitude phi in [0, pi/2] and modulus 0 < k < 1."""
    if not 0.0 <= phi <= math.pi / 2.0:
        raise ValueError(f"amplitude must lie in [0, pi/2], got {phi!r}")
    _check_modulus(k)
    if phi == 0.0:
        return 0.0
    s = math.sin(phi)
    c = math.cos(phi)
    ks = k * s
    return s * carlson_rf(c * c, (1.0 - ks) * (1.0 + ks), 1.0)


def complete_K(k: float) -> float:
    """Complete first-kind integral K(k); diverges as k -> 1, so the
    boundary moduli are domain errors."""
    _check_modulus(k)
    return carlson_rf(0.0, (1.0 - k) * (1.0 + k), 1.0)


def complete_Pi(n: float, k: float) -> float:
    """Complete third-kind integral with characteristic n < 1 multiplying
    x^2 directly. k = 0 is accepted (closed form pi/(2 sqrt(1-n)) exists);
    n = 0 degenerates to K(k)."""
    if not n < 1.0:
        raise ValueError(f"characteristic must be < 1, got {n!r}")
    if not 0.0 <= k < 1.0:
        raise ValueError(f"modulus must satisfy 0 <= k < 1, got {k!r}")
    kc2 = (1.0 - k) * (1.0 + k)
    base = carlson_rf(0.0, kc2, 1.0)
    if n == 0.0:
        return base
    return base + n / 3.0 * carlson_rj(0.0, kc2, 1.0, 1.0 - n)


def landen_residual(k: float) -> float:
    """K(sqrt(1-k^2)) - (2/(1+k)) K((1-k)/(1+k)); identically zero by the
    descending Landen transformation."""
    _check_modulus(k)
    kc = math.sqrt((1.0 - k) * (1.0 + k))
    descended = (1.0 - k) / (1.0 + k)
    return complete_K(kc) - 2.0 / (1.0 + k) * complete_K(descended)
