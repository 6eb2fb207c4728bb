"""Physicists' Hermite polynomials, the oscillator form psi_n, and ODE residuals.

All evaluators accept a scalar or an array for ``x``; scalars come back as
Python floats, arrays as ``numpy.ndarray``.

H_n is computed by the upward recurrence

    H_0 = 1,  H_1 = 2x,  H_{k+1} = 2x H_k - 2k H_{k-1}

and derivatives use H_n' = 2n H_{n-1}, H_n'' = 4n(n-1) H_{n-2}, so no
numerical differentiation is involved anywhere.
"""

from __future__ import annotations

import math
import numbers

import numpy as np

from .errors import NonFiniteInput, OrderOutOfRange

N_MAX = 64

__all__ = [
    "N_MAX",
    "check_order",
    "hermite_eval",
    "hermite_derivative",
    "hermite_second_derivative",
    "psi_eval",
    "psi_derivative",
    "psi_second_derivative",
    "psi_normalized",
    "ode_residual_hermite",
    "ode_residual_scaled",
    "ode_residual_psi",
]


def check_order(n, n_max: int = N_MAX) -> int:
    """Validate a polynomial degree and return it as ``int``."""
    if isinstance(n, bool) or not isinstance(n, numbers.Integral):
        raise OrderOutOfRange(f"order must be an integer, got {n!r}")
    n = int(n)
    if n < 0 or n > n_max:
        raise OrderOutOfRange(f"order n={n} outside [0, {n_max}]")
    return n


def _as_points(x):
    scalar = np.ndim(x) == 0
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise NonFiniteInput("evaluation point must be finite")
    return arr, scalar


def _out(arr, scalar):
    return float(arr) if scalar else arr


def _check_k(k):
    if not (math.isfinite(k) and k > 0):
        raise ValueError(f"scale k must be positive and finite, got {k!r}")


def _hermite_triple(n: int, x: np.ndarray):
    """Return (H_n, H_{n-1}, H_{n-2}) at x; orders below zero read as 0."""
    zero = np.zeros_like(x)
    h_prev2, h_prev, h = zero, zero, np.ones_like(x)
    for k in range(n):
        h_prev2, h_prev, h = h_prev, h, 2.0 * x * h - 2.0 * k * h_prev
    return h, h_prev, h_prev2


def hermite_eval(n, x, *, n_max: int = N_MAX):
    """Evaluate H_n(x)."""
    n = check_order(n, n_max)
    arr, scalar = _as_points(x)
    return _out(_hermite_triple(n, arr)[0], scalar)


def hermite_derivative(n, x, *, n_max: int = N_MAX):
    """Evaluate H_n'(x) = 2n H_{n-1}(x)."""
    n = check_order(n, n_max)
    arr, scalar = _as_points(x)
    _, h1, _ = _hermite_triple(n, arr)
    return _out(2.0 * n * h1, scalar)


def hermite_second_derivative(n, x, *, n_max: int = N_MAX):
    """Evaluate H_n''(x) = 4n(n-1) H_{n-2}(x)."""
    n = check_order(n, n_max)
    arr, scalar = _as_points(x)
    _, _, h2 = _hermite_triple(n, arr)
    return _out(4.0 * n * (n - 1) * h2, scalar)


def psi_eval(n, x, *, n_max: int = N_MAX):
    """Evaluate psi_n(x) = exp(-x^2/2) H_n(x).

    Same zeros and parity as H_n.
    """
    n = check_order(n, n_max)
    arr, scalar = _as_points(x)
    return _out(np.exp(-arr * arr / 2) * _hermite_triple(n, arr)[0], scalar)


def psi_derivative(n, x, *, n_max: int = N_MAX):
    """psi_n'(x) = exp(-x^2/2) (H_n' - x H_n)."""
    n = check_order(n, n_max)
    arr, scalar = _as_points(x)
    h, h1, _ = _hermite_triple(n, arr)
    return _out(np.exp(-arr * arr / 2) * (2.0 * n * h1 - arr * h), scalar)


def psi_second_derivative(n, x, *, n_max: int = N_MAX):
    """psi_n''(x) = exp(-x^2/2) (H_n'' - 2x H_n' + (x^2 - 1) H_n).

    Built from the Hermite derivative relations only; the oscillator
    equation is never substituted here.
    """
    n = check_order(n, n_max)
    arr, scalar = _as_points(x)
    h, h1, h2 = _hermite_triple(n, arr)
    d2 = 4.0 * n * (n - 1) * h2 - 2.0 * arr * (2.0 * n * h1) + (arr * arr - 1.0) * h
    return _out(np.exp(-arr * arr / 2) * d2, scalar)


def psi_normalized(n, x, *, n_max: int = N_MAX):
    """Orthonormal Hermite function psi_n(x) / sqrt(2^n n! sqrt(pi)).

    Evaluated by the normalized recurrence, so it does not overflow where
    raw H_n would. None of the orthogonality checks use this form.
    """
    n = check_order(n, n_max)
    arr, scalar = _as_points(x)
    prev = np.zeros_like(arr)
    cur = np.pi ** -0.25 * np.exp(-arr * arr / 2)
    for k in range(n):
        prev, cur = cur, math.sqrt(2.0 / (k + 1)) * arr * cur - math.sqrt(k / (k + 1)) * prev
    return _out(cur, scalar)


def ode_residual_hermite(n, x, *, n_max: int = N_MAX):
    """Residual H_n'' - 2x H_n' + 2n H_n of the Hermite equation (analytically 0)."""
    n = check_order(n, n_max)
    arr, scalar = _as_points(x)
    h, h1, h2 = _hermite_triple(n, arr)
    r = 4.0 * n * (n - 1) * h2 - 2.0 * arr * (2.0 * n * h1) + 2.0 * n * h
    return _out(r, scalar)


def ode_residual_scaled(n, k, y, *, n_max: int = N_MAX):
    """Residual of the Hermite equation after x = k y, multiplied through by k^2.

    d^2/dy^2 H_n(ky) - 2 k^2 y d/dy H_n(ky) + 2n k^2 H_n(ky), with the
    y-derivatives taken by the chain rule.
    """
    n = check_order(n, n_max)
    _check_k(k)
    arr, scalar = _as_points(y)
    x = k * arr
    h, h1, h2 = _hermite_triple(n, x)
    d1 = k * (2.0 * n * h1)
    d2 = k * k * (4.0 * n * (n - 1) * h2)
    r = d2 - 2.0 * k * k * arr * d1 + 2.0 * n * k * k * h
    return _out(r, scalar)


def ode_residual_psi(n, k, y, *, n_max: int = N_MAX):
    """Residual d^2/dy^2 psi_n(ky) + [k^2 (1+2n) - k^4 y^2] psi_n(ky)."""
    n = check_order(n, n_max)
    _check_k(k)
    arr, scalar = _as_points(y)
    x = k * arr
    d2 = k * k * psi_second_derivative(n, x, n_max=n_max)
    r = d2 + (k * k * (1 + 2 * n) - k ** 4 * arr * arr) * psi_eval(n, x, n_max=n_max)
    return _out(np.asarray(r), scalar)
