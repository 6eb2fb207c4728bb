"""Bessel functions J_nu, their positive zeros, and their finite-interval orthogonality.

J_nu is summed from the ascending series

    J_nu(x) = (x/2)^nu / Gamma(nu+1) * sum_k (-x^2/4)^k / (k! (nu+1)_k)

The sum is carried in ``decimal`` at a precision sized to the largest term
(about e^x), so the alternating cancellation costs no binary64 accuracy; the
prefactor is a plain float product. Valid for 0 <= nu <= 50, 0 <= x <= 140, enough for the first 20 zeros
of every order in range.
"""

from __future__ import annotations

import decimal
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .errors import ConvergenceError, NonFiniteInput, OrderOutOfRange
from .quadrature import integrate_doubling

__all__ = [
    "NU_MAX",
    "X_MAX",
    "BesselZeroSet",
    "BesselOrthogonality",
    "bessel_j",
    "bessel_j_derivative",
    "bessel_zeros",
    "bessel_orthogonality",
    "mcmahon_guess",
]

NU_MAX = 50.0
X_MAX = 140.0
K_MAX = 20


def _check_nu(nu) -> float:
    nu = float(nu)
    if not math.isfinite(nu) or nu < 0 or nu > NU_MAX:
        raise OrderOutOfRange(f"Bessel order nu={nu} outside [0, {NU_MAX}]")
    return nu


def _series(nu: float, x: float) -> float:
    """J_nu(x) for nu > -1, 0 <= x <= X_MAX (no order checks)."""
    if x == 0.0:
        return 1.0 if nu == 0.0 else 0.0
    ctx = decimal.Context(prec=25 + math.ceil(x / math.log(10)))
    q = ctx.divide(ctx.multiply(decimal.Decimal(x), decimal.Decimal(x)), 4)
    a = ctx.add(decimal.Decimal(nu), 1)
    term = decimal.Decimal(1)
    total = decimal.Decimal(1)
    biggest = decimal.Decimal(1)
    cutoff = decimal.Decimal(10) ** -(ctx.prec - 2)
    k = 0
    while True:
        k += 1
        term = ctx.minus(ctx.divide(ctx.multiply(term, q), ctx.multiply(k, ctx.add(a, k - 1))))
        total = ctx.add(total, term)
        mag = ctx.abs(term)
        if mag > biggest:
            biggest = mag
        elif mag <= cutoff * biggest and k * (k + nu) > 2 * float(q):
            break
    if nu == int(nu):
        pref = (x / 2) ** nu / math.factorial(int(nu))
    else:
        pref = math.exp(nu * math.log(x / 2) - math.lgamma(nu + 1))
    return float(total) * pref


def _check_x(x):
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise NonFiniteInput("Bessel argument must be finite")
    if np.any(arr < 0) or np.any(arr > X_MAX):
        raise ValueError(f"Bessel argument outside [0, {X_MAX}]")
    return arr


def bessel_j(nu, x):
    """J_nu(x) to about 1e-15 absolute on 0 <= x <= 140; scalar or array ``x``."""
    nu = _check_nu(nu)
    arr = _check_x(x)
    if arr.ndim == 0:
        return _series(nu, float(arr))
    return np.array([_series(nu, float(t)) for t in arr.ravel()]).reshape(arr.shape)


def bessel_j_derivative(nu, x):
    """J_nu'(x) = (nu/x) J_nu(x) - J_{nu+1}(x); at x = 0 the series limit."""
    nu = _check_nu(nu)
    arr = _check_x(x)

    def one(t):
        if t == 0.0:
            if 0.0 < nu < 1.0:
                raise NonFiniteInput(f"J_{nu:g}' is unbounded at x = 0")
            return 0.5 if nu == 1.0 else 0.0
        return nu / t * _series(nu, t) - _series(nu + 1, t)

    if arr.ndim == 0:
        return one(float(arr))
    return np.array([one(float(t)) for t in arr.ravel()]).reshape(arr.shape)


def mcmahon_guess(nu: float, k: int) -> float:
    """McMahon's large-zero expansion for the k-th positive zero of J_nu."""
    mu = 4.0 * nu * nu
    beta = (k + nu / 2 - 0.25) * math.pi
    e = 8 * beta
    return (beta - (mu - 1) / e - 4 * (mu - 1) * (7 * mu - 31) / (3 * e ** 3)
            - 32 * (mu - 1) * (83 * mu ** 2 - 982 * mu + 3779) / (15 * e ** 5))


@dataclass(frozen=True)
class BesselZeroSet:
    nu: float
    zeros: tuple[float, ...]

    def __len__(self):
        return len(self.zeros)

    def __getitem__(self, k):
        return self.zeros[k]


def _refine(nu: float, lo: float, hi: float, guess: float) -> float:
    """Safeguarded Newton inside a sign-change bracket [lo, hi]."""
    flo = _series(nu, lo)
    x = guess if lo < guess < hi else 0.5 * (lo + hi)
    for _ in range(100):
        fx = _series(nu, x)
        if fx == 0.0:
            return x
        if (fx > 0) == (flo > 0):
            lo, flo = x, fx
        else:
            hi = x
        d = nu / x * fx - _series(nu + 1, x)
        step = fx / d if d != 0 else math.inf
        nxt = x - step
        if not lo < nxt < hi:
            nxt = 0.5 * (lo + hi)
        if abs(nxt - x) <= 4e-16 * x:
            return nxt
        x = nxt
    raise ConvergenceError(f"zero refinement failed for nu={nu} in [{lo}, {hi}]", value=x)


@lru_cache(maxsize=None)
def _zeros_cached(nu: float, count: int) -> tuple[float, ...]:
    step = 0.25
    found = []
    lo = max(step, nu / 2)
    flo = _series(nu, lo)
    while len(found) < count:
        hi = lo + step
        if hi > X_MAX:
            raise ConvergenceError(f"fewer than {count} zeros of J_{nu:g} below x={X_MAX}")
        fhi = _series(nu, hi)
        if fhi == 0.0 or (fhi > 0) != (flo > 0):
            k = len(found) + 1
            found.append(hi if fhi == 0.0 else _refine(nu, lo, hi, mcmahon_guess(nu, k)))
        lo, flo = hi, fhi
    return tuple(found)


def bessel_zeros(nu, count: int) -> BesselZeroSet:
    """First ``count`` (1..20) positive zeros of J_nu, ascending.

    Sign changes are bracketed on a 0.25 grid (consecutive zeros are more
    than 2.4 apart for nu >= 0), then each bracket is refined by Newton from
    McMahon's estimate, falling back to bisection steps whenever Newton
    leaves the bracket.
    """
    nu = _check_nu(nu)
    if isinstance(count, bool) or not isinstance(count, int) or not 1 <= count <= K_MAX:
        raise ValueError(f"zero count must be an integer in [1, {K_MAX}], got {count!r}")
    return BesselZeroSet(nu, _zeros_cached(nu, count))


class BesselOrthogonality(NamedTuple):
    value: float
    scale: float
    residual: float
    quad_error: float


def bessel_orthogonality(nu, m_idx: int, n_idx: int, a: float = 1.0, tol: float = 1e-12) -> BesselOrthogonality:
    """int_0^a x J_nu(j_m x / a) J_nu(j_n x / a) dx with its L1 scale and residual |value| / scale.

    Indices are 1-based. For m_idx == n_idx the value is the (nonzero)
    squared norm; the residual is still reported but carries no claim.
    """
    nu = _check_nu(nu)
    a = float(a)
    if not (math.isfinite(a) and a > 0):
        raise ValueError(f"a must be positive and finite, got {a}")
    if min(m_idx, n_idx) < 1:
        raise ValueError("zero indices are 1-based")
    zs = bessel_zeros(nu, max(m_idx, n_idx))
    km, kn = zs[m_idx - 1] / a, zs[n_idx - 1] / a

    def f(x):
        return x * bessel_j(nu, km * x) * bessel_j(nu, kn * x)

    res = integrate_doubling(f, 0.0, a, tol, l1_relative=True)
    resid = abs(res.value) / res.l1 if res.l1 > 0 else 0.0
    return BesselOrthogonality(res.value, res.l1, resid, res.error)
