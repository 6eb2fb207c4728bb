"""Finite-interval orthogonality of H_n(alpha_i y / b) over the zeros of H_n.

For zeros alpha_i, alpha_j of H_n with alpha_i^2 != alpha_j^2 the kernel

    f(y) = [(alpha_i^2 + alpha_j^2) y^2 / b^2 - (1 + 2n)]
           * exp(-(alpha_i^2 + alpha_j^2) y^2 / (2 b^2))
           * H_n(alpha_i y / b) H_n(alpha_j y / b)

integrates to zero over [-b, b] and over [0, b]. This module builds that
kernel, checks the intermediate Wronskian/Green steps that force the zero,
and tabulates the integrals over every zero pair.

Residuals are reported as |int f| / int |f|: the kernel has large cancelling
lobes, so the L1 mass is the natural yardstick for "zero".
"""

from __future__ import annotations

import enum
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import ConvergenceError, OrderOutOfRange
from .hermite import N_MAX, check_order, hermite_eval, psi_derivative, psi_eval, psi_second_derivative
from .quadrature import gauss_hermite, integrate, integrate_doubling
from .roots import PairKind, classify_pairs, hermite_zeros

__all__ = [
    "Interval",
    "KernelSpec",
    "OrthoIntegral",
    "GreenCheck",
    "PairRecord",
    "OrthoReport",
    "kernel_integrand",
    "kernel_integrand_psi",
    "orthogonality_integral",
    "boundary_term",
    "boundary_scale",
    "green_identity_check",
    "gram_matrix",
    "classical_orthogonality",
    "classical_norm",
    "ZERO_TOL",
    "TRIVIAL_FLOOR",
    "TRIVIAL_NOTE",
]

ZERO_TOL = 1e-9
TRIVIAL_FLOOR = 1e-12
TRIVIAL_NOTE = "trivial only: every non-symmetric pair involves the origin zero, integrand vanishes identically"


class Interval(str, enum.Enum):
    FULL = "full"
    HALF = "half"

    def bounds(self, b: float) -> tuple[float, float]:
        return (-b, b) if self is Interval.FULL else (0.0, b)


def _local_scale(n: int, alpha: float) -> float:
    t = alpha + np.linspace(-0.1, 0.1, 21)
    return float(np.max(np.abs(hermite_eval(n, t))))


@dataclass(frozen=True)
class KernelSpec:
    """One instance of the kernel: order, two zeros, half-width ``b``, interval.

    With ``validate=True`` (default) both alphas must be genuine zeros of
    H_n; pass ``validate=False`` to build deliberately perturbed specs.
    """

    n: int
    alpha_i: float
    alpha_j: float
    b: float = 1.0
    interval: Interval = Interval.FULL
    validate: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        check_order(self.n)
        object.__setattr__(self, "interval", Interval(self.interval))
        for name in ("alpha_i", "alpha_j", "b"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite")
            object.__setattr__(self, name, v)
        if not self.b > 0:
            raise ValueError(f"b must be positive, got {self.b}")
        if self.validate:
            for name in ("alpha_i", "alpha_j"):
                a = getattr(self, name)
                if abs(hermite_eval(self.n, a)) > 1e-9 * _local_scale(self.n, a):
                    raise ValueError(f"{name}={a!r} is not a zero of H_{self.n}")

    @property
    def bounds(self) -> tuple[float, float]:
        return self.interval.bounds(self.b)

    @property
    def ki(self) -> float:
        return self.alpha_i / self.b

    @property
    def kj(self) -> float:
        return self.alpha_j / self.b


def _bracket(spec: KernelSpec, y):
    c = spec.alpha_i ** 2 + spec.alpha_j ** 2
    return c * y * y / spec.b ** 2 - (1 + 2 * spec.n)


def kernel_integrand(spec: KernelSpec, y):
    """Kernel value at y in explicit Gaussian-times-Hermite form."""
    y = np.asarray(y, dtype=float)
    c = spec.alpha_i ** 2 + spec.alpha_j ** 2
    gauss = np.exp(-c * y * y / (2 * spec.b ** 2))
    f = _bracket(spec, y) * gauss * hermite_eval(spec.n, spec.ki * y) * hermite_eval(spec.n, spec.kj * y)
    return float(f) if f.ndim == 0 else f


def kernel_integrand_psi(spec: KernelSpec, y):
    """Same kernel written with psi_n products: bracket * psi_n(k_i y) * psi_n(k_j y)."""
    y = np.asarray(y, dtype=float)
    f = _bracket(spec, y) * psi_eval(spec.n, spec.ki * y) * psi_eval(spec.n, spec.kj * y)
    return float(f) if f.ndim == 0 else f


class OrthoIntegral(NamedTuple):
    value: float
    scale: float
    quad_error: float


def orthogonality_integral(spec: KernelSpec, tol: float = 1e-12) -> OrthoIntegral:
    """Integral of the kernel over the spec's interval, its L1 scale and quadrature error.

    Doubling stops when successive estimates agree to ``tol`` relative to
    the L1 mass (the integral itself is expected to vanish).
    """
    lo, hi = spec.bounds
    res = integrate_doubling(lambda y: kernel_integrand(spec, y), lo, hi, tol, l1_relative=True)
    return OrthoIntegral(res.value, res.l1, res.error)


def _wronskian(spec: KernelSpec, y: float) -> float:
    n = spec.n
    pi_, pj = psi_eval(n, spec.ki * y), psi_eval(n, spec.kj * y)
    di = spec.ki * psi_derivative(n, spec.ki * y)
    dj = spec.kj * psi_derivative(n, spec.kj * y)
    return pj * di - pi_ * dj


def boundary_term(spec: KernelSpec) -> float:
    """[psi_j d/dy psi_i - psi_i d/dy psi_j] evaluated between the interval endpoints.

    psi_i means psi_n(alpha_i y / b). Vanishes when both alphas are zeros;
    on [0, b] the lower end drops out via psi_n(0) = 0 (odd n) or
    psi_n'(0) = 0 (even n).
    """
    lo, hi = spec.bounds
    return _wronskian(spec, hi) - _wronskian(spec, lo)


def boundary_scale(spec: KernelSpec) -> float:
    """Natural magnitude of boundary-term rounding: sum over endpoints of b |psi_i'| |psi_j'|."""
    n = spec.n
    total = 0.0
    for y in spec.bounds:
        di = spec.ki * psi_derivative(n, spec.ki * y)
        dj = spec.kj * psi_derivative(n, spec.kj * y)
        total += spec.b * abs(di * dj)
    return total


class GreenCheck(NamedTuple):
    ls: float
    rs: float
    discrepancy: float
    scale: float


def green_identity_check(spec: KernelSpec, tol: float = 1e-12) -> GreenCheck:
    """Both sides of the Green identity behind the orthogonality relation.

    LS = int [psi_j psi_i'' - psi_i psi_j''] dy with psi'' taken from the
    Hermite derivative relations; RS = ((a_i^2 - a_j^2) / b^2) int
    bracket * psi_j psi_i dy, which is what the oscillator equation turns LS
    into. LS also equals ``boundary_term(spec)`` whether or not the alphas
    are zeros. ``scale`` is the larger L1 mass of the two integrands.
    """
    n, ki, kj = spec.n, spec.ki, spec.kj
    lo, hi = spec.bounds

    def lhs(y):
        return (psi_eval(n, kj * y) * ki * ki * psi_second_derivative(n, ki * y)
                - psi_eval(n, ki * y) * kj * kj * psi_second_derivative(n, kj * y))

    pref = (spec.alpha_i ** 2 - spec.alpha_j ** 2) / spec.b ** 2

    def rhs(y):
        return pref * _bracket(spec, y) * psi_eval(n, kj * y) * psi_eval(n, ki * y)

    left = integrate_doubling(lhs, lo, hi, tol, l1_relative=True)
    right = integrate_doubling(rhs, lo, hi, tol, l1_relative=True)
    return GreenCheck(left.value, right.value, abs(left.value - right.value), max(left.l1, right.l1))


@dataclass
class PairRecord:
    i: int
    j: int
    alpha_i: float
    alpha_j: float
    kind: PairKind
    integral: float
    scale: float
    relative_residual: float
    quad_error: float
    verdict: str


@dataclass
class OrthoReport:
    """Kernel integrals over every zero pair (i <= j) of H_n, sorted by (i, j)."""

    n: int
    b: float
    interval: Interval
    pairs: list[PairRecord]
    note: str = ""

    @property
    def nonsymmetric(self) -> list[PairRecord]:
        return [p for p in self.pairs if p.kind is PairKind.NONSYMMETRIC]

    @property
    def passed(self) -> bool:
        return all(p.verdict in ("PASS", "N/A") for p in self.pairs)

    @property
    def converged(self) -> bool:
        return all(p.verdict != "ERROR" for p in self.pairs)

    @property
    def worst_residual(self) -> float:
        return max((p.relative_residual for p in self.nonsymmetric), default=0.0)


def _evaluate_pair(n, b, interval, zs, pc, tol, quad_tol) -> PairRecord:
    ai, aj = zs[pc.i - 1], zs[pc.j - 1]
    spec = KernelSpec(n, ai, aj, b, interval, validate=False)
    try:
        value, scale, qerr = orthogonality_integral(spec, quad_tol)
    except ConvergenceError as exc:
        value = exc.value if exc.value is not None else math.nan
        return PairRecord(pc.i, pc.j, ai, aj, pc.kind, value, 0.0, 0.0,
                          exc.estimate if exc.estimate is not None else math.inf, "ERROR")
    rr = abs(value) / scale if scale > 0 else 0.0
    if pc.kind is PairKind.NONSYMMETRIC:
        verdict = "PASS" if rr < tol else "FAIL"
    elif pc.kind is PairKind.TRIVIAL_ORIGIN:
        verdict = "PASS" if abs(value) < TRIVIAL_FLOOR else "FAIL"
    else:
        verdict = "N/A"
    return PairRecord(pc.i, pc.j, ai, aj, pc.kind, value, scale, rr, qerr, verdict)


def gram_matrix(n, b=1.0, interval=Interval.FULL, tol=ZERO_TOL, quad_tol=1e-12,
                *, workers: int | None = None) -> OrthoReport:
    """Evaluate the kernel integral for every zero pair of H_n and judge it.

    NONSYMMETRIC pairs pass when the relative residual is below ``tol``;
    origin pairs pass when the integral is below ``TRIVIAL_FLOOR``; diagonal
    and symmetric pairs are recorded with verdict N/A. A pair whose
    quadrature fails is recorded with verdict ERROR instead of raising.
    """
    n = check_order(n, N_MAX)
    if n < 3:
        raise OrderOutOfRange(f"the relation is stated for n >= 3, got n={n}")
    b = float(b)
    if not (math.isfinite(b) and b > 0):
        raise ValueError(f"b must be positive and finite, got {b}")
    interval = Interval(interval)
    zs = hermite_zeros(n)
    classes = classify_pairs(zs)

    def run(pc):
        return _evaluate_pair(n, b, interval, zs, pc, tol, quad_tol)

    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(run, classes))
    else:
        records = [run(pc) for pc in classes]
    note = "" if any(pc.kind is PairKind.NONSYMMETRIC for pc in classes) else TRIVIAL_NOTE
    return OrthoReport(n, b, interval, records, note)


def classical_norm(n: int) -> float:
    """2^n n! sqrt(pi), the squared norm of H_n under weight e^{-x^2}."""
    return math.ldexp(math.factorial(n) * math.sqrt(math.pi), n)


def classical_orthogonality(n, m) -> tuple[float, float]:
    """Gauss-Hermite value of int e^{-x^2} H_n H_m dx and its exact value.

    The rule has (n + m) // 2 + 4 points, so the quadrature is exact up to
    rounding.
    """
    n, m = check_order(n), check_order(m)
    rule = gauss_hermite((n + m) // 2 + 4)
    value = integrate(rule, lambda x: hermite_eval(n, x) * hermite_eval(m, x))
    return value, (classical_norm(n) if n == m else 0.0)
