"""Zeros of H_n and classification of zero pairs."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .hermite import N_MAX, check_order, hermite_derivative, hermite_eval
from .tridiagonal import tridiag_eig_first

__all__ = [
    "PairKind",
    "PairClass",
    "ZeroSet",
    "jacobi_offdiagonal",
    "hermite_zeros",
    "classify_pairs",
    "interlacing_check",
]

PAIR_RTOL = 1e-12


class PairKind(str, enum.Enum):
    NONSYMMETRIC = "NONSYMMETRIC"
    SYMMETRIC = "SYMMETRIC"
    DIAGONAL = "DIAGONAL"
    TRIVIAL_ORIGIN = "TRIVIAL_ORIGIN"


@dataclass(frozen=True)
class ZeroSet:
    """Ascending real zeros of H_n."""

    n: int
    zeros: tuple[float, ...]

    @property
    def contains_origin(self) -> bool:
        return self.n % 2 == 1

    def __len__(self):
        return len(self.zeros)

    def __getitem__(self, k):
        return self.zeros[k]

    def as_array(self) -> np.ndarray:
        return np.array(self.zeros)


@dataclass(frozen=True)
class PairClass:
    """A zero pair with 1-based indices i <= j."""

    i: int
    j: int
    kind: PairKind


def jacobi_offdiagonal(n: int) -> np.ndarray:
    """Off-diagonal of the Jacobi matrix for e^{-x^2}: sqrt(k/2), k = 1..n-1."""
    return np.sqrt(np.arange(1, n) / 2.0)


@lru_cache(maxsize=None)
def _zeros_cached(n: int, polish: bool) -> tuple[float, ...]:
    nodes, _ = tridiag_eig_first(np.zeros(n), jacobi_offdiagonal(n))
    if polish:
        nodes = nodes - hermite_eval(n, nodes) / hermite_derivative(n, nodes)
    # mirror the positive half so symmetry and the odd-n origin are exact
    half = n // 2
    pos = (nodes[n - half:] - nodes[:half][::-1]) / 2.0
    mid = [0.0] if n % 2 else []
    return tuple(float(v) for v in np.concatenate([-pos[::-1], mid, pos]))


def hermite_zeros(n, *, polish: bool = True, n_max: int = N_MAX) -> ZeroSet:
    """Zeros of H_n: Golub-Welsch eigenvalues followed by one Newton step.

    ``polish=False`` returns the (symmetrized) eigenvalues alone.
    """
    n = check_order(n, n_max)
    if n < 1:
        raise ValueError("H_0 has no zeros; need n >= 1")
    return ZeroSet(n, _zeros_cached(n, bool(polish)))


def _pair_kind(i: int, j: int, a: float, b: float) -> PairKind:
    if i == j:
        return PairKind.DIAGONAL
    if a == 0.0 or b == 0.0:
        return PairKind.TRIVIAL_ORIGIN
    a2, b2 = a * a, b * b
    if abs(a2 - b2) <= PAIR_RTOL * max(a2, b2):
        return PairKind.SYMMETRIC
    return PairKind.NONSYMMETRIC


def classify_pairs(zs: ZeroSet) -> list[PairClass]:
    """Classify every pair (i <= j); output is sorted by (i, j)."""
    out = []
    for i in range(1, zs.n + 1):
        for j in range(i, zs.n + 1):
            out.append(PairClass(i, j, _pair_kind(i, j, zs[i - 1], zs[j - 1])))
    return out


def interlacing_check(n, *, n_max: int = N_MAX) -> bool:
    """True iff exactly one zero of H_{n-1} lies strictly between consecutive zeros of H_n."""
    n = check_order(n, n_max)
    if n < 2:
        raise ValueError("interlacing needs n >= 2")
    outer = hermite_zeros(n, n_max=n_max).as_array()
    inner = hermite_zeros(n - 1, n_max=n_max).as_array()
    if inner.size != n - 1:
        return False
    counts = [np.count_nonzero((inner > lo) & (inner < hi)) for lo, hi in zip(outer[:-1], outer[1:])]
    return all(c == 1 for c in counts)
