"""Implicit-shift QL eigen-solver for symmetric tridiagonal matrices.

Only the first component of each eigenvector is accumulated, which is all
Golub-Welsch needs: eigenvalues of the Jacobi matrix are the Gauss nodes and
the squared first components are the normalized weights.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import ConvergenceError

_EPS = float(np.finfo(float).eps)


def tridiag_eig_first(diag, offdiag, *, max_sweeps: int | None = None):
    """Eigenvalues and first eigenvector components of a symmetric tridiagonal matrix.

    Parameters
    ----------
    diag : sequence of float, length n
    offdiag : sequence of float, length n-1
    max_sweeps : total implicit-shift sweeps allowed (default 50*n)

    Returns
    -------
    (eigenvalues, first_components), both ascending by eigenvalue.
    """
    d = [float(v) for v in diag]
    n = len(d)
    if len(offdiag) != max(n - 1, 0):
        raise ValueError("offdiag must have length len(diag) - 1")
    e = [float(v) for v in offdiag] + [0.0]
    z = [0.0] * n
    if n:
        z[0] = 1.0
    budget = 50 * n if max_sweeps is None else max_sweeps
    sweeps = 0

    for l in range(n):
        while True:
            m = l
            while m < n - 1:
                if abs(e[m]) <= _EPS * (abs(d[m]) + abs(d[m + 1])):
                    break
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > budget:
                raise ConvergenceError(f"implicit QL did not converge within {budget} sweeps")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                f = z[i + 1]
                z[i + 1] = s * z[i] + c * f
                z[i] = c * z[i] - s * f
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0

    order = np.argsort(d, kind="stable")
    return np.asarray(d)[order], np.asarray(z)[order]
