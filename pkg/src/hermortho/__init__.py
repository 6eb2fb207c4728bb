"""Hermite polynomials, zeros and Gauss rules, with checks of a Bessel-type
finite-interval orthogonality of H_n(alpha_i y / b) over the zeros of H_n."""

__version__ = "0.1.0"

from .errors import ConvergenceError, HermorthoError, NonFiniteInput, OrderOutOfRange
from .hermite import (
    N_MAX,
    hermite_derivative,
    hermite_eval,
    ode_residual_hermite,
    ode_residual_psi,
    ode_residual_scaled,
    psi_eval,
    psi_normalized,
)
from .roots import PairKind, ZeroSet, classify_pairs, hermite_zeros, interlacing_check
from .quadrature import QuadRule, gauss_hermite, gauss_legendre, integrate, integrate_with_error
from .orthogonality import (
    Interval,
    KernelSpec,
    OrthoReport,
    boundary_term,
    classical_orthogonality,
    gram_matrix,
    green_identity_check,
    kernel_integrand,
    orthogonality_integral,
)
from .bessel import bessel_j, bessel_orthogonality, bessel_zeros
