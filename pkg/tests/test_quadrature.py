import math

import numpy as np
import pytest
from numpy.polynomial import hermite as nph
from numpy.polynomial import legendre as npl

from hermortho.errors import ConvergenceError, NonFiniteInput
from hermortho.hermite import hermite_eval, psi_normalized
from hermortho.orthogonality import KernelSpec, kernel_integrand
from hermortho.quadrature import (
    Family,
    gauss_hermite,
    gauss_legendre,
    integrate,
    integrate_doubling,
    integrate_with_error,
)
from hermortho.roots import hermite_zeros


def test_legendre_small_rules():
    r1 = gauss_legendre(1)
    assert r1.family is Family.LEGENDRE
    assert list(r1.nodes) == [0.0] and list(r1.weights) == [2.0]
    r2 = gauss_legendre(2)
    np.testing.assert_allclose(r2.nodes, [-1 / math.sqrt(3), 1 / math.sqrt(3)], rtol=1e-15)
    np.testing.assert_allclose(r2.weights, [1.0, 1.0], rtol=1e-15)


def test_legendre_x10():
    val = integrate(gauss_legendre(64), lambda x: x ** 10)
    assert val == pytest.approx(2 / 11, rel=1e-14)


@pytest.mark.parametrize("m", range(1, 41))
def test_legendre_against_numpy(m):
    x, w = npl.leggauss(m)
    r = gauss_legendre(m)
    np.testing.assert_allclose(r.nodes, x, atol=1e-14)
    np.testing.assert_allclose(r.weights, w, rtol=1e-12)


@pytest.mark.parametrize("m", [100, 1000])
def test_legendre_against_mpmath(m):
    # numpy's companion-matrix rule loses digits in the end weights at this size
    mpmath = pytest.importorskip("mpmath")
    r = gauss_legendre(m)
    with mpmath.workdps(40):
        for k in (0, 1, m // 3, m // 2):
            z = mpmath.findroot(lambda t: mpmath.legendre(m, t), mpmath.mpf(r.nodes[k]))
            dp = mpmath.diff(lambda t: mpmath.legendre(m, t), z)
            wt = 2 / ((1 - z * z) * dp * dp)
            assert abs(r.nodes[k] - float(z)) <= 1e-15
            assert abs(r.weights[k] / float(wt) - 1) <= (1e-10 if k < 2 else 1e-13)


@pytest.mark.parametrize("m", [1, 2, 3, 16, 33, 512, 4095, 4096])
def test_legendre_rule_invariants(m):
    r = gauss_legendre(m)
    assert np.all(r.weights > 0)
    assert np.all(np.diff(r.nodes) > 0)
    assert np.max(np.abs(r.nodes + r.nodes[::-1])) <= 1e-14
    assert abs(math.fsum(r.weights) - 2.0) <= 1e-13


def test_rules_are_immutable():
    r = gauss_legendre(8)
    with pytest.raises(ValueError):
        r.nodes[0] = 1.0
    assert gauss_legendre(8) is r


@pytest.mark.parametrize("m", [0, 4097, 2.0])
def test_legendre_bad_count(m):
    with pytest.raises(ValueError):
        gauss_legendre(m)


@pytest.mark.parametrize("m", [2, 8, 32, 64])
def test_legendre_polynomial_exactness(m, rng):
    r = gauss_legendre(m)
    for d in list(rng.integers(0, 2 * m, 10)) + [2 * m - 1, 2 * m - 2]:
        d = int(d)
        val = integrate(r, lambda x: x ** d)
        if d % 2:
            assert abs(val) <= 1e-13 * math.fsum(r.weights * np.abs(r.nodes) ** d)
        else:
            assert val == pytest.approx(2 / (d + 1), rel=1e-13)


def test_hermite_small_rules():
    r1 = gauss_hermite(1)
    assert r1.family is Family.HERMITE
    assert list(r1.nodes) == [0.0]
    assert r1.weights[0] == pytest.approx(1.7724538509055159, rel=1e-15)
    r2 = gauss_hermite(2)
    np.testing.assert_allclose(r2.nodes, [-0.7071067811865476, 0.7071067811865476], rtol=1e-15)
    np.testing.assert_allclose(r2.weights, [math.sqrt(math.pi) / 2] * 2, rtol=1e-15)


def test_hermite_x6():
    assert integrate(gauss_hermite(8), lambda x: x ** 6) == pytest.approx(15 / 8 * math.sqrt(math.pi), rel=1e-13)


@pytest.mark.parametrize("m", [1, 2, 5, 10, 20, 40, 64])
def test_hermite_moments(m):
    r = gauss_hermite(m)
    for k in range(0, m):
        val = integrate(r, lambda x: x ** (2 * k))
        assert val == pytest.approx(math.gamma(k + 0.5), rel=1e-12)


@pytest.mark.parametrize("m", [1, 2, 3, 9, 64, 128, 256])
def test_hermite_rule_invariants(m):
    r = gauss_hermite(m)
    assert np.all(r.weights > 0)
    assert np.all(np.diff(r.nodes) > 0)
    assert np.max(np.abs(r.nodes + r.nodes[::-1])) <= 1e-14 * max(1, np.abs(r.nodes).max())
    assert math.fsum(r.weights) == pytest.approx(math.sqrt(math.pi), rel=1e-12)


@pytest.mark.parametrize("m", [3, 10, 50, 100])
def test_hermite_against_numpy_and_christoffel(m):
    x, w = nph.hermgauss(m)
    r = gauss_hermite(m)
    np.testing.assert_allclose(r.nodes, x, atol=1e-13 * max(1, np.abs(x).max()))
    big = w > 1e-8 * w.max()
    np.testing.assert_allclose(r.weights[big], w[big], rtol=1e-11)
    # Christoffel numbers via orthonormal Hermite functions
    chris = np.exp(-r.nodes ** 2) / (m * psi_normalized(m - 1, r.nodes, n_max=m) ** 2)
    np.testing.assert_allclose(r.weights[big], chris[big], rtol=1e-10)


def test_hermite_bad_count():
    with pytest.raises(ValueError):
        gauss_hermite(257)


def test_integrate_constant():
    assert integrate(gauss_legendre(16), lambda y: 1.0, -3, 3) == pytest.approx(6.0, abs=1e-14)


def test_integrate_gaussian_against_erf():
    ref = math.sqrt(math.pi) * math.erf(2.0)
    assert ref == pytest.approx(1.7641627815248435, rel=1e-15)
    assert abs(integrate(gauss_legendre(48), lambda y: np.exp(-y * y), -2, 2) - ref) <= 1e-12


def test_integrate_odd_symmetric():
    f = lambda y: y ** 3 * np.exp(-y * y) * np.cos(y)
    scale = integrate(gauss_legendre(48), lambda y: np.abs(f(y)), -2, 2)
    assert abs(integrate(gauss_legendre(48), f, -2, 2)) <= 1e-14 * scale


def test_integrate_scalar_only_callable():
    assert integrate(gauss_legendre(10), lambda y: math.cos(y), 0, 1) == pytest.approx(math.sin(1), rel=1e-14)


def test_integrate_errors():
    with pytest.raises(ValueError):
        integrate(gauss_legendre(4), lambda y: y, 1, 1)
    with pytest.raises(NonFiniteInput):
        integrate(gauss_legendre(4), lambda y: np.where(y > 0.5, np.inf, 1.0), 0, 1)


def test_doubling_constant_converges_immediately():
    res = integrate_doubling(lambda y: 3.0 + 0 * y, -1, 2, 1e-12)
    assert res.m == 64
    assert res.value == pytest.approx(9.0, rel=1e-15)
    v, err = integrate_with_error(lambda y: 3.0 + 0 * y, -1, 2, 1e-12)
    assert v == res.value and err >= 0


def test_doubling_h4_squared_against_reference():
    f = lambda y: hermite_eval(4, y) ** 2 * np.exp(-y * y)
    ref = integrate(gauss_legendre(4096), f, -1, 1)
    v, err = integrate_with_error(f, -1, 1, 1e-12)
    assert abs(v - ref) <= 1e-12 * abs(ref)


def test_doubling_reports_nonconvergence():
    with pytest.raises(ConvergenceError) as info:
        integrate_with_error(lambda y: np.sqrt(np.abs(y)), -1, 1, 1e-15)
    assert info.value.value is not None and info.value.estimate > 0


def test_doubling_bad_arguments():
    with pytest.raises(ValueError):
        integrate_with_error(lambda y: y, 1, 0, 1e-12)
    with pytest.raises(ValueError):
        integrate_with_error(lambda y: y, 0, 1, 0.0)


def _random_specs(rng, count):
    specs = []
    for _ in range(count):
        n = int(rng.integers(4, 13))
        z = hermite_zeros(n).zeros
        i, j = rng.choice(n, 2, replace=False)
        specs.append(KernelSpec(n, z[i], z[j], float(rng.choice([0.5, 1, 2, 5])), str(rng.choice(["full", "half"]))))
    return specs


def test_kernel_family_converges_by_256(rng):
    for spec in _random_specs(rng, 60):
        lo, hi = spec.bounds
        res = integrate_doubling(lambda y: kernel_integrand(spec, y), lo, hi, 1e-12, l1_relative=True)
        assert res.m <= 256


def test_error_estimate_is_conservative(rng):
    specs = _random_specs(rng, 80)
    hits = 0
    for spec in specs:
        lo, hi = spec.bounds
        f = lambda y: kernel_integrand(spec, y)
        res = integrate_doubling(f, lo, hi, 1e-12, l1_relative=True)
        ref = integrate(gauss_legendre(4096), f, lo, hi)
        hits += abs(res.value - ref) <= res.error
    assert hits >= 0.95 * len(specs)
