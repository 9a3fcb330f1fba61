import math

import numpy as np
import pytest

from coxeter_spectra.partitions import conjugate, theta_ratio
from coxeter_spectra.spectra import (
    SpectralCheckError,
    assemble_matrix,
    derive_seed,
    empirical_moment,
    expected_moment,
    histogram_edges,
    ks_distance,
    mix64,
    monte_carlo,
    normal_cdf,
    sample_coefficients,
    spectrum,
    standard_normals,
    uniforms,
)


def test_mix64_reference_value():
    # first output of SplitMix64 seeded with 0
    assert mix64(0x9E3779B97F4A7C15) == 0xE220A8397B1DCDAF


def test_uniform_array_matches_scalar_mixer():
    u = uniforms(12345, 3, 4)
    want = [(mix64(12345 + (i + 1) * 0x9E3779B97F4A7C15) >> 11) * 2.0**-53 for i in range(3, 7)]
    np.testing.assert_array_equal(u, want)


def test_streams_are_deterministic():
    a = standard_normals(7, 1001)
    np.testing.assert_array_equal(a, standard_normals(7, 1001))
    assert len(a) == 1001
    np.testing.assert_array_equal(standard_normals(7, 10), a[:10])
    assert not np.array_equal(standard_normals(8, 10), a[:10])
    assert derive_seed(7, 0) != derive_seed(7, 1)


def test_normal_calibration():
    z = standard_normals(20261019, 1_000_000)
    assert abs(z.mean()) < 4 / 1000
    assert abs(z.var() - 1) < 4 / 1000
    assert ks_distance(z[:100_000]) <= 0.01


def test_uniform_calibration():
    u = uniforms(99, 0, 100_000)
    assert u.min() >= 0 and u.max() < 1
    assert ks_distance(u, cdf=lambda x: x) <= 0.01


def test_ks_distance_exact_small():
    assert ks_distance([0.0]) == pytest.approx(0.5)
    assert ks_distance([0.5], cdf=lambda x: x) == pytest.approx(0.5)
    with pytest.raises(ValueError):
        ks_distance([])
    assert normal_cdf(0.0) == 0.5


def test_histogram_edges():
    e = histogram_edges(9)
    assert len(e) == 12 and e[0] == -np.inf and e[-1] == np.inf
    assert e[1] == -4.5 and e[-2] == 4.5


def test_sample_coefficients():
    d = sample_coefficients(5, 3)
    assert d.coefficients.shape == (4,)
    assert d.scaled_sum == pytest.approx(d.coefficients.sum() / 2)
    with pytest.raises(ValueError):
        sample_coefficients(1, 3)


@pytest.mark.parametrize("n", [2, 5, 9])
def test_one_dimensional_shapes(n):
    d = sample_coefficients(n, 11)
    row = spectrum(assemble_matrix((n,), d)).eigenvalues
    col = spectrum(assemble_matrix((1,) * n, d)).eigenvalues
    assert row == pytest.approx([d.scaled_sum], abs=1e-14)
    assert col == pytest.approx([-d.scaled_sum], abs=1e-14)


def test_two_one_eigenvalues():
    for seed in range(5):
        d = sample_coefficients(3, seed)
        z1, z2 = d.coefficients
        r = math.sqrt((z1 * z1 + z2 * z2 - z1 * z2) / 2)
        ev = spectrum(assemble_matrix((2, 1), d)).eigenvalues
        np.testing.assert_allclose(ev, [-r, r], atol=1e-14)


def test_draw_must_match_shape():
    with pytest.raises(ValueError):
        assemble_matrix((3, 1), sample_coefficients(5, 0))


@pytest.mark.parametrize("lam", [(3, 2, 1), (4, 2, 1), (3, 3, 1, 1)])
def test_exact_spectral_identities(lam):
    theta = float(theta_ratio(lam))
    for seed in range(10):
        d = sample_coefficients(sum(lam), seed)
        m = assemble_matrix(lam, d)
        np.testing.assert_allclose(m.entries, m.entries.T, atol=0)
        xi = spectrum(m)
        assert abs(empirical_moment(xi, 1) - theta * d.scaled_sum) <= 1e-9 * m.scale
        assert xi.trace_residual <= 1e-8 * m.scale
        assert xi.frobenius_residual <= 1e-8 * m.scale
        m1, m2, m4 = (empirical_moment(xi, s) for s in (1, 2, 4))
        assert m2 >= m1 * m1 and m4 >= m2 * m2
        conj = spectrum(assemble_matrix(conjugate(lam), d)).eigenvalues
        np.testing.assert_allclose(conj, -xi.eigenvalues[::-1], atol=1e-8 * m.scale)


def test_spectral_check_raises():
    m = assemble_matrix((3, 1), sample_coefficients(4, 1))
    with pytest.raises(SpectralCheckError):
        spectrum(m, tol=-1.0)


def test_expected_moment_small_cases():
    assert expected_moment((4, 2, 1), 1) == 0.0
    assert expected_moment((4, 2, 1), 2) == pytest.approx(1.0, abs=1e-12)
    assert expected_moment((5,), 4) == pytest.approx(3.0, abs=1e-12)
    # (2,1): M^2 = (Z1^2 + Z2^2 - Z1 Z2)/2 times the identity
    assert expected_moment((2, 1), 4) == pytest.approx(9 / 4, abs=1e-12)
    assert expected_moment((6, 5, 4, 3, 2, 1), 8) is None


def test_monte_carlo_report():
    rep = monte_carlo((3, 2, 1), 40, seed=5, smax=4, bins=21)
    assert rep.per_trial.shape == (40, 5)
    assert rep.pooled.shape == (40 * 16,)
    assert rep.hist_mass.sum() == pytest.approx(1.0)
    assert len(rep.hist_mass) == 23
    assert rep.theta == 0.0
    est, se = rep.moment(2)
    assert abs(est - 1.0) <= 4 * se
    assert max(rep.residuals.values()) <= 1e-8
    again = monte_carlo((3, 2, 1), 40, seed=5, smax=4, bins=21, workers=3)
    np.testing.assert_array_equal(rep.per_trial, again.per_trial)
    np.testing.assert_array_equal(rep.pooled, again.pooled)


def test_monte_carlo_trials_are_prefix_stable():
    a = monte_carlo((3, 1), 5, seed=2)
    b = monte_carlo((3, 1), 8, seed=2)
    np.testing.assert_array_equal(a.per_trial, b.per_trial[:5])


def test_monte_carlo_argument_checks():
    with pytest.raises(ValueError):
        monte_carlo((3, 1), 0, seed=1)
    with pytest.raises(ValueError):
        monte_carlo((3, 1), 3, seed=1, smax=1)
