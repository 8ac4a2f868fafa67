import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from kitaev_dst.hamiltonian import count_wrinkles, free_band, momentum_coupling, pbc_gap_profile
from kitaev_dst.model import ChainParams
from kitaev_dst.perturbation import (
    correction_sum,
    effective_hopping,
    effective_spectrum,
    third_order_spectrum,
    zero_mode_mu_predictions,
)


def second_order_oracle(c):
    """Rayleigh-Schroedinger second order read off the matrix entries."""
    M = momentum_coupling(c).entries
    E = np.diag(M).copy()
    K = M - np.diag(E)
    out = E.copy()
    for i in range(c.L):
        for j in range(c.L):
            if K[i, j] != 0.0:
                out[i] += K[i, j] * K[j, i] / (E[i] - E[j])
    return out


def test_two_sites():
    c = ChainParams(2, 1.0, 0.5, 0.0)
    e = third_order_spectrum(c).energies
    assert e[0] == pytest.approx(-0.875)
    assert e[1] == pytest.approx(0.875)
    assert third_order_spectrum(c, correction_sign=-1).energies[0] == pytest.approx(-1.125)


@pytest.mark.parametrize("L,t,delta,mu", [(2, 1.0, 0.5, 0.0), (7, 1.0, 0.2, 0.0), (20, 0.8, 0.1, 0.3), (51, 1.0, 0.35, 0.0)])
def test_matches_generic_second_order(L, t, delta, mu):
    np.testing.assert_allclose(third_order_spectrum(ChainParams(L, t, delta, mu)).energies,
                               second_order_oracle(ChainParams(L, t, delta, mu)), rtol=1e-10, atol=1e-12)


@pytest.mark.parametrize("L", [1, 2, 3, 8, 25, 51, 100])
def test_correction_sum_collapses_to_band_cosine(L):
    C = np.cos(np.pi * np.arange(1, L + 1) / (L + 1))
    np.testing.assert_allclose(8 / (L + 1) ** 2 * correction_sum(L), C, atol=1e-10)


def test_effective_hopping_examples():
    assert effective_hopping(1.0, 0.35) == pytest.approx(0.93875)
    assert effective_hopping(1.0, 0.35, coefficient=2) == pytest.approx(0.755)
    assert effective_hopping(1.0, 0.0) == 1.0
    with pytest.raises(ValueError):
        effective_hopping(0.0, 0.1)


def test_requires_positive_hopping():
    with pytest.raises(ValueError):
        third_order_spectrum(ChainParams(4, 0.0, 0.5, 0.0))
    with pytest.raises(ValueError):
        effective_spectrum(ChainParams(4, 0.0, 0.5, 0.0))
    with pytest.raises(ValueError):
        third_order_spectrum(ChainParams(4, 1.0, 0.5, 0.0), correction_sign=2)


@settings(max_examples=40, deadline=None)
@given(L=st.integers(1, 60), t=st.floats(0.1, 2.0), delta=st.floats(0.0, 0.5), mu=st.floats(-1, 1))
def test_third_order_equals_effective_band(L, t, delta, mu):
    c = ChainParams(L, t, delta, mu)
    np.testing.assert_allclose(third_order_spectrum(c).energies, effective_spectrum(c).energies, atol=1e-9)


@settings(max_examples=40, deadline=None)
@given(L=st.integers(1, 60), t=st.floats(0.1, 2.0), delta=st.floats(0.0, 0.5))
def test_mirror_symmetry_at_zero_mu(L, t, delta):
    e = third_order_spectrum(ChainParams(L, t, delta, 0.0)).energies
    np.testing.assert_allclose(e, -e[::-1], atol=1e-9)


@settings(max_examples=40, deadline=None)
@given(L=st.integers(1, 40), t=st.floats(0.1, 2.0), delta=st.floats(0.01, 0.5), k=st.floats(0.1, 3.0))
def test_correction_scales_quadratically(L, t, delta, k):
    a = ChainParams(L, t, delta, 0.0)
    b = ChainParams(L, t, k * delta, 0.0)
    da = third_order_spectrum(a).energies - free_band(a)
    db = third_order_spectrum(b).energies - free_band(b)
    np.testing.assert_allclose(db, k**2 * da, rtol=1e-9, atol=1e-12)


@settings(max_examples=30, deadline=None)
@given(L=st.integers(1, 40), mu=st.floats(-2, 2))
def test_mu_only_shifts(L, mu):
    base = third_order_spectrum(ChainParams(L, 1.0, 0.3, 0.0)).energies
    np.testing.assert_allclose(third_order_spectrum(ChainParams(L, 1.0, 0.3, mu)).energies, base - mu, atol=1e-12)


def _max_deviation(delta):
    c = ChainParams(51, 1.0, delta, 0.0)
    exact = np.sort(np.linalg.eigvals(momentum_coupling(c).entries).real)
    return np.abs(np.sort(third_order_spectrum(c).energies) - exact).max()


def test_error_shrinks_as_fourth_power():
    ratio = _max_deviation(0.2) / _max_deviation(0.1)
    assert 12 <= ratio <= 20


def test_literal_sign_is_worse():
    c = ChainParams(51, 1.0, 0.35, 0.0)
    exact = np.sort(np.linalg.eigvals(momentum_coupling(c).entries).real)
    literal = np.abs(np.sort(third_order_spectrum(c, correction_sign=-1).energies) - exact).max()
    assert literal > 10 * _max_deviation(0.35)


def test_zero_mode_mu_predictions_examples():
    np.testing.assert_allclose(zero_mode_mu_predictions(1, 1.0), [0.0])
    np.testing.assert_allclose(zero_mode_mu_predictions(2, 1.0), [-1.0, 1.0])
    roots = zero_mode_mu_predictions(3, 0.5)
    np.testing.assert_allclose(roots, [-np.sqrt(0.5), 0.0, np.sqrt(0.5)])
    assert roots[1] == 0.0
    with pytest.raises(ValueError):
        zero_mode_mu_predictions(3, 0.0)


def test_predictions_are_exact_zero_modes_of_weak_pairing_chain():
    t, delta, L = 1.0, 0.2, 51
    for mu in zero_mode_mu_predictions(L, np.sqrt(t**2 - delta**2)):
        d0 = np.linalg.svd(momentum_coupling(ChainParams(L, t, delta, mu)).entries, compute_uv=False)[-1]
        assert d0 < 1e-10


def test_predictions_close_to_gap_minima():
    t, delta, L = 1.0, 0.2, 51
    roots = zero_mode_mu_predictions(L, effective_hopping(t, delta))
    for mu in roots[[0, 10, 25, 40, 50]]:
        d0 = np.linalg.svd(momentum_coupling(ChainParams(L, t, delta, mu)).entries, compute_uv=False)[-1]
        assert d0 < 1e-3
    profile = pbc_gap_profile(ChainParams(L, t, delta, 0.0), np.linspace(-3, 3, 601))
    assert count_wrinkles(profile[:, 1]) > 0
