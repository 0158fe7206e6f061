import math

import numpy as np
import pytest

import corrchan as cc


def test_catalog_and_sparse_elements():
    labels = cc.catalog_labels()
    assert len(labels) == 16
    names = cc.sparse_element_names()
    assert len(names) == 16
    pxx = cc.sparse_element("Pxx")
    assert pxx.shape == (4, 4)
    assert pxx[1, 1] == 1.0
    assert np.count_nonzero(pxx) == 1


def test_decomposition_reconstructs_sparse_element():
    for name in ("Pxx", "Pxy", "P00", "Pzz"):
        weights, residual = cc.decompose_weights(cc.sparse_element(name))
        assert weights.shape == (16,)
        assert residual < 1e-10
        # Every sparse element uses only half and quarter weights.
        used = np.abs(weights[np.abs(weights) > 1e-12])
        assert np.all((np.abs(used - 0.5) < 1e-12) | (np.abs(used - 0.25) < 1e-12))


def test_cptp_classification():
    report = cc.cptp_check(cc.robust_channel_matrix(0.0, 1))
    assert report["hermitian"]
    assert report["positive"]
    assert report["trace_preserving"]
    bad = cc.cptp_check(cc.sparse_element("Pxy"))
    assert not bad["trace_preserving"]


def test_simulated_signal_matches_exact_formula():
    p = cc.ExperimentParams()
    p.delta_t = 1e-4
    for tau in (0.0, 1e-5, 4e-5):
        sim = cc.second_order_signal(p, tau)
        exact = cc.exact_second_order(p.delta_t, tau, p)
        assert sim == pytest.approx(exact, abs=1e-12)


def test_correlation_matches_closed_form():
    p = cc.ExperimentParams()
    for tau in (0.0, 1e-5, 3e-5):
        direct = cc.correlation("+-", [0.0, tau], p)
        closed = cc.analytic_C_plus_minus(tau, p)
        assert direct == pytest.approx(closed, rel=1e-12, abs=1e-9)
    # A leading commutator traces to zero for any bath state.
    assert cc.correlation("-+", [0.0, 1e-5], p) == pytest.approx(0.0, abs=1e-9)


def test_power_law_of_signal_scaling():
    p = cc.ExperimentParams()
    dts = [1e-4 * 1.3**i for i in range(6)]
    sig = []
    for dt in dts:
        p.delta_t = dt
        sig.append(cc.second_order_signal(p, 1e-5))
    k = cc.fit_power_law_exponent(dts, sig)
    assert abs(k - 2.0) < 0.05


def test_optimal_window_is_sub_millisecond():
    dt2 = cc.optimal_window(2)
    dt4 = cc.optimal_window(4)
    assert 1e-4 < dt2 < 1e-3
    assert 1e-4 < dt4 < 1e-3


def test_spectral_peaks_of_on_bin_cosine():
    n, step = 32, 2e-6
    f = 3 / (n * step)
    t = np.arange(n) * step
    grid = np.cos(2 * math.pi * f * t)[:, None] * np.cos(2 * math.pi * f * t)[None, :]
    peaks = cc.spectral_peaks(grid, step)
    fx, fy, _ = peaks[0]
    assert abs(abs(fx) - f) < 1 / (n * step)
    assert abs(abs(fy) - f) < 1 / (n * step)
