import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import prolate as P
from conftest import LAM0, LAM3


# ---------------------------------------------------------------------------
# Quadrature rule


def test_rule_order_one_is_midpoint():
    rule = P.gauss_legendre_rule(1)
    assert rule.nodes == pytest.approx([0.0], abs=1e-15)
    assert rule.weights == pytest.approx([2.0], abs=1e-15)


def test_rule_order_two_nodes():
    rule = P.gauss_legendre_rule(2)
    assert rule.nodes == pytest.approx([-1 / math.sqrt(3), 1 / math.sqrt(3)], abs=1e-15)
    assert rule.weights == pytest.approx([1.0, 1.0], abs=1e-15)


@pytest.mark.parametrize("order", [1, 2, 3, 5, 8, 11, 40])
def test_rule_invariants(order):
    rule = P.gauss_legendre_rule(order)
    assert abs(rule.weights.sum() - 2.0) < 1e-13
    assert np.all(rule.weights > 0)
    assert np.all(np.diff(rule.nodes) > 0)
    assert np.all(np.abs(rule.nodes) < 1.0)
    assert np.allclose(rule.nodes, -rule.nodes[::-1], atol=1e-12)


@settings(max_examples=60, deadline=None)
@given(
    order=st.integers(min_value=1, max_value=10),
    coeffs=st.lists(st.floats(-1, 1, allow_nan=False), min_size=1, max_size=8),
)
def test_rule_integrates_polynomials_exactly(order, coeffs):
    # Degree at most 2*order - 1 must integrate exactly.
    coeffs = coeffs[: 2 * order]
    rule = P.gauss_legendre_rule(order)
    values = np.polynomial.polynomial.polyval(rule.nodes, coeffs)
    exact = sum(
        c * ((1.0 ** (k + 1)) - ((-1.0) ** (k + 1))) / (k + 1) for k, c in enumerate(coeffs)
    )
    assert rule.integrate(values) == pytest.approx(exact, abs=1e-10)


def test_rule_rejects_order_zero():
    with pytest.raises(ValueError):
        P.gauss_legendre_rule(0)


# ---------------------------------------------------------------------------
# Sinc kernel


def test_sinc_diagonal_value():
    assert P.sinc_kernel(2.0, 0.5, 0.5) == pytest.approx(2.0 / math.pi, rel=1e-15)


def test_sinc_zero_of_sine():
    assert P.sinc_kernel(math.pi, 1.0, 0.0) == pytest.approx(0.0, abs=1e-16)


def test_sinc_generic_value():
    assert P.sinc_kernel(1.0, 0.3, -0.2) == pytest.approx(
        math.sin(0.5) / (0.5 * math.pi), rel=1e-15
    )


def test_sinc_symmetric_in_arguments():
    x = np.linspace(-2, 2, 17)
    k = P.sinc_kernel(2.5, x[:, None], x[None, :])
    assert np.allclose(k, k.T, atol=1e-16)


@settings(max_examples=50, deadline=None)
@given(t=st.floats(0.5e-4, 2e-4), c=st.floats(0.5, 8.0))
def test_sinc_series_matches_quotient_near_switch(t, c):
    # Both evaluation branches agree around the switch-over threshold.
    x = t / c
    series = c / math.pi * (1.0 - t * t / 6.0 + t**4 / 120.0)
    quotient = c / math.pi * math.sin(t) / t
    value = P.sinc_kernel(c, x, 0.0)
    assert value == pytest.approx(series, rel=1e-12)
    assert value == pytest.approx(quotient, rel=1e-12)


def test_sinc_rejects_nonpositive_c():
    with pytest.raises(ValueError):
        P.sinc_kernel(0.0, 0.1, 0.2)


# ---------------------------------------------------------------------------
# Prolate spectrum


def test_small_c_rank_one_limit():
    spec = P.prolate_spectrum(0.01, 1)
    ratio = spec.eigenvalues[0] / (2 * 0.01 / math.pi)
    assert 0.99 <= ratio <= 1.0


def test_lambda0_near_asymptotic_at_c4():
    spec = P.prolate_spectrum(4.0, 1, order=120)
    assert abs(spec.eigenvalues[0] - P.lambda0_asymptotic(4.0)) < 2e-3


def test_refinement_oracle_c1():
    coarse = P.prolate_spectrum(1.0, 4, order=60)
    fine = P.prolate_spectrum(1.0, 4, order=120)
    assert np.abs(coarse.eigenvalues - fine.eigenvalues).max() <= 1e-10


def test_frozen_reference_eigenvalues(spec3):
    assert np.abs(spec3.eigenvalues - LAM3).max() < 1e-12


@pytest.mark.parametrize("c", [0.5, 1.0, 2.0, 4.0, 8.0])
def test_eigenvalues_strictly_inside_unit_interval(c):
    spec = P.prolate_spectrum(c, 5, order=80)
    assert np.all(spec.eigenvalues > 0.0)
    assert np.all(spec.eigenvalues < 1.0 - 1e-12)
    assert np.all(np.diff(spec.eigenvalues) < 0.0)
    if c in LAM0:
        assert spec.eigenvalues[0] == pytest.approx(LAM0[c], abs=1e-12)


def test_trace_bounds_eigenvalue_sum():
    # The operator trace equals 2c/pi, so any partial eigenvalue sum
    # must stay below it.
    spec = P.prolate_spectrum(3.0, 8, order=120)
    assert spec.eigenvalues.sum() <= 2 * 3.0 / math.pi + 1e-8


def test_modes_weighted_orthonormal(spec3):
    w = spec3.rule.weights
    gram = (spec3.modes * w) @ spec3.modes.T
    assert np.abs(gram - np.eye(spec3.n_modes)).max() < 1e-8


def test_mode_parity_alternates(spec3):
    for n in range(spec3.n_modes):
        flipped = spec3.modes[n][::-1]
        assert np.abs(flipped - (-1) ** n * spec3.modes[n]).max() < 1e-8


def test_sign_convention_first_significant_sample_positive(spec3):
    for row in spec3.modes:
        nz = np.flatnonzero(np.abs(row) > 1e-8)
        assert row[nz[0]] > 0


def test_eigenvalues_invariant_under_node_reversal():
    rule = P.gauss_legendre_rule(80)
    direct = np.linalg.eigvalsh(P.nystrom_matrix(3.0, rule.nodes, rule.weights))
    reversed_ = np.linalg.eigvalsh(
        P.nystrom_matrix(3.0, rule.nodes[::-1].copy(), rule.weights[::-1].copy())
    )
    assert np.abs(np.sort(direct)[::-1][:8] - np.sort(reversed_)[::-1][:8]).max() < 1e-12


def test_oversampling_precondition_enforced_and_forceable():
    with pytest.raises(ValueError, match="under-resolves"):
        P.prolate_spectrum(8.0, 2, order=20)
    spec = P.prolate_spectrum(8.0, 2, order=20, force=True)
    assert spec.n_modes == 2


def test_mode_count_validation():
    with pytest.raises(ValueError, match="exceeds"):
        P.prolate_spectrum(1.0, 50, order=40, force=True)
    with pytest.raises(ValueError):
        P.prolate_spectrum(-1.0, 2)
    with pytest.raises(ValueError):
        P.prolate_spectrum(1.0, 0)


def test_noise_floor_guard():
    # Deep plunge eigenvalues at small c sit below 1e-12 and are refused.
    with pytest.raises(ValueError, match="noise floor"):
        P.prolate_spectrum(1.0, 25, order=60)


# ---------------------------------------------------------------------------
# Asymptotics


def test_lambda0_asymptotic_values():
    assert P.lambda0_asymptotic(4.0) == pytest.approx(1 - 8 * math.sqrt(math.pi) * math.e**-8)
    assert 1 - P.lambda0_asymptotic(8.0) == pytest.approx(2.2567e-6, rel=1e-4)
    assert P.lambda0_asymptotic(8.0) > P.lambda0_asymptotic(4.0)
    with pytest.raises(ValueError):
        P.lambda0_asymptotic(0.0)


def test_gap_ratio_trend():
    r = {
        c: P.asymptotic_gap_ratio(c, P.prolate_spectrum(c, 1, order=120).eigenvalues[0])
        for c in (4.0, 8.0)
    }
    assert r[4.0] == pytest.approx(0.86498586128, abs=1e-9)
    assert r[8.0] == pytest.approx(0.941653867189, abs=1e-8)
    assert abs(r[8.0] - 1) < abs(r[4.0] - 1)


# ---------------------------------------------------------------------------
# Bandlimited extension


def test_extension_restricts_to_samples(spec3):
    values = P.pswf_extend(spec3, 0, spec3.rule.nodes)
    assert np.abs(values - spec3.modes[0]).max() < 1e-6


def test_extension_decays_away_from_interval(spec3):
    assert abs(P.pswf_extend(spec3, 0, 5.0)) < abs(P.pswf_extend(spec3, 0, 0.0))


def test_extension_odd_mode_vanishes_at_origin(spec3):
    assert abs(P.pswf_extend(spec3, 1, 0.0)) < 1e-8


def test_extension_scalar_vector_consistency(spec3):
    xs = np.array([-1.7, 0.3, 2.2])
    vec = P.pswf_extend(spec3, 2, xs)
    assert vec == pytest.approx([P.pswf_extend(spec3, 2, float(x)) for x in xs], rel=1e-14)


def test_extension_mode_range_validated(spec3):
    with pytest.raises(ValueError):
        P.pswf_extend(spec3, 6, 0.0)
