"""Kraus channels, Werner-pair algebra, and the decay law."""

import numpy as np
import pytest
from util import random_density

from qsimlink import (
    DecayParams,
    KrausChannel,
    apply_channel,
    basis_state,
    bell_pair,
    decay_fidelity,
    density_from_mixture,
    fidelity,
    gate_matrix,
    standard_channel,
    werner_from_fidelity,
    werner_from_p,
)

# 1/4 + 3/4 * exp(-1), evaluated independently at 40 digits.
DECAY_AT_TAU = 0.5259095808785817


class TestWernerFromP:
    def test_p_one_is_pure_bell(self):
        rho = werner_from_p(1.0)
        phi = bell_pair().amplitudes
        np.testing.assert_allclose(rho.matrix, np.outer(phi, phi.conj()), atol=1e-15)

    def test_p_zero_is_maximally_mixed(self):
        np.testing.assert_allclose(werner_from_p(0.0).matrix, np.eye(4) / 4, atol=1e-15)

    def test_point_six_has_fidelity_point_seven(self):
        assert abs(fidelity(werner_from_p(0.6), bell_pair()) - 0.7) < 1e-12

    def test_fidelity_law_on_grid(self):
        phi = bell_pair()
        for p in np.linspace(0.0, 1.0, 101):
            f = fidelity(werner_from_p(float(p)), phi)
            assert abs(f - (3.0 * p + 1.0) / 4.0) < 1e-12

    def test_out_of_range_rejected(self):
        for p in (-0.01, 1.01):
            with pytest.raises(ValueError):
                werner_from_p(p)


class TestWernerFromFidelity:
    def test_f_one_is_pure_bell(self):
        np.testing.assert_allclose(
            werner_from_fidelity(1.0).matrix, werner_from_p(1.0).matrix, atol=1e-15
        )

    def test_f_quarter_is_maximally_mixed(self):
        np.testing.assert_allclose(
            werner_from_fidelity(0.25).matrix, np.eye(4) / 4, atol=1e-15
        )

    @pytest.mark.parametrize("p", [0.0, 0.3, 0.7, 1.0])
    def test_round_trip_through_fidelity(self, p):
        rho = werner_from_p(p)
        back = werner_from_fidelity(fidelity(rho, bell_pair()))
        np.testing.assert_allclose(back.matrix, rho.matrix, atol=1e-12)

    def test_constructed_fidelity_matches_request(self):
        phi = bell_pair()
        for f in (0.25, 0.4, 0.77, 1.0):
            assert abs(fidelity(werner_from_fidelity(f), phi) - f) < 1e-12

    def test_trace_identity(self):
        for f in np.linspace(0.25, 1.0, 31):
            rho = werner_from_fidelity(float(f))
            assert abs(np.trace(rho.matrix).real - 1.0) < 1e-12

    def test_out_of_range_rejected(self):
        for f in (0.2, 1.1):
            with pytest.raises(ValueError):
                werner_from_fidelity(f)


class TestDecayFidelity:
    def test_zero_interval_is_identity(self):
        for f in (0.25, 0.6, 1.0):
            assert decay_fidelity(f, 0.0, 2.0) == f

    def test_fixed_point_at_quarter(self):
        for dt in (0.1, 1.0, 100.0):
            assert decay_fidelity(0.25, dt, 3.0) == 0.25

    def test_value_at_one_time_constant(self):
        assert abs(decay_fidelity(1.0, 1.0, 1.0) - DECAY_AT_TAU) < 1e-12

    def test_semigroup_property(self):
        rng = np.random.default_rng(81)
        for _ in range(100):
            f = float(rng.uniform(0.25, 1.0))
            a, b = rng.uniform(0.0, 5.0, size=2)
            tau = float(rng.uniform(0.1, 10.0))
            two_step = decay_fidelity(decay_fidelity(f, a, tau), b, tau)
            one_step = decay_fidelity(f, a + b, tau)
            assert abs(two_step - one_step) < 1e-12

    def test_strictly_decreasing_towards_quarter(self):
        values = [decay_fidelity(0.9, dt, 1.0) for dt in (0.0, 0.5, 1.0, 5.0, 50.0)]
        assert all(a > b for a, b in zip(values, values[1:]))
        assert abs(values[-1] - 0.25) < 1e-12

    def test_domain_violations(self):
        with pytest.raises(ValueError):
            decay_fidelity(0.2, 1.0, 1.0)
        with pytest.raises(ValueError):
            decay_fidelity(0.5, -1.0, 1.0)
        with pytest.raises(ValueError):
            decay_fidelity(0.5, 1.0, 0.0)


class TestDecayParams:
    def test_step_applies_decay(self):
        params = DecayParams(tau=1.0, delta_t=1.0)
        assert abs(params.step(1.0) - DECAY_AT_TAU) < 1e-12

    def test_validation(self):
        with pytest.raises(ValueError):
            DecayParams(tau=0.0, delta_t=1.0)
        with pytest.raises(ValueError):
            DecayParams(tau=1.0, delta_t=-1.0)


CHANNEL_NAMES = (
    "amplitude_damping",
    "phase_damping",
    "bit_flip",
    "phase_flip",
    "depolarizing",
)


class TestStandardChannels:
    @pytest.mark.parametrize("name", CHANNEL_NAMES)
    def test_completeness(self, name):
        for param in (0.0, 0.3, 1.0):
            ch = standard_channel(name, param)
            total = sum(k.conj().T @ k for k in ch.kraus_ops)
            assert np.max(np.abs(total - np.eye(2))) < 1e-12

    @pytest.mark.parametrize("name", CHANNEL_NAMES)
    def test_zero_parameter_is_identity_channel(self, name):
        rng = np.random.default_rng(82)
        ch = standard_channel(name, 0.0)
        rho = random_density(rng, 1)
        out = apply_channel(rho, ch, 0)
        np.testing.assert_allclose(out.matrix, rho.matrix, atol=1e-12)

    def test_full_amplitude_damping_resets_to_ground(self):
        ch = standard_channel("amplitude_damping", 1.0)
        rho = density_from_mixture([(1.0, basis_state(1, 1))])
        out = apply_channel(rho, ch, 0)
        np.testing.assert_allclose(out.matrix, np.diag([1.0, 0.0]), atol=1e-12)

    def test_full_bit_flip_swaps_populations(self):
        ch = standard_channel("bit_flip", 1.0)
        rho = density_from_mixture([(1.0, basis_state(1, 0))])
        out = apply_channel(rho, ch, 0)
        np.testing.assert_allclose(out.matrix, np.diag([0.0, 1.0]), atol=1e-12)

    def test_depolarizing_fidelity_law(self):
        rng = np.random.default_rng(83)
        psi = density_from_mixture([(1.0, basis_state(1, 0))])
        for q in (0.0, 0.2, 0.5, 1.0):
            out = apply_channel(psi, standard_channel("depolarizing", q), 0)
            f = fidelity(out, basis_state(1, 0))
            assert abs(f - (1.0 - q / 2.0)) < 1e-12
        # also against the explicit (1-q) rho + q I/2 form on a random state
        rho = random_density(rng, 1)
        q = 0.37
        out = apply_channel(rho, standard_channel("depolarizing", q), 0)
        np.testing.assert_allclose(
            out.matrix, (1 - q) * rho.matrix + q * np.eye(2) / 2, atol=1e-12
        )

    def test_unknown_name_rejected(self):
        with pytest.raises(ValueError):
            standard_channel("thermal", 0.1)

    def test_parameter_range_checked(self):
        with pytest.raises(ValueError):
            standard_channel("bit_flip", 1.5)


class TestKrausChannel:
    def test_incomplete_set_rejected(self):
        with pytest.raises(ValueError):
            KrausChannel("broken", (np.eye(2) * 0.5,), {})

    def test_channels_preserve_invariants(self):
        rng = np.random.default_rng(84)
        for _ in range(25):
            name = CHANNEL_NAMES[rng.integers(len(CHANNEL_NAMES))]
            ch = standard_channel(name, float(rng.uniform(0, 1)))
            n = int(rng.integers(1, 3))
            rho = random_density(rng, n)
            out = apply_channel(rho, ch, int(rng.integers(n)))
            # DensityMatrix constructor re-checks Hermiticity/trace/PSD.
            assert out.n_qubits == n

    def test_single_qubit_channel_targets_correct_qubit(self):
        # bit flip on qubit 1 of |00><00| should give |01><01|
        rho = density_from_mixture([(1.0, basis_state(2, 0))])
        out = apply_channel(rho, standard_channel("bit_flip", 1.0), 1)
        expected = np.zeros((4, 4))
        expected[1, 1] = 1.0
        np.testing.assert_allclose(out.matrix, expected, atol=1e-12)

    def test_two_qubit_channel_applies_to_whole_pair(self):
        xx = np.kron(gate_matrix("X"), gate_matrix("X"))
        ch = KrausChannel(
            "correlated_flip",
            (np.sqrt(0.3) * np.eye(4), np.sqrt(0.7) * xx),
            {"f": 0.7},
        )
        rho = density_from_mixture([(1.0, basis_state(2, 0))])
        out = apply_channel(rho, ch, 0)
        np.testing.assert_allclose(
            np.diag(out.matrix).real, [0.3, 0, 0, 0.7], atol=1e-12
        )

    def test_two_qubit_channel_requires_two_qubit_state(self):
        xx = np.kron(gate_matrix("X"), gate_matrix("X"))
        ch = KrausChannel("xx", (xx,), {})
        rho = density_from_mixture([(1.0, basis_state(1, 0))])
        with pytest.raises(ValueError):
            apply_channel(rho, ch, 0)

    def test_target_out_of_range(self):
        rho = density_from_mixture([(1.0, basis_state(1, 0))])
        with pytest.raises(ValueError):
            apply_channel(rho, standard_channel("bit_flip", 0.5), 1)
