"""Encodings and the superdense-coding protocol."""

import math

import numpy as np
import pytest

from qsimlink import (
    Circuit,
    ClassicalVector,
    Gate,
    amplitude_encode,
    basis_encode,
    bell_pair,
    density_from_mixture,
    fidelity,
    ghz,
    mixed_state_demo,
    basis_state,
    strong_simulate,
    superdense_send,
    superdense_success_probability,
    superdense_trials,
    werner_from_fidelity,
)


class TestBasisEncode:
    def test_zero(self):
        np.testing.assert_allclose(basis_encode("0").amplitudes, [1, 0], atol=1e-15)

    def test_one_one(self):
        amps = basis_encode("11").amplitudes
        assert amps[3] == 1.0
        assert np.count_nonzero(amps) == 1

    def test_paper_bitstring(self):
        amps = basis_encode("010").amplitudes
        assert amps[2] == 1.0
        assert np.count_nonzero(amps) == 1

    def test_strong_simulation_reads_back_bits(self):
        bits = "101"
        # prepare |101> with X gates and compare distributions
        gates = tuple(Gate("X", (i,)) for i, b in enumerate(bits) if b == "1")
        dist = strong_simulate(Circuit(len(bits), gates))
        np.testing.assert_allclose(
            dist.probabilities, basis_encode(bits).probabilities(), atol=1e-12
        )
        assert abs(dist.probabilities[int(bits, 2)] - 1.0) < 1e-12

    def test_invalid_strings_rejected(self):
        for bad in ("", "012", "ab"):
            with pytest.raises(ValueError):
                basis_encode(bad)


class TestAmplitudeEncode:
    def test_three_four_five_example(self):
        sv = amplitude_encode([3 / 5, 4 / 5], normalize=False)
        np.testing.assert_allclose(sv.amplitudes, [0.6, 0.8], atol=1e-12)
        np.testing.assert_allclose(sv.probabilities(), [0.36, 0.64], atol=1e-12)

    def test_unit_vector(self):
        np.testing.assert_allclose(
            amplitude_encode([1.0, 0.0]).amplitudes, [1, 0], atol=1e-15
        )

    def test_uniform_four_vector(self):
        sv = amplitude_encode([1.0, 1.0, 1.0, 1.0], normalize=True)
        np.testing.assert_allclose(sv.probabilities(), np.full(4, 0.25), atol=1e-12)

    def test_norm_always_one(self):
        rng = np.random.default_rng(91)
        for _ in range(20):
            n = 2 ** int(rng.integers(1, 5))
            sv = amplitude_encode(rng.normal(size=n) + 1j * rng.normal(size=n))
            assert abs(np.linalg.norm(sv.amplitudes) - 1.0) < 1e-9

    def test_non_power_of_two_rejected(self):
        with pytest.raises(ValueError):
            amplitude_encode([1.0, 0.0, 0.0])
        with pytest.raises(ValueError):
            amplitude_encode([1.0])

    def test_unnormalized_without_flag_rejected(self):
        with pytest.raises(ValueError):
            amplitude_encode([1.0, 1.0], normalize=False)

    def test_zero_vector_rejected(self):
        with pytest.raises(ValueError):
            amplitude_encode([0.0, 0.0])

    def test_classical_vector_wrapper(self):
        vec = ClassicalVector([3.0, 4.0])
        assert abs(vec.norm - 5.0) < 1e-12
        sv = amplitude_encode(vec)
        np.testing.assert_allclose(sv.amplitudes, [0.6, 0.8], atol=1e-12)


class TestEntangledStates:
    def test_bell_pair_vector(self):
        inv = 1.0 / math.sqrt(2.0)
        np.testing.assert_allclose(bell_pair().amplitudes, [inv, 0, 0, inv], atol=1e-15)

    def test_ghz_three(self):
        amps = ghz(3).amplitudes
        inv = 1.0 / math.sqrt(2.0)
        assert abs(amps[0] - inv) < 1e-15 and abs(amps[7] - inv) < 1e-15
        assert np.all(amps[1:7] == 0)

    def test_ghz_two_is_bell(self):
        assert ghz(2) == bell_pair()

    def test_ghz_needs_two_qubits(self):
        with pytest.raises(ValueError):
            ghz(1)


ALL_MESSAGES = [(0, 0), (0, 1), (1, 0), (1, 1)]


class TestSuperdense:
    @pytest.mark.parametrize("message", ALL_MESSAGES)
    def test_perfect_pair_decodes_exactly(self, message):
        pair = werner_from_fidelity(1.0)
        result = superdense_send(*message, pair)
        assert result.decoded_bits == message
        assert result.success
        assert abs(result.channel_fidelity - 1.0) < 1e-12
        assert abs(superdense_success_probability(*message, pair) - 1.0) < 1e-12

    @pytest.mark.parametrize("f", [0.25, 0.5, 0.7, 1.0])
    def test_werner_success_probability_equals_fidelity(self, f):
        pair = werner_from_fidelity(f)
        for message in ALL_MESSAGES:
            p = superdense_success_probability(*message, pair)
            assert abs(p - f) < 1e-12

    def test_empirical_rate_tracks_analytic(self):
        f, trials = 0.7, 100000
        pair = werner_from_fidelity(f)
        rate = superdense_trials(1, 0, pair, trials, seed=5)
        assert abs(rate - f) < 3 * math.sqrt(f * (1 - f) / trials)

    def test_trials_deterministic_per_seed(self):
        pair = werner_from_fidelity(0.5)
        assert superdense_trials(0, 1, pair, 5000, seed=9) == superdense_trials(
            0, 1, pair, 5000, seed=9
        )

    def test_bad_bits_rejected(self):
        with pytest.raises(ValueError):
            superdense_send(2, 0, werner_from_fidelity(1.0))

    def test_pair_must_be_two_qubits(self):
        rho = density_from_mixture([(1.0, basis_state(1, 0))])
        with pytest.raises(ValueError):
            superdense_send(0, 0, rho)

    def test_trials_validation(self):
        with pytest.raises(ValueError):
            superdense_trials(0, 0, werner_from_fidelity(1.0), 0)


class TestMixedStateDemo:
    def test_trace_one(self):
        assert abs(np.trace(mixed_state_demo().matrix) - 1.0) < 1e-12

    def test_fidelity_with_one(self):
        assert abs(fidelity(mixed_state_demo(), basis_state(1, 1)) - 2 / 3) < 1e-12

    def test_matrix_matches_mixture(self):
        np.testing.assert_allclose(
            mixed_state_demo().matrix, np.diag([1 / 3, 2 / 3]), atol=1e-15
        )
