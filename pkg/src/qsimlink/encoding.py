"""Classical-to-quantum encodings and the superdense-coding protocol.

Superdense coding conventions: the shared pair has Alice on qubit 0 and Bob
on qubit 1. To send bits (a, b), Alice applies X when a = 1 and then Z when
b = 1 to her qubit. Bob's Bell-basis measurement is realized as CNOT
(control qubit 0) followed by H on qubit 0 and a standard-basis readout
(m0, m1), which decodes as a = m1, b = m0. On a Werner pair of fidelity F
the correct outcome carries probability exactly F.
"""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .circuits import embed_operator, gate_matrix
from .rng import DEFAULT_SEED, STREAM_TRIALS, stream_rng
from .states import DensityMatrix, StateVector, basis_state, density_from_mixture, fidelity


@dataclass(frozen=True)
class ClassicalVector:
    """Real or complex data vector to be loaded into amplitudes."""

    entries: np.ndarray

    def __post_init__(self):
        entries = np.asarray(self.entries, dtype=np.complex128).reshape(-1).copy()
        if entries.size == 0:
            raise ValueError("entries must be nonempty")
        object.__setattr__(self, "entries", entries)

    @cached_property
    def norm(self) -> float:
        return float(np.linalg.norm(self.entries))


@dataclass(frozen=True)
class DenseCodingResult:
    sent_bits: tuple
    decoded_bits: tuple
    success: bool
    channel_fidelity: float

    def __post_init__(self):
        if self.success != (self.sent_bits == self.decoded_bits):
            raise ValueError("success flag inconsistent with bit comparison")


def basis_encode(bits: str) -> StateVector:
    """Map a classical bitstring onto the matching computational basis state."""
    if not bits or any(ch not in "01" for ch in bits):
        raise ValueError(f"bits must be a nonempty 0/1 string, got {bits!r}")
    return basis_state(len(bits), int(bits, 2))


def amplitude_encode(x, normalize: bool = True) -> StateVector:
    """Load a length-2^n vector into state amplitudes.

    With ``normalize`` the entries are scaled to unit norm; otherwise the
    input must already be normalized. Non-power-of-two lengths are rejected
    (no implicit padding).
    """
    vec = x if isinstance(x, ClassicalVector) else ClassicalVector(x)
    n_entries = vec.entries.size
    n_qubits = int(n_entries).bit_length() - 1
    if n_entries < 2 or 2**n_qubits != n_entries:
        raise ValueError(f"length {n_entries} is not a power of two (>= 2)")
    amps = vec.entries
    if normalize:
        if vec.norm == 0.0:
            raise ValueError("cannot normalize the zero vector")
        amps = amps / vec.norm
    elif abs(vec.norm - 1.0) > 1e-9:
        raise ValueError(f"vector norm {vec.norm} is not 1 (pass normalize=True)")
    return StateVector(n_qubits, amps)


def bell_pair() -> StateVector:
    """Maximally entangled pair (|00> + |11>) / sqrt(2)."""
    return ghz(2)


def ghz(n: int) -> StateVector:
    """n-qubit state (|0...0> + |1...1>) / sqrt(2)."""
    if n < 2:
        raise ValueError("GHZ states need at least 2 qubits")
    amps = np.zeros(2**n, dtype=np.complex128)
    amps[0] = amps[-1] = 1.0 / np.sqrt(2.0)
    return StateVector(n, amps)


def mixed_state_demo() -> DensityMatrix:
    """Single-qubit mixture: |0> with probability 1/3, |1> with 2/3."""
    return density_from_mixture(
        [(1.0 / 3.0, basis_state(1, 0)), (2.0 / 3.0, basis_state(1, 1))]
    )


def _check_bits(a: int, b: int):
    if a not in (0, 1) or b not in (0, 1):
        raise ValueError(f"bits must be 0 or 1, got ({a}, {b})")


def _check_pair(pair: DensityMatrix):
    if pair.n_qubits != 2:
        raise ValueError("superdense coding needs a 2-qubit pair")


def _bell_readout_probs(a: int, b: int, pair: DensityMatrix) -> np.ndarray:
    """Outcome probabilities of Bob's measurement after Alice encodes (a, b)."""
    encode = np.eye(4, dtype=np.complex128)
    if a:
        encode = embed_operator(gate_matrix("X"), (0,), 2) @ encode
    if b:
        encode = embed_operator(gate_matrix("Z"), (0,), 2) @ encode
    decode = embed_operator(gate_matrix("H"), (0,), 2) @ gate_matrix("CNOT")
    total = decode @ encode
    rho_out = total @ pair.matrix @ total.conj().T
    return np.maximum(np.real(np.diag(rho_out)), 0.0)


def _decode_outcome(outcome: int) -> tuple:
    m0, m1 = outcome >> 1, outcome & 1
    return (m1, m0)


def superdense_send(
    a: int, b: int, pair: DensityMatrix, rng: np.random.Generator = None
) -> DenseCodingResult:
    """One protocol round: encode (a, b), measure, decode.

    The readout is sampled, so on a perfect Bell pair the decoded bits are
    deterministic while noisy pairs can decode incorrectly.
    """
    _check_bits(a, b)
    _check_pair(pair)
    if rng is None:
        rng = stream_rng(DEFAULT_SEED, STREAM_TRIALS)
    probs = _bell_readout_probs(a, b, pair)
    outcome = int(rng.choice(4, p=probs / probs.sum()))
    decoded = _decode_outcome(outcome)
    phi_plus = bell_pair()
    return DenseCodingResult(
        sent_bits=(a, b),
        decoded_bits=decoded,
        success=decoded == (a, b),
        channel_fidelity=fidelity(pair, phi_plus),
    )


def superdense_success_probability(a: int, b: int, pair: DensityMatrix) -> float:
    """Analytic probability that Bob decodes (a, b) correctly."""
    _check_bits(a, b)
    _check_pair(pair)
    probs = _bell_readout_probs(a, b, pair)
    correct_outcome = (b << 1) | a
    return float(probs[correct_outcome])


def superdense_trials(
    a: int, b: int, pair: DensityMatrix, trials: int, seed: int = DEFAULT_SEED
) -> float:
    """Empirical success rate over seeded sampled protocol rounds."""
    _check_bits(a, b)
    _check_pair(pair)
    if trials < 1:
        raise ValueError("trials must be positive")
    probs = _bell_readout_probs(a, b, pair)
    rng = stream_rng(seed, STREAM_TRIALS)
    outcomes = rng.choice(4, size=trials, p=probs / probs.sum())
    correct_outcome = (b << 1) | a
    return float(np.count_nonzero(outcomes == correct_outcome) / trials)
