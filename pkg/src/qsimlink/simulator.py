"""Circuit execution on dense and MPS backends.

Strong simulation returns the full outcome distribution; weak simulation
draws seeded samples from it. Two-qubit gates on non-adjacent MPS sites are
handled by swapping the right site next to the left one, applying the gate,
and swapping back.
"""

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .circuits import Circuit, Gate
from .errors import ResourceLimitError
from .rng import DEFAULT_SEED, STREAM_SHOTS, stream_rng
from .states import (
    MAX_DENSE_QUBITS,
    MatrixProductState,
    StateVector,
    _normalize_cores,
    _truncated_svd,
    basis_state,
    inner_product,
    statevector_from_mps,
)

BACKENDS = ("statevector", "mps")


@dataclass(frozen=True)
class OutcomeDistribution:
    """Probability vector over all 2^n_bits readout strings."""

    n_bits: int
    probabilities: np.ndarray

    def __post_init__(self):
        probs = np.asarray(self.probabilities, dtype=float).reshape(-1).copy()
        if probs.size != 2**self.n_bits:
            raise ValueError(f"expected {2**self.n_bits} entries, got {probs.size}")
        if probs.min() < -1e-12:
            raise ValueError(f"negative probability {probs.min()}")
        probs = np.maximum(probs, 0.0)
        if abs(probs.sum() - 1.0) > 1e-9:
            raise ValueError(f"probabilities sum to {probs.sum()}")
        object.__setattr__(self, "probabilities", probs)

    def __eq__(self, other):
        if not isinstance(other, OutcomeDistribution):
            return NotImplemented
        return self.n_bits == other.n_bits and np.array_equal(
            self.probabilities, other.probabilities
        )


@dataclass(frozen=True)
class SampleSet:
    """Counts per readout bitstring from a seeded weak-simulation run."""

    shots: int
    counts: dict
    seed: int

    def __post_init__(self):
        if self.shots < 1:
            raise ValueError("shots must be positive")
        if sum(self.counts.values()) != self.shots:
            raise ValueError("counts do not sum to shots")


def _apply_dense(amps: np.ndarray, matrix: np.ndarray, targets, n: int) -> np.ndarray:
    if len(targets) == 1:
        return _kernels.apply_single_qubit(amps, matrix, targets[0], n)
    if len(targets) == 2:
        return _kernels.apply_two_qubit(amps, matrix, targets[0], targets[1], n)
    # k-qubit CUSTOM gates: generic tensordot path.
    k = len(targets)
    t = amps.reshape((2,) * n)
    g = matrix.reshape((2,) * (2 * k))
    t = np.tensordot(g, t, axes=(tuple(range(k, 2 * k)), targets))
    t = np.moveaxis(t, range(k), targets)
    return np.ascontiguousarray(t).reshape(-1)


def apply_gate_sv(sv: StateVector, g: Gate) -> StateVector:
    """Apply one gate to a dense state; norm is preserved by unitarity."""
    if max(g.targets) >= sv.n_qubits:
        raise ValueError(f"gate targets {g.targets} out of range")
    return StateVector(
        sv.n_qubits, _apply_dense(sv.amplitudes, g.matrix, g.targets, sv.n_qubits)
    )


_SWAP = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=np.complex128
)


def _apply_two_site(cores, i, matrix, chi_max, trunc_tol):
    """Contract a 4x4 matrix into sites (i, i+1) and re-split with SVD."""
    chi_l = cores[i].shape[0]
    chi_r = cores[i + 1].shape[2]
    theta = np.tensordot(cores[i], cores[i + 1], axes=([2], [0]))
    g = matrix.reshape(2, 2, 2, 2)
    theta = np.tensordot(g, theta, axes=([2, 3], [1, 2]))
    theta = np.moveaxis(theta, [0, 1], [1, 2])
    u, s, vt = _truncated_svd(theta.reshape(chi_l * 2, 2 * chi_r), chi_max, trunc_tol)
    cores[i] = u.reshape(chi_l, 2, s.size)
    cores[i + 1] = (s[:, None] * vt).reshape(s.size, 2, chi_r)


def apply_gate_mps(
    mps: MatrixProductState, g: Gate, chi_max: int = None, trunc_tol: float = 0.0
) -> MatrixProductState:
    """Apply one gate to an MPS, truncating each touched bond to chi_max.

    Single-qubit gates contract into one core. Two-qubit gates on sites
    (i, j) with j > i+1 are routed through a swap chain. The result is
    renormalized to unit norm.
    """
    n = mps.n_qubits
    if chi_max is None:
        chi_max = 2 ** (n // 2)
    if chi_max < 1:
        raise ValueError("chi_max must be at least 1")
    if trunc_tol < 0:
        raise ValueError("trunc_tol must be nonnegative")
    if max(g.targets) >= n:
        raise ValueError(f"gate targets {g.targets} out of range")
    cores = [c.copy() for c in mps.cores]
    if len(g.targets) == 1:
        q = g.targets[0]
        cores[q] = np.einsum("ab,lbr->lar", g.matrix, cores[q])
    elif len(g.targets) == 2:
        qa, qb = g.targets
        i, j = (qa, qb) if qa < qb else (qb, qa)
        # Gate rows are indexed (bit_qa, bit_qb); flip to site order if needed.
        matrix = g.matrix if qa < qb else _SWAP @ g.matrix @ _SWAP
        for pos in range(j, i + 1, -1):
            _apply_two_site(cores, pos - 1, _SWAP, chi_max, trunc_tol)
        _apply_two_site(cores, i, matrix, chi_max, trunc_tol)
        for pos in range(i + 1, j):
            _apply_two_site(cores, pos, _SWAP, chi_max, trunc_tol)
    else:
        raise ValueError("the MPS backend supports 1- and 2-qubit gates only")
    return MatrixProductState(n, tuple(_normalize_cores(cores)))


def zero_mps(n_qubits: int) -> MatrixProductState:
    """Product-state MPS for |0...0> (all bonds 1)."""
    core = np.array([1, 0], dtype=np.complex128).reshape(1, 2, 1)
    return MatrixProductState(n_qubits, tuple(core.copy() for _ in range(n_qubits)))


def final_mps(
    c: Circuit, chi_max: int = None, trunc_tol: float = 0.0
) -> MatrixProductState:
    """Run the circuit from |0...0> on the MPS backend."""
    mps = zero_mps(c.n_qubits)
    for g in c.gates:
        mps = apply_gate_mps(mps, g, chi_max=chi_max, trunc_tol=trunc_tol)
    return mps


def final_state(
    c: Circuit,
    backend: str = "statevector",
    chi_max: int = None,
    trunc_tol: float = 0.0,
) -> StateVector:
    """Run the circuit from |0...0> and return the dense final state."""
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}")
    if c.n_qubits > MAX_DENSE_QUBITS:
        raise ResourceLimitError(
            f"dense output is limited to {MAX_DENSE_QUBITS} qubits"
        )
    if backend == "statevector":
        sv = basis_state(c.n_qubits)
        for g in c.gates:
            sv = apply_gate_sv(sv, g)
        return sv
    return statevector_from_mps(final_mps(c, chi_max=chi_max, trunc_tol=trunc_tol))


def _marginalize(probs: np.ndarray, n: int, measured) -> np.ndarray:
    if not measured or len(measured) == n:
        return probs
    drop = tuple(ax for ax in range(n) if ax not in measured)
    return probs.reshape((2,) * n).sum(axis=drop).reshape(-1)


def strong_simulate(
    c: Circuit,
    backend: str = "statevector",
    chi_max: int = None,
    trunc_tol: float = 0.0,
) -> OutcomeDistribution:
    """Full outcome distribution over the circuit's measured qubits."""
    sv = final_state(c, backend=backend, chi_max=chi_max, trunc_tol=trunc_tol)
    measured = c.measured_qubits or tuple(range(c.n_qubits))
    probs = _marginalize(sv.probabilities(), c.n_qubits, set(measured))
    return OutcomeDistribution(len(measured), probs)


def weak_simulate(
    c: Circuit,
    backend: str = "statevector",
    shots: int = 1,
    seed: int = DEFAULT_SEED,
    chi_max: int = None,
    trunc_tol: float = 0.0,
) -> SampleSet:
    """Draw ``shots`` readout strings from the strong-simulation distribution."""
    if shots < 1:
        raise ValueError("shots must be positive")
    dist = strong_simulate(c, backend=backend, chi_max=chi_max, trunc_tol=trunc_tol)
    probs = dist.probabilities / dist.probabilities.sum()
    rng = stream_rng(seed, STREAM_SHOTS)
    outcomes = rng.choice(probs.size, size=shots, p=probs)
    values, freqs = np.unique(outcomes, return_counts=True)
    counts = {
        format(int(v), f"0{dist.n_bits}b"): int(f) for v, f in zip(values, freqs)
    }
    return SampleSet(shots, counts, seed)


def measure_qubit(sv: StateVector, q: int, rng: np.random.Generator):
    """Measure one qubit: returns (outcome bit, collapsed renormalized state)."""
    n = sv.n_qubits
    if not 0 <= q < n:
        raise ValueError(f"qubit {q} out of range")
    probs = sv.probabilities().reshape((2,) * n)
    other_axes = tuple(ax for ax in range(n) if ax != q)
    marginal = probs.sum(axis=other_axes) if other_axes else probs
    p0, p1 = float(marginal[0]), float(marginal[1])
    if p0 + p1 <= 0.0:
        raise ArithmeticError("degenerate all-zero measurement marginal")
    outcome = 1 if rng.random() < p1 / (p0 + p1) else 0
    amps = sv.amplitudes.reshape((2,) * n).copy()
    sel = [slice(None)] * n
    sel[q] = 1 - outcome
    amps[tuple(sel)] = 0.0
    amps = amps.reshape(-1) / np.sqrt(p1 if outcome else p0)
    return outcome, StateVector(n, amps)


def state_closeness(sv: StateVector, target: StateVector) -> float:
    """Squared overlap |<target|state>|^2."""
    return abs(inner_product(target, sv)) ** 2
