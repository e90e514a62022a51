"""Pure-state, mixed-state, and matrix-product-state representations.

Conventions used throughout the package:

* Qubit 0 is the leftmost / most-significant bit of an amplitude index, so
  amplitude ``k`` of an n-qubit state belongs to the basis string that is
  ``k`` written in binary on ``n`` bits.
* States are immutable values; every operation returns a new object.
* Comparisons between pure states are global-phase-insensitive
  (``equivalent``); raw amplitude comparisons are used only where a phase is
  pinned.

Resource guards: dense vectors refuse more than 20 qubits, MPS chains more
than 64.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ResourceLimitError
from .tensor import Tensor, contract

MAX_DENSE_QUBITS = 20
MAX_MPS_QUBITS = 64

NORM_TOL = 1e-9
HERMITICITY_TOL = 1e-9
PSD_TOL = 1e-9


@dataclass(frozen=True)
class StateVector:
    """Pure n-qubit state: 2^n complex amplitudes with unit Euclidean norm."""

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.n_qubits < 1:
            raise ValueError("n_qubits must be positive")
        if self.n_qubits > MAX_DENSE_QUBITS:
            raise ResourceLimitError(
                f"dense state vectors are limited to {MAX_DENSE_QUBITS} qubits"
            )
        amps = np.asarray(self.amplitudes, dtype=np.complex128).reshape(-1).copy()
        if amps.size != 2**self.n_qubits:
            raise ValueError(
                f"expected {2**self.n_qubits} amplitudes, got {amps.size}"
            )
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"state norm {norm} deviates from 1 beyond {NORM_TOL}")
        object.__setattr__(self, "amplitudes", amps)

    def probabilities(self) -> np.ndarray:
        """Standard-basis measurement probabilities |amplitude|^2."""
        return np.abs(self.amplitudes) ** 2

    def __eq__(self, other):
        if not isinstance(other, StateVector):
            return NotImplemented
        return self.n_qubits == other.n_qubits and np.array_equal(
            self.amplitudes, other.amplitudes
        )


def basis_state(n_qubits: int, index: int = 0) -> StateVector:
    """|index> in the computational basis of n qubits."""
    amps = np.zeros(2**n_qubits, dtype=np.complex128)
    amps[index] = 1.0
    return StateVector(n_qubits, amps)


@dataclass(frozen=True)
class DensityMatrix:
    """Mixed n-qubit state: Hermitian, positive-semidefinite, trace-1 matrix."""

    n_qubits: int
    matrix: np.ndarray

    def __post_init__(self):
        if self.n_qubits < 1:
            raise ValueError("n_qubits must be positive")
        if self.n_qubits > MAX_DENSE_QUBITS // 2:
            raise ResourceLimitError(
                f"density matrices are limited to {MAX_DENSE_QUBITS // 2} qubits"
            )
        dim = 2**self.n_qubits
        m = np.asarray(self.matrix, dtype=np.complex128).copy()
        if m.shape != (dim, dim):
            raise ValueError(f"expected a {dim}x{dim} matrix, got {m.shape}")
        if np.max(np.abs(m - m.conj().T)) > HERMITICITY_TOL:
            raise ValueError("matrix is not Hermitian within tolerance")
        tr = np.trace(m)
        if abs(tr - 1.0) > NORM_TOL:
            raise ValueError(f"trace {tr} deviates from 1 beyond {NORM_TOL}")
        eigs = np.linalg.eigvalsh((m + m.conj().T) / 2.0)
        if eigs.min() < -PSD_TOL:
            raise ValueError(
                f"matrix has negative eigenvalue {eigs.min()}; not PSD within tolerance"
            )
        object.__setattr__(self, "matrix", m)

    def __eq__(self, other):
        if not isinstance(other, DensityMatrix):
            return NotImplemented
        return self.n_qubits == other.n_qubits and np.array_equal(
            self.matrix, other.matrix
        )


def _transfer_norm(cores) -> float:
    """Norm of the state an MPS chain represents, via transfer contraction.

    O(n * chi^3); never materializes the 2^n vector.
    """
    env = np.ones((1, 1), dtype=np.complex128)
    for core in cores:
        env = np.einsum("ab,asc,bsd->cd", env, np.conj(core), core, optimize=True)
    return float(np.sqrt(abs(env[0, 0].real)))


@dataclass(frozen=True)
class MatrixProductState:
    """Chain of rank-3 cores (left_bond, 2, right_bond) with unit outer bonds.

    The represented state must have unit norm; the norm is checked with a
    transfer contraction so large chains never get expanded.
    """

    n_qubits: int
    cores: tuple

    def __post_init__(self):
        if self.n_qubits < 1:
            raise ValueError("n_qubits must be positive")
        if self.n_qubits > MAX_MPS_QUBITS:
            raise ResourceLimitError(
                f"MPS chains are limited to {MAX_MPS_QUBITS} qubits"
            )
        cores = tuple(
            np.asarray(c, dtype=np.complex128).copy() for c in self.cores
        )
        if len(cores) != self.n_qubits:
            raise ValueError(f"expected {self.n_qubits} cores, got {len(cores)}")
        for k, core in enumerate(cores):
            if core.ndim != 3 or core.shape[1] != 2:
                raise ValueError(f"core {k} must have shape (left, 2, right)")
        if cores[0].shape[0] != 1 or cores[-1].shape[2] != 1:
            raise ValueError("outer bond dimensions must be 1")
        for k in range(len(cores) - 1):
            if cores[k].shape[2] != cores[k + 1].shape[0]:
                raise ValueError(f"bond mismatch between cores {k} and {k + 1}")
        norm = _transfer_norm(cores)
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"MPS norm {norm} deviates from 1 beyond {NORM_TOL}")
        object.__setattr__(self, "cores", cores)

    @property
    def bond_dims(self) -> tuple:
        """Internal bond dimensions, left to right (length n_qubits - 1)."""
        return tuple(core.shape[2] for core in self.cores[:-1])

    @property
    def element_count(self) -> int:
        """Total stored elements; compression proxy vs the 2^n dense vector."""
        return int(sum(core.size for core in self.cores))


# Singular values at or below this relative level are treated as numerical
# zeros and always dropped, so unentangled cuts get bond dimension 1 even
# with trunc_tol = 0.
_RANK_EPS = 1e-14


def _truncated_svd(theta, chi_max, trunc_tol):
    """SVD of a bond matrix with rank truncation; returns (U, s, Vt)."""
    u, s, vt = np.linalg.svd(theta, full_matrices=False)
    cutoff = max(trunc_tol, _RANK_EPS) * s[0] if s[0] > 0 else 0.0
    keep = max(1, min(chi_max, int(np.sum(s > cutoff))))
    return u[:, :keep], s[:keep], vt[:keep, :]


def _cores_from_vector(amps, n_qubits, chi_max, trunc_tol):
    """Left-to-right successive SVD factorization of a raw amplitude vector."""
    cores = []
    rest = np.asarray(amps, dtype=np.complex128)
    rank = 1
    for _ in range(n_qubits - 1):
        theta = rest.reshape(rank * 2, -1)
        u, s, vt = _truncated_svd(theta, chi_max, trunc_tol)
        new_rank = s.size
        cores.append(u.reshape(rank, 2, new_rank))
        rest = s[:, None] * vt
        rank = new_rank
    cores.append(rest.reshape(rank, 2, 1))
    return cores


def _normalize_cores(cores):
    """Scale the last core so the chain has unit norm."""
    norm = _transfer_norm(cores)
    if norm == 0.0:
        raise ValueError("cannot normalize a zero MPS")
    cores = list(cores)
    cores[-1] = cores[-1] / norm
    return cores


def mps_from_statevector(
    sv: StateVector, chi_max: int, trunc_tol: float = 0.0
) -> MatrixProductState:
    """Factorize a dense state into an MPS by successive truncated SVDs.

    Each internal bond is capped at ``chi_max``; singular values below
    ``trunc_tol`` times the largest at that cut are discarded. The result is
    renormalized to unit norm, so with no truncation it reconstructs the
    input exactly (up to floating error).
    """
    if chi_max < 1:
        raise ValueError("chi_max must be at least 1")
    if trunc_tol < 0:
        raise ValueError("trunc_tol must be nonnegative")
    if sv.n_qubits == 1:
        cores = [sv.amplitudes.reshape(1, 2, 1)]
    else:
        cores = _cores_from_vector(sv.amplitudes, sv.n_qubits, chi_max, trunc_tol)
    return MatrixProductState(sv.n_qubits, tuple(_normalize_cores(cores)))


def _contract_cores(cores) -> np.ndarray:
    """Expand a core chain into the dense amplitude vector via tensor-core."""
    n = len(cores)
    acc = Tensor(("bL", "p0", "b0"), cores[0])
    for k in range(1, n):
        acc = contract(acc, Tensor((f"b{k - 1}", f"p{k}", f"b{k}"), cores[k]))
    # Label order is (bL, p0, ..., p_{n-1}, b_{n-1}); outer bonds are size 1.
    return acc.data.reshape(-1)


def statevector_from_mps(mps: MatrixProductState) -> StateVector:
    """Contract the chain back into a dense state vector."""
    if mps.n_qubits > MAX_DENSE_QUBITS:
        raise ResourceLimitError(
            f"cannot expand a {mps.n_qubits}-qubit MPS to a dense vector"
        )
    return StateVector(mps.n_qubits, _contract_cores(mps.cores))


def inner_product(a: StateVector, b: StateVector) -> complex:
    """<a|b> = sum over x of conj(a_x) * b_x."""
    if a.n_qubits != b.n_qubits:
        raise ValueError("qubit counts differ")
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def equivalent(a: StateVector, b: StateVector, eps: float) -> bool:
    """Global-phase-insensitive state equality: |<a|b>| >= 1 - eps."""
    if eps < 0:
        raise ValueError("eps must be nonnegative")
    return abs(inner_product(a, b)) >= 1.0 - eps


def fidelity(rho: DensityMatrix, psi: StateVector) -> float:
    """Closeness <psi|rho|psi> of a mixed state to a pure target, in [0, 1]."""
    if rho.n_qubits != psi.n_qubits:
        raise ValueError("qubit counts differ")
    val = complex(np.vdot(psi.amplitudes, rho.matrix @ psi.amplitudes))
    if abs(val.imag) > 1e-9:
        raise ValueError(f"fidelity has non-real value {val}")
    return float(min(1.0, max(0.0, val.real)))


def density_from_mixture(components) -> DensityMatrix:
    """Convex combination sum_i p_i |psi_i><psi_i| of pure states."""
    components = list(components)
    if not components:
        raise ValueError("mixture must have at least one component")
    probs = np.array([p for p, _ in components], dtype=float)
    if probs.min() < 0:
        raise ValueError("probabilities must be nonnegative")
    if abs(probs.sum() - 1.0) > NORM_TOL:
        raise ValueError(f"probabilities sum to {probs.sum()}, not 1")
    n = components[0][1].n_qubits
    if any(sv.n_qubits != n for _, sv in components):
        raise ValueError("all components must have the same qubit count")
    dim = 2**n
    rho = np.zeros((dim, dim), dtype=np.complex128)
    for p, sv in components:
        rho += p * np.outer(sv.amplitudes, sv.amplitudes.conj())
    return DensityMatrix(n, rho)
