"""Noise channels, Werner-pair constructors, and the fidelity decay law.

The Werner family mixes a Bell pair with the maximally mixed state and is
closed under depolarizing memory noise, so the quality of a stored pair can
be tracked as a single fidelity scalar and materialized into a density
matrix only when needed:

    rho_W(p) = p |Phi+><Phi+| + (1 - p)/4 * I4          (p in [0, 1])
    F(rho_W(p), Phi+) = (3p + 1)/4,  p = (4F - 1)/3
    rho_W(F) = (4F - 1)/3 |Phi+><Phi+| + (1 - F)/3 * I4 (F in [1/4, 1])

Memory decay over an interval dt with hardware time constant tau:

    F(t) = 1/4 + (F(t - dt) - 1/4) * exp(-dt / tau)

which composes over consecutive intervals and has fixed point 1/4.
"""

from dataclasses import dataclass

import numpy as np

from .circuits import embed_operator
from .states import DensityMatrix

COMPLETENESS_TOL = 1e-9

MIN_WERNER_FIDELITY = 0.25

# Values this close to a domain boundary are clamped instead of rejected, so
# round trips through floating-point fidelity computations stay composable.
DOMAIN_TOL = 1e-9


def _clamp_domain(value: float, lo: float, hi: float, what: str) -> float:
    if not lo - DOMAIN_TOL <= value <= hi + DOMAIN_TOL:
        raise ValueError(f"{what} = {value} outside [{lo}, {hi}]")
    return min(hi, max(lo, value))

# Bell pair (|00> + |11>) / sqrt(2) as a raw vector; kept local to avoid a
# dependency cycle with the encoding module.
_PHI_PLUS = np.array([1, 0, 0, 1], dtype=np.complex128) / np.sqrt(2.0)

_PAULI_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
_PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
_PAULI_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)


@dataclass(frozen=True)
class KrausChannel:
    """Completely positive trace-preserving map given by Kraus operators."""

    name: str
    kraus_ops: tuple
    params: dict

    def __post_init__(self):
        ops = tuple(np.asarray(k, dtype=np.complex128).copy() for k in self.kraus_ops)
        if not ops:
            raise ValueError("channel needs at least one Kraus operator")
        dim = ops[0].shape[0]
        if any(k.shape != (dim, dim) for k in ops):
            raise ValueError("Kraus operators must share one square shape")
        if dim not in (2, 4):
            raise ValueError("only 1- and 2-qubit channels are supported")
        total = sum(k.conj().T @ k for k in ops)
        if np.max(np.abs(total - np.eye(dim))) > COMPLETENESS_TOL:
            raise ValueError("Kraus operators violate completeness (sum K†K != I)")
        object.__setattr__(self, "kraus_ops", ops)
        object.__setattr__(self, "params", dict(self.params))

    @property
    def arity(self) -> int:
        return 1 if self.kraus_ops[0].shape[0] == 2 else 2


@dataclass(frozen=True)
class DecayParams:
    """Memory decay configuration: time constant tau and step interval delta_t."""

    tau: float
    delta_t: float

    def __post_init__(self):
        if self.tau <= 0:
            raise ValueError("tau must be positive")
        if self.delta_t < 0:
            raise ValueError("delta_t must be nonnegative")

    def step(self, fidelity: float) -> float:
        return decay_fidelity(fidelity, self.delta_t, self.tau)


def standard_channel(name: str, param: float) -> KrausChannel:
    """Canonical single-qubit channel by name.

    amplitude_damping(gamma): K0 = diag(1, sqrt(1-gamma)), K1 = sqrt(gamma)|0><1|
    phase_damping(gamma):     K0 = diag(1, sqrt(1-gamma)), K1 = diag(0, sqrt(gamma))
    bit_flip(f):              {sqrt(1-f) I, sqrt(f) X}
    phase_flip(f):            {sqrt(1-f) I, sqrt(f) Z}
    depolarizing(q):          rho -> (1-q) rho + q I/2, as a 4-operator Kraus set
    """
    if not 0.0 <= param <= 1.0:
        raise ValueError(f"channel parameter {param} outside [0, 1]")
    eye = np.eye(2, dtype=np.complex128)
    if name == "amplitude_damping":
        ops = (
            np.diag([1.0, np.sqrt(1.0 - param)]),
            np.array([[0.0, np.sqrt(param)], [0.0, 0.0]]),
        )
        key = "gamma"
    elif name == "phase_damping":
        ops = (np.diag([1.0, np.sqrt(1.0 - param)]), np.diag([0.0, np.sqrt(param)]))
        key = "gamma"
    elif name == "bit_flip":
        ops = (np.sqrt(1.0 - param) * eye, np.sqrt(param) * _PAULI_X)
        key = "f"
    elif name == "phase_flip":
        ops = (np.sqrt(1.0 - param) * eye, np.sqrt(param) * _PAULI_Z)
        key = "f"
    elif name == "depolarizing":
        ops = (
            np.sqrt(1.0 - 3.0 * param / 4.0) * eye,
            np.sqrt(param / 4.0) * _PAULI_X,
            np.sqrt(param / 4.0) * _PAULI_Y,
            np.sqrt(param / 4.0) * _PAULI_Z,
        )
        key = "q"
    else:
        raise ValueError(f"unknown channel {name!r}")
    return KrausChannel(name, ops, {key: float(param)})


def apply_channel(
    rho: DensityMatrix, ch: KrausChannel, target_qubit: int = 0
) -> DensityMatrix:
    """rho' = sum_i K_i rho K_i† with the channel acting on ``target_qubit``.

    Two-qubit channels act on the whole state and require a 2-qubit rho with
    target_qubit 0.
    """
    n = rho.n_qubits
    if ch.arity == 2:
        if n != 2 or target_qubit != 0:
            raise ValueError("2-qubit channels act on a full 2-qubit state")
        embedded = ch.kraus_ops
    else:
        if not 0 <= target_qubit < n:
            raise ValueError(f"target qubit {target_qubit} out of range")
        embedded = tuple(
            embed_operator(k, (target_qubit,), n) for k in ch.kraus_ops
        )
    out = np.zeros_like(rho.matrix)
    for k in embedded:
        out += k @ rho.matrix @ k.conj().T
    return DensityMatrix(n, out)


def werner_from_p(p: float) -> DensityMatrix:
    """Werner pair of weight p: p |Phi+><Phi+| + (1-p)/4 * I."""
    p = _clamp_domain(p, 0.0, 1.0, "p")
    rho = p * np.outer(_PHI_PLUS, _PHI_PLUS.conj()) + (1.0 - p) / 4.0 * np.eye(4)
    return DensityMatrix(2, rho)


def werner_from_fidelity(f: float) -> DensityMatrix:
    """Werner pair with the given Bell-pair fidelity F in [1/4, 1]."""
    f = _clamp_domain(f, MIN_WERNER_FIDELITY, 1.0, "fidelity")
    rho = (4.0 * f - 1.0) / 3.0 * np.outer(_PHI_PLUS, _PHI_PLUS.conj()) + (
        1.0 - f
    ) / 3.0 * np.eye(4)
    return DensityMatrix(2, rho)


def decay_fidelity(f_prev: float, delta_t: float, tau: float) -> float:
    """One decay step: 1/4 + (F - 1/4) exp(-delta_t / tau)."""
    f_prev = _clamp_domain(f_prev, MIN_WERNER_FIDELITY, 1.0, "fidelity")
    if delta_t < 0:
        raise ValueError("delta_t must be nonnegative")
    if tau <= 0:
        raise ValueError("tau must be positive")
    return float(
        MIN_WERNER_FIDELITY + (f_prev - MIN_WERNER_FIDELITY) * np.exp(-delta_t / tau)
    )
