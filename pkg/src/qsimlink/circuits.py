"""Gate set, circuit data model, text-format parser, and unitarity checks.

Canonical single-qubit matrices follow the standard definitions; CNOT treats
the first listed target as the control (a documented convention, since both
orientations are in common use). The text format is line oriented:

    # comment to end of line
    qubits 3
    h 0
    cnot 0 1
    measure 0

Mnemonics are case-insensitive; ``measure`` lines select a subset of qubits
to read out (none means all). Custom unitaries are API-only and cannot be
expressed in the text format.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import CircuitParseError, ResourceLimitError

UNITARITY_TOL = 1e-9

_SQRT2_INV = 1.0 / np.sqrt(2.0)

_NAMED_MATRICES = {
    "X": np.array([[0, 1], [1, 0]], dtype=np.complex128),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    "Z": np.array([[1, 0], [0, -1]], dtype=np.complex128),
    "H": np.array([[1, 1], [1, -1]], dtype=np.complex128) * _SQRT2_INV,
    "T": np.array([[1, 0], [0, np.exp(1j * np.pi / 4)]], dtype=np.complex128),
    "CNOT": np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]],
        dtype=np.complex128,
    ),
}

NAMED_KINDS = tuple(_NAMED_MATRICES)


def gate_matrix(kind: str) -> np.ndarray:
    """Canonical matrix of a named gate kind (case-insensitive)."""
    key = kind.upper()
    if key not in _NAMED_MATRICES:
        raise ValueError(f"unknown gate kind {kind!r}")
    return _NAMED_MATRICES[key].copy()


def validate_unitary(m: np.ndarray, tol: float = UNITARITY_TOL) -> bool:
    """True iff U†U and UU† both deviate from I by less than ``tol`` (max norm)."""
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"matrix must be square, got shape {m.shape}")
    eye = np.eye(m.shape[0])
    return (
        np.max(np.abs(m.conj().T @ m - eye)) < tol
        and np.max(np.abs(m @ m.conj().T - eye)) < tol
    )


@dataclass(frozen=True, eq=False)
class Gate:
    """One gate application: kind, ordered targets, and its unitary matrix.

    For CNOT the first target is the control. CUSTOM gates carry a caller
    supplied 2^k x 2^k unitary over k targets.
    """

    kind: str
    targets: tuple
    matrix: np.ndarray = field(repr=False, default=None)

    def __post_init__(self):
        kind = self.kind.upper()
        targets = tuple(int(q) for q in self.targets)
        if len(set(targets)) != len(targets):
            raise ValueError(f"repeated target in {targets}")
        if any(q < 0 for q in targets):
            raise ValueError("targets must be nonnegative")
        if kind == "CUSTOM":
            if self.matrix is None:
                raise ValueError("CUSTOM gates require a matrix")
            matrix = np.asarray(self.matrix, dtype=np.complex128).copy()
            dim = 2 ** len(targets)
            if matrix.shape != (dim, dim):
                raise ValueError(
                    f"matrix shape {matrix.shape} does not match {len(targets)} targets"
                )
        elif kind in _NAMED_MATRICES:
            arity = 2 if kind == "CNOT" else 1
            if len(targets) != arity:
                raise ValueError(f"{kind} takes {arity} target(s), got {len(targets)}")
            matrix = _NAMED_MATRICES[kind].copy()
        else:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if not validate_unitary(matrix, UNITARITY_TOL):
            raise ValueError(f"{kind} matrix is not unitary within {UNITARITY_TOL}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "targets", targets)
        object.__setattr__(self, "matrix", matrix)

    def __eq__(self, other):
        if not isinstance(other, Gate):
            return NotImplemented
        return (
            self.kind == other.kind
            and self.targets == other.targets
            and np.array_equal(self.matrix, other.matrix)
        )


@dataclass(frozen=True, eq=False)
class Circuit:
    """Ordered gate list over ``n_qubits``; measured_qubits empty = measure all."""

    n_qubits: int
    gates: tuple = ()
    measured_qubits: tuple = ()

    def __post_init__(self):
        if self.n_qubits < 1:
            raise ValueError("n_qubits must be positive")
        gates = tuple(self.gates)
        for g in gates:
            if max(g.targets, default=0) >= self.n_qubits:
                raise ValueError(
                    f"gate {g.kind} targets {g.targets} exceed {self.n_qubits} qubits"
                )
        measured = tuple(sorted(set(int(q) for q in self.measured_qubits)))
        if measured and (measured[0] < 0 or measured[-1] >= self.n_qubits):
            raise ValueError(f"measured qubits {measured} out of range")
        object.__setattr__(self, "gates", gates)
        object.__setattr__(self, "measured_qubits", measured)

    def __eq__(self, other):
        if not isinstance(other, Circuit):
            return NotImplemented
        return (
            self.n_qubits == other.n_qubits
            and self.measured_qubits == other.measured_qubits
            and self.gates == other.gates
        )


_MNEMONIC_ARITY = {"x": 1, "y": 1, "z": 1, "h": 1, "t": 1, "cnot": 2}


def parse_circuit(text: str) -> Circuit:
    """Parse the line-oriented circuit format; errors carry line numbers."""
    n_qubits = None
    gates = []
    measured = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        mnemonic = fields[0].lower()
        if n_qubits is None:
            if mnemonic != "qubits":
                raise CircuitParseError(
                    "first directive must be 'qubits <n>'", lineno
                )
            if len(fields) != 2:
                raise CircuitParseError("'qubits' takes one count", lineno)
            try:
                n_qubits = int(fields[1])
            except ValueError:
                raise CircuitParseError(
                    f"invalid qubit count {fields[1]!r}", lineno
                ) from None
            if n_qubits < 1:
                raise CircuitParseError("qubit count must be positive", lineno)
            continue
        if mnemonic == "qubits":
            raise CircuitParseError("duplicate 'qubits' directive", lineno)
        if mnemonic == "measure":
            args = fields[1:]
            if len(args) != 1:
                raise CircuitParseError("'measure' takes one qubit", lineno)
            q = _parse_target(args[0], n_qubits, lineno)
            measured.append(q)
            continue
        if mnemonic not in _MNEMONIC_ARITY:
            raise CircuitParseError(f"unknown mnemonic {fields[0]!r}", lineno)
        arity = _MNEMONIC_ARITY[mnemonic]
        args = fields[1:]
        if len(args) != arity:
            raise CircuitParseError(
                f"{mnemonic} takes {arity} target(s), got {len(args)}", lineno
            )
        targets = tuple(_parse_target(a, n_qubits, lineno) for a in args)
        if len(set(targets)) != len(targets):
            raise CircuitParseError(f"repeated target in {targets}", lineno)
        gates.append(Gate(mnemonic, targets))
    if n_qubits is None:
        raise CircuitParseError("missing 'qubits' directive", 1)
    return Circuit(n_qubits, tuple(gates), tuple(measured))


def _parse_target(token: str, n_qubits: int, lineno: int) -> int:
    try:
        q = int(token)
    except ValueError:
        raise CircuitParseError(f"invalid qubit index {token!r}", lineno) from None
    if not 0 <= q < n_qubits:
        raise CircuitParseError(
            f"qubit index {q} out of range for {n_qubits} qubits", lineno
        )
    return q


def serialize_circuit(c: Circuit) -> str:
    """Canonical text form; inverse of parse_circuit for named-gate circuits."""
    lines = [f"qubits {c.n_qubits}"]
    for g in c.gates:
        if g.kind == "CUSTOM":
            raise ValueError("CUSTOM gates have no text form")
        lines.append(" ".join([g.kind.lower(), *map(str, g.targets)]))
    lines.extend(f"measure {q}" for q in c.measured_qubits)
    return "\n".join(lines) + "\n"


MAX_UNITARY_QUBITS = 10


def embed_operator(matrix: np.ndarray, targets, n_qubits: int) -> np.ndarray:
    """Embed a k-qubit operator into the full 2^n x 2^n space on ``targets``.

    Works for any linear operator (also non-unitary, e.g. Kraus terms).
    """
    targets = tuple(targets)
    k = len(targets)
    op = np.asarray(matrix, dtype=np.complex128).reshape((2,) * (2 * k))
    full = np.eye(2**n_qubits, dtype=np.complex128).reshape(
        (2,) * n_qubits + (2**n_qubits,)
    )
    # Contract the operator's input axes with the target qubit axes, then
    # move its output axes back into the target positions.
    full = np.tensordot(op, full, axes=(tuple(range(k, 2 * k)), targets))
    full = np.moveaxis(full, range(k), targets)
    return full.reshape(2**n_qubits, 2**n_qubits)


def circuit_unitary(c: Circuit) -> np.ndarray:
    """Dense unitary of the whole circuit (gates applied in list order)."""
    if c.n_qubits > MAX_UNITARY_QUBITS:
        raise ResourceLimitError(
            f"dense circuit unitaries are limited to {MAX_UNITARY_QUBITS} qubits"
        )
    u = np.eye(2**c.n_qubits, dtype=np.complex128)
    for g in c.gates:
        u = embed_operator(g.matrix, g.targets, c.n_qubits) @ u
    return u
