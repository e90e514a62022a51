"""Desk-scale quantum circuit and entanglement-link simulator.

Dense state-vector and matrix-product-state backends over labeled-tensor
contraction machinery, density-matrix noise channels, Werner-pair fidelity
algebra with exponential memory decay, a discrete-event heralded-link
simulator, and classical/quantum encoding demos, all behind a library API
and the ``qsimlink`` CLI.
"""

from ._kernels import KERNEL_BACKEND
from .circuits import (
    Circuit,
    Gate,
    circuit_unitary,
    embed_operator,
    gate_matrix,
    parse_circuit,
    serialize_circuit,
    validate_unitary,
)
from .encoding import (
    ClassicalVector,
    DenseCodingResult,
    amplitude_encode,
    basis_encode,
    bell_pair,
    ghz,
    mixed_state_demo,
    superdense_send,
    superdense_success_probability,
    superdense_trials,
)
from .errors import CircuitParseError, ContractionError, ResourceLimitError
from .linksim import (
    LinkConfig,
    LinkEvent,
    LinkStats,
    LinkTrace,
    analytic_delivery_fidelity,
    materialize_pair,
    recompute_stats,
    run_link_simulation,
)
from .noise import (
    DecayParams,
    KrausChannel,
    apply_channel,
    decay_fidelity,
    standard_channel,
    werner_from_fidelity,
    werner_from_p,
)
from .rng import DEFAULT_SEED, stream_rng
from .simulator import (
    OutcomeDistribution,
    SampleSet,
    apply_gate_mps,
    apply_gate_sv,
    final_mps,
    final_state,
    measure_qubit,
    state_closeness,
    strong_simulate,
    weak_simulate,
    zero_mps,
)
from .states import (
    DensityMatrix,
    MatrixProductState,
    StateVector,
    basis_state,
    density_from_mixture,
    equivalent,
    fidelity,
    inner_product,
    mps_from_statevector,
    statevector_from_mps,
)
from .tensor import (
    ContractionPlan,
    Tensor,
    contract,
    contract_network,
    plan_contraction,
    sequential_plan,
    transpose_relabel,
)

__version__ = "0.1.0"

__all__ = [
    "KERNEL_BACKEND",
    "DEFAULT_SEED",
    "__version__",
    # tensors
    "Tensor",
    "ContractionPlan",
    "contract",
    "plan_contraction",
    "sequential_plan",
    "contract_network",
    "transpose_relabel",
    # states
    "StateVector",
    "DensityMatrix",
    "MatrixProductState",
    "basis_state",
    "mps_from_statevector",
    "statevector_from_mps",
    "fidelity",
    "inner_product",
    "equivalent",
    "density_from_mixture",
    # circuits
    "Gate",
    "Circuit",
    "gate_matrix",
    "validate_unitary",
    "parse_circuit",
    "serialize_circuit",
    "circuit_unitary",
    "embed_operator",
    # simulator
    "OutcomeDistribution",
    "SampleSet",
    "apply_gate_sv",
    "apply_gate_mps",
    "zero_mps",
    "final_state",
    "final_mps",
    "strong_simulate",
    "weak_simulate",
    "measure_qubit",
    "state_closeness",
    # noise
    "KrausChannel",
    "DecayParams",
    "standard_channel",
    "apply_channel",
    "werner_from_p",
    "werner_from_fidelity",
    "decay_fidelity",
    # link simulation
    "LinkConfig",
    "LinkEvent",
    "LinkStats",
    "LinkTrace",
    "run_link_simulation",
    "recompute_stats",
    "analytic_delivery_fidelity",
    "materialize_pair",
    # encodings and protocols
    "ClassicalVector",
    "DenseCodingResult",
    "basis_encode",
    "amplitude_encode",
    "bell_pair",
    "ghz",
    "superdense_send",
    "superdense_success_probability",
    "superdense_trials",
    "mixed_state_demo",
    # errors / rng
    "ContractionError",
    "CircuitParseError",
    "ResourceLimitError",
    "stream_rng",
]
