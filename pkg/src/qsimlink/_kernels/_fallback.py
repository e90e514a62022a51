"""Pure-numpy gate kernels; reference implementation for the Cython core."""

import numpy as np


def apply_single_qubit(state, matrix, q, n):
    """Apply a 2x2 matrix to qubit ``q`` of a 2^n state vector."""
    t = state.reshape((2,) * n)
    t = np.tensordot(matrix, t, axes=([1], [q]))
    t = np.moveaxis(t, 0, q)
    return np.ascontiguousarray(t).reshape(-1)


def apply_two_qubit(state, matrix, q0, q1, n):
    """Apply a 4x4 matrix to qubits ``(q0, q1)``; row index is bit_q0*2 + bit_q1."""
    t = state.reshape((2,) * n)
    g = matrix.reshape(2, 2, 2, 2)
    t = np.tensordot(g, t, axes=([2, 3], [q0, q1]))
    t = np.moveaxis(t, [0, 1], [q0, q1])
    return np.ascontiguousarray(t).reshape(-1)
