"""Shared random-object generators for the test suite (all seeded)."""

import numpy as np

from qsimlink import Circuit, DensityMatrix, Gate, StateVector, Tensor

UNIVERSAL_GATES = ("X", "Y", "Z", "H", "T", "CNOT")


def random_statevector(rng, n):
    amps = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
    return StateVector(n, amps / np.linalg.norm(amps))


def random_density(rng, n, n_components=3):
    probs = rng.dirichlet(np.ones(n_components))
    comps = [(p, random_statevector(rng, n)) for p in probs]
    dim = 2**n
    rho = np.zeros((dim, dim), dtype=complex)
    for p, sv in comps:
        rho += p * np.outer(sv.amplitudes, sv.amplitudes.conj())
    return DensityMatrix(n, rho)


def random_circuit(rng, n, depth):
    """Random circuit over the universal gate set."""
    gates = []
    while len(gates) < depth:
        kind = UNIVERSAL_GATES[rng.integers(len(UNIVERSAL_GATES))]
        if kind == "CNOT":
            if n < 2:
                continue
            q0, q1 = rng.choice(n, size=2, replace=False)
            gates.append(Gate(kind, (int(q0), int(q1))))
        else:
            gates.append(Gate(kind, (int(rng.integers(n)),)))
    return Circuit(n, tuple(gates))


def random_network(rng, n_tensors, bond_dims=(2, 3), free_dim=2):
    """Random tree-shaped tensor network; every label on at most two tensors."""
    attach = [int(rng.integers(k)) for k in range(1, n_tensors)]
    node_labels = [[] for _ in range(n_tensors)]
    node_dims = [[] for _ in range(n_tensors)]
    for k, parent in enumerate(attach, start=1):
        dim = int(rng.choice(bond_dims))
        lab = f"e{k}"
        for node in (parent, k):
            node_labels[node].append(lab)
            node_dims[node].append(dim)
    for k in range(n_tensors):
        if rng.random() < 0.5 or not node_labels[k]:
            node_labels[k].append(f"f{k}")
            node_dims[k].append(free_dim)
    tensors = []
    for labels, dims in zip(node_labels, node_dims):
        data = rng.normal(size=dims) + 1j * rng.normal(size=dims)
        tensors.append(Tensor(tuple(labels), data))
    return tensors


def matmul_triple_loop(a, b):
    """Naive O(mkn) matrix product, independent of any tensordot path."""
    m, kk = a.shape
    _, n = b.shape
    out = np.zeros((m, n), dtype=complex)
    for i in range(m):
        for j in range(n):
            acc = 0j
            for t in range(kk):
                acc += a[i, t] * b[t, j]
            out[i, j] = acc
    return out


def total_variation(p, q):
    return 0.5 * float(np.sum(np.abs(np.asarray(p) - np.asarray(q))))
