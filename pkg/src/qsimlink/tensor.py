"""Labeled dense tensors, pairwise contraction, and contraction planning.

A tensor network here is a list of labeled tensors in which every index name
is carried by at most two tensors; contracting the network sums over each
shared index. Contraction order changes cost but never the result, so a plan
is just a binary reduction schedule over tensor ids: inputs are numbered
``0..m-1`` and each step's output gets the next free id (``m``, ``m+1``, ...).
"""

from dataclasses import dataclass
from itertools import combinations
from math import prod

import numpy as np

from .errors import ContractionError


@dataclass(frozen=True)
class Tensor:
    """Dense complex tensor with a distinct name per axis.

    ``data`` is stored row-major with respect to label order; ``dims`` is its
    shape.
    """

    labels: tuple
    data: np.ndarray

    def __post_init__(self):
        labels = tuple(self.labels)
        data = np.asarray(self.data, dtype=np.complex128)
        if len(set(labels)) != len(labels):
            raise ContractionError(f"duplicate labels in tensor: {labels}")
        if data.ndim != len(labels):
            raise ContractionError(
                f"{len(labels)} labels but data has {data.ndim} axes"
            )
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "data", data)

    @property
    def dims(self) -> tuple:
        return self.data.shape

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.data, other.data)


@dataclass(frozen=True)
class ContractionPlan:
    """Pairwise reduction schedule: step k contracts two live ids into id m+k.

    ``cost_estimate`` is the total element count of every intermediate the
    plan produces (0 for a single-tensor network).
    """

    steps: tuple
    cost_estimate: int


def contract(a: Tensor, b: Tensor) -> Tensor:
    """Sum over all labels shared by ``a`` and ``b``.

    Result labels are a's free labels followed by b's free labels. With one
    shared label between two matrices this is matrix multiplication; with no
    shared labels it is the outer product.
    """
    shared = [lab for lab in a.labels if lab in b.labels]
    for lab in shared:
        da = a.dims[a.labels.index(lab)]
        db = b.dims[b.labels.index(lab)]
        if da != db:
            raise ContractionError(
                f"shared label {lab!r} has dimension {da} in one tensor and {db} in the other"
            )
    axes_a = [a.labels.index(lab) for lab in shared]
    axes_b = [b.labels.index(lab) for lab in shared]
    out = np.tensordot(a.data, b.data, axes=(axes_a, axes_b))
    out_labels = tuple(lab for lab in a.labels if lab not in shared) + tuple(
        lab for lab in b.labels if lab not in shared
    )
    return Tensor(out_labels, out)


def transpose_relabel(t: Tensor, new_label_order) -> Tensor:
    """Permute axes so the row-major layout follows ``new_label_order``."""
    new_order = tuple(new_label_order)
    if sorted(new_order) != sorted(t.labels):
        raise ContractionError(
            f"{new_order} is not a permutation of labels {t.labels}"
        )
    perm = [t.labels.index(lab) for lab in new_order]
    # asarray with order="C" keeps 0-d tensors 0-d (ascontiguousarray would not)
    return Tensor(new_order, np.asarray(np.transpose(t.data, perm), order="C"))


def _network_label_map(network):
    """Map label -> (dimension, multiplicity), validating consistency."""
    seen = {}
    for t in network:
        for lab, dim in zip(t.labels, t.dims):
            if lab in seen:
                if seen[lab][0] != dim:
                    raise ContractionError(
                        f"label {lab!r} has inconsistent dimensions across the network"
                    )
                seen[lab] = (dim, seen[lab][1] + 1)
            else:
                seen[lab] = (dim, 1)
    for lab, (_, count) in seen.items():
        if count > 2:
            raise ContractionError(
                f"label {lab!r} appears on {count} tensors; at most two supported"
            )
    return seen


def _pair_result_labels(la, lb):
    shared = set(la) & set(lb)
    return tuple(x for x in la if x not in shared) + tuple(
        x for x in lb if x not in shared
    )


def plan_contraction(network) -> ContractionPlan:
    """Greedy contraction plan: repeatedly contract the pair whose result
    tensor has the fewest elements, ties broken by the lowest id pair.
    """
    network = list(network)
    if not network:
        raise ContractionError("empty network")
    _network_label_map(network)

    # Planning needs only shapes: id -> (labels, label->dim).
    live = {
        i: (t.labels, dict(zip(t.labels, t.dims))) for i, t in enumerate(network)
    }
    next_id = len(network)
    steps = []
    cost = 0
    while len(live) > 1:
        best = None
        for i, j in combinations(sorted(live), 2):
            labels_i, dims_i = live[i]
            labels_j, dims_j = live[j]
            out_labels = _pair_result_labels(labels_i, labels_j)
            size = prod({**dims_i, **dims_j}[lab] for lab in out_labels)
            key = (size, i, j)
            if best is None or key < best[0]:
                best = (key, i, j, out_labels)
        _, i, j, out_labels = best
        labels_i, dims_i = live.pop(i)
        labels_j, dims_j = live.pop(j)
        merged = {**dims_i, **dims_j}
        live[next_id] = (out_labels, {lab: merged[lab] for lab in out_labels})
        steps.append((i, j))
        cost += prod(live[next_id][1].values())
        next_id += 1
    return ContractionPlan(tuple(steps), cost)


def sequential_plan(network, order=None) -> ContractionPlan:
    """Left-fold plan over the tensors in ``order`` (default: given order).

    Useful as an alternative schedule for cross-checking plan independence.
    """
    network = list(network)
    if not network:
        raise ContractionError("empty network")
    _network_label_map(network)
    order = list(range(len(network))) if order is None else list(order)
    if sorted(order) != list(range(len(network))):
        raise ContractionError("order must be a permutation of network indices")

    shapes = {
        i: (t.labels, dict(zip(t.labels, t.dims))) for i, t in enumerate(network)
    }
    steps = []
    cost = 0
    acc = order[0]
    next_id = len(network)
    for j in order[1:]:
        labels_a, dims_a = shapes[acc]
        labels_b, dims_b = shapes[j]
        out_labels = _pair_result_labels(labels_a, labels_b)
        merged = {**dims_a, **dims_b}
        shapes[next_id] = (out_labels, {lab: merged[lab] for lab in out_labels})
        steps.append((acc, j))
        cost += prod(shapes[next_id][1].values())
        acc = next_id
        next_id += 1
    return ContractionPlan(tuple(steps), cost)


def contract_network(network, plan: ContractionPlan) -> Tensor:
    """Execute ``plan`` over ``network`` and return the single result tensor."""
    network = list(network)
    if not network:
        raise ContractionError("empty network")
    _network_label_map(network)
    if len(plan.steps) != len(network) - 1:
        raise ContractionError(
            f"plan has {len(plan.steps)} steps for a {len(network)}-tensor network"
        )
    live = dict(enumerate(network))
    next_id = len(network)
    for i, j in plan.steps:
        if i == j or i not in live or j not in live:
            raise ContractionError(f"plan step ({i}, {j}) references unknown ids")
        live[next_id] = contract(live.pop(i), live.pop(j))
        next_id += 1
    (result,) = live.values()
    return result
