"""Benchmark the compiled gate kernels against the pure-numpy fallback.

Run from the repository root after installing the package:

    python3 benchmarks/bench_kernels.py [--qubits 12 16 20] [--repeats 5]

Times single- and two-qubit gate application on random states plus a full
GHZ-preparation strong simulation, and reports the compiled/python speedup.
"""

import argparse
import time

import numpy as np

from qsimlink import parse_circuit, strong_simulate
from qsimlink._kernels import _fallback

try:
    from qsimlink._kernels import _gatekernels
except ImportError:
    _gatekernels = None


def _random_state(rng, n):
    amps = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
    return np.ascontiguousarray(amps / np.linalg.norm(amps))


def _random_unitary(rng, dim):
    q, _ = np.linalg.qr(rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim)))
    return np.ascontiguousarray(q)


def _best_of(repeats, fn):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench_kernels(n, repeats, rng):
    state = _random_state(rng, n)
    u2 = _random_unitary(rng, 2)
    u4 = _random_unitary(rng, 4)
    q_mid, q_hi = n // 2, n - 1
    rows = []
    for label, fn_name, args in (
        (f"1q gate  (n={n})", "apply_single_qubit", (u2, q_mid, n)),
        (f"2q gate  (n={n})", "apply_two_qubit", (u4, 0, q_hi, n)),
    ):
        python_t = _best_of(repeats, lambda: getattr(_fallback, fn_name)(state, *args))
        if _gatekernels is not None:
            cython_t = _best_of(
                repeats, lambda: getattr(_gatekernels, fn_name)(state, *args)
            )
        else:
            cython_t = None
        rows.append((label, python_t, cython_t))
    return rows


def bench_ghz_simulation(n, repeats):
    lines = [f"qubits {n}", "h 0"] + [f"cnot {q} {q + 1}" for q in range(n - 1)]
    circuit = parse_circuit("\n".join(lines) + "\n")
    return _best_of(repeats, lambda: strong_simulate(circuit))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--qubits", type=int, nargs="+", default=[12, 16, 20])
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    if _gatekernels is None:
        print("compiled extension not available; timing the fallback only\n")

    rng = np.random.default_rng(0)
    rows = []
    for n in args.qubits:
        rows.extend(bench_kernels(n, args.repeats, rng))

    width = max(len(r[0]) for r in rows)
    header = f"{'kernel':<{width}}  {'python':>10}  {'cython':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, python_t, cython_t in rows:
        if cython_t is None:
            print(f"{label:<{width}}  {python_t * 1e3:>8.3f}ms  {'-':>10}  {'-':>8}")
        else:
            print(
                f"{label:<{width}}  {python_t * 1e3:>8.3f}ms  {cython_t * 1e3:>8.3f}ms"
                f"  {python_t / cython_t:>7.2f}x"
            )

    n = max(args.qubits)
    t = bench_ghz_simulation(n, args.repeats)
    backend = "cython" if _gatekernels is not None else "python"
    print(f"\nGHZ({n}) strong simulation with selected kernels ({backend}): {t * 1e3:.1f}ms")


if __name__ == "__main__":
    main()
