"""Command-line front end.

Every command builds a RunReport and emits it as deterministic JSON (sorted
keys, shortest-round-trip float formatting), so identical flags plus an
identical seed reproduce byte-identical output. Seeds default to the fixed
constant ``DEFAULT_SEED``; pass ``--fresh-seed`` to draw one from OS entropy
(the effective seed is always echoed in the report).

Exit codes: 0 success, 2 parse/domain errors, 3 resource limits, 4 I/O.
Errors print one line of JSON to stderr.

Complex matrices serialize as nested lists with each entry a two-element
``[real, imag]`` array.
"""

import argparse
import json
import secrets
import sys
from dataclasses import dataclass

import numpy as np

from . import __version__
from .encoding import (
    superdense_send,
    superdense_success_probability,
    superdense_trials,
)
from .errors import CircuitParseError, ResourceLimitError
from .circuits import parse_circuit
from .encoding import bell_pair
from .linksim import LinkConfig, run_link_simulation
from .noise import decay_fidelity, werner_from_fidelity, werner_from_p
from .rng import DEFAULT_SEED, STREAM_TRIALS, stream_rng
from .simulator import strong_simulate, weak_simulate
from .states import fidelity

FORMAT_VERSION = 1


@dataclass
class RunReport:
    """Envelope for every CLI result: command, echoed inputs, outputs, seed."""

    command: str
    inputs: dict
    outputs: dict
    seed: int | None
    versions: dict

    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "inputs": _plain(self.inputs),
            "outputs": _plain(self.outputs),
            "seed": self.seed,
            "versions": self.versions,
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _plain(obj):
    """Recursively convert numpy containers/scalars to JSON-ready values."""
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [_plain(v) for v in obj.tolist()]
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    return obj


def _complex_matrix(m: np.ndarray):
    return [[[float(v.real), float(v.imag)] for v in row] for row in np.asarray(m)]


def _versions() -> dict:
    return {"artifact": __version__, "format": FORMAT_VERSION}


def _effective_seed(args, fallback: int = DEFAULT_SEED) -> int:
    if getattr(args, "fresh_seed", False):
        return secrets.randbits(63)
    return args.seed if args.seed is not None else fallback


def _cmd_simulate(args) -> RunReport:
    with open(args.circuit_file, encoding="utf-8") as fh:
        text = fh.read()
    circuit = parse_circuit(text)
    inputs = {
        "circuit_file": args.circuit_file,
        "n_qubits": circuit.n_qubits,
        "n_gates": len(circuit.gates),
        "measured_qubits": list(circuit.measured_qubits),
        "backend": args.backend,
        "mode": args.mode,
        "chi_max": args.chi_max,
        "trunc_tol": args.trunc_tol,
    }
    if args.mode == "strong":
        dist = strong_simulate(
            circuit,
            backend=args.backend,
            chi_max=args.chi_max,
            trunc_tol=args.trunc_tol,
        )
        outputs = {
            "n_bits": dist.n_bits,
            "probabilities": dist.probabilities,
        }
        return RunReport("simulate", inputs, outputs, None, _versions())
    if args.shots is None:
        raise ValueError("weak mode requires --shots")
    seed = _effective_seed(args)
    samples = weak_simulate(
        circuit,
        backend=args.backend,
        shots=args.shots,
        seed=seed,
        chi_max=args.chi_max,
        trunc_tol=args.trunc_tol,
    )
    inputs["shots"] = args.shots
    outputs = {
        "n_bits": len(next(iter(samples.counts))),
        "counts": dict(sorted(samples.counts.items())),
    }
    return RunReport("simulate", inputs, outputs, seed, _versions())


_LINK_FIELDS = (
    "p_gen",
    "slot_duration",
    "tau",
    "f_init",
    "f_min",
    "hold_slots",
    "n_slots",
)


def _load_link_config(args) -> LinkConfig:
    """Merge an optional JSON config file with CLI flags (flags win)."""
    values = {}
    config_seed = None
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            loaded = json.load(fh)
        unknown = set(loaded) - set(_LINK_FIELDS) - {"seed"}
        if unknown:
            raise ValueError(f"unknown link config keys: {sorted(unknown)}")
        config_seed = loaded.pop("seed", None)
        values.update(loaded)
    for name in _LINK_FIELDS:
        flag = getattr(args, name)
        if flag is not None:
            values[name] = flag
    missing = [name for name in _LINK_FIELDS if name not in values]
    if missing:
        raise ValueError(f"missing link config fields: {missing}")
    seed = _effective_seed(
        args, config_seed if config_seed is not None else DEFAULT_SEED
    )
    return LinkConfig(seed=seed, **values)


def _cmd_linksim(args) -> RunReport:
    cfg = _load_link_config(args)
    seed = cfg.seed
    trace = run_link_simulation(cfg)
    if args.stats_csv:
        with open(args.stats_csv, "w", encoding="utf-8", newline="") as fh:
            fh.write(trace.stats_csv())
    inputs = {
        "p_gen": cfg.p_gen,
        "slot_duration": cfg.slot_duration,
        "tau": cfg.tau,
        "f_init": cfg.f_init,
        "f_min": cfg.f_min,
        "hold_slots": cfg.hold_slots,
        "n_slots": cfg.n_slots,
    }
    outputs = json.loads(trace.to_json())
    return RunReport("linksim", inputs, outputs, seed, _versions())


def _cmd_fidelity(args) -> RunReport:
    if args.tool == "werner-from-p":
        rho = werner_from_p(args.p)
        outputs = {
            "fidelity": fidelity(rho, bell_pair()),
            "matrix": _complex_matrix(rho.matrix),
        }
        inputs = {"tool": args.tool, "p": args.p}
    elif args.tool == "werner-from-f":
        rho = werner_from_fidelity(args.f)
        outputs = {
            "p": (4.0 * args.f - 1.0) / 3.0,
            "matrix": _complex_matrix(rho.matrix),
        }
        inputs = {"tool": args.tool, "f": args.f}
    else:
        result = decay_fidelity(args.f, args.dt, args.tau)
        outputs = {"fidelity": result}
        inputs = {"tool": args.tool, "f": args.f, "dt": args.dt, "tau": args.tau}
    return RunReport("fidelity", inputs, outputs, None, _versions())


def _cmd_superdense(args) -> RunReport:
    seed = _effective_seed(args)
    f = 1.0 if args.fidelity is None else args.fidelity
    pair = werner_from_fidelity(f)
    analytic = superdense_success_probability(args.a, args.b, pair)
    result = superdense_send(
        args.a, args.b, pair, rng=stream_rng(seed, STREAM_TRIALS)
    )
    outputs = {
        "decoded_bits": list(result.decoded_bits),
        "success": result.success,
        "analytic_success_probability": analytic,
    }
    if args.trials:
        outputs["empirical_success_rate"] = superdense_trials(
            args.a, args.b, pair, args.trials, seed=seed
        )
    inputs = {
        "a": args.a,
        "b": args.b,
        "fidelity": f,
        "trials": args.trials,
    }
    return RunReport("superdense", inputs, outputs, seed, _versions())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsimlink",
        description="Quantum circuit and entanglement-link simulator.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="run a circuit file")
    sim.add_argument("circuit_file")
    sim.add_argument("--backend", choices=("statevector", "mps"), default="statevector")
    sim.add_argument("--mode", choices=("strong", "weak"), default="strong")
    sim.add_argument("--shots", type=int, help="sample count (weak mode)")
    sim.add_argument("--chi-max", type=int, default=None, help="MPS bond cap")
    sim.add_argument("--trunc-tol", type=float, default=0.0, help="MPS truncation tolerance")
    _seed_flags(sim)
    _out_flag(sim)
    sim.set_defaults(func=_cmd_simulate)

    link = sub.add_parser("linksim", help="run the heralded-link event simulation")
    link.add_argument("--config", help="JSON file with LinkConfig fields")
    link.add_argument("--p-gen", type=float)
    link.add_argument("--slot-duration", type=float)
    link.add_argument("--tau", type=float)
    link.add_argument("--f-init", type=float)
    link.add_argument("--f-min", type=float)
    link.add_argument("--hold-slots", type=int)
    link.add_argument("--n-slots", type=int)
    link.add_argument("--stats-csv", help="also write summary stats as CSV")
    _seed_flags(link)
    _out_flag(link)
    link.set_defaults(func=_cmd_linksim)

    fid = sub.add_parser("fidelity", help="Werner-pair and decay calculators")
    fid_sub = fid.add_subparsers(dest="tool", required=True)
    wp = fid_sub.add_parser("werner-from-p")
    wp.add_argument("--p", type=float, required=True)
    _out_flag(wp)
    wp.set_defaults(func=_cmd_fidelity, tool="werner-from-p")
    wf = fid_sub.add_parser("werner-from-f")
    wf.add_argument("--f", type=float, required=True)
    _out_flag(wf)
    wf.set_defaults(func=_cmd_fidelity, tool="werner-from-f")
    dc = fid_sub.add_parser("decay")
    dc.add_argument("--f", type=float, required=True)
    dc.add_argument("--dt", type=float, required=True)
    dc.add_argument("--tau", type=float, required=True)
    _out_flag(dc)
    dc.set_defaults(func=_cmd_fidelity, tool="decay")

    sd = sub.add_parser("superdense", help="superdense-coding round")
    sd.add_argument("--a", type=int, required=True, choices=(0, 1))
    sd.add_argument("--b", type=int, required=True, choices=(0, 1))
    sd.add_argument("--fidelity", type=float, help="Werner pair fidelity (default: perfect pair)")
    sd.add_argument("--trials", type=int, default=100000, help="sampled rounds (0 disables)")
    _seed_flags(sd)
    _out_flag(sd)
    sd.set_defaults(func=_cmd_superdense)

    return parser


def _seed_flags(p):
    p.add_argument("--seed", type=int, default=None, help=f"RNG seed (default {DEFAULT_SEED})")
    p.add_argument(
        "--fresh-seed",
        action="store_true",
        help="draw the seed from OS entropy instead of the fixed default",
    )


def _out_flag(p):
    p.add_argument("--out", help="write the JSON report here instead of stdout")


def _fail(kind: str, exc: Exception, code: int) -> int:
    sys.stderr.write(json.dumps({"error": kind, "message": str(exc)}) + "\n")
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = args.func(args)
        text = report.to_json()
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except CircuitParseError as exc:
        return _fail("parse", exc, 2)
    except ValueError as exc:
        return _fail("domain", exc, 2)
    except ResourceLimitError as exc:
        return _fail("resource-limit", exc, 3)
    except OSError as exc:
        return _fail("io", exc, 4)
    return 0


if __name__ == "__main__":
    sys.exit(main())
