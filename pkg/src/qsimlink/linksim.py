"""Discrete-event simulation of a heralded entanglement-generation link.

Time advances in fixed, non-overlapping slots. While no pair is stored, each
slot is one generation attempt that succeeds with probability ``p_gen`` and
is heralded by a classical message (recorded as an event). A stored pair
loses fidelity once per elapsed slot following the exponential decay law,
is discarded the moment it falls below the minimal-fidelity threshold
``f_min`` (strict comparison: boundary equality keeps the pair), and is
delivered once it has survived ``hold_slots`` slots in memory. The link has
a single memory: a stored pair blocks new generation, and delivery or
discard frees the memory starting with the next slot.
"""

import csv
import io
import json
from dataclasses import asdict, dataclass

from .noise import MIN_WERNER_FIDELITY, decay_fidelity, werner_from_fidelity
from .rng import DEFAULT_SEED, STREAM_LINK, stream_rng
from .states import DensityMatrix

ATTEMPT_FAIL = "attempt_fail"
HERALD_SUCCESS = "herald_success"
DISCARD_BELOW_THRESHOLD = "discard_below_threshold"
DELIVER = "deliver"

EVENT_KINDS = (ATTEMPT_FAIL, HERALD_SUCCESS, DISCARD_BELOW_THRESHOLD, DELIVER)


@dataclass(frozen=True)
class LinkConfig:
    p_gen: float
    slot_duration: float
    tau: float
    f_init: float
    f_min: float
    hold_slots: int
    n_slots: int
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        if not 0.0 <= self.p_gen <= 1.0:
            raise ValueError("p_gen must be in [0, 1]")
        if self.slot_duration <= 0:
            raise ValueError("slot_duration must be positive")
        if self.tau <= 0:
            raise ValueError("tau must be positive")
        if not MIN_WERNER_FIDELITY <= self.f_init <= 1.0:
            raise ValueError("f_init must be in [1/4, 1]")
        if not MIN_WERNER_FIDELITY <= self.f_min <= self.f_init:
            raise ValueError("f_min must be in [1/4, f_init]")
        if self.hold_slots < 0:
            raise ValueError("hold_slots must be nonnegative")
        if self.n_slots < 1:
            raise ValueError("n_slots must be positive")


@dataclass(frozen=True)
class LinkEvent:
    slot: int
    kind: str
    fidelity: float | None  # None for failed attempts (no pair exists)


@dataclass(frozen=True)
class LinkStats:
    attempts: int
    successes: int
    deliveries: int
    discards: int
    mean_fidelity_at_delivery: float | None
    mean_slots_to_first_success: float | None


@dataclass(frozen=True)
class LinkTrace:
    events: tuple
    stats: LinkStats

    def to_json(self) -> str:
        """Deterministic JSON form (sorted keys, shortest-round-trip floats)."""
        payload = {
            "events": [asdict(e) for e in self.events],
            "stats": asdict(self.stats),
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"

    def stats_csv(self) -> str:
        """Header plus one data row with the summary statistics."""
        stats = asdict(self.stats)
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(stats))
        writer.writeheader()
        writer.writerow({k: ("" if v is None else v) for k, v in stats.items()})
        return buf.getvalue()


def recompute_stats(events) -> LinkStats:
    """Rebuild the summary statistics from the event log alone."""
    attempts = sum(1 for e in events if e.kind in (ATTEMPT_FAIL, HERALD_SUCCESS))
    successes = sum(1 for e in events if e.kind == HERALD_SUCCESS)
    deliveries = [e for e in events if e.kind == DELIVER]
    discards = sum(1 for e in events if e.kind == DISCARD_BELOW_THRESHOLD)
    mean_fid = (
        sum(e.fidelity for e in deliveries) / len(deliveries) if deliveries else None
    )
    # Slots to success for each generation campaign: the failed attempts
    # immediately preceding a herald, plus the heralding slot itself.
    runs = []
    fails = 0
    for e in events:
        if e.kind == ATTEMPT_FAIL:
            fails += 1
        elif e.kind == HERALD_SUCCESS:
            runs.append(fails + 1)
            fails = 0
    mean_slots = sum(runs) / len(runs) if runs else None
    return LinkStats(
        attempts=attempts,
        successes=successes,
        deliveries=len(deliveries),
        discards=discards,
        mean_fidelity_at_delivery=mean_fid,
        mean_slots_to_first_success=mean_slots,
    )


def run_link_simulation(cfg: LinkConfig) -> LinkTrace:
    """Run the slot loop for cfg.n_slots slots; deterministic given cfg.seed."""
    rng = stream_rng(cfg.seed, STREAM_LINK)
    events = []
    pair_fidelity = None
    pair_age = 0
    for slot in range(cfg.n_slots):
        if pair_fidelity is None:
            if rng.random() < cfg.p_gen:
                pair_fidelity = cfg.f_init
                pair_age = 0
                events.append(LinkEvent(slot, HERALD_SUCCESS, pair_fidelity))
            else:
                events.append(LinkEvent(slot, ATTEMPT_FAIL, None))
                continue
        else:
            pair_fidelity = decay_fidelity(pair_fidelity, cfg.slot_duration, cfg.tau)
            pair_age += 1
            if pair_fidelity < cfg.f_min:
                events.append(
                    LinkEvent(slot, DISCARD_BELOW_THRESHOLD, pair_fidelity)
                )
                pair_fidelity = None
                continue
        if pair_age >= cfg.hold_slots:
            events.append(LinkEvent(slot, DELIVER, pair_fidelity))
            pair_fidelity = None
    return LinkTrace(tuple(events), recompute_stats(events))


def analytic_delivery_fidelity(cfg: LinkConfig) -> float:
    """Closed-form fidelity of every delivered pair (decay is deterministic)."""
    return decay_fidelity(
        cfg.f_init, cfg.hold_slots * cfg.slot_duration, cfg.tau
    )


def materialize_pair(fidelity: float) -> DensityMatrix:
    """Full 4x4 state of a stored pair with the given fidelity."""
    return werner_from_fidelity(fidelity)
