"""Result containers shared by the cut engine, the schedule LP and the CLI."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .network import NetworkError, check_mask, relays_from_mask, state_from_str, state_to_str

SUM_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class Schedule:
    """Probability weights over listen/transmit states (only nonzero entries kept)."""

    n: int
    weights: Mapping[int, float]

    def __post_init__(self):
        w = {}
        for s, p in dict(self.weights).items():
            s = check_mask(s, self.n)
            p = float(p)
            if p < -SUM_TOL:
                raise NetworkError(f"negative weight {p} on state {state_to_str(s, self.n)}")
            if p > 0:
                w[s] = w.get(s, 0.0) + p
        total = sum(w.values())
        if abs(total - 1.0) > SUM_TOL:
            raise NetworkError(f"schedule weights sum to {total!r}, not 1")
        object.__setattr__(self, "weights", dict(sorted(w.items())))

    @classmethod
    def point_mass(cls, n: int, state: int) -> "Schedule":
        return cls(n, {state: 1.0})

    @classmethod
    def two_state(cls, n: int) -> "Schedule":
        """Half the time everybody listens, half the time everybody transmits."""
        return cls(n, {0: 0.5, (1 << n) - 1: 0.5})

    def support(self, tol: float = 1e-9) -> int:
        return sum(1 for p in self.weights.values() if p > tol)

    def states(self):
        return list(self.weights)

    def probs(self):
        return list(self.weights.values())

    def marginal(self, keep: int) -> "Schedule":
        """Project onto the relays in ``keep`` (bit positions of this schedule)."""
        idx = [i for i in range(self.n) if keep >> i & 1]
        out: dict[int, float] = {}
        for s, p in self.weights.items():
            m = 0
            for j, i in enumerate(idx):
                if s >> i & 1:
                    m |= 1 << j
            out[m] = out.get(m, 0.0) + p
        return Schedule(len(idx), out)

    def to_dict(self) -> dict:
        return {state_to_str(s, self.n): p for s, p in self.weights.items()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, obj: Mapping[str, float]) -> "Schedule":
        if not obj:
            raise NetworkError("empty schedule")
        lens = {len(k) for k in obj}
        if len(lens) != 1:
            raise NetworkError("schedule states must all have the same length")
        return cls(lens.pop(), {state_from_str(k): v for k, v in obj.items()})

    @classmethod
    def from_json(cls, text: str) -> "Schedule":
        return cls.from_dict(json.loads(text))

    def __repr__(self):
        return f"Schedule({self.to_dict()})"


@dataclass(frozen=True)
class CapacityResult:
    """A capacity value with the witnesses that certify it.

    ``min_cut`` is a cut attaining ``value`` (under ``schedule`` for HD).
    For the HD LP ``cut_mixture`` is the dual certificate: a distribution over
    cuts whose best-responding state yields ``upper_bound``.
    """

    value: float
    min_cut: int | None
    schedule: Schedule | None = None
    mode: str = "HD"
    n: int = 0
    upper_bound: float | None = None
    cut_mixture: dict | None = field(default=None, repr=False)
    exact_value: Fraction | None = None
    iterations: int = 0

    def to_dict(self) -> dict:
        d = {"mode": self.mode, "value": self.value}
        if self.min_cut is not None:
            d["min_cut"] = list(relays_from_mask(self.min_cut))
        if self.schedule is not None:
            d["schedule"] = self.schedule.to_dict()
            d["support"] = self.schedule.support()
        if self.upper_bound is not None:
            d["upper_bound"] = self.upper_bound
        if self.exact_value is not None:
            d["exact_value"] = str(self.exact_value)
        return d
