"""MPC-targeted stimulus sizing.

Two transmission modes: ``first_round`` counts only the initial spending
(``stimulus * mpc``); ``multiplier`` uses the geometric tax multiplier
``mpc / (1 - mpc)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

SHARE_TOL = 1e-9


class Mode(str, Enum):
    FIRST_ROUND = "first_round"
    MULTIPLIER = "multiplier"


class DivergentMultiplierError(ValueError):
    pass


def _check_mpc(mpc: float, mode: Mode) -> None:
    if not 0 < mpc <= 1:
        raise ValueError(f"MPC must lie in (0, 1], got {mpc}")
    if mode is Mode.MULTIPLIER and mpc >= 1:
        raise DivergentMultiplierError(f"multiplier diverges at MPC={mpc}")


def ad_impact(stimulus: float, mpc: float, mode: Mode | str = Mode.FIRST_ROUND) -> float:
    """Aggregate-demand increase produced by handing out ``stimulus``."""
    mode = Mode(mode)
    if stimulus < 0:
        raise ValueError("stimulus must be >= 0")
    _check_mpc(mpc, mode)
    if mode is Mode.FIRST_ROUND:
        return stimulus * mpc
    return stimulus * mpc / (1 - mpc)


def required_stimulus(gap: float, mpc: float, mode: Mode | str = Mode.FIRST_ROUND) -> float:
    """Stimulus that closes a recessionary gap of size ``gap``."""
    mode = Mode(mode)
    if gap <= 0:
        raise ValueError("gap must be positive")
    _check_mpc(mpc, mode)
    if mode is Mode.FIRST_ROUND:
        return gap / mpc
    return gap * (1 - mpc) / mpc


def effectiveness_ratio(mpc_targeted: float, mpc_blanket: float,
                        mode: Mode | str = Mode.FIRST_ROUND) -> float:
    """AD bang-per-buck of a targeted transfer relative to a blanket one."""
    return ad_impact(1.0, mpc_targeted, mode) / ad_impact(1.0, mpc_blanket, mode)


@dataclass(frozen=True)
class IncomeGroup:
    label: str
    mpc: float
    population_share: float

    def __post_init__(self):
        if not 0 < self.mpc <= 1:
            raise ValueError(f"{self.label}: MPC must lie in (0, 1], got {self.mpc}")
        if not 0 <= self.population_share <= 1:
            raise ValueError(f"{self.label}: population share must lie in [0, 1]")

    @classmethod
    def parse(cls, text: str) -> IncomeGroup:
        """Parse the CLI form ``label:share:mpc``."""
        try:
            label, share, mpc = text.rsplit(":", 2)
            return cls(label, float(mpc), float(share))
        except ValueError as exc:
            raise ValueError(f"bad group spec {text!r} (want label:share:mpc): {exc}") from None


@dataclass(frozen=True)
class Allocation:
    group: IncomeGroup
    stimulus: float
    induced_ad: float


@dataclass(frozen=True)
class StimulusPlan:
    """MPC-aware plan, optionally contrasted with a uniform-MPC (naive) plan.

    ``naive_*`` fields are filled only when an assumed uniform MPC is given.
    ``over_stimulation`` is the naive plan's true AD impact minus the gap.
    """

    gap: float
    mode: Mode
    allocations: tuple[Allocation, ...]
    assumed_mpc: float | None = None
    naive_total: float | None = None
    naive_true_impact: float | None = None
    over_stimulation: float | None = None

    @property
    def total_stimulus(self) -> float:
        return sum(a.stimulus for a in self.allocations)

    @property
    def total_induced(self) -> float:
        return sum(a.induced_ad for a in self.allocations)

    @property
    def over_stimulates(self) -> bool | None:
        if self.over_stimulation is None:
            return None
        return self.over_stimulation > 0

    def to_csv(self) -> str:
        lines = ["group,share,mpc,stimulus,induced_ad"]
        for a in self.allocations:
            g = a.group
            lines.append(f"{g.label},{g.population_share!r},{g.mpc!r},{a.stimulus!r},{a.induced_ad!r}")
        return "\n".join(lines) + "\n"

    def as_dict(self) -> dict:
        return {
            "gap": self.gap,
            "mode": self.mode.value,
            "allocations": [
                {"group": a.group.label, "share": a.group.population_share, "mpc": a.group.mpc,
                 "stimulus": a.stimulus, "induced_ad": a.induced_ad}
                for a in self.allocations
            ],
            "total_stimulus": self.total_stimulus,
            "total_induced_ad": self.total_induced,
            "naive": None if self.assumed_mpc is None else {
                "assumed_mpc": self.assumed_mpc,
                "total_stimulus": self.naive_total,
                "true_impact": self.naive_true_impact,
                "over_stimulation": self.over_stimulation,
                "over_stimulates": self.over_stimulates,
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2) + "\n"


def naive_plan_impact(gap: float, groups: Sequence[IncomeGroup], assumed_mpc: float,
                      mode: Mode | str = Mode.FIRST_ROUND) -> tuple[float, float]:
    """Size a plan assuming every group has ``assumed_mpc``, then score it
    with the groups' true MPCs.  Returns (total stimulus, true AD impact)."""
    mode = Mode(mode)
    total = required_stimulus(gap, assumed_mpc, mode)
    impact = sum(ad_impact(total * g.population_share, g.mpc, mode) for g in groups)
    return total, impact


def allocate(gap: float, groups: Sequence[IncomeGroup], mode: Mode | str = Mode.FIRST_ROUND,
             assumed_mpc: float | None = None) -> StimulusPlan:
    """Split the gap across groups by population share and invert each
    group's MPC to get its stimulus."""
    mode = Mode(mode)
    if not groups:
        raise ValueError("need at least one income group")
    total_share = sum(g.population_share for g in groups)
    if abs(total_share - 1) > SHARE_TOL:
        raise ValueError(f"population shares sum to {total_share}, not 1")
    allocations = []
    for g in groups:
        if g.population_share <= 0:
            raise ValueError(f"{g.label}: zero-share group cannot receive a positive stimulus")
        induced = gap * g.population_share
        allocations.append(Allocation(g, required_stimulus(induced, g.mpc, mode), induced))

    if assumed_mpc is None:
        return StimulusPlan(gap, mode, tuple(allocations))
    naive_total, impact = naive_plan_impact(gap, groups, assumed_mpc, mode)
    return StimulusPlan(gap, mode, tuple(allocations), assumed_mpc, naive_total, impact,
                        impact - gap)
