"""Charitable giving under tax incentives, and transfer-channel comparison.

The tax price of giving a dollar is ``1 - marginal deduction rate``.  With
price elasticity ``eps`` (about -4 in the cited estimate), a 1% rise in the
price cuts giving by about 4%.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from enum import Enum

DEFAULT_ELASTICITY = -4.0


class ResponseMode(str, Enum):
    CONSTANT_ELASTICITY = "constant_elasticity"
    POINT_ELASTICITY = "point_elasticity"


def tax_price(deduction_rate: float) -> float:
    if not 0 <= deduction_rate < 1:
        raise ValueError("deduction rate must lie in [0, 1)")
    return 1.0 - deduction_rate


@dataclass(frozen=True)
class GivingScenario:
    baseline_giving: float
    baseline_price: float
    new_price: float
    elasticity: float = DEFAULT_ELASTICITY
    mode: ResponseMode = ResponseMode.CONSTANT_ELASTICITY

    def __post_init__(self):
        object.__setattr__(self, "mode", ResponseMode(self.mode))
        if self.baseline_giving < 0:
            raise ValueError("baseline giving must be >= 0")
        if not 0 < self.baseline_price <= 1:
            raise ValueError("baseline price must lie in (0, 1]")
        if self.new_price <= 0:
            raise ValueError("new price must be positive")
        if self.new_price > 1:
            raise ValueError("new price must lie in (0, 1]")


@dataclass(frozen=True)
class GivingResponse:
    giving: float
    floored: bool = False


def giving_response(scenario: GivingScenario) -> GivingResponse:
    """Giving after the price change.

    ``constant_elasticity``: ``G0 * (p1/p0) ** eps``.
    ``point_elasticity``: ``G0 * (1 + eps * (p1 - p0) / p0)``, floored at 0.
    """
    g0, p0, p1, eps = (scenario.baseline_giving, scenario.baseline_price,
                       scenario.new_price, scenario.elasticity)
    if scenario.mode is ResponseMode.CONSTANT_ELASTICITY:
        return GivingResponse(g0 * (p1 / p0) ** eps)
    g1 = g0 * (1 + eps * (p1 - p0) / p0)
    if g1 < 0:
        return GivingResponse(0.0, True)
    return GivingResponse(g1)


@dataclass(frozen=True)
class ChannelComparison:
    via_tax: float
    via_charity: float
    per_public_dollar: tuple[float | None, float | None]

    def as_dict(self) -> dict:
        d = asdict(self)
        d["per_public_dollar"] = {"tax": self.per_public_dollar[0],
                                  "charity": self.per_public_dollar[1]}
        return d


def channel_comparison(public_transfer: float, leak: float, incentive_cost: float,
                       induced_giving: float) -> ChannelComparison:
    """Dollars reaching recipients through a leaky public transfer versus
    through the extra giving an incentive induces.  Per-dollar ratios are
    None when their denominator is zero."""
    if min(public_transfer, incentive_cost, induced_giving) < 0:
        raise ValueError("amounts must be >= 0")
    if not 0 <= leak < 1:
        raise ValueError("leak must lie in [0, 1)")
    via_tax = public_transfer * (1 - leak)
    per_tax = via_tax / public_transfer if public_transfer > 0 else None
    per_charity = induced_giving / incentive_cost if incentive_cost > 0 else None
    return ChannelComparison(via_tax, induced_giving, (per_tax, per_charity))


def to_json(scenario: GivingScenario, response: GivingResponse,
            comparison: ChannelComparison | None = None) -> str:
    doc = {
        "scenario": {**asdict(scenario), "mode": scenario.mode.value},
        "response": asdict(response),
        "change": response.giving - scenario.baseline_giving,
    }
    if comparison is not None:
        doc["channels"] = comparison.as_dict()
    return json.dumps(doc, indent=2) + "\n"
