"""NPV marginal cost-benefit test for a subsidized student-loan program.

The government lends at a subsidized rate ``r_sl`` while its own cost of
funds is the free-market rate ``r_fm``.  Its marginal cost in year ``t`` is
the foregone spread on the outstanding balance, ``(r_fm - r_sl) * LB_t``,
discounted at the social rate over enrollment through the last repayment
year.  Benefits are three per-year streams (human-capital value added,
welfare-program savings, positive externalities) over their own windows.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field, replace
from enum import Enum
from typing import Mapping, Sequence

import numpy as np


class Disbursement(str, Enum):
    LUMP_T0 = "lump_t0"
    EQUAL_T0_TO_T3 = "equal_t0_to_t3"


@dataclass(frozen=True)
class ProgramTimeline:
    """Years measured from enrollment."""

    t_enroll: int = 0
    t_grad: int = 4
    t_work_start: int = 5
    t_repay_end: int = 29
    t_retire: int = 45
    t_death: int = 57

    def __post_init__(self):
        if not (self.t_enroll < self.t_grad < self.t_work_start <= self.t_repay_end
                < self.t_retire < self.t_death):
            raise ValueError(f"timeline out of order: {self}")

    @property
    def n_payments(self) -> int:
        return self.t_repay_end - self.t_work_start + 1


@dataclass(frozen=True)
class RateSet:
    r_fm: float
    r_sl: float
    i_social: float

    def __post_init__(self):
        for name in ("r_fm", "r_sl", "i_social"):
            if getattr(self, name) <= -1:
                raise ValueError(f"{name} must exceed -1")
        if self.r_sl > self.r_fm:
            raise ValueError("subsidized rate above the free-market rate (negative subsidy)")

    @property
    def spread(self) -> float:
        return self.r_fm - self.r_sl


@dataclass(frozen=True)
class AmortizationSchedule:
    """Year-by-year balance and repayment cash flows.

    ``balance[t]`` is the balance outstanding during year ``t`` and
    ``payment[t]`` is paid at the end of year ``t``, so
    ``balance[t+1] = balance[t] * (1 + r_sl) - payment[t]`` in repayment.
    Rows run from enrollment through ``t_repay_end + 1`` (the paid-off row).
    """

    principal: float
    r_sl: float
    timeline: ProgramTimeline
    balance: np.ndarray
    payment: np.ndarray

    @property
    def years(self) -> np.ndarray:
        return np.arange(len(self.balance))

    @property
    def annuity(self) -> float:
        return float(self.payment[self.timeline.t_work_start])

    def rows(self) -> list[tuple[int, float, float]]:
        return [(int(t), float(b), float(p)) for t, b, p in zip(self.years, self.balance, self.payment)]

    def to_csv(self) -> str:
        lines = ["t,balance,payment"]
        lines += [f"{t},{b!r},{p!r}" for t, b, p in self.rows()]
        return "\n".join(lines) + "\n"


def level_payment(balance: float, rate: float, n: int) -> float:
    if rate == 0:
        return balance / n
    # expm1/log1p keep the annuity factor accurate for tiny rates
    return balance * rate / -math.expm1(-n * math.log1p(rate))


def build_schedule(principal: float, rates: RateSet, timeline: ProgramTimeline = ProgramTimeline(),
                   disbursement: Disbursement | str = Disbursement.LUMP_T0) -> AmortizationSchedule:
    """Disburse, hold the balance flat through school, then amortize with a
    level annuity at the subsidized rate."""
    disbursement = Disbursement(disbursement)
    if principal <= 0:
        raise ValueError("principal must be positive")
    tl = timeline
    horizon = tl.t_repay_end + 2
    balance = np.zeros(horizon)
    payment = np.zeros(horizon)

    if disbursement is Disbursement.LUMP_T0:
        draws = {tl.t_enroll: principal}
    else:
        draws = {tl.t_enroll + k: principal / 4 for k in range(4)}
    outstanding = 0.0
    for t in range(tl.t_enroll, tl.t_work_start):
        outstanding += draws.get(t, 0.0)
        balance[t] = outstanding
    # draws scheduled after school (short timelines) land at work start
    outstanding += sum(v for t, v in draws.items() if t >= tl.t_work_start)

    r = rates.r_sl
    a = level_payment(outstanding, r, tl.n_payments)
    for t in range(tl.t_work_start, tl.t_repay_end + 1):
        balance[t] = outstanding
        payment[t] = a
        outstanding = outstanding * (1 + r) - a
    balance[tl.t_repay_end + 1] = 0.0 if abs(outstanding) < 1e-9 * principal else outstanding
    return AmortizationSchedule(principal, r, tl, balance, payment)


def discount_factors(i_social: float, n: int) -> np.ndarray:
    return (1 + i_social) ** -np.arange(n, dtype=float)


def foregone_interest(schedule: AmortizationSchedule, rates: RateSet) -> np.ndarray:
    """Spread times balance for each cost year."""
    end = schedule.timeline.t_repay_end + 1
    return rates.spread * schedule.balance[:end]


def market_rate_cash_flows(schedule: AmortizationSchedule, rates: RateSet) -> np.ndarray:
    """Repayments as they would be had the student paid the market rate on
    the same balances: the subsidized payment plus the spread on the balance."""
    end = schedule.timeline.t_repay_end + 1
    return schedule.payment[:end] + rates.spread * schedule.balance[:end]


def marginal_cost_npv(schedule: AmortizationSchedule, rates: RateSet) -> float:
    """Present value of the government's foregone interest."""
    flows = foregone_interest(schedule, rates)
    return float(np.dot(flows, discount_factors(rates.i_social, len(flows))))


def marginal_cost_npv_by_cash_flows(schedule: AmortizationSchedule, rates: RateSet) -> float:
    """Same cost written as market-rate minus subsidized repayment flows."""
    end = schedule.timeline.t_repay_end + 1
    diff = market_rate_cash_flows(schedule, rates) - schedule.payment[:end]
    return float(np.dot(diff, discount_factors(rates.i_social, end)))


@dataclass(frozen=True)
class BenefitStreams:
    """Per-year benefit flows indexed by year from enrollment.

    Values outside each stream's window are ignored by :func:`benefits_npv`
    and zeroed by :meth:`from_constants`.
    """

    hcva: np.ndarray
    wpcs: np.ndarray
    peg: np.ndarray
    timeline: ProgramTimeline = field(default_factory=ProgramTimeline)

    def __post_init__(self):
        n = self.timeline.t_death + 1
        for name in ("hcva", "wpcs", "peg"):
            arr = np.zeros(n)
            src = np.asarray(getattr(self, name), dtype=float)
            if src.ndim != 1:
                raise ValueError(f"{name} must be one-dimensional")
            if np.any(src < 0):
                raise ValueError(f"{name} has negative entries")
            arr[: min(n, len(src))] = src[:n]
            object.__setattr__(self, name, arr)

    def windows(self) -> dict[str, tuple[int, int]]:
        tl = self.timeline
        return {"hcva": (tl.t_work_start, tl.t_retire),
                "wpcs": (tl.t_work_start, tl.t_death),
                "peg": (tl.t_work_start, tl.t_death)}

    @classmethod
    def from_constants(cls, hcva: float = 0.0, wpcs: float = 0.0, peg: float = 0.0,
                       timeline: ProgramTimeline = ProgramTimeline()) -> BenefitStreams:
        n = timeline.t_death + 1
        out = {}
        probe = cls(np.zeros(n), np.zeros(n), np.zeros(n), timeline)
        for name, value in (("hcva", hcva), ("wpcs", wpcs), ("peg", peg)):
            lo, hi = probe.windows()[name]
            arr = np.zeros(n)
            arr[lo:hi + 1] = value
            out[name] = arr
        return cls(out["hcva"], out["wpcs"], out["peg"], timeline)

    def scaled(self, k: float) -> BenefitStreams:
        return BenefitStreams(self.hcva * k, self.wpcs * k, self.peg * k, self.timeline)

    def __add__(self, other: BenefitStreams) -> BenefitStreams:
        return BenefitStreams(self.hcva + other.hcva, self.wpcs + other.wpcs,
                              self.peg + other.peg, self.timeline)


def benefits_npv(streams: BenefitStreams, i_social: float) -> float:
    """Discounted sum of each stream over its own window."""
    df = discount_factors(i_social, streams.timeline.t_death + 1)
    total = 0.0
    for name, (lo, hi) in streams.windows().items():
        flows = getattr(streams, name)
        total += float(np.dot(flows[lo:hi + 1], df[lo:hi + 1]))
    return total


@dataclass(frozen=True)
class ProgramInputs:
    principal: float
    rates: RateSet
    streams: BenefitStreams
    timeline: ProgramTimeline = ProgramTimeline()
    disbursement: Disbursement = Disbursement.LUMP_T0


@dataclass(frozen=True)
class Decision:
    benefits_npv: float
    costs_npv: float
    passes: bool
    margin: float

    def as_dict(self) -> dict:
        return asdict(self)


def evaluate_program(principal: float, rates: RateSet, timeline: ProgramTimeline,
                     streams: BenefitStreams,
                     disbursement: Disbursement | str = Disbursement.LUMP_T0) -> Decision:
    """Pass iff discounted benefits strictly exceed discounted costs."""
    schedule = build_schedule(principal, rates, timeline, disbursement)
    costs = marginal_cost_npv(schedule, rates)
    benefits = benefits_npv(streams, rates.i_social)
    return Decision(benefits, costs, benefits > costs, benefits - costs)


def evaluate(inputs: ProgramInputs) -> Decision:
    return evaluate_program(inputs.principal, inputs.rates, inputs.timeline, inputs.streams,
                            inputs.disbursement)


class SweepParameter(str, Enum):
    I_SOCIAL = "i_social"
    SPREAD = "spread"
    STREAM_SCALE = "stream_scale"


@dataclass(frozen=True)
class SweepRow:
    value: float
    passes: bool
    margin: float
    benefits_npv: float
    costs_npv: float


def sensitivity_sweep(base: ProgramInputs, parameter: SweepParameter | str,
                      grid: Sequence[float]) -> list[SweepRow]:
    """Re-evaluate the program at each grid value of one parameter.

    ``spread`` holds ``r_sl`` fixed and moves ``r_fm``; ``stream_scale``
    multiplies every benefit stream.
    """
    parameter = SweepParameter(parameter)
    grid = [float(g) for g in grid]
    if not grid:
        raise ValueError("empty sweep grid")
    steps = np.diff(grid)
    if len(grid) > 1 and not (np.all(steps > 0) or np.all(steps < 0)):
        raise ValueError("sweep grid must be strictly monotone")

    rows = []
    for value in grid:
        inputs = base
        if parameter is SweepParameter.I_SOCIAL:
            inputs = replace(base, rates=replace(base.rates, i_social=value))
        elif parameter is SweepParameter.SPREAD:
            inputs = replace(base, rates=RateSet(base.rates.r_sl + value, base.rates.r_sl,
                                                 base.rates.i_social))
        else:
            inputs = replace(base, streams=base.streams.scaled(value))
        d = evaluate(inputs)
        rows.append(SweepRow(value, d.passes, d.margin, d.benefits_npv, d.costs_npv))
    return rows


def sweep_to_csv(rows: Sequence[SweepRow], parameter: str) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([parameter, "passes", "margin", "benefits_npv", "costs_npv"])
    for r in rows:
        w.writerow([repr(r.value), str(r.passes).lower(), repr(r.margin),
                    repr(r.benefits_npv), repr(r.costs_npv)])
    return buf.getvalue()


def sweep_to_json(rows: Sequence[SweepRow], parameter: str) -> str:
    return json.dumps({"parameter": parameter, "rows": [asdict(r) for r in rows]}, indent=2) + "\n"


def _stream(spec, timeline: ProgramTimeline, name: str, lo: int, hi: int) -> np.ndarray:
    n = timeline.t_death + 1
    if spec is None:
        return np.zeros(n)
    if isinstance(spec, (int, float)):
        arr = np.zeros(n)
        arr[lo:hi + 1] = spec
        return arr
    if isinstance(spec, Mapping) and "constant" in spec:
        return _stream(float(spec["constant"]), timeline, name, lo, hi)
    arr = np.asarray(spec, dtype=float)
    if len(arr) != n:
        raise ValueError(f"stream {name!r} must have {n} entries (t=0..{n - 1}), got {len(arr)}")
    return arr


def load_program(doc: Mapping) -> ProgramInputs:
    """Build inputs from a JSON-style mapping.

    Keys: ``principal``, ``rates`` {r_fm, r_sl, i_social}, optional
    ``timeline`` overrides, optional ``disbursement``, and ``streams`` whose
    entries are dense arrays, a number, or ``{"constant": x}`` (constant on
    the stream's window).
    """
    timeline = ProgramTimeline(**doc.get("timeline", {}))
    rates = RateSet(**doc["rates"])
    s = doc.get("streams", {})
    windows = {"hcva": (timeline.t_work_start, timeline.t_retire),
               "wpcs": (timeline.t_work_start, timeline.t_death),
               "peg": (timeline.t_work_start, timeline.t_death)}
    arrays = {k: _stream(s.get(k), timeline, k, *windows[k]) for k in windows}
    streams = BenefitStreams(arrays["hcva"], arrays["wpcs"], arrays["peg"], timeline)
    return ProgramInputs(float(doc["principal"]), rates, streams, timeline,
                         Disbursement(doc.get("disbursement", "lump_t0")))
