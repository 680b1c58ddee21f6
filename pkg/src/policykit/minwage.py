"""Counterfactual minimum-wage paths timed to overheating episodes.

The rule: raise the wage once per sustained negative-cyclical-unemployment
episode, either at the episode's calendar midpoint or at its deepest point,
stepping from a fixed starting wage to a fixed ending wage.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from datetime import date, timedelta
from enum import Enum
from typing import Sequence

from .dataio import Frequency, TimeSeries
from .gaps import Episode, GapSeries


class TimingMethod(str, Enum):
    MIDPOINT = "midpoint"
    LOCAL_MIN = "local_min"


class GrowthScheme(str, Enum):
    ARITHMETIC = "arithmetic"
    GEOMETRIC = "geometric"


@dataclass(frozen=True)
class WageSchedule:
    """Step function: each wage holds from its effective date to the next."""

    anchors: tuple[tuple[date, float], ...]
    monotone: bool = False

    def __post_init__(self):
        anchors = tuple((d, float(w)) for d, w in self.anchors)
        object.__setattr__(self, "anchors", anchors)
        if not anchors:
            raise ValueError("schedule needs at least one anchor")
        for i, (d, w) in enumerate(anchors):
            if w <= 0:
                raise ValueError(f"wage must be positive, got {w} at {d}")
            if i and d <= anchors[i - 1][0]:
                raise ValueError(f"effective dates not strictly increasing at {d}")
            if self.monotone and i and w < anchors[i - 1][1]:
                raise ValueError(f"wage decreases at {d}; it can only be raised")

    @classmethod
    def from_series(cls, series: TimeSeries) -> WageSchedule:
        runs: list[tuple[date, float]] = []
        for d, v in series.points:
            if not runs or v != runs[-1][1]:
                runs.append((d, v))
        return cls(tuple(runs))

    @property
    def dates(self) -> list[date]:
        return [d for d, _ in self.anchors]

    @property
    def wages(self) -> list[float]:
        return [w for _, w in self.anchors]

    def increases(self) -> list[tuple[date, float]]:
        """Anchors after the first; the dates at which the wage changes."""
        return list(self.anchors[1:])

    def value_at(self, d: date) -> float:
        value = None
        for ad, w in self.anchors:
            if ad > d:
                break
            value = w
        if value is None:
            raise KeyError(f"{d} precedes the schedule start {self.anchors[0][0]}")
        return value

    def dense(self, dates: Sequence[date]) -> list[tuple[date, float]]:
        """Sample on ``dates`` (those on or after the first anchor)."""
        return [(d, self.value_at(d)) for d in dates if d >= self.anchors[0][0]]

    def to_csv(self) -> str:
        lines = ["effective_date,wage"] + [f"{d},{w!r}" for d, w in self.anchors]
        return "\n".join(lines) + "\n"

    def dense_csv(self, dates: Sequence[date]) -> str:
        lines = ["date,wage"] + [f"{d},{w!r}" for d, w in self.dense(dates)]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class RetimeConfig:
    timing_method: TimingMethod = TimingMethod.MIDPOINT
    growth_scheme: GrowthScheme = GrowthScheme.GEOMETRIC
    w_start: float = 0.40
    w_end: float = 7.25

    def __post_init__(self):
        object.__setattr__(self, "timing_method", TimingMethod(self.timing_method))
        object.__setattr__(self, "growth_scheme", GrowthScheme(self.growth_scheme))
        if not self.w_end > self.w_start > 0:
            raise ValueError("need w_end > w_start > 0")


def midpoint_date(episode: Episode) -> date:
    """Calendar midpoint of [start, end], floored to the episode's period grid."""
    span = (episode.end - episode.start).days
    return Frequency(episode.frequency).floor(episode.start + timedelta(days=span // 2))


def timing_points(episodes: Sequence[Episode], method: TimingMethod | str) -> list[date]:
    method = TimingMethod(method)
    if method is TimingMethod.MIDPOINT:
        points = [midpoint_date(e) for e in episodes]
    else:
        points = [e.extremum_date for e in episodes]
    for a, b in zip(points, points[1:]):
        if b <= a:
            raise ValueError("episodes must be ordered and non-overlapping")
    return points


def step_values(w_start: float, w_end: float, n_steps: int,
                scheme: GrowthScheme | str = GrowthScheme.GEOMETRIC) -> list[float]:
    """Wages after each of ``n_steps`` equal increments; the last equals ``w_end``."""
    scheme = GrowthScheme(scheme)
    if n_steps < 1:
        raise ValueError("n_steps must be >= 1")
    if not w_end > w_start > 0:
        raise ValueError("need w_end > w_start > 0")
    if scheme is GrowthScheme.ARITHMETIC:
        inc = (w_end - w_start) / n_steps
        values = [w_start + k * inc for k in range(1, n_steps)]
    else:
        g = (w_end / w_start) ** (1 / n_steps)
        values = [w_start * g ** k for k in range(1, n_steps)]
    return values + [w_end]


def retime(episodes: Sequence[Episode], config: RetimeConfig, window_start: date) -> WageSchedule:
    """One raise per episode, from ``config.w_start`` at ``window_start`` up
    to ``config.w_end`` at the last episode."""
    if not episodes:
        raise ValueError("no episodes: the end wage cannot be reached")
    dates = timing_points(episodes, config.timing_method)
    if dates[0] <= window_start:
        raise ValueError(f"first increase {dates[0]} is not after the window start {window_start}")
    wages = step_values(config.w_start, config.w_end, len(dates), config.growth_scheme)
    return WageSchedule(((window_start, config.w_start), *zip(dates, wages)), monotone=True)


@dataclass(frozen=True)
class IncreaseCheck:
    date: date
    wage: float
    cyclical: float | None
    in_episode: bool

    @property
    def aligned(self) -> bool | None:
        return None if self.cyclical is None else self.cyclical < 0

    def as_dict(self) -> dict:
        return {"date": self.date.isoformat(), "wage": self.wage, "cyclical": self.cyclical,
                "sign": None if self.cyclical is None else ("negative" if self.cyclical < 0 else "non_negative"),
                "in_episode": self.in_episode, "aligned": self.aligned}


def _check(schedule: WageSchedule, cyc: GapSeries, episodes: Sequence[Episode]) -> list[IncreaseCheck]:
    out = []
    for d, w in schedule.increases():
        s = cyc.series
        idx = s.index_at(d)
        if idx is not None and s.frequency.slot(s.dates[idx]) != s.frequency.slot(d):
            idx = None
        value = None if idx is None else s.values[idx]
        out.append(IncreaseCheck(d, w, value, any(e.contains(d) for e in episodes)))
    return out


def _summary(checks: list[IncreaseCheck]) -> dict:
    return {
        "increases": len(checks),
        "aligned": sum(c.aligned is True for c in checks),
        "misaligned": sum(c.aligned is False for c in checks),
        "unknown": sum(c.aligned is None for c in checks),
        "in_episode": sum(c.in_episode for c in checks),
    }


def compare_schedules(actual: WageSchedule, proposed: WageSchedule, cyc: GapSeries,
                      episodes: Sequence[Episode] = ()) -> dict:
    """Sign of cyclical unemployment at each increase of both schedules.

    An increase is aligned when cyclical unemployment is negative in the
    period containing it; increases in periods the gap data does not cover
    are reported as unknown.
    """
    a = _check(actual, cyc, episodes)
    p = _check(proposed, cyc, episodes)
    return {
        "actual": {"increases": [c.as_dict() for c in a], "summary": _summary(a)},
        "proposed": {"increases": [c.as_dict() for c in p], "summary": _summary(p)},
    }


def comparison_to_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def step_ratios(schedule: WageSchedule) -> list[float]:
    w = schedule.wages
    return [b / a for a, b in zip(w, w[1:])]


def is_nondecreasing(schedule: WageSchedule) -> bool:
    w = schedule.wages
    return all(b >= a for a, b in zip(w, w[1:]))
