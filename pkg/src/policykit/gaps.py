"""Output gaps, cyclical unemployment and negative-gap episode detection."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from datetime import date
from enum import Enum

from .dataio import Frequency, SeriesError, TimeSeries

log = logging.getLogger(__name__)


class GapKind(str, Enum):
    OUTPUT_GAP = "output_gap"
    UNEMPLOYMENT_GAP = "unemployment_gap"


# state labels per kind: (gap < -tol, gap > tol, otherwise)
_STATES = {
    GapKind.OUTPUT_GAP: ("recessionary", "inflationary", "balanced"),
    GapKind.UNEMPLOYMENT_GAP: ("negative_cyclical", "positive_cyclical", "balanced"),
}


@dataclass(frozen=True)
class GapSeries:
    series: TimeSeries
    kind: GapKind
    tol: float = 0.0

    def __post_init__(self):
        if self.tol < 0:
            raise ValueError("balance tolerance must be >= 0")

    def classify_value(self, v: float) -> str:
        below, above, balanced = _STATES[self.kind]
        if v < -self.tol:
            return below
        if v > self.tol:
            return above
        return balanced

    def classify(self) -> list[tuple[date, str]]:
        return [(d, self.classify_value(v)) for d, v in self.series.points]

    def state_at(self, d: date) -> str:
        return self.classify_value(self.series.value_at(d))


def _difference(actual: TimeSeries, reference: TimeSeries, name: str) -> TimeSeries:
    if actual.frequency != reference.frequency:
        raise SeriesError(
            f"frequency mismatch: {actual.name} is {actual.frequency.value}, "
            f"{reference.name} is {reference.frequency.value}"
        )
    if actual.units and reference.units and actual.units != reference.units:
        raise SeriesError(f"unit mismatch: {actual.units!r} vs {reference.units!r}")
    if actual.dates != reference.dates:
        raise SeriesError(f"{actual.name} and {reference.name} are not aligned; call align() first")
    return actual.replace_values(
        (a - r for a, r in zip(actual.values, reference.values)), name=name,
        units=actual.units or reference.units,
    )


def output_gap(actual_gdp: TimeSeries, potential_gdp: TimeSeries, tol: float = 0.0) -> GapSeries:
    """Actual minus potential output; negative means recessionary."""
    return GapSeries(_difference(actual_gdp, potential_gdp, "output_gap"), GapKind.OUTPUT_GAP, tol)


def cyclical_unemployment(actual_u: TimeSeries, natural_u: TimeSeries, tol: float = 0.0) -> GapSeries:
    """Actual minus natural unemployment; negative means an overheating labour market."""
    return GapSeries(_difference(actual_u, natural_u, "cyclical_unemployment"),
                     GapKind.UNEMPLOYMENT_GAP, tol)


@dataclass(frozen=True)
class Episode:
    start: date
    end: date
    extremum_date: date
    extremum_value: float
    duration: int
    frequency: Frequency = Frequency.QUARTERLY

    def contains(self, d: date) -> bool:
        """True if ``d`` falls in a period covered by the episode."""
        f = self.frequency
        return f.slot(self.start) <= f.slot(d) <= f.slot(self.end)

    def as_dict(self) -> dict:
        return {
            "start": self.start.isoformat(),
            "end": self.end.isoformat(),
            "extremum_date": self.extremum_date.isoformat(),
            "extremum_value": self.extremum_value,
            "duration": self.duration,
        }


def default_min_duration(frequency: Frequency) -> int:
    """Four quarters, i.e. one year, expressed in periods of ``frequency``."""
    return Frequency(frequency).periods_per_year


def detect_negative_episodes(cyc: GapSeries, min_duration: int | None = None,
                             entry_tol: float = 0.0) -> list[Episode]:
    """Maximal runs of consecutive observations with ``cyc < -entry_tol``.

    Runs shorter than ``min_duration`` periods are dropped.  A single
    non-negative point ends a run; nothing is bridged.  A gap in the date
    vector also ends a run.  The extremum is the earliest minimum.
    """
    if cyc.kind is not GapKind.UNEMPLOYMENT_GAP:
        raise ValueError("episode detection expects an unemployment gap series")
    series = cyc.series
    if min_duration is None:
        min_duration = default_min_duration(series.frequency)
    if min_duration < 1:
        raise ValueError("min_duration must be at least one period")
    if entry_tol < 0:
        raise ValueError("entry_tol must be >= 0")

    freq = series.frequency
    runs: list[list[int]] = []
    for i, v in enumerate(series.values):
        if v < -entry_tol:
            if (runs and runs[-1][-1] == i - 1
                    and freq.ordinal(series.dates[i]) - freq.ordinal(series.dates[i - 1]) == 1):
                runs[-1].append(i)
            else:
                runs.append([i])

    episodes = []
    for run in runs:
        if len(run) < min_duration:
            continue
        lo = min(run, key=lambda i: (series.values[i], i))
        ep = Episode(series.dates[run[0]], series.dates[run[-1]], series.dates[lo],
                     series.values[lo], len(run), freq)
        if run[-1] == len(series) - 1:
            log.info("episode starting %s is still open at the end of the data", ep.start)
        episodes.append(ep)
    return episodes


def episodes_to_csv(episodes: list[Episode]) -> str:
    lines = ["start,end,extremum_date,extremum_value,duration"]
    for e in episodes:
        lines.append(f"{e.start},{e.end},{e.extremum_date},{e.extremum_value!r},{e.duration}")
    return "\n".join(lines) + "\n"


def episodes_to_json(episodes: list[Episode]) -> str:
    return json.dumps([e.as_dict() for e in episodes], indent=2) + "\n"
