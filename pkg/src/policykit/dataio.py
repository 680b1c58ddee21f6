"""Time-series ingestion, alignment, deflation and minimum-wage summaries.

Series arrive as FRED-style CSV exports (a ``DATE`` column plus one or more
value columns, ``.`` marking missing observations).  Everything here is a
pure function over immutable :class:`TimeSeries` values.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field
from datetime import date, timedelta
from enum import Enum
from pathlib import Path
from typing import Iterable, Sequence

MISSING = "."
DAYS_PER_YEAR = 365.25


class Frequency(str, Enum):
    ANNUAL = "annual"
    QUARTERLY = "quarterly"
    MONTHLY = "monthly"

    def slot(self, d: date) -> tuple[int, ...]:
        """Calendar period a date falls in at this frequency."""
        if self is Frequency.ANNUAL:
            return (d.year,)
        if self is Frequency.QUARTERLY:
            return (d.year, (d.month - 1) // 3)
        return (d.year, d.month - 1)

    def floor(self, d: date) -> date:
        """First day of the period containing ``d``."""
        if self is Frequency.ANNUAL:
            return date(d.year, 1, 1)
        if self is Frequency.QUARTERLY:
            return date(d.year, 3 * ((d.month - 1) // 3) + 1, 1)
        return date(d.year, d.month, 1)

    def ordinal(self, d: date) -> int:
        """Running period number; consecutive periods differ by one."""
        slot = self.slot(d)
        return slot[0] if len(slot) == 1 else slot[0] * self.periods_per_year + slot[1]

    @property
    def periods_per_year(self) -> int:
        return {"annual": 1, "quarterly": 4, "monthly": 12}[self.value]


class SeriesError(ValueError):
    """A TimeSeries invariant does not hold."""


class NoOverlapError(SeriesError):
    pass


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class ParseError(ValueError):
    def __init__(self, message: str, row: int | None = None):
        self.row = row
        super().__init__(f"row {row}: {message}" if row is not None else message)


class HeaderError(ParseError):
    pass


class DateParseError(ParseError):
    pass


class ValueParseError(ParseError):
    pass


class DuplicateDateError(ParseError):
    pass


def _check_spacing(dates: Sequence[date], frequency: Frequency) -> int | None:
    """Index of the first point sharing a period slot with its predecessor."""
    for i in range(1, len(dates)):
        if frequency.slot(dates[i]) == frequency.slot(dates[i - 1]):
            return i
    return None


def infer_frequency(dates: Sequence[date]) -> Frequency:
    """Coarsest frequency under which every date occupies its own period."""
    for freq in (Frequency.ANNUAL, Frequency.QUARTERLY, Frequency.MONTHLY):
        if _check_spacing(dates, freq) is None:
            return freq
    raise SeriesError("dates are spaced more finely than monthly")


@dataclass(frozen=True)
class TimeSeries:
    """Dated observations at a declared frequency.

    Gaps are allowed; two points in the same period (e.g. two dates in one
    month of a monthly series) are rejected as mis-spaced.
    """

    name: str
    frequency: Frequency
    dates: tuple[date, ...]
    values: tuple[float, ...]
    units: str = ""

    def __post_init__(self):
        object.__setattr__(self, "frequency", Frequency(self.frequency))
        object.__setattr__(self, "dates", tuple(self.dates))
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        if len(self.dates) != len(self.values):
            raise SeriesError("dates and values differ in length")
        for i, (d, v) in enumerate(zip(self.dates, self.values)):
            if not math.isfinite(v):
                raise SeriesError(f"{self.name}: non-finite value at {d}")
            if i and d <= self.dates[i - 1]:
                raise SeriesError(f"{self.name}: dates not strictly increasing at {d}")
        bad = _check_spacing(self.dates, self.frequency)
        if bad is not None:
            raise SeriesError(
                f"{self.name}: {self.dates[bad]} shares a {self.frequency.value} "
                f"period with {self.dates[bad - 1]}"
            )

    @classmethod
    def from_points(cls, name: str, points: Iterable[tuple[date, float]],
                    frequency: Frequency | str | None = None, units: str = "") -> TimeSeries:
        pts = list(points)
        dates = [p[0] for p in pts]
        freq = Frequency(frequency) if frequency is not None else infer_frequency(dates)
        return cls(name, freq, tuple(dates), tuple(p[1] for p in pts), units)

    @property
    def points(self) -> list[tuple[date, float]]:
        return list(zip(self.dates, self.values))

    def __len__(self) -> int:
        return len(self.dates)

    def replace_values(self, values: Iterable[float], name: str | None = None,
                       units: str | None = None) -> TimeSeries:
        return TimeSeries(name or self.name, self.frequency, self.dates, tuple(values),
                          self.units if units is None else units)

    def value_at(self, d: date) -> float:
        """Step lookup: value of the last observation on or before ``d``."""
        idx = self.index_at(d)
        if idx is None:
            raise KeyError(f"{self.name}: no observation on or before {d}")
        return self.values[idx]

    def index_at(self, d: date) -> int | None:
        lo, hi = 0, len(self.dates)
        while lo < hi:
            mid = (lo + hi) // 2
            if self.dates[mid] <= d:
                lo = mid + 1
            else:
                hi = mid
        return lo - 1 if lo else None

    def between(self, start: date | None = None, end: date | None = None) -> TimeSeries:
        keep = [(d, v) for d, v in self.points
                if (start is None or d >= start) and (end is None or d <= end)]
        return TimeSeries(self.name, self.frequency, tuple(d for d, _ in keep),
                          tuple(v for _, v in keep), self.units)


# -- CSV in/out ---------------------------------------------------------------

def parse_series(text: str | io.TextIOBase, value_column: str, *, date_column: str = "DATE",
                 frequency: Frequency | str | None = None, name: str | None = None,
                 units: str = "", missing: str = MISSING) -> TimeSeries:
    """Parse a CSV stream into a TimeSeries.

    Rows whose value cell equals ``missing`` are skipped.  Row numbers in
    errors count the header as row 1.
    """
    stream = io.StringIO(text) if isinstance(text, str) else text
    reader = csv.reader(stream)
    header = next(reader, None)
    if header is None:
        raise HeaderError("empty stream: no header row", row=1)
    header = [h.strip().lstrip("﻿") for h in header]
    if date_column not in header:
        raise HeaderError(f"header lacks date column {date_column!r}", row=1)
    if value_column not in header:
        raise HeaderError(f"header lacks value column {value_column!r}", row=1)
    di, vi = header.index(date_column), header.index(value_column)

    points: list[tuple[date, float]] = []
    seen: set[date] = set()
    for rownum, row in enumerate(reader, start=2):
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) <= max(di, vi):
            raise ParseError(f"expected {len(header)} cells, got {len(row)}", row=rownum)
        raw_date, raw_value = row[di].strip(), row[vi].strip()
        try:
            d = date.fromisoformat(raw_date)
        except ValueError:
            raise DateParseError(f"unparseable date {raw_date!r}", row=rownum) from None
        if d in seen:
            raise DuplicateDateError(f"duplicate date {d}", row=rownum)
        seen.add(d)
        if raw_value == missing:
            continue
        try:
            v = float(raw_value)
        except ValueError:
            raise ValueParseError(f"non-numeric value {raw_value!r}", row=rownum) from None
        if not math.isfinite(v):
            raise ValueParseError(f"non-finite value {raw_value!r}", row=rownum)
        points.append((d, v))

    points.sort()
    return TimeSeries.from_points(name or value_column, points, frequency, units)


def read_series(path: str | Path, value_column: str, **kwargs) -> TimeSeries:
    with open(path, newline="", encoding="utf-8") as fh:
        return parse_series(fh, value_column, **kwargs)


def to_csv(series: TimeSeries) -> str:
    """Emit ``date,value`` CSV; ``repr`` floats so parsing round-trips exactly."""
    lines = ["date,value"]
    lines += [f"{d.isoformat()},{v!r}" for d, v in series.points]
    return "\n".join(lines) + "\n"


# -- alignment & deflation ----------------------------------------------------

class AlignPolicy(str, Enum):
    INTERSECT = "intersect_dates"
    STEP = "step_interpolate_a_onto_b"


def align(a: TimeSeries, b: TimeSeries,
          policy: AlignPolicy | str = AlignPolicy.INTERSECT) -> tuple[TimeSeries, TimeSeries]:
    """Put two series on one date vector.

    ``intersect_dates`` keeps the common dates.  ``step_interpolate_a_onto_b``
    treats ``a`` as a step function and samples it on every ``b`` date at or
    after the first ``a`` date.
    """
    policy = AlignPolicy(policy)
    if not len(a) or not len(b):
        raise NoOverlapError("cannot align an empty series")

    if policy is AlignPolicy.INTERSECT:
        common = sorted(set(a.dates) & set(b.dates))
        if not common:
            raise NoOverlapError(f"{a.name} and {b.name} share no dates")
        amap, bmap = dict(a.points), dict(b.points)
        return (
            TimeSeries(a.name, a.frequency, tuple(common), tuple(amap[d] for d in common), a.units),
            TimeSeries(b.name, b.frequency, tuple(common), tuple(bmap[d] for d in common), b.units),
        )

    dates = [d for d in b.dates if d >= a.dates[0]]
    if not dates:
        raise NoOverlapError(f"{b.name} ends before {a.name} begins")
    a_vals = [a.value_at(d) for d in dates]
    b_sub = b.between(start=dates[0])
    return TimeSeries(a.name, b.frequency, tuple(dates), tuple(a_vals), a.units), b_sub


def deflate(nominal: TimeSeries, cpi: TimeSeries, base: str | date = "index") -> TimeSeries:
    """Convert a nominal series to real terms.

    ``base="index"`` divides by CPI/100 (dollars of the index base period);
    passing a date expresses values in that date's dollars.
    """
    if nominal.dates != cpi.dates:
        raise SeriesError("nominal and CPI series must be aligned first")
    for d, c in cpi.points:
        if c <= 0:
            raise DomainError(f"CPI must be positive, got {c} at {d}")
    if isinstance(base, date):
        if base not in cpi.dates:
            raise DomainError(f"reference date {base} not in CPI series")
        scale = dict(cpi.points)[base]
        label = f"{base.isoformat()} dollars"
    elif base in ("index", "index_base"):
        scale = 100.0
        label = "index-base dollars"
    else:
        raise ValueError(f"unknown deflation base {base!r}")
    real = (n * scale / c for n, c in zip(nominal.values, cpi.values))
    return nominal.replace_values(real, name=f"{nominal.name}_real", units=label)


# -- minimum-wage summary -----------------------------------------------------

@dataclass(frozen=True)
class MinWageStats:
    distinct_count: int
    change_count: int
    avg_nominal_by_count: float
    avg_nominal_duration_weighted: float
    min_nominal: float
    max_nominal: float
    min_real: tuple[float, date]
    max_real: tuple[float, date]
    avg_real: float
    avg_duration_years: float
    window: tuple[date, date] = field(default=(date.min, date.min))

    def as_dict(self) -> dict:
        out = asdict(self)
        out["min_real"] = {"value": self.min_real[0], "date": self.min_real[1].isoformat()}
        out["max_real"] = {"value": self.max_real[0], "date": self.max_real[1].isoformat()}
        out["window"] = [d.isoformat() for d in self.window]
        return out

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2) + "\n"

    def to_report(self) -> str:
        """Flat ``key = value`` text."""
        lines = []
        for key, value in self.as_dict().items():
            if isinstance(value, dict):
                lines.append(f"{key} = {value['value']!r} @ {value['date']}")
            elif isinstance(value, list):
                lines.append(f"{key} = {' .. '.join(value)}")
            else:
                lines.append(f"{key} = {value!r}")
        return "\n".join(lines) + "\n"


def plateaus(nominal: TimeSeries) -> list[tuple[date, float]]:
    """Collapse a step series to (effective date, value) runs of equal value."""
    runs: list[tuple[date, float]] = []
    for d, v in nominal.points:
        if not runs or v != runs[-1][1]:
            runs.append((d, v))
    return runs


def summarize_minwage(nominal: TimeSeries, real: TimeSeries,
                      window_end: date = date(2022, 12, 31),
                      window_start: date | None = None) -> MinWageStats:
    """Plateau statistics of a stepwise nominal wage plus real-wage extremes.

    Each plateau lasts from its effective date to the next change; the last
    one runs through ``window_end`` inclusive.  ``window_start`` defaults to
    the first nominal date; a plateau already in force then is clipped.
    """
    start = window_start or (nominal.dates[0] if len(nominal) else None)
    if start is None:
        raise SeriesError("no plateau: nominal series is empty")
    runs = plateaus(nominal)
    prior = [r for r in runs if r[0] <= start]
    runs = ([(start, prior[-1][1])] if prior else []) + [r for r in runs if start < r[0] <= window_end]
    # re-merge in case clipping produced equal neighbours
    runs = [r for i, r in enumerate(runs) if i == 0 or r[1] != runs[i - 1][1]]
    if not runs:
        raise SeriesError("no plateau inside the analysis window")

    stop = window_end + timedelta(days=1)
    bounds = [r[0] for r in runs[1:]] + [stop]
    durations = [(b - r[0]).days for r, b in zip(runs, bounds)]
    total = sum(durations)
    wages = [v for _, v in runs]

    real_win = real.between(start, window_end)
    if not len(real_win):
        raise SeriesError("real series has no points inside the analysis window")
    lo = min(range(len(real_win)), key=lambda i: (real_win.values[i], i))
    hi = min(range(len(real_win)), key=lambda i: (-real_win.values[i], i))

    return MinWageStats(
        distinct_count=len(runs),
        change_count=len(runs) - 1,
        avg_nominal_by_count=sum(wages) / len(wages),
        avg_nominal_duration_weighted=sum(w * t for w, t in zip(wages, durations)) / total,
        min_nominal=min(wages),
        max_nominal=max(wages),
        min_real=(real_win.values[lo], real_win.dates[lo]),
        max_real=(real_win.values[hi], real_win.dates[hi]),
        avg_real=sum(real_win.values) / len(real_win),
        avg_duration_years=total / DAYS_PER_YEAR / len(runs),
        window=(start, window_end),
    )
