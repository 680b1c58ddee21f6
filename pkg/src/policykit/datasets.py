"""Bundled US data snapshots (1949-2022).

See ``data/PROVENANCE.md`` for how each file was assembled and which FRED
series it mirrors.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .dataio import Frequency, TimeSeries, read_series

# file name, FRED column, frequency, units
SNAPSHOTS = {
    "minwage": ("minwage.csv", "FEDMINNFRWG", None, "USD/hour"),
    "cpi": ("cpi.csv", "CPIAUCSL", Frequency.MONTHLY, "index 1982-84=100"),
    "unemployment": ("unrate.csv", "UNRATE", Frequency.QUARTERLY, "percent"),
    "natural_unemployment": ("nrou.csv", "NROU", Frequency.QUARTERLY, "percent"),
    "gdp": ("gdp.csv", "GDPC1", Frequency.ANNUAL, "bn chained 2012 USD"),
    "potential_gdp": ("gdppot.csv", "GDPPOT", Frequency.ANNUAL, "bn chained 2012 USD"),
}


def data_path(key: str) -> Path:
    fname = SNAPSHOTS[key][0]
    return Path(str(resources.files("policykit") / "data" / fname))


def load(key: str, path: str | Path | None = None) -> TimeSeries:
    """Load a bundled snapshot, or a user file laid out the same way."""
    fname, column, freq, units = SNAPSHOTS[key]
    return read_series(path or data_path(key), column, frequency=freq, name=key, units=units)
