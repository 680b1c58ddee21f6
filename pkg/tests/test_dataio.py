from datetime import date

import pytest
from hypothesis import given, strategies as st

from policykit import datasets
from policykit.dataio import (
    AlignPolicy, DateParseError, DomainError, DuplicateDateError, Frequency, HeaderError,
    NoOverlapError, SeriesError, TimeSeries, ValueParseError, align, deflate, infer_frequency,
    parse_series, plateaus, summarize_minwage, to_csv,
)

FRED = """DATE,UNRATE
1949-01-01,3.5
1949-04-01,.
1949-07-01,6.6
"""


def test_parse_skips_missing_marker():
    s = parse_series(FRED, "UNRATE", frequency="quarterly")
    assert s.dates == (date(1949, 1, 1), date(1949, 7, 1))
    assert s.values == (3.5, 6.6)
    assert s.frequency is Frequency.QUARTERLY


def test_parse_infers_frequency():
    # missing rows still reveal the cadence
    assert parse_series(FRED, "UNRATE").frequency is Frequency.QUARTERLY
    assert parse_series("DATE,X\n2000-01-01,1\n2003-01-01,2\n", "X").frequency is Frequency.ANNUAL
    monthly = "DATE,X\n2000-01-01,1\n2000-02-01,2\n"
    assert parse_series(monthly, "X").frequency is Frequency.MONTHLY


@pytest.mark.parametrize("text, exc, row", [
    ("", HeaderError, 1),
    ("WHEN,UNRATE\n2000-01-01,1\n", HeaderError, 1),
    ("DATE,OTHER\n2000-01-01,1\n", HeaderError, 1),
    ("DATE,UNRATE\n2000-01-01,1\n2000/02/01,2\n", DateParseError, 3),
    ("DATE,UNRATE\n2000-01-01,abc\n", ValueParseError, 2),
    ("DATE,UNRATE\n2000-01-01,1\n2000-01-01,2\n", DuplicateDateError, 3),
    ("DATE,UNRATE\n2000-01-01,1\n2000-01-01,.\n", DuplicateDateError, 3),
])
def test_parse_errors_carry_row(text, exc, row):
    with pytest.raises(exc) as info:
        parse_series(text, "UNRATE")
    assert info.value.row == row


def test_mis_spaced_dates_rejected():
    with pytest.raises(SeriesError):
        TimeSeries("x", "monthly", (date(2000, 1, 1), date(2000, 1, 15)), (1.0, 2.0))
    with pytest.raises(SeriesError):
        TimeSeries("x", "quarterly", (date(2000, 1, 1), date(2000, 2, 1)), (1.0, 2.0))


def test_infer_frequency_irregular_dates_is_coarsest_fit():
    assert infer_frequency([date(2000, 1, 1), date(2001, 6, 1)]) is Frequency.ANNUAL
    assert infer_frequency([date(2000, 1, 1), date(2000, 6, 1)]) is Frequency.QUARTERLY
    assert infer_frequency([date(2000, 1, 1), date(2000, 2, 20)]) is Frequency.MONTHLY


series_values = st.lists(st.floats(-1e6, 1e6, allow_nan=False), min_size=1, max_size=40)


@given(series_values)
def test_csv_round_trip(values):
    s = TimeSeries("x", "monthly", tuple(date(2000 + i // 12, i % 12 + 1, 1) for i in range(len(values))),
                   tuple(values))
    back = parse_series(to_csv(s), "value", date_column="date", frequency="monthly", name="x")
    assert back == s


def _wage():
    return TimeSeries.from_points("wage", [(date(1949, 1, 1), 0.40), (date(1950, 1, 25), 0.75)])


def _monthly(start_year, n, value=1.0):
    return TimeSeries("m", "monthly", tuple(date(start_year + i // 12, i % 12 + 1, 1) for i in range(n)),
                      tuple(value for _ in range(n)))


def test_step_alignment_switches_in_following_month():
    a, b = align(_wage(), _monthly(1949, 24), AlignPolicy.STEP)
    assert dict(a.points)[date(1950, 1, 1)] == 0.40
    assert dict(a.points)[date(1950, 2, 1)] == 0.75
    assert a.dates == b.dates


def test_intersect_alignment_and_no_overlap():
    x = _monthly(2000, 6)
    y = _monthly(2000, 3).replace_values([5, 6, 7])
    a, b = align(x, y)
    assert a.dates == b.dates == y.dates
    with pytest.raises(NoOverlapError):
        align(_monthly(2000, 3), _monthly(2010, 3))


def test_deflate_bases():
    nominal = _monthly(2000, 2).replace_values([2.0, 3.0])
    cpi = _monthly(2000, 2).replace_values([100.0, 150.0])
    assert deflate(nominal, cpi).values == (2.0, 2.0)
    ref = deflate(nominal, cpi, base=date(2000, 2, 1))
    assert ref.values == (3.0, 3.0)
    with pytest.raises(DomainError):
        deflate(nominal, cpi.replace_values([0.0, 1.0]))
    with pytest.raises(DomainError):
        deflate(nominal, cpi, base=date(1990, 1, 1))


@given(st.lists(st.floats(0.1, 100), min_size=2, max_size=20),
       st.lists(st.floats(1, 500), min_size=2, max_size=20),
       st.integers(0, 19))
def test_real_ratios_do_not_depend_on_base(wages, cpis, k):
    n = min(len(wages), len(cpis))
    nominal = _monthly(2000, n).replace_values(wages[:n])
    cpi = _monthly(2000, n).replace_values(cpis[:n])
    r1 = deflate(nominal, cpi).values
    r2 = deflate(nominal, cpi, base=cpi.dates[k % n]).values
    for i in range(1, n):
        assert r1[i] / r1[0] == pytest.approx(r2[i] / r2[0], rel=1e-12)


def test_summary_of_constant_wage():
    nominal = TimeSeries.from_points("w", [(date(2013, 1, 1), 5.0)])
    real = _monthly(2013, 120, 5.0)
    stats = summarize_minwage(nominal, real)
    assert stats.distinct_count == 1 and stats.change_count == 0
    assert stats.avg_nominal_by_count == stats.avg_nominal_duration_weighted == 5.0
    assert stats.avg_duration_years == pytest.approx(10.0, abs=0.01)


def test_summary_weights_by_duration():
    nominal = TimeSeries.from_points("w", [(date(2013, 1, 1), 5.0), (date(2015, 1, 1), 10.0)])
    real = _monthly(2013, 120)
    stats = summarize_minwage(nominal, real)
    assert stats.avg_nominal_by_count == 7.5
    assert stats.avg_nominal_duration_weighted == pytest.approx(9.0, abs=1e-3)
    assert stats.avg_duration_years == pytest.approx(5.0, abs=0.01)


def test_plateaus_merge_repeated_values():
    s = TimeSeries.from_points("w", [(date(2000, 1, 1), 1.0), (date(2001, 1, 1), 1.0),
                                     (date(2002, 1, 1), 2.0)])
    assert plateaus(s) == [(date(2000, 1, 1), 1.0), (date(2002, 1, 1), 2.0)]


@pytest.mark.parametrize("key", sorted(datasets.SNAPSHOTS))
def test_bundled_snapshots_load(key):
    s = datasets.load(key)
    assert len(s) > 10
    assert s.dates[0].year <= 1949
