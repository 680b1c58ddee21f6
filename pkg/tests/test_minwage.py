from datetime import date

import pytest
from hypothesis import given, strategies as st

from policykit.dataio import Frequency, TimeSeries
from policykit.gaps import Episode, GapKind, GapSeries, detect_negative_episodes
from policykit.minwage import (
    GrowthScheme, RetimeConfig, TimingMethod, WageSchedule, compare_schedules, is_nondecreasing,
    midpoint_date, retime, step_ratios, step_values, timing_points,
)

M = Frequency.MONTHLY
Q = Frequency.QUARTERLY


def test_midpoint_floors_to_month():
    e = Episode(date(2000, 1, 1), date(2000, 12, 1), date(2000, 3, 1), -1.0, 12, M)
    assert midpoint_date(e) == date(2000, 6, 1)
    assert timing_points([e], "local_min") == [date(2000, 3, 1)]
    assert timing_points([], "midpoint") == []


def test_symmetric_v_midpoint_equals_extremum():
    e = Episode(date(2000, 1, 1), date(2000, 5, 1), date(2000, 3, 1), -2.0, 5, M)
    assert timing_points([e], "midpoint") == timing_points([e], "local_min")


def test_step_value_examples():
    assert step_values(0.40, 7.25, 1) == [7.25]
    arith = step_values(0.40, 7.25, 20, "arithmetic")
    assert arith[0] == pytest.approx(0.7425, abs=1e-12)
    assert arith[1] - arith[0] == pytest.approx(0.3425, abs=1e-12)
    geo = step_values(0.40, 7.25, 20, "geometric")
    g = 18.125 ** (1 / 20)
    assert g == pytest.approx(1.1559, abs=1e-4)
    assert geo[0] == pytest.approx(0.4624, abs=1e-4)
    assert arith[-1] == geo[-1] == 7.25
    with pytest.raises(ValueError):
        step_values(0.40, 7.25, 0)


@given(st.floats(0.1, 10), st.floats(1.01, 50), st.integers(1, 40))
def test_step_shapes(w0, mult, n):
    w1 = w0 * mult
    geo = [w0] + step_values(w0, w1, n, GrowthScheme.GEOMETRIC)
    g = (w1 / w0) ** (1 / n)
    assert all(b / a == pytest.approx(g, rel=1e-9) for a, b in zip(geo, geo[1:]))
    ari = [w0] + step_values(w0, w1, n, GrowthScheme.ARITHMETIC)
    inc = (w1 - w0) / n
    assert all(b - a == pytest.approx(inc, rel=1e-9) for a, b in zip(ari, ari[1:]))
    assert geo[-1] == ari[-1] == w1


def quarterly_cyc(values, start=2000):
    dates = tuple(date(start + i // 4, 3 * (i % 4) + 1, 1) for i in range(len(values)))
    return GapSeries(TimeSeries("cyc", "quarterly", dates, tuple(values)), GapKind.UNEMPLOYMENT_GAP)


def test_two_episodes_arithmetic_midpoint_wage():
    cyc = quarterly_cyc([1, -1, -2, -1, -1, 1, 1, -1, -1, -3, -1, 1])
    eps = detect_negative_episodes(cyc)
    assert len(eps) == 2
    sched = retime(eps, RetimeConfig("midpoint", "arithmetic", 1.0, 3.0), date(2000, 1, 1))
    assert sched.wages == [1.0, 2.0, 3.0]


def test_one_episode_jumps_to_end_wage():
    eps = detect_negative_episodes(quarterly_cyc([1, -1, -1, -1, -1, 1]))
    sched = retime(eps, RetimeConfig(), date(2000, 1, 1))
    assert sched.wages == [0.40, 7.25]
    with pytest.raises(ValueError):
        retime([], RetimeConfig(), date(2000, 1, 1))


cyc_values = st.lists(st.floats(-3, 3, allow_nan=False), min_size=8, max_size=80)


@given(cyc_values, st.sampled_from(list(TimingMethod)), st.sampled_from(list(GrowthScheme)))
def test_retimed_schedule_properties(values, method, scheme):
    cyc = quarterly_cyc([1.0] + values)
    eps = detect_negative_episodes(cyc)
    if not eps:
        return
    sched = retime(eps, RetimeConfig(method, scheme), date(2000, 1, 1))
    assert sched.wages[0] == 0.40 and sched.wages[-1] == 7.25
    assert is_nondecreasing(sched)
    for d, _ in sched.increases():
        assert any(e.contains(d) for e in eps)
        assert cyc.series.value_at(d) < 0
    other = TimingMethod.LOCAL_MIN if method is TimingMethod.MIDPOINT else TimingMethod.MIDPOINT
    alt = retime(eps, RetimeConfig(other, scheme), date(2000, 1, 1))
    assert alt.wages == sched.wages
    report = compare_schedules(sched, sched, cyc, eps)
    summary = report["proposed"]["summary"]
    assert summary["aligned"] == summary["in_episode"] == summary["increases"] == len(eps)


def test_compare_flags_positive_gap_increase():
    cyc = quarterly_cyc([-1, -1, 1, 1])
    sched = WageSchedule(((date(2000, 1, 1), 1.0), (date(2000, 7, 15), 2.0), (date(2009, 1, 1), 3.0)))
    s = compare_schedules(sched, sched, cyc)["actual"]["summary"]
    assert (s["misaligned"], s["aligned"], s["unknown"]) == (1, 0, 1)


def test_schedule_validation_and_lookup():
    with pytest.raises(ValueError):
        WageSchedule(((date(2000, 1, 1), 2.0), (date(2001, 1, 1), 1.0)), monotone=True)
    with pytest.raises(ValueError):
        WageSchedule(((date(2001, 1, 1), 1.0), (date(2000, 1, 1), 2.0)))
    s = WageSchedule(((date(2000, 1, 1), 1.0), (date(2001, 1, 1), 2.0)))
    assert s.value_at(date(2000, 12, 31)) == 1.0
    assert s.value_at(date(2001, 1, 1)) == 2.0
    with pytest.raises(KeyError):
        s.value_at(date(1999, 1, 1))
    assert step_ratios(s) == [2.0]
