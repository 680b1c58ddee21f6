import pytest
from hypothesis import given, strategies as st

from policykit.fiscal import (
    DivergentMultiplierError, IncomeGroup, Mode, ad_impact, allocate, effectiveness_ratio,
    required_stimulus,
)

mpcs = st.floats(0.01, 0.99)
gaps = st.floats(1.0, 1e12)


def test_first_round_and_multiplier_examples():
    assert ad_impact(100, 0.8) == pytest.approx(80)
    assert ad_impact(100, 0.8, "multiplier") == pytest.approx(400)
    assert required_stimulus(80, 0.8) == pytest.approx(100)
    assert required_stimulus(400, 0.8, Mode.MULTIPLIER) == pytest.approx(100)


@given(gaps, mpcs, st.sampled_from(list(Mode)))
def test_required_stimulus_inverts_impact(gap, mpc, mode):
    assert ad_impact(required_stimulus(gap, mpc, mode), mpc, mode) == pytest.approx(gap, rel=1e-9)


@given(mpcs, mpcs, st.sampled_from(list(Mode)))
def test_ratio_reciprocity(a, b, mode):
    assert effectiveness_ratio(a, b, mode) * effectiveness_ratio(b, a, mode) == pytest.approx(1, rel=1e-12)


def test_ratio_examples():
    assert effectiveness_ratio(0.8, 0.4) == 2.0
    assert effectiveness_ratio(0.9, 0.3) == pytest.approx(3.0, rel=1e-12)


def test_domain_errors():
    with pytest.raises(ValueError):
        ad_impact(1, 0)
    with pytest.raises(ValueError):
        required_stimulus(0, 0.5)
    with pytest.raises(DivergentMultiplierError):
        ad_impact(1, 1.0, "multiplier")
    assert ad_impact(1, 1.0) == 1.0


def groups():
    return [IncomeGroup("low", 0.8, 0.5), IncomeGroup("high", 0.4, 0.5)]


def test_allocation_closes_gap_by_share():
    plan = allocate(100, groups())
    assert [a.induced_ad for a in plan.allocations] == [50, 50]
    assert [a.stimulus for a in plan.allocations] == pytest.approx([62.5, 125.0])
    assert plan.total_induced == pytest.approx(100)


def test_naive_plan_over_stimulates():
    plan = allocate(100, groups(), assumed_mpc=0.4)
    assert plan.naive_total == pytest.approx(250)
    assert plan.naive_true_impact == pytest.approx(150)
    assert plan.over_stimulates is True
    assert allocate(100, groups(), assumed_mpc=0.8).over_stimulates is False


def test_group_validation():
    with pytest.raises(ValueError, match="sum"):
        allocate(100, [IncomeGroup("a", 0.5, 0.6)])
    with pytest.raises(ValueError, match="zero-share"):
        allocate(100, [IncomeGroup("a", 0.5, 1.0), IncomeGroup("b", 0.5, 0.0)])
    assert IncomeGroup.parse("bottom:0.5:0.8") == IncomeGroup("bottom", 0.8, 0.5)
    with pytest.raises(ValueError):
        IncomeGroup.parse("nonsense")


@given(st.lists(st.tuples(mpcs, st.floats(0.05, 1)), min_size=1, max_size=6), gaps,
       st.sampled_from(list(Mode)))
def test_allocation_total_matches_gap(specs, gap, mode):
    total = sum(w for _, w in specs)
    gs = [IncomeGroup(f"g{i}", m, w / total) for i, (m, w) in enumerate(specs)]
    if abs(sum(g.population_share for g in gs) - 1) > 1e-9:
        return
    plan = allocate(gap, gs, mode)
    assert plan.total_induced == pytest.approx(gap, rel=1e-9)
    for a in plan.allocations:
        assert ad_impact(a.stimulus, a.group.mpc, mode) == pytest.approx(a.induced_ad, rel=1e-9)
