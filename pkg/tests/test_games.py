import numpy as np
import pytest
from hypothesis import given, strategies as st

from oracles import brute_force_nash
from policykit.games import (
    HEAVY, LIGHT, Game, InfeasibleTargetError, UnknownStrategyError, apply_instrument, apply_subsidy,
    apply_tax, best_social_outcome, commons_game, dominant_strategy, equality_gap, format_table,
    min_corrective_tax, pure_nash, social_optima, tragedy_diagnosis,
)


def cells(profiles):
    return [p.cell for p in profiles]


def test_commons_diagnosis():
    g = commons_game()
    assert cells(pure_nash(g)) == [(HEAVY, HEAVY)]
    assert pure_nash(g)[0].payoffs == (30, 30)
    bso = best_social_outcome(g)
    assert bso.cell == (LIGHT, LIGHT) and bso.total == 100
    d = tragedy_diagnosis(g)
    assert d.is_tragedy and d.efficiency_loss == 40
    assert d.equality_at_nash == (0,) and d.equality_at_bso == 0
    for player in (1, 2):
        dom = dominant_strategy(g, player)
        assert dom.strategy == HEAVY and dom.strict


def test_coordination_game_has_two_equilibria_and_no_dominance():
    g = Game((((2, 2), (0, 0)), ((0, 0), (1, 1))))
    assert cells(pure_nash(g)) == [(0, 0), (1, 1)]
    assert dominant_strategy(g, 1).strategy is None
    assert not tragedy_diagnosis(g).is_tragedy


def test_constant_game_ties_everywhere():
    g = Game((((1, 1), (1, 1)), ((1, 1), (1, 1))))
    assert len(pure_nash(g)) == 4
    assert len(social_optima(g)) == 4
    assert best_social_outcome(g).cell == (0, 0)
    dom = dominant_strategy(g, 1)
    assert dom.strategy is None and dom.weak_candidates == (0, 1)


def test_matching_pennies_has_no_pure_equilibrium():
    g = Game((((1, -1), (-1, 1)), ((-1, 1), (1, -1))))
    d = tragedy_diagnosis(g)
    assert not d.has_pure_nash and not d.is_tragedy and d.efficiency_loss == 0


def test_tax_of_15_restores_cooperation():
    g = apply_tax(commons_game(), "Heavy", 15)
    assert cells(pure_nash(g)) == [(LIGHT, LIGHT)]
    with pytest.raises(UnknownStrategyError):
        apply_tax(commons_game(), "Medium", 1)


def test_min_corrective_tax_on_commons():
    g = commons_game()
    fix = min_corrective_tax(g, (LIGHT, LIGHT))
    assert fix.infimum_tau == 10 and fix.strict_above and not fix.holds_at_infimum
    assert cells(pure_nash(apply_tax(g, "Heavy", 10 + 1e-6))) == [(LIGHT, LIGHT)]
    assert cells(pure_nash(apply_tax(g, "Heavy", 10 - 1e-6))) == [(HEAVY, HEAVY)]


def test_infeasible_target():
    g = commons_game()
    with pytest.raises(InfeasibleTargetError):
        min_corrective_tax(g, (HEAVY, HEAVY), taxed_label="Heavy")
    with pytest.raises(ValueError):
        min_corrective_tax(g, (LIGHT, HEAVY))


payoff = st.integers(-20, 20)
matrix = st.integers(1, 4).flatmap(lambda n: st.integers(1, 4).flatmap(
    lambda m: st.tuples(st.lists(st.lists(payoff, min_size=m, max_size=m), min_size=n, max_size=n),
                        st.lists(st.lists(payoff, min_size=m, max_size=m), min_size=n, max_size=n))))


@given(matrix)
def test_nash_matches_brute_force(pair):
    p1, p2 = pair
    g = Game.from_arrays(p1, p2)
    assert cells(pure_nash(g)) == brute_force_nash(p1, p2)
    for p in pure_nash(g):
        assert equality_gap(p) == abs(p1[p.s1][p.s2] - p2[p.s1][p.s2])


@given(matrix, st.integers(-50, 50))
def test_equilibria_invariant_to_payoff_shift(pair, c):
    p1, p2 = (np.array(x) for x in pair)
    assert cells(pure_nash(Game.from_arrays(p1, p2))) == cells(pure_nash(Game.from_arrays(p1 + c, p2 + c)))


two = st.lists(payoff, min_size=4, max_size=4)


def game2(a, b):
    return Game.from_arrays(np.reshape(a, (2, 2)), np.reshape(b, (2, 2)))


@given(two, two, st.floats(-30, 30), st.floats(-30, 30))
def test_taxes_compose(a, b, t1, t2):
    g = game2(a, b)
    once = apply_tax(g, "Heavy", t1 + t2)
    twice = apply_tax(apply_tax(g, "Heavy", t1), "Heavy", t2)
    assert np.allclose(once.p1, twice.p1) and np.allclose(once.p2, twice.p2)


@given(two, two, st.integers(0, 40))
def test_subsidy_on_light_mirrors_tax_on_heavy(a, b, s):
    g = game2(a, b)
    assert cells(pure_nash(apply_subsidy(g, "Light", s))) == cells(pure_nash(apply_tax(g, "Heavy", s)))
    assert cells(pure_nash(apply_instrument(g, "subsidy", s))) == cells(pure_nash(apply_instrument(g, "moral_code", s)))


def unique_strict_light(a, b, tau):
    """Independent check on the taxed game: (Light, Light) is the only
    pure equilibrium and both players strictly prefer staying there."""
    p1 = [[a[0], a[1]], [a[2] - tau, a[3] - tau]]
    p2 = [[b[0], b[1] - tau], [b[2], b[3] - tau]]
    return (brute_force_nash(p1, p2) == [(0, 0)]
            and p1[0][0] > p1[1][0] and p2[0][0] > p2[0][1])


@given(two, two)
def test_min_corrective_tax_matches_grid_search(a, b):
    g = game2(a, b)
    grid = [k / 4 for k in range(0, 4 * 45)]
    ok = [unique_strict_light(a, b, t) for t in grid]
    try:
        fix = min_corrective_tax(g, (LIGHT, LIGHT))
    except InfeasibleTargetError:
        assert not ok[-1]
        return
    # integer payoffs put every threshold on the quarter grid
    k = next(i for i in range(len(grid)) if all(ok[i + 1:]))
    assert fix.infimum_tau == grid[k]
    assert fix.holds_at_infimum == ok[k]
    for eps in (1e-6, 0.5):
        assert unique_strict_light(a, b, fix.infimum_tau + eps)


def test_table_marks_cells():
    text = format_table(commons_game())
    assert "30, 30*" in text and "50, 50+" in text
