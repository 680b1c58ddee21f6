"""Two-player normal-form games: commons analysis and corrective levies.

Games are bimatrices of any shape, though the corrective-tax search and the
default labels target the 2x2 herders' commons game.  Only pure strategies
are analysed.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

LIGHT, HEAVY = 0, 1


class UnknownStrategyError(KeyError):
    pass


class InfeasibleTargetError(ValueError):
    pass


@dataclass(frozen=True)
class Game:
    """Bimatrix game; ``payoffs[i][j] = (row player, column player)``."""

    payoffs: tuple[tuple[tuple[float, float], ...], ...]
    row_labels: tuple[str, ...] = ("Light", "Heavy")
    col_labels: tuple[str, ...] = ("Light", "Heavy")

    def __post_init__(self):
        grid = tuple(tuple((float(a), float(b)) for a, b in row) for row in self.payoffs)
        object.__setattr__(self, "payoffs", grid)
        object.__setattr__(self, "row_labels", tuple(self.row_labels))
        object.__setattr__(self, "col_labels", tuple(self.col_labels))
        if not grid or len({len(r) for r in grid}) != 1:
            raise ValueError("payoff grid must be a non-empty rectangle")
        if len(grid) != len(self.row_labels) or len(grid[0]) != len(self.col_labels):
            raise ValueError("label count does not match payoff grid")
        if not all(math.isfinite(x) for row in grid for cell in row for x in cell):
            raise ValueError("payoffs must be finite")

    @classmethod
    def from_arrays(cls, p1, p2, row_labels=None, col_labels=None) -> Game:
        p1, p2 = np.asarray(p1, float), np.asarray(p2, float)
        grid = tuple(tuple((p1[i, j], p2[i, j]) for j in range(p1.shape[1])) for i in range(p1.shape[0]))
        n, m = p1.shape
        rl = row_labels or (("Light", "Heavy") if n == 2 else tuple(f"r{i}" for i in range(n)))
        cl = col_labels or (("Light", "Heavy") if m == 2 else tuple(f"c{j}" for j in range(m)))
        return cls(grid, tuple(rl), tuple(cl))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.payoffs), len(self.payoffs[0])

    @property
    def p1(self) -> np.ndarray:
        return np.array([[c[0] for c in row] for row in self.payoffs])

    @property
    def p2(self) -> np.ndarray:
        return np.array([[c[1] for c in row] for row in self.payoffs])

    def labels(self, player: int) -> tuple[str, ...]:
        return self.row_labels if player == 1 else self.col_labels

    @property
    def is_symmetric(self) -> bool:
        n, m = self.shape
        return n == m and all(self.payoffs[i][j][0] == self.payoffs[j][i][1]
                              for i in range(n) for j in range(n))

    def profile(self, s1: int, s2: int) -> Profile:
        return Profile(s1, s2, self.payoffs[s1][s2])

    def name(self, profile: Profile) -> str:
        return f"{{{self.row_labels[profile.s1]}, {self.col_labels[profile.s2]}}}"

    def as_dict(self) -> dict:
        return {"row_labels": list(self.row_labels), "col_labels": list(self.col_labels),
                "payoffs": [[list(c) for c in row] for row in self.payoffs]}

    @classmethod
    def from_dict(cls, doc: dict) -> Game:
        labels = doc.get("labels")
        rl = doc.get("row_labels", labels or ("Light", "Heavy"))
        cl = doc.get("col_labels", labels or ("Light", "Heavy"))
        return cls(tuple(tuple(tuple(c) for c in row) for row in doc["payoffs"]), tuple(rl), tuple(cl))


Game2x2 = Game


def commons_game() -> Game:
    """The herders' commons: sustainable grazing pays 50 each, over-grazing
    against a light grazer pays 60, mutual over-grazing pays 30."""
    return Game((((50, 50), (20, 60)), ((60, 20), (30, 30))))


@dataclass(frozen=True)
class Profile:
    s1: int
    s2: int
    payoffs: tuple[float, float]

    @property
    def total(self) -> float:
        return self.payoffs[0] + self.payoffs[1]

    @property
    def cell(self) -> tuple[int, int]:
        return self.s1, self.s2


def _own(game: Game, player: int) -> np.ndarray:
    """Player's payoff matrix indexed [own strategy, opponent strategy]."""
    return game.p1 if player == 1 else game.p2.T


@dataclass(frozen=True)
class Dominance:
    strategy: int | None
    strict: bool
    weak_candidates: tuple[int, ...]


def dominant_strategy(game: Game, player: int) -> Dominance:
    """A strictly dominant strategy if there is one.

    Otherwise ``strategy`` is None and ``weak_candidates`` lists strategies
    whose payoff is >= every alternative against every opponent strategy.
    """
    if player not in (1, 2):
        raise ValueError("player must be 1 or 2")
    u = _own(game, player)
    n = u.shape[0]
    strict, weak = [], []
    for s in range(n):
        others = [t for t in range(n) if t != s]
        if all(np.all(u[s] > u[t]) for t in others):
            strict.append(s)
        if all(np.all(u[s] >= u[t]) for t in others):
            weak.append(s)
    if strict:
        return Dominance(strict[0], True, tuple(weak))
    return Dominance(None, False, tuple(weak))


def pure_nash(game: Game) -> list[Profile]:
    """Cells where neither player gains by deviating alone (row-major)."""
    p1, p2 = game.p1, game.p2
    best1 = p1.max(axis=0)
    best2 = p2.max(axis=1)
    n, m = game.shape
    return [game.profile(i, j) for i in range(n) for j in range(m)
            if p1[i, j] >= best1[j] and p2[i, j] >= best2[i]]


def is_strict_nash(game: Game, s1: int, s2: int) -> bool:
    p1, p2 = game.p1, game.p2
    n, m = game.shape
    return (all(p1[s1, s2] > p1[i, s2] for i in range(n) if i != s1)
            and all(p2[s1, s2] > p2[s1, j] for j in range(m) if j != s2))


def social_optima(game: Game) -> list[Profile]:
    """All cells attaining the maximal payoff sum, row-major."""
    n, m = game.shape
    cells = [game.profile(i, j) for i in range(n) for j in range(m)]
    best = max(c.total for c in cells)
    return [c for c in cells if c.total == best]


def best_social_outcome(game: Game) -> Profile:
    """Payoff-sum maximiser; ties go to the first cell in row-major order
    (see :func:`social_optima` for the full tie set)."""
    return social_optima(game)[0]


def equality_gap(profile: Profile) -> float:
    return abs(profile.payoffs[0] - profile.payoffs[1])


@dataclass(frozen=True)
class Diagnosis:
    nash: tuple[Profile, ...]
    bso: Profile
    bso_ties: tuple[Profile, ...]
    has_pure_nash: bool
    is_tragedy: bool
    efficiency_loss: float
    equality_at_nash: tuple[float, ...]
    equality_at_bso: float

    def as_dict(self, game: Game | None = None) -> dict:
        def prof(p: Profile) -> dict:
            d = {"cell": list(p.cell), "payoffs": list(p.payoffs), "total": p.total}
            if game is not None:
                d["labels"] = [game.row_labels[p.s1], game.col_labels[p.s2]]
            return d
        return {
            "nash": [prof(p) for p in self.nash],
            "has_pure_nash": self.has_pure_nash,
            "bso": prof(self.bso),
            "bso_tied": len(self.bso_ties) > 1,
            "is_tragedy": self.is_tragedy,
            "efficiency_loss": self.efficiency_loss,
            "equality_at_nash": list(self.equality_at_nash),
            "equality_at_bso": self.equality_at_bso,
        }


def tragedy_diagnosis(game: Game) -> Diagnosis:
    """Compare pure equilibria with the best social outcome.

    A tragedy means every pure equilibrium sums to strictly less than the
    social optimum.  Without a pure equilibrium, ``has_pure_nash`` is False,
    ``is_tragedy`` is False and the loss is reported as 0.
    """
    nash = pure_nash(game)
    ties = social_optima(game)
    bso = ties[0]
    if nash:
        loss = bso.total - max(p.total for p in nash)
        tragedy = all(p.total < bso.total for p in nash)
    else:
        loss, tragedy = 0.0, False
    return Diagnosis(tuple(nash), bso, tuple(ties), bool(nash), tragedy, loss,
                     tuple(equality_gap(p) for p in nash), equality_gap(bso))


def format_table(game: Game, diagnosis: Diagnosis | None = None) -> str:
    """Plain-text payoff matrix, with equilibrium (*) and optimum (+) marks."""
    diagnosis = diagnosis or tragedy_diagnosis(game)
    nash = {p.cell for p in diagnosis.nash}
    bso = {p.cell for p in diagnosis.bso_ties}
    width = max(12, *(len(x) + 2 for x in game.col_labels))
    head = " " * 10 + "".join(f"{c:>{width}}" for c in game.col_labels)
    lines = [head]
    for i, r in enumerate(game.row_labels):
        cells = []
        for j in range(game.shape[1]):
            a, b = game.payoffs[i][j]
            mark = ("*" if (i, j) in nash else "") + ("+" if (i, j) in bso else "")
            cells.append(f"{f'{a:g}, {b:g}{mark}':>{width}}")
        lines.append(f"{r:<10}" + "".join(cells))
    lines.append("")
    lines.append("* pure Nash equilibrium   + best social outcome")
    lines.append(f"tragedy: {diagnosis.is_tragedy}   efficiency loss: {diagnosis.efficiency_loss:g}")
    return "\n".join(lines) + "\n"


# -- interventions ------------------------------------------------------------

def apply_tax(game: Game, strategy_label: str, tau: float) -> Game:
    """Levy ``tau`` on each player in every cell where that player plays
    ``strategy_label``.  A negative ``tau`` is a subsidy."""
    in_rows = strategy_label in game.row_labels
    in_cols = strategy_label in game.col_labels
    if not (in_rows or in_cols):
        raise UnknownStrategyError(strategy_label)
    p1, p2 = game.p1, game.p2
    if in_rows:
        p1[game.row_labels.index(strategy_label), :] -= tau
    if in_cols:
        p2[:, game.col_labels.index(strategy_label)] -= tau
    return Game.from_arrays(p1, p2, game.row_labels, game.col_labels)


def apply_subsidy(game: Game, strategy_label: str, sigma: float) -> Game:
    return apply_tax(game, strategy_label, -sigma)


# Instruments reduce to a per-action payoff shift on the acting player.
# Tradable permits price the harmful action; moral codes attach a private
# cost to it; property rights and Coasean bargains internalise the external
# damage.  All are treated as a levy on the harmful strategy, except the
# subsidy which rewards the sustainable one.
INSTRUMENTS = {
    "pigouvian_tax": ("harmful", 1.0),
    "tradable_permits": ("harmful", 1.0),
    "moral_code": ("harmful", 1.0),
    "property_rights": ("harmful", 1.0),
    "coasean_contract": ("harmful", 1.0),
    "subsidy": ("sustainable", -1.0),
}


def apply_instrument(game: Game, instrument: str, amount: float,
                     harmful: str = "Heavy", sustainable: str = "Light") -> Game:
    try:
        target, sign = INSTRUMENTS[instrument]
    except KeyError:
        raise ValueError(f"unknown instrument {instrument!r}; choose from {sorted(INSTRUMENTS)}") from None
    label = harmful if target == "harmful" else sustainable
    return apply_tax(game, label, sign * amount)


def best_responses(game: Game, player: int) -> list[tuple[int, ...]]:
    """Best-response set of ``player`` against each opponent strategy."""
    u = _own(game, player)
    return [tuple(np.flatnonzero(u[:, k] == u[:, k].max())) for k in range(u.shape[1])]


@dataclass(frozen=True)
class CorrectiveTax:
    infimum_tau: float
    strict_above: bool
    holds_at_infimum: bool
    taxed_label: str

    def as_dict(self) -> dict:
        return {"infimum_tau": self.infimum_tau, "strict_above": self.strict_above,
                "holds_at_infimum": self.holds_at_infimum, "taxed_label": self.taxed_label}


def _target_unique_strict(game: Game, cell: tuple[int, int]) -> bool:
    return is_strict_nash(game, *cell) and [p.cell for p in pure_nash(game)] == [cell]


def min_corrective_tax(game: Game, target: Profile | tuple[int, int],
                       taxed_label: str | None = None) -> CorrectiveTax:
    """Smallest levy on the other strategy making ``target`` the unique
    strict pure equilibrium for every larger levy.

    Only payoffs of the taxed strategy move, so each best-response
    comparison flips at a payoff difference.  Those differences are the only
    candidate thresholds; each interval between them is probed once.
    """
    cell = target.cell if isinstance(target, Profile) else tuple(target)
    n, m = game.shape
    if n != 2 or m != 2:
        raise ValueError("corrective tax search is defined for 2x2 games")
    if cell[0] != cell[1] or game.row_labels != game.col_labels:
        raise ValueError("target must be a diagonal profile of a game with shared labels")
    s = cell[0]
    other = 1 - s
    label = taxed_label or game.row_labels[other]
    if label == game.row_labels[s]:
        raise InfeasibleTargetError("cannot reach a target by taxing its own strategy")

    candidates = {0.0}
    for u in (_own(game, 1), _own(game, 2)):
        candidates.update(float(x) for x in (u[other] - u[s]) if x > 0)
    points = sorted(candidates)

    def ok(tau: float) -> bool:
        return _target_unique_strict(apply_tax(game, label, tau), cell)

    probes = [(a + b) / 2 for a, b in zip(points, points[1:])] + [points[-1] + 1.0]
    if not ok(probes[-1]):
        raise InfeasibleTargetError(f"no levy on {label!r} makes {game.name(game.profile(*cell))} "
                                    "the unique strict equilibrium")
    infimum = points[-1]
    for k in range(len(points) - 1, 0, -1):
        if ok(probes[k - 1]) and ok(points[k]):
            infimum = points[k - 1]
        else:
            break
    return CorrectiveTax(infimum, True, ok(infimum), label)


def tax_sweep(game: Game, label: str, taus: Sequence[float]) -> list[dict]:
    rows = []
    for tau in taus:
        taxed = apply_tax(game, label, tau)
        nash = pure_nash(taxed)
        rows.append({"tau": tau, "nash": ";".join(game.name(p) for p in nash),
                     "n_nash": len(nash),
                     "nash_total_untaxed": ";".join(f"{game.profile(*p.cell).total:g}" for p in nash)})
    return rows


def tax_sweep_csv(rows: list[dict]) -> str:
    lines = ["tau,n_nash,nash,nash_total_untaxed"]
    lines += [f"{r['tau']!r},{r['n_nash']},\"{r['nash']}\",\"{r['nash_total_untaxed']}\"" for r in rows]
    return "\n".join(lines) + "\n"


def diagnosis_to_json(game: Game, diagnosis: Diagnosis, correction: CorrectiveTax | None = None) -> str:
    doc = {"game": game.as_dict(), "diagnosis": diagnosis.as_dict(game)}
    if correction is not None:
        doc["corrective_tax"] = correction.as_dict()
    return json.dumps(doc, indent=2) + "\n"
