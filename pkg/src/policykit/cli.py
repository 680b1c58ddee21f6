"""Command-line front end.

    policykit <command> [--config run.json] [--out DIR] [flags]

Commands: gaps, stimulus, npv, retime, game, charity, report.  Config is
one JSON document with a section per command; flags override it.  Exit
codes: 0 success, 1 input error, 2 internal error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import tempfile
import traceback
from dataclasses import dataclass, field
from datetime import date
from pathlib import Path
from typing import Any

from . import charity, datasets, empowerment, fiscal, games, gaps, minwage, svg
from .dataio import TimeSeries, align, deflate, summarize_minwage, to_csv

log = logging.getLogger("policykit")

COMMANDS = ("gaps", "stimulus", "npv", "retime", "game", "charity")

DEFAULTS: dict[str, dict[str, Any]] = {
    "data": {},
    "gaps": {"min_duration": None, "entry_tol": 0.0, "balance_tol": 0.0},
    "stimulus": {
        "gap": 100.0,
        "mode": "first_round",
        "groups": ["bottom_half:0.5:0.8", "top_half:0.5:0.4"],
        "assumed_mpc": 0.4,
    },
    "npv": {
        "principal": 10000.0,
        "rates": {"r_fm": 0.05, "r_sl": 0.02, "i_social": 0.03},
        "disbursement": "lump_t0",
        "streams": {"hcva": 1000.0, "wpcs": 200.0, "peg": 100.0},
        "sweep": {"parameter": "i_social", "grid": [round(0.01 * k, 2) for k in range(11)]},
    },
    "retime": {
        "timing_method": "midpoint",
        "growth_scheme": "geometric",
        "w_start": 0.40,
        "w_end": 7.25,
        "window_start": "1949-01-01",
        "window_end": "2022-12-31",
        "min_duration": None,
        "entry_tol": 0.0,
        "deflate_base": "index",
    },
    "game": {
        "payoffs": [[[50, 50], [20, 60]], [[60, 20], [30, 30]]],
        "labels": ["Light", "Heavy"],
        "tax_label": "Heavy",
        "target": [0, 0],
        "taus": [0.5 * k for k in range(41)],
    },
    "charity": {
        "baseline_giving": 100.0,
        "baseline_price": 0.60,
        "new_price": 0.606,
        "elasticity": -4.0,
        "mode": "point_elasticity",
        "transfer": 100.0,
        "leak": 0.3,
        "deduction_from": 0.30,
        "deduction_to": 0.40,
        "incentive_cost": None,
        "induced_giving": None,
    },
}


class InputError(Exception):
    """Bad user input: missing file, parse failure, invalid parameter."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


# -- output -------------------------------------------------------------------

@dataclass
class Writer:
    out: Path
    written: list[Path] = field(default_factory=list)

    def text(self, name: str, content: str) -> Path:
        """Write atomically: temp file in the target dir, then rename."""
        path = self.out / name
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(content)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        self.written.append(path)
        return path

    def json(self, name: str, doc: Any) -> Path:
        return self.text(name, json.dumps(doc, indent=2) + "\n")


# -- config -------------------------------------------------------------------

def load_config(path: str | None) -> dict:
    cfg = json.loads(json.dumps(DEFAULTS))
    if path is None:
        return cfg
    try:
        with open(path, encoding="utf-8") as fh:
            user = json.load(fh)
    except FileNotFoundError:
        raise InputError(f"config file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from None
    _merge(cfg, user)
    return cfg


def _merge(base: dict, extra: dict) -> None:
    for key, value in extra.items():
        if isinstance(value, dict) and isinstance(base.get(key), dict):
            _merge(base[key], value)
        else:
            base[key] = value


def _series(cfg: dict, key: str) -> TimeSeries:
    path = cfg["data"].get(key)
    try:
        return datasets.load(key, path)
    except FileNotFoundError:
        raise InputError(f"data file not found: {path}") from None
    except ValueError as exc:
        raise InputError(f"{path or datasets.data_path(key)}: {exc}") from None


def _cyclical(cfg: dict, section: str) -> tuple[gaps.GapSeries, list[gaps.Episode]]:
    opts = cfg[section]
    u, un = align(_series(cfg, "unemployment"), _series(cfg, "natural_unemployment"))
    cyc = gaps.cyclical_unemployment(u, un, tol=float(cfg["gaps"].get("balance_tol", 0.0)))
    eps = gaps.detect_negative_episodes(cyc, opts.get("min_duration"), float(opts.get("entry_tol", 0.0)))
    return cyc, eps


# -- commands -----------------------------------------------------------------

def cmd_gaps(cfg: dict, w: Writer) -> None:
    u, un = align(_series(cfg, "unemployment"), _series(cfg, "natural_unemployment"))
    cyc, episodes = _cyclical(cfg, "gaps")
    w.text("cyclical_unemployment.csv", to_csv(cyc.series))
    w.text("episodes.csv", gaps.episodes_to_csv(episodes))
    w.text("episodes.json", gaps.episodes_to_json(episodes))
    w.text("unemployment.svg", svg.render(svg.Chart(
        "Actual vs natural rate of unemployment (shaded: sustained negative cyclical unemployment)",
        [svg.Line("actual", u.points), svg.Line("natural", un.points)],
        shaded=[(e.start, e.end) for e in episodes], y_label="percent")))

    y, yp = align(_series(cfg, "gdp"), _series(cfg, "potential_gdp"))
    og = gaps.output_gap(y, yp, tol=float(cfg["gaps"].get("balance_tol", 0.0)))
    lines = ["date,gap,state"] + [f"{d},{v!r},{og.classify_value(v)}" for d, v in og.series.points]
    w.text("output_gap.csv", "\n".join(lines) + "\n")
    w.text("output_gap.svg", svg.render(svg.Chart(
        "Real GDP vs potential GDP",
        [svg.Line("real GDP", y.points), svg.Line("potential GDP", yp.points)],
        shaded=[(d, d) for d, s in og.classify() if s == "recessionary"], y_label=y.units)))


def cmd_stimulus(cfg: dict, w: Writer) -> None:
    opts = cfg["stimulus"]
    groups = []
    for g in opts["groups"]:
        if isinstance(g, str):
            groups.append(fiscal.IncomeGroup.parse(g))
        else:
            groups.append(fiscal.IncomeGroup(g["label"], float(g["mpc"]), float(g["share"])))
    assumed = opts.get("assumed_mpc")
    plan = fiscal.allocate(float(opts["gap"]), groups, opts.get("mode", "first_round"),
                           None if assumed is None else float(assumed))
    w.text("stimulus_plan.csv", plan.to_csv())
    w.text("stimulus_plan.json", plan.to_json())


def cmd_npv(cfg: dict, w: Writer) -> None:
    opts = cfg["npv"]
    inputs = empowerment.load_program(opts)
    decision = empowerment.evaluate(inputs)
    schedule = empowerment.build_schedule(inputs.principal, inputs.rates, inputs.timeline,
                                          inputs.disbursement)
    w.json("npv_decision.json", decision.as_dict())
    d = decision
    w.text("npv_decision.csv", "benefits_npv,costs_npv,passes,margin\n"
           f"{d.benefits_npv!r},{d.costs_npv!r},{str(d.passes).lower()},{d.margin!r}\n")
    w.text("amortization.csv", schedule.to_csv())
    sweep = opts.get("sweep")
    if sweep:
        rows = empowerment.sensitivity_sweep(inputs, sweep["parameter"], sweep["grid"])
        w.text("npv_sweep.csv", empowerment.sweep_to_csv(rows, sweep["parameter"]))
        w.text("npv_sweep.json", empowerment.sweep_to_json(rows, sweep["parameter"]))


def _date(value: str, what: str) -> date:
    try:
        return date.fromisoformat(value)
    except (TypeError, ValueError):
        raise InputError(f"{what}: expected YYYY-MM-DD, got {value!r}") from None


def cmd_retime(cfg: dict, w: Writer) -> None:
    opts = cfg["retime"]
    start = _date(opts["window_start"], "window_start")
    end = _date(opts["window_end"], "window_end")
    nominal = _series(cfg, "minwage")
    cpi = _series(cfg, "cpi")

    base = opts.get("deflate_base", "index")
    base = base if base in ("index", "index_base") else _date(base, "deflate_base")
    step_nominal, cpi_on = align(nominal, cpi, "step_interpolate_a_onto_b")
    real = deflate(step_nominal, cpi_on, base)
    stats = summarize_minwage(nominal, real, window_end=end, window_start=start)
    w.text("minwage_stats.json", stats.to_json())
    w.text("minwage_stats.txt", stats.to_report())
    w.text("real_minwage.csv", to_csv(real.between(start, end)))

    cyc, episodes = _cyclical(cfg, "retime")
    config = minwage.RetimeConfig(opts["timing_method"], opts["growth_scheme"],
                                  float(opts["w_start"]), float(opts["w_end"]))
    actual = minwage.WageSchedule.from_series(nominal.between(start, end))
    proposed = minwage.retime(episodes, config, start)
    report = minwage.compare_schedules(actual, proposed, cyc, episodes)
    report["config"] = {"timing_method": config.timing_method.value,
                        "growth_scheme": config.growth_scheme.value,
                        "w_start": config.w_start, "w_end": config.w_end,
                        "episodes": len(episodes)}
    w.text("actual_schedule.csv", actual.to_csv())
    w.text("proposed_schedule.csv", proposed.to_csv())
    w.text("proposed_dense.csv", proposed.dense_csv(cyc.series.dates))
    w.text("comparison.json", minwage.comparison_to_json(report))

    variants = {}
    for method in minwage.TimingMethod:
        for scheme in minwage.GrowthScheme:
            c = minwage.RetimeConfig(method, scheme, config.w_start, config.w_end)
            variants[f"{method.value}_{scheme.value}"] = minwage.retime(episodes, c, start)
    header = ["date", "actual", "cyclical", *variants]
    rows = [",".join(header)]
    for d, c in cyc.series.points:
        vals = [repr(actual.value_at(d)), repr(c)] + [repr(s.value_at(d)) for s in variants.values()]
        rows.append(",".join([d.isoformat(), *vals]))
    w.text("retime_variants.csv", "\n".join(rows) + "\n")

    dates = cyc.series.dates
    w.text("retime.svg", svg.render(svg.Chart(
        f"Actual vs proposed minimum wage ({config.timing_method.value}, {config.growth_scheme.value})",
        [svg.Line("actual nominal", actual.dense(dates), step=True),
         svg.Line("proposed nominal", proposed.dense(dates), step=True),
         svg.Line("cyclical unemployment", cyc.series.points, axis="right")],
        shaded=[(e.start, e.end) for e in episodes],
        y_label="USD per hour", y2_label="percentage points")))


def cmd_game(cfg: dict, w: Writer) -> None:
    opts = cfg["game"]
    game = games.Game.from_dict(opts)
    diag = games.tragedy_diagnosis(game)
    correction = None
    label = opts.get("tax_label")
    target = opts.get("target")
    if label and target is not None:
        try:
            correction = games.min_corrective_tax(game, tuple(target), label)
        except games.InfeasibleTargetError as exc:
            log.warning("corrective tax: %s", exc)
    w.text("diagnosis.json", games.diagnosis_to_json(game, diag, correction))
    table = games.format_table(game, diag)
    if correction is not None:
        table += (f"minimum corrective tax on {correction.taxed_label}: > {correction.infimum_tau:g} "
                  f"(holds at exactly {correction.infimum_tau:g}: {correction.holds_at_infimum})\n")
    w.text("diagnosis.txt", table)
    if label:
        w.text("tax_sweep.csv", games.tax_sweep_csv(games.tax_sweep(game, label, opts["taus"])))


def cmd_charity(cfg: dict, w: Writer) -> None:
    o = cfg["charity"]
    scenario = charity.GivingScenario(float(o["baseline_giving"]), float(o["baseline_price"]),
                                      float(o["new_price"]), float(o["elasticity"]), o["mode"])
    response = charity.giving_response(scenario)

    induced, cost = o.get("induced_giving"), o.get("incentive_cost")
    if induced is None or cost is None:
        # price cut from raising the deduction rate, priced at constant elasticity
        p0 = charity.tax_price(float(o["deduction_from"]))
        p1 = charity.tax_price(float(o["deduction_to"]))
        g0 = float(o["baseline_giving"])
        g1 = charity.giving_response(charity.GivingScenario(
            g0, p0, p1, float(o["elasticity"]), "constant_elasticity")).giving
        induced = g1 - g0 if induced is None else induced
        cost = (1 - p1) * g1 - (1 - p0) * g0 if cost is None else cost
    comparison = charity.channel_comparison(float(o["transfer"]), float(o["leak"]),
                                            float(cost), max(float(induced), 0.0))
    w.text("charity.json", charity.to_json(scenario, response, comparison))
    per_tax, per_charity = comparison.per_public_dollar
    fmt = lambda x: "n/a" if x is None else f"{x:.4f}"  # noqa: E731
    w.text("charity.txt", "\n".join([
        f"giving {scenario.baseline_giving:g} -> {response.giving:.4f} "
        f"(price {scenario.baseline_price:g} -> {scenario.new_price:g}, elasticity {scenario.elasticity:g}, "
        f"{scenario.mode.value}{', floored' if response.floored else ''})",
        f"delivered via tax transfer:   {comparison.via_tax:.4f}  per public dollar {fmt(per_tax)}",
        f"delivered via giving channel: {comparison.via_charity:.4f}  per public dollar {fmt(per_charity)}",
    ]) + "\n")


HANDLERS = {
    "gaps": cmd_gaps, "stimulus": cmd_stimulus, "npv": cmd_npv,
    "retime": cmd_retime, "game": cmd_game, "charity": cmd_charity,
}


def cmd_report(cfg: dict, w: Writer) -> None:
    sections = []
    for name in COMMANDS:
        sub = Writer(w.out / name)
        HANDLERS[name](cfg, sub)
        w.written.extend(sub.written)
        sections.append((name, sorted(p.relative_to(w.out).as_posix() for p in sub.written)))
    lines = ["# policykit report", ""]
    for name, files in sections:
        lines.append(f"## {name}")
        lines.append("")
        lines += [f"- [{f}]({f})" for f in files]
        lines.append("")
    w.text("index.md", "\n".join(lines))


# -- argument parsing ---------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON run configuration")
    common.add_argument("--out", help="output directory (default: ./out)")
    for key in datasets.SNAPSHOTS:
        common.add_argument(f"--{key.replace('_', '-')}", dest=f"data_{key}", metavar="CSV",
                            help=f"override the bundled {key} snapshot")
    common.add_argument("-v", "--verbose", action="store_true")

    p = _Parser(prog="policykit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gaps", parents=[common], help="output gap, cyclical unemployment, episodes")
    g.add_argument("--min-duration", type=int, dest="gaps__min_duration")
    g.add_argument("--entry-tol", type=float, dest="gaps__entry_tol")
    g.add_argument("--balance-tol", type=float, dest="gaps__balance_tol")

    s = sub.add_parser("stimulus", parents=[common], help="MPC-targeted stimulus plan")
    s.add_argument("--gap", type=float, dest="stimulus__gap")
    s.add_argument("--mode", choices=[m.value for m in fiscal.Mode], dest="stimulus__mode")
    s.add_argument("--group", action="append", dest="stimulus__groups", metavar="LABEL:SHARE:MPC")
    s.add_argument("--assumed-mpc", type=float, dest="stimulus__assumed_mpc")

    n = sub.add_parser("npv", parents=[common], help="student-loan NPV cost-benefit test")
    n.add_argument("--principal", type=float, dest="npv__principal")
    n.add_argument("--r-fm", type=float, dest="npv__rates__r_fm")
    n.add_argument("--r-sl", type=float, dest="npv__rates__r_sl")
    n.add_argument("--i-social", type=float, dest="npv__rates__i_social")
    n.add_argument("--disbursement", choices=[d.value for d in empowerment.Disbursement],
                   dest="npv__disbursement")
    n.add_argument("--sweep", choices=[x.value for x in empowerment.SweepParameter],
                   dest="npv__sweep__parameter")
    n.add_argument("--grid", type=float, nargs="+", dest="npv__sweep__grid")

    r = sub.add_parser("retime", parents=[common], help="retimed minimum-wage schedule")
    r.add_argument("--timing-method", choices=[m.value for m in minwage.TimingMethod],
                   dest="retime__timing_method")
    r.add_argument("--growth-scheme", choices=[m.value for m in minwage.GrowthScheme],
                   dest="retime__growth_scheme")
    r.add_argument("--w-start", type=float, dest="retime__w_start")
    r.add_argument("--w-end", type=float, dest="retime__w_end")
    r.add_argument("--window-start", dest="retime__window_start")
    r.add_argument("--window-end", dest="retime__window_end")
    r.add_argument("--min-duration", type=int, dest="retime__min_duration")
    r.add_argument("--deflate-base", dest="retime__deflate_base",
                   help="'index' or a YYYY-MM-DD reference month")

    gm = sub.add_parser("game", parents=[common], help="commons game diagnosis")
    gm.add_argument("--game", dest="game_file", help="JSON file with labels and payoffs")
    gm.add_argument("--payoffs", type=float, nargs=8, dest="game_inline",
                    metavar="X", help="a1 b1 a2 b2 a3 b3 a4 b4, row-major cells")
    gm.add_argument("--tax-label", dest="game__tax_label")

    c = sub.add_parser("charity", parents=[common], help="giving response and channel comparison")
    for flag in ("baseline-giving", "baseline-price", "new-price", "elasticity", "transfer",
                 "leak", "incentive-cost", "induced-giving", "deduction-from", "deduction-to"):
        c.add_argument(f"--{flag}", type=float, dest=f"charity__{flag.replace('-', '_')}")
    c.add_argument("--mode", choices=[m.value for m in charity.ResponseMode], dest="charity__mode")

    sub.add_parser("report", parents=[common], help="run every command and write an index")
    for sp in sub.choices.values():
        for action in sp._actions:
            if "__" in action.dest and action.metavar is None and action.choices is None:
                action.metavar = action.dest.rsplit("__", 1)[-1].upper()
    return p


def apply_overrides(cfg: dict, args: argparse.Namespace) -> dict:
    for key, value in vars(args).items():
        if value is None:
            continue
        if key.startswith("data_"):
            cfg["data"][key[5:]] = value
        elif "__" in key:
            node = cfg
            *path, leaf = key.split("__")
            for part in path:
                node = node.setdefault(part, {})
            node[leaf] = value
    if getattr(args, "game_file", None):
        try:
            with open(args.game_file, encoding="utf-8") as fh:
                cfg["game"].update(json.load(fh))
        except FileNotFoundError:
            raise InputError(f"game file not found: {args.game_file}") from None
        except json.JSONDecodeError as exc:
            raise InputError(f"{args.game_file}: invalid JSON: {exc}") from None
    if getattr(args, "game_inline", None):
        v = args.game_inline
        cfg["game"]["payoffs"] = [[[v[0], v[1]], [v[2], v[3]]], [[v[4], v[5]], [v[6], v[7]]]]
    return cfg


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = apply_overrides(load_config(args.config), args)
        out = Path(args.out or cfg.get("out") or "out")
        writer = Writer(out)
        handler = cmd_report if args.command == "report" else HANDLERS[args.command]
        handler(cfg, writer)
    except (InputError, ValueError, KeyError) as exc:
        print(f"policykit {args.command}: error: {exc}", file=sys.stderr)
        return 1
    except Exception:  # noqa: BLE001
        traceback.print_exc()
        return 2
    for path in writer.written:
        print(path)
    return 0
