"""Compare the actual minimum-wage path with the four retimed variants
(midpoint / local-min timing x arithmetic / geometric steps).

Writes one CSV per variant and an overlay SVG to the output directory.

    python scripts/retime_paths.py [outdir]
"""

from __future__ import annotations

import sys
from datetime import date
from itertools import product
from pathlib import Path

from policykit import datasets
from policykit.dataio import align
from policykit.gaps import cyclical_unemployment, detect_negative_episodes
from policykit.minwage import (
    GrowthScheme, RetimeConfig, TimingMethod, WageSchedule, compare_schedules, retime,
)
from policykit.svg import Chart, Line, render

START, END = date(1949, 1, 1), date(2022, 12, 31)


def main(out: Path) -> None:
    out.mkdir(parents=True, exist_ok=True)
    u, un = align(datasets.load("unemployment"), datasets.load("natural_unemployment"))
    cyc = cyclical_unemployment(u, un)
    eps = detect_negative_episodes(cyc)
    actual = WageSchedule.from_series(datasets.load("minwage"))

    chart = Chart("Minimum wage: actual and retimed paths", y_label="$ / hour",
                  shaded=[(e.start, e.end) for e in eps])
    chart.lines.append(Line("actual", actual.anchors + ((END, actual.wages[-1]),), step=True))
    report = compare_schedules(actual, actual, cyc, eps)["actual"]["summary"]
    print(f"actual: {report['increases']} increases, {report['aligned']} in overheated quarters, "
          f"{report['misaligned']} not, {report['unknown']} outside the data")

    for method, scheme in product(TimingMethod, GrowthScheme):
        sched = retime(eps, RetimeConfig(method, scheme), START)
        name = f"{method.value}_{scheme.value}"
        (out / f"{name}.csv").write_text(sched.to_csv())
        chart.lines.append(Line(name, sched.anchors + ((END, sched.wages[-1]),), step=True))
        steps = ", ".join(f"{d:%Y-%m} {w:.2f}" for d, w in sched.increases())
        print(f"{name}: {steps}")

    (out / "retime_paths.svg").write_text(render(chart))
    print(f"wrote {out}")


if __name__ == "__main__":
    main(Path(sys.argv[1] if len(sys.argv) > 1 else "out/retime_paths"))
