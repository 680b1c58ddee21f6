"""Plateau statistics and real-wage extremes of the US federal minimum wage,
plus the overheating episodes found in the unemployment gap.

    python scripts/minwage_history.py [--min-duration 4] [--base 2022-12-01]
"""

from __future__ import annotations

import argparse
from datetime import date

from policykit import datasets
from policykit.dataio import AlignPolicy, align, deflate, plateaus, summarize_minwage
from policykit.gaps import cyclical_unemployment, detect_negative_episodes


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-duration", type=int, default=4, help="quarters")
    ap.add_argument("--base", default="index_base", help="'index_base' or a YYYY-MM-01 date")
    args = ap.parse_args()
    base = args.base if args.base == "index_base" else date.fromisoformat(args.base)

    nominal = datasets.load("minwage")
    wage, cpi = align(nominal, datasets.load("cpi"), AlignPolicy.STEP)
    real = deflate(wage, cpi, base)
    stats = summarize_minwage(nominal, real)

    print("effective     nominal")
    for d, w in plateaus(nominal):
        print(f"{d}  {w:7.2f}")
    print()
    print(stats.to_report(), end="")
    print(f"max/min real ratio = {stats.max_real[0] / stats.min_real[0]:.3f}")
    print()

    u, un = align(datasets.load("unemployment"), datasets.load("natural_unemployment"))
    eps = detect_negative_episodes(cyclical_unemployment(u, un), args.min_duration)
    print(f"negative cyclical-unemployment episodes (>= {args.min_duration} quarters)")
    for e in eps:
        print(f"  {e.start} .. {e.end}  {e.duration:3d}q  trough {e.extremum_value:+.2f} @ {e.extremum_date}")


if __name__ == "__main__":
    main()
