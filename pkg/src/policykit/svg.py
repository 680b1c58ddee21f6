"""Minimal deterministic SVG line charts.

Coordinates are printed with fixed precision and no timestamps are
embedded, so identical inputs give byte-identical files.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from datetime import date
from html import escape
from typing import Sequence

from . import __version__

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


@dataclass
class Line:
    label: str
    points: Sequence[tuple[date, float]]
    step: bool = False
    axis: str = "left"


@dataclass
class Chart:
    title: str
    lines: list[Line] = field(default_factory=list)
    shaded: list[tuple[date, date]] = field(default_factory=list)
    y_label: str = ""
    y2_label: str = ""
    zero_line: bool = False
    width: int = 900
    height: int = 420


def _f(x: float) -> str:
    return f"{x:.2f}"


def _nice_ticks(lo: float, hi: float, n: int = 5) -> list[float]:
    if hi <= lo:
        hi = lo + 1
    raw = (hi - lo) / n
    mag = 10 ** math.floor(math.log10(raw))
    step = next(m * mag for m in (1, 2, 2.5, 5, 10) if m * mag >= raw)
    first = math.ceil(lo / step)
    last = math.floor(hi / step)
    return [round(k * step, 10) for k in range(first, last + 1)]


def render(chart: Chart) -> str:
    has_right = any(line.axis == "right" for line in chart.lines)
    left, right, top, bottom = 70, 70 if has_right else 30, 40, 60
    w, h = chart.width, chart.height
    pw, ph = w - left - right, h - top - bottom

    all_dates = [d for line in chart.lines for d, _ in line.points]
    all_dates += [d for span in chart.shaded for d in span]
    x0 = min(all_dates).toordinal()
    x1 = max(all_dates).toordinal()
    span_x = max(1, x1 - x0)

    def xs(d: date) -> float:
        return left + (d.toordinal() - x0) / span_x * pw

    def yrange(axis: str) -> tuple[float, float]:
        vals = [v for line in chart.lines if line.axis == axis for _, v in line.points]
        if not vals:
            return 0.0, 1.0
        lo, hi = min(vals), max(vals)
        if chart.zero_line and axis == "left":
            lo, hi = min(lo, 0.0), max(hi, 0.0)
        pad = (hi - lo) * 0.05 or 1.0
        return lo - pad, hi + pad

    ranges = {"left": yrange("left"), "right": yrange("right")}

    def ys(v: float, axis: str) -> float:
        lo, hi = ranges[axis]
        return top + (1 - (v - lo) / (hi - lo)) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}" font-family="sans-serif" font-size="11">',
        f"<!-- policykit {__version__} -->",
        f'<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>',
        f'<text x="{w / 2:.1f}" y="22" text-anchor="middle" font-size="14">{escape(chart.title)}</text>',
    ]
    for a, b in chart.shaded:
        xa, xb = xs(a), xs(b)
        out.append(f'<rect x="{_f(xa)}" y="{top}" width="{_f(max(xb - xa, 1.0))}" height="{ph}" '
                   'fill="#bbbbbb" fill-opacity="0.35"/>')
    out.append(f'<rect x="{left}" y="{top}" width="{pw}" height="{ph}" fill="none" stroke="black"/>')

    for axis, xpos, anchor in (("left", left - 6, "end"), ("right", left + pw + 6, "start")):
        if axis == "right" and not has_right:
            continue
        lo, hi = ranges[axis]
        for t in _nice_ticks(lo, hi):
            y = ys(t, axis)
            out.append(f'<text x="{xpos}" y="{_f(y + 4)}" text-anchor="{anchor}">{t:g}</text>')
            if axis == "left":
                out.append(f'<line x1="{left}" y1="{_f(y)}" x2="{left + pw}" y2="{_f(y)}" '
                           'stroke="#eeeeee"/>')
    if chart.zero_line:
        y = ys(0.0, "left")
        out.append(f'<line x1="{left}" y1="{_f(y)}" x2="{left + pw}" y2="{_f(y)}" stroke="#555555" '
                   'stroke-dasharray="4,3"/>')

    y_first, y_last = min(all_dates).year, max(all_dates).year
    step = max(1, (y_last - y_first) // 10)
    for year in range(y_first - y_first % step, y_last + 1, step):
        d = date(year, 1, 1)
        if d.toordinal() < x0:
            continue
        x = xs(d)
        out.append(f'<text x="{_f(x)}" y="{top + ph + 16}" text-anchor="middle">{year}</text>')

    if chart.y_label:
        out.append(f'<text x="16" y="{top + ph / 2:.1f}" text-anchor="middle" '
                   f'transform="rotate(-90 16 {top + ph / 2:.1f})">{escape(chart.y_label)}</text>')
    if chart.y2_label:
        xr = w - 14
        out.append(f'<text x="{xr}" y="{top + ph / 2:.1f}" text-anchor="middle" '
                   f'transform="rotate(90 {xr} {top + ph / 2:.1f})">{escape(chart.y2_label)}</text>')

    for k, line in enumerate(chart.lines):
        color = PALETTE[k % len(PALETTE)]
        coords: list[str] = []
        prev_y = None
        for d, v in line.points:
            x, y = xs(d), ys(v, line.axis)
            if line.step and prev_y is not None:
                coords.append(f"{_f(x)},{_f(prev_y)}")
            coords.append(f"{_f(x)},{_f(y)}")
            prev_y = y
        if line.step and line.points:
            coords.append(f"{_f(left + pw)},{_f(prev_y)}")
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5" '
                   f'points="{" ".join(coords)}"/>')
        ly = h - 20
        lx = left + k * 200
        out.append(f'<line x1="{lx}" y1="{ly}" x2="{lx + 20}" y2="{ly}" stroke="{color}" stroke-width="2"/>')
        suffix = " (right)" if line.axis == "right" else ""
        out.append(f'<text x="{lx + 25}" y="{ly + 4}">{escape(line.label + suffix)}</text>')

    out.append("</svg>")
    return "\n".join(out) + "\n"
