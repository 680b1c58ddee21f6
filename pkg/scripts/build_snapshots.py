"""Rebuild the bundled macro data snapshots under src/policykit/data/.

The sandbox that produced this package had no route to FRED, so the
snapshots are reconstructed from published annual / quarterly figures:

* FEDMINNFRWG  - statutory effective dates of the FLSA nonfarm minimum wage
                 (exact; these are legislated values).
* CPIAUCSL     - annual-average CPI-U (1982-84=100); monthly values are
                 log-linearly interpolated between mid-year anchors, except
                 1949-1950 which carry monthly values directly.
* UNRATE       - quarterly averages of the civilian unemployment rate.
* NROU         - CBO noncyclical rate of unemployment, piecewise linear
                 between anchor years (smooth by construction).
* GDPC1        - annual real GDP (chained 2012 $bn) chained from annual
                 growth rates and anchored at 2012.
* GDPPOT       - annual potential GDP implied by Okun's law with
                 coefficient 2 on the annual unemployment gap.

Drop genuine FRED exports with the same column names into a directory and
point the CLI at them to replace these approximations.

    python scripts/build_snapshots.py [outdir]
"""

from __future__ import annotations

import math
import sys
from datetime import date
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "policykit" / "data"

MINWAGE = [
    ("1949-01-01", 0.40), ("1950-01-25", 0.75), ("1956-03-01", 1.00),
    ("1961-09-03", 1.15), ("1963-09-03", 1.25), ("1967-02-01", 1.40),
    ("1968-02-01", 1.60), ("1974-05-01", 2.00), ("1975-01-01", 2.10),
    ("1976-01-01", 2.30), ("1978-01-01", 2.65), ("1979-01-01", 2.90),
    ("1980-01-01", 3.10), ("1981-01-01", 3.35), ("1990-04-01", 3.80),
    ("1991-04-01", 4.25), ("1996-10-01", 4.75), ("1997-09-01", 5.15),
    ("2007-07-24", 5.85), ("2008-07-24", 6.55), ("2009-07-24", 7.25),
]

CPI_ANNUAL = {
    1948: 24.1, 1949: 23.8, 1950: 24.1, 1951: 26.0, 1952: 26.5, 1953: 26.7,
    1954: 26.9, 1955: 26.8, 1956: 27.2, 1957: 28.1, 1958: 28.9, 1959: 29.1,
    1960: 29.6, 1961: 29.9, 1962: 30.2, 1963: 30.6, 1964: 31.0, 1965: 31.5,
    1966: 32.4, 1967: 33.4, 1968: 34.8, 1969: 36.7, 1970: 38.8, 1971: 40.5,
    1972: 41.8, 1973: 44.4, 1974: 49.3, 1975: 53.8, 1976: 56.9, 1977: 60.6,
    1978: 65.2, 1979: 72.6, 1980: 82.4, 1981: 90.9, 1982: 96.5, 1983: 99.6,
    1984: 103.9, 1985: 107.6, 1986: 109.6, 1987: 113.6, 1988: 118.3,
    1989: 124.0, 1990: 130.7, 1991: 136.2, 1992: 140.3, 1993: 144.5,
    1994: 148.2, 1995: 152.4, 1996: 156.9, 1997: 160.5, 1998: 163.0,
    1999: 166.6, 2000: 172.2, 2001: 177.1, 2002: 179.9, 2003: 184.0,
    2004: 188.9, 2005: 195.3, 2006: 201.6, 2007: 207.342, 2008: 215.303,
    2009: 214.537, 2010: 218.056, 2011: 224.939, 2012: 229.594,
    2013: 232.957, 2014: 236.736, 2015: 237.017, 2016: 240.007,
    2017: 245.120, 2018: 251.107, 2019: 255.657, 2020: 258.811,
    2021: 270.970, 2022: 292.655,
}

# 1949-1950 monthly values; the early-1950 trough matters for where the
# 0.40 plateau's real value bottoms out.
CPI_MONTHLY_OVERRIDE = {
    1949: [24.01, 23.91, 23.91, 23.92, 23.91, 23.92, 23.70, 23.70, 23.75, 23.67, 23.70, 23.61],
    1950: [23.51, 23.61, 23.64, 23.65, 23.77, 23.88, 24.07, 24.20, 24.34, 24.50, 24.60, 24.98],
}

UNRATE_Q = {
    1949: (5.0, 5.9, 6.6, 7.0), 1950: (6.4, 5.6, 4.6, 4.2),
    1951: (3.5, 3.1, 3.2, 3.4), 1952: (3.1, 3.0, 3.2, 2.8),
    1953: (2.7, 2.6, 2.7, 3.7), 1954: (5.3, 5.8, 6.0, 5.3),
    1955: (4.7, 4.4, 4.1, 4.2), 1956: (4.0, 4.2, 4.1, 4.1),
    1957: (3.9, 4.1, 4.2, 4.9), 1958: (6.3, 7.4, 7.3, 6.4),
    1959: (5.8, 5.1, 5.3, 5.6), 1960: (5.1, 5.2, 5.5, 6.3),
    1961: (6.8, 7.0, 6.8, 6.2), 1962: (5.6, 5.5, 5.6, 5.5),
    1963: (5.8, 5.7, 5.5, 5.6), 1964: (5.5, 5.2, 5.0, 5.0),
    1965: (4.9, 4.7, 4.4, 4.1), 1966: (3.9, 3.8, 3.8, 3.7),
    1967: (3.8, 3.8, 3.8, 3.9), 1968: (3.7, 3.6, 3.5, 3.4),
    1969: (3.4, 3.4, 3.6, 3.6), 1970: (4.2, 4.8, 5.2, 5.8),
    1971: (5.9, 5.9, 6.0, 5.9), 1972: (5.8, 5.7, 5.6, 5.4),
    1973: (4.9, 4.9, 4.8, 4.8), 1974: (5.1, 5.2, 5.6, 6.6),
    1975: (8.3, 8.9, 8.5, 8.3), 1976: (7.7, 7.6, 7.7, 7.8),
    1977: (7.5, 7.1, 6.9, 6.7), 1978: (6.3, 6.0, 6.0, 5.9),
    1979: (5.9, 5.7, 5.9, 6.0), 1980: (6.3, 7.3, 7.7, 7.4),
    1981: (7.4, 7.4, 7.4, 8.2), 1982: (8.8, 9.4, 9.9, 10.7),
    1983: (10.4, 10.1, 9.4, 8.5), 1984: (7.9, 7.5, 7.4, 7.3),
    1985: (7.3, 7.3, 7.2, 7.0), 1986: (7.0, 7.2, 7.0, 6.8),
    1987: (6.6, 6.3, 6.0, 5.8), 1988: (5.7, 5.5, 5.5, 5.3),
    1989: (5.2, 5.2, 5.2, 5.4), 1990: (5.3, 5.3, 5.7, 6.1),
    1991: (6.6, 6.8, 6.9, 7.1), 1992: (7.4, 7.6, 7.6, 7.4),
    1993: (7.2, 7.1, 6.8, 6.6), 1994: (6.6, 6.2, 6.0, 5.6),
    1995: (5.5, 5.7, 5.7, 5.6), 1996: (5.5, 5.5, 5.3, 5.3),
    1997: (5.2, 5.0, 4.9, 4.7), 1998: (4.6, 4.4, 4.5, 4.4),
    1999: (4.3, 4.3, 4.2, 4.1), 2000: (4.0, 3.9, 4.0, 3.9),
    2001: (4.2, 4.4, 4.8, 5.5), 2002: (5.7, 5.8, 5.7, 5.9),
    2003: (5.9, 6.1, 6.1, 5.8), 2004: (5.7, 5.6, 5.4, 5.4),
    2005: (5.3, 5.1, 5.0, 5.0), 2006: (4.7, 4.6, 4.6, 4.4),
    2007: (4.5, 4.5, 4.7, 4.8), 2008: (5.0, 5.3, 6.0, 6.9),
    2009: (8.3, 9.3, 9.6, 9.9), 2010: (9.8, 9.6, 9.5, 9.5),
    2011: (9.0, 9.1, 9.0, 8.6), 2012: (8.3, 8.2, 8.0, 7.8),
    2013: (7.7, 7.5, 7.2, 6.9), 2014: (6.7, 6.2, 6.1, 5.7),
    2015: (5.5, 5.4, 5.1, 5.0), 2016: (4.9, 4.9, 4.9, 4.8),
    2017: (4.6, 4.4, 4.3, 4.2), 2018: (4.0, 3.9, 3.8, 3.8),
    2019: (3.9, 3.6, 3.6, 3.6), 2020: (3.8, 13.1, 8.8, 6.8),
    2021: (6.2, 5.9, 5.1, 4.2), 2022: (3.8, 3.6, 3.6, 3.6),
}

# (year, rate) anchors, linear in between, at Q1 of the anchor year
NROU_ANCHORS = [
    (1949, 5.26), (1955, 5.33), (1960, 5.42), (1965, 5.65), (1970, 5.92),
    (1975, 6.18), (1978, 6.22), (1980, 6.18), (1985, 5.97), (1990, 5.66),
    (1995, 5.27), (2000, 5.00), (2005, 4.98), (2010, 4.77), (2015, 4.62),
    (2019, 4.48), (2023, 4.42),
]

GDP_GROWTH = {
    1950: 8.7, 1951: 8.0, 1952: 4.1, 1953: 4.7, 1954: -0.6, 1955: 7.1,
    1956: 2.1, 1957: 2.1, 1958: -0.7, 1959: 6.9, 1960: 2.6, 1961: 2.6,
    1962: 6.1, 1963: 4.4, 1964: 5.8, 1965: 6.5, 1966: 6.6, 1967: 2.7,
    1968: 4.9, 1969: 3.1, 1970: 0.2, 1971: 3.3, 1972: 5.3, 1973: 5.6,
    1974: -0.5, 1975: -0.2, 1976: 5.4, 1977: 4.6, 1978: 5.5, 1979: 3.2,
    1980: -0.3, 1981: 2.5, 1982: -1.8, 1983: 4.6, 1984: 7.2, 1985: 4.2,
    1986: 3.5, 1987: 3.5, 1988: 4.2, 1989: 3.7, 1990: 1.9, 1991: -0.1,
    1992: 3.5, 1993: 2.8, 1994: 4.0, 1995: 2.7, 1996: 3.8, 1997: 4.4,
    1998: 4.5, 1999: 4.8, 2000: 4.1, 2001: 1.0, 2002: 1.7, 2003: 2.8,
    2004: 3.9, 2005: 3.5, 2006: 2.8, 2007: 2.0, 2008: 0.1, 2009: -2.6,
    2010: 2.7, 2011: 1.6, 2012: 2.3, 2013: 2.1, 2014: 2.5, 2015: 2.9,
    2016: 1.8, 2017: 2.5, 2018: 3.0, 2019: 2.5, 2020: -2.2, 2021: 5.8,
    2022: 1.9,
}
GDP_2012 = 16197.0
OKUN = 2.0


def _write(path: Path, column: str, rows) -> None:
    lines = [f"DATE,{column}"]
    lines += [f"{d},{v}" for d, v in rows]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def cpi_monthly():
    months = []
    for year in range(1949, 2023):
        for month in range(1, 13):
            if year in CPI_MONTHLY_OVERRIDE:
                value = CPI_MONTHLY_OVERRIDE[year][month - 1]
            else:
                # annual average sits at July; interpolate in logs
                if month >= 7:
                    y0, y1, frac = year, year + 1, (month - 7) / 12
                else:
                    y0, y1, frac = year - 1, year, (month + 5) / 12
                if y1 not in CPI_ANNUAL:
                    y0, y1, frac = year - 1, year, 1 + (month - 7) / 12
                a, b = math.log(CPI_ANNUAL[y0]), math.log(CPI_ANNUAL[y1])
                value = round(math.exp(a + frac * (b - a)), 3)
            months.append((date(year, month, 1).isoformat(), value))
    return months


def nrou(year: int, quarter: int) -> float:
    x = year + (quarter - 1) / 4
    for (x0, v0), (x1, v1) in zip(NROU_ANCHORS, NROU_ANCHORS[1:]):
        if x0 <= x < x1:
            return round(v0 + (x - x0) / (x1 - x0) * (v1 - v0), 3)
    raise ValueError(year)


def gdp_annual():
    level = {2012: GDP_2012}
    for year in range(2013, 2023):
        level[year] = level[year - 1] * (1 + GDP_GROWTH[year] / 100)
    for year in range(2011, 1948, -1):
        level[year] = level[year + 1] / (1 + GDP_GROWTH[year + 1] / 100)
    actual, potential = [], []
    for year in range(1949, 2023):
        u = sum(UNRATE_Q[year]) / 4
        un = sum(nrou(year, q) for q in range(1, 5)) / 4
        gap = -OKUN * (u - un) / 100
        d = date(year, 1, 1).isoformat()
        actual.append((d, round(level[year], 1)))
        potential.append((d, round(level[year] / (1 + gap), 1)))
    return actual, potential


def main(outdir: Path = OUT) -> None:
    outdir.mkdir(parents=True, exist_ok=True)
    _write(outdir / "minwage.csv", "FEDMINNFRWG", MINWAGE)
    _write(outdir / "cpi.csv", "CPIAUCSL", cpi_monthly())
    quarters = [(y, q) for y in range(1949, 2023) for q in range(1, 5)]
    _write(outdir / "unrate.csv", "UNRATE",
           [(date(y, 3 * q - 2, 1).isoformat(), UNRATE_Q[y][q - 1]) for y, q in quarters])
    _write(outdir / "nrou.csv", "NROU",
           [(date(y, 3 * q - 2, 1).isoformat(), nrou(y, q)) for y, q in quarters])
    actual, potential = gdp_annual()
    _write(outdir / "gdp.csv", "GDPC1", actual)
    _write(outdir / "gdppot.csv", "GDPPOT", potential)


if __name__ == "__main__":
    main(Path(sys.argv[1]) if len(sys.argv) > 1 else OUT)
