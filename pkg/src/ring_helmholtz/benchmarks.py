"""
Published reference values for three benchmark sets (R = 1, Z = 0).

Set "2": moderate distances, two modes.  Set "3": m = 1, beta = 6, r = 3/2,
receding from the ring up to z = 1e7.  Set "4": m = 1, beta = 1, r = 1,
approaching the ring down to z = 1e-9.

Each row carries the published value and term count (Hankel terms for sets
2 and 3, Legendre terms for set 4).  Set 4 is labelled m = 2 at its source;
the values are those of m = 1 (see the decisions ledger).
"""

from __future__ import annotations

from dataclasses import dataclass

from .hyper2d import SeriesPolicy
from .params import RingConfig


@dataclass(frozen=True)
class BenchmarkRow:
    config: RingConfig
    value: complex
    terms: int | None  # published Hankel (sets 2, 3) or Legendre (set 4) count
    legendre_terms: int | None = None  # set 2 only


@dataclass(frozen=True)
class Benchmark:
    name: str
    method: str  # series whose term count is reported
    policy: SeriesPolicy  # truncation tolerance matching the printed digits
    rows: tuple[BenchmarkRow, ...]


def _set2() -> tuple[BenchmarkRow, ...]:
    data = [
        (0, 2, 0.5, 0.5, 94, 10, -0.4332208795 + 0.6063507453j),
        (0, 2, 0.5, 1.5, 24, 12, -0.4324244083 - 0.2593676946j),
        (0, 2, 0.5, 5, 9, 24, -0.1320141290 - 0.1413052175j),
        (0, 2, 0.5, 10, 8, 37, 0.02892833221 + 0.09482283693j),
        (0, 2, 0.5, 20, 6, 63, -0.03552779935 + 0.03502697525j),
        (3, 5, 1.5, 0.5, 224, 24, -0.2152817201 - 0.2085849956j),
        (3, 5, 1.5, 1, 97, 25, 0.1382226177 - 0.2010980843j),
        (3, 5, 1.5, 5, 17, 47, -0.009794158906 - 0.000546039281j),
        (3, 5, 1.5, 10, 13, 80, -0.0004846328044 + 0.0006340532520j),
        (3, 5, 1.5, 20, 10, 147, 0.00000356468968 + 0.00005347913049j),
    ]
    return tuple(BenchmarkRow(RingConfig(m, b, r, 1.0, z), v, n1, n2)
                 for m, b, r, z, n1, n2, v in data)


def _set3() -> tuple[BenchmarkRow, ...]:
    data = [
        (0.5, 227, 0.0785417676 - 0.2281496125j),
        (1, 99, 0.1318397799 + 0.0959755332j),
        (5, 20, 0.04717552085 - 0.09819984770j),
        (50, 7, -0.001762722093 - 0.000313668126j),
        (100, 6, -0.0000246835014 + 0.0004487208692j),
        (200, 5, -4.36384289e-6 - 0.00011237773355j),
        (1000, 4, -1.884281670e-6 - 4.086433833e-6j),
        (5000, 3, -1.446923432e-7 + 1.070704963e-7j),
        (10000, 2, 4.307310056e-8 + 1.302718185e-8j),
        (1e7, 1, -2.303180610e-14 + 3.865922798e-14j),
    ]
    return tuple(BenchmarkRow(RingConfig(1, 6.0, 1.5, 1.0, z), v, n) for z, n, v in data)


def _set4() -> tuple[BenchmarkRow, ...]:
    data = [
        (1.0, 8, 0.1874175169 + 0.1222388714j),
        (1e-1, 8, 0.8955546890 + 0.1360159497j),
        (1e-2, 8, 1.628566013 + 0.136158894j),
        (1e-3, 7, 2.361506874 + 0.136160324j),
        (1e-4, 7, 3.094442571 + 0.136160339j),
        (1e-5, 7, 3.827378171 + 0.136160339j),
        (1e-6, 7, 4.560313770 + 0.136160339j),
        (1e-7, 7, 5.293249369 + 0.136160339j),
        (1e-8, 7, 6.026184968 + 0.136160339j),
        (1e-9, 7, 6.759120567 + 0.136160339j),
    ]
    return tuple(BenchmarkRow(RingConfig(1, 1.0, 1.0, 1.0, z), v, n) for z, n, v in data)


BENCHMARKS: dict[str, Benchmark] = {
    "2": Benchmark("2", "hankel", SeriesPolicy(rel_tol=1e-10), _set2()),
    "3": Benchmark("3", "hankel", SeriesPolicy(rel_tol=1e-10), _set3()),
    "4": Benchmark("4", "legendre", SeriesPolicy(rel_tol=1e-8), _set4()),
}
