"""Timing harness: diameter vs reference scan, and grid-size sweeps.

Each dataset is generated once per (distribution, size) combination and the
pipeline is timed over it ``repeats`` times; the reported figure is the
median, which tolerates scheduler outliers better than the mean.  The
reference scan only runs up to a configurable size cap so default benches
finish in minutes.  Timing assumes exclusive use of the process.
"""

from __future__ import annotations

import csv
import statistics
import time
from dataclasses import dataclass, field

from .generators import DatasetSpec, generate
from .oracle import brute_force_diameter
from .pipeline import DiameterResult, PipelineStats, diameter

BENCH_CSV_COLUMNS = (
    "distribution",
    "n",
    "k_used",
    "time_ms",
    "bf_time_ms",
    "speedup",
    "survivors_polar",
    "survivors_recheck",
    "nonempty_cells",
)

SWEEP_CSV_COLUMNS = ("k", "time_ms", "is_best")


@dataclass
class BenchRecord:
    distribution: str
    n: int
    k_used: int
    wall_time_ms: float
    distance: float
    stats: PipelineStats
    phase_times_ms: dict[str, float] = field(default_factory=dict)
    bf_time_ms: float | None = None
    speedup: float | None = None


@dataclass
class SweepRow:
    k: int
    time_ms: float
    distance: float
    is_best: bool = False


def _timed(fn, repeats: int):
    """Median wall time in ms over identical runs, plus the first result."""
    if repeats < 1:
        raise ValueError("repeats must be >= 1")
    times = []
    result = None
    for r in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        times.append((time.perf_counter() - t0) * 1000.0)
        if r == 0:
            result = out
    return statistics.median(times), result


def run_bench(
    distributions,
    sizes,
    repeats: int,
    seed: int = 0,
    bf_cap: int = 100_000,
    a: float = 1.0,
    b: float = 1.0,
    sigma: float = 0.2,
    k: int | None = None,
) -> list[BenchRecord]:
    """Time the pipeline (and the reference scan, below the cap) per combo."""
    records = []
    for dist in distributions:
        for n in sizes:
            pts = generate(DatasetSpec(dist, int(n), a=a, b=b, sigma=sigma, seed=seed))
            time_ms, result = _timed(lambda: diameter(pts, k=k), repeats)
            assert isinstance(result, DiameterResult)
            rec = BenchRecord(
                distribution=dist,
                n=int(n),
                k_used=result.stats.k_used,
                wall_time_ms=time_ms,
                distance=result.distance,
                stats=result.stats,
                phase_times_ms=dict(result.phase_ms),
            )
            if n <= bf_cap:
                bf_ms, (bf_dist, _) = _timed(lambda: brute_force_diameter(pts), repeats)
                if bf_dist != result.distance:
                    raise RuntimeError(
                        f"distance mismatch vs reference: {dist} n={n}: "
                        f"{result.distance!r} != {bf_dist!r}"
                    )
                rec.bf_time_ms = bf_ms
                rec.speedup = bf_ms / time_ms if time_ms > 0 else float("inf")
            records.append(rec)
    return records


def write_bench_csv(records: list[BenchRecord], path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(BENCH_CSV_COLUMNS)
        for r in records:
            w.writerow(
                [
                    r.distribution,
                    r.n,
                    r.k_used,
                    f"{r.wall_time_ms:.6f}",
                    "" if r.bf_time_ms is None else f"{r.bf_time_ms:.6f}",
                    "" if r.speedup is None else f"{r.speedup:.3f}",
                    r.stats.n_after_polar,
                    r.stats.n_after_recheck,
                    r.stats.nonempty_cells,
                ]
            )


def run_sweep(
    distribution: str,
    n: int,
    k_values,
    repeats: int = 3,
    seed: int = 0,
    a: float = 1.0,
    b: float = 1.0,
    sigma: float = 0.2,
) -> list[SweepRow]:
    """Time the full pipeline at each grid size over one shared dataset."""
    k_values = list(k_values)
    if not k_values:
        raise ValueError("k_values must be nonempty")
    pts = generate(DatasetSpec(distribution, n, a=a, b=b, sigma=sigma, seed=seed))
    rows = []
    for k in k_values:
        time_ms, result = _timed(lambda: diameter(pts, k=int(k)), repeats)
        rows.append(SweepRow(k=int(k), time_ms=time_ms, distance=result.distance))
    best = min(range(len(rows)), key=lambda i: rows[i].time_ms)
    rows[best].is_best = True
    return rows


def write_sweep_csv(rows: list[SweepRow], path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(SWEEP_CSV_COLUMNS)
        for r in rows:
            w.writerow([r.k, f"{r.time_ms:.6f}", int(r.is_best)])
