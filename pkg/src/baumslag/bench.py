"""Timing harness for the circuit solver and the naive baseline."""
from __future__ import annotations

import csv
import math
import time
from collections.abc import Iterable, Sequence
from dataclasses import asdict, dataclass, field, fields

import numpy as np

from .circuit import DEFAULT_BIT_BUDGET
from .naive import DEFAULT_STEP_CAP, naive_solve
from .sequence import PowerSequence
from .word_problem import SolveStats, commutator, hard_word, solve

FAMILIES = ("wk-commutator",)
ENGINES = ("circuit", "naive")
CSV_HEADER = ("family", "k", "length", "engine", "seconds", "peak_vertices", "verdict")


@dataclass
class BenchConfig:
    family: str = "wk-commutator"
    k_max: int = 8
    engines: tuple[str, ...] = ENGINES
    step_cap: int = DEFAULT_STEP_CAP
    max_bits: int = DEFAULT_BIT_BUDGET
    # short runs are repeated until this much time has passed; the best is kept
    min_total_seconds: float = 0.2
    check_growth: bool = False

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if not 1 <= self.k_max <= 10:
            raise ValueError("k_max must lie in 1..10")
        bad = set(self.engines) - set(ENGINES)
        if bad:
            raise ValueError(f"unknown engine(s): {', '.join(sorted(bad))}")


@dataclass(frozen=True)
class BenchRecord:
    family: str
    k: int
    length: int
    engine: str
    seconds: float
    peak_vertices: int | None
    verdict: str


@dataclass
class BenchResult:
    records: list[BenchRecord] = field(default_factory=list)
    slope: float = math.nan


def family_word(family: str, k: int) -> PowerSequence:
    if family == "wk-commutator":
        return commutator(hard_word(k), PowerSequence.from_ints([("a", 1)]))
    raise ValueError(f"unknown family {family!r}")


def _timed(run, min_total: float):
    best = math.inf
    spent = 0.0
    while True:
        t0 = time.perf_counter()
        out = run()
        dt = time.perf_counter() - t0
        best = min(best, dt)
        spent += dt
        if spent >= min_total:
            return out, best


def run_one(cfg: BenchConfig, k: int, engine: str) -> BenchRecord:
    w = family_word(cfg.family, k)
    if engine == "circuit":

        def run():
            st = SolveStats()
            return solve(w, check_growth=cfg.check_growth, stats=st), st

        (verdict, st), seconds = _timed(run, cfg.min_total_seconds)
        peak = st.peak_vertices
    else:
        outcome, seconds = _timed(
            lambda: naive_solve(w, cfg.step_cap, cfg.max_bits), cfg.min_total_seconds
        )
        verdict, peak = outcome.verdict, None
    return BenchRecord(cfg.family, k, len(w), engine, seconds, peak, verdict.value)


def fit_slope(records: Iterable[BenchRecord], engine: str = "circuit") -> float:
    """Least-squares slope of log(seconds) against log(length)."""
    pts = [(r.length, r.seconds) for r in records if r.engine == engine and r.seconds > 0]
    if len(pts) < 2:
        return math.nan
    x = np.log([p[0] for p in pts])
    y = np.log([p[1] for p in pts])
    return float(np.polyfit(x, y, 1)[0])


def bench_family(cfg: BenchConfig) -> BenchResult:
    """Run every engine on k = 1..k_max.  A capped naive run is a record, not an error."""
    result = BenchResult()
    for k in range(1, cfg.k_max + 1):
        for engine in cfg.engines:
            result.records.append(run_one(cfg, k, engine))
    result.slope = fit_slope(result.records)
    return result


def write_csv(records: Sequence[BenchRecord], path) -> None:
    assert tuple(f.name for f in fields(BenchRecord)) == CSV_HEADER
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_HEADER)
        writer.writeheader()
        for r in records:
            row = asdict(r)
            row["seconds"] = f"{r.seconds:.6g}"
            if r.peak_vertices is None:
                row["peak_vertices"] = ""
            writer.writerow(row)
