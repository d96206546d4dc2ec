"""Sphere-approximation experiments: g_k against the Hausdorff distance."""

from __future__ import annotations

import csv
import io
import math
import statistics
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .geometry import convex_hull, hausdorff_eps, sample_sphere_polytope
from .gvec import toric_g


@dataclass(frozen=True)
class ExperimentRecord:
    d: int
    k: int
    n: int
    seed: int
    eps: Fraction
    g_k: int
    runtime_ms: int = 0


CSV_COLUMNS = ("d", "k", "n", "seed", "eps", "g_k")


def run_approximation(d: int, k: int, ns: Sequence[int], seed: int, timing: bool = False) -> list[ExperimentRecord]:
    """One record per ``n``; samples are prefixes of a single seeded stream."""
    if not 1 <= k <= d / 2:
        raise ValueError(f"k={k} must satisfy 1 <= k <= d/2")
    out = []
    for n in ns:
        t0 = time.perf_counter()
        pc = sample_sphere_polytope(d, n, seed)
        hull = convex_hull(pc)
        eps = hausdorff_eps(pc, hull)
        gk = toric_g(hull.lattice, use_cache=False)[k]
        ms = int((time.perf_counter() - t0) * 1000) if timing else 0
        out.append(ExperimentRecord(d, k, n, seed, eps, gk, ms))
    return out


def strictly_increasing(records: Sequence[ExperimentRecord]) -> bool:
    gs = [r.g_k for r in sorted(records, key=lambda r: r.n)]
    return all(a < b for a, b in zip(gs, gs[1:]))


@dataclass(frozen=True)
class ExponentFit:
    slope: float
    intercept: float
    residual: float  # root mean square of the log-log residuals


class InsufficientDataError(ValueError):
    pass


def fit_exponent(records: Iterable[ExperimentRecord]) -> ExponentFit:
    """Least-squares slope of log g_k against log(1/eps).

    The only floating point computation in the package; it is confined to
    reporting.
    """
    recs = list(records)
    if len(recs) < 4 or len({r.eps for r in recs}) < 2:
        raise InsufficientDataError("need at least 4 records with distinct eps")
    if any(r.g_k <= 0 or r.eps <= 0 for r in recs):
        raise InsufficientDataError("g_k and eps must be positive for a log-log fit")
    xs = [-math.log(r.eps) for r in recs]
    ys = [math.log(r.g_k) for r in recs]
    slope, intercept = statistics.linear_regression(xs, ys)
    res = math.sqrt(sum((y - (slope * x + intercept)) ** 2 for x, y in zip(xs, ys)) / len(xs))
    return ExponentFit(slope, intercept, res)


def records_to_csv(records: Iterable[ExperimentRecord], timing: bool = False) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    cols = CSV_COLUMNS + (("runtime_ms",) if timing else ())
    w.writerow(cols)
    for r in records:
        row = [r.d, r.k, r.n, r.seed, str(r.eps), r.g_k]
        if timing:
            row.append(r.runtime_ms)
        w.writerow(row)
    return buf.getvalue()
