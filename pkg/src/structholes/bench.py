"""Seeded random graphs and a timing harness: matrix vs naive measures."""

from __future__ import annotations

import csv
import logging
import statistics
import time
from dataclasses import dataclass

import numpy as np

from . import matrix, oracle
from .errors import InvalidSpecError, StructHolesError
from .graph import Graph, build_graph
from .report import PAPER

__all__ = [
    "GeneratorSpec",
    "TimingRecord",
    "generate",
    "with_random_weights",
    "random_orientation",
    "run_benchmark",
    "write_timings",
    "BENCH_MEASURES",
    "DEFAULT_SIZES",
]

log = logging.getLogger(__name__)

MODELS = ("barabasi-albert", "erdos-renyi")
DEFAULT_SIZES = (1000, 2000, 4000, 8000)
TIMING_COLUMNS = ("model", "n", "param", "seed", "measure", "impl", "rep", "seconds")
TOLERANCE = 1e-12


class BenchmarkMismatchError(StructHolesError):
    pass


@dataclass(frozen=True)
class GeneratorSpec:
    """``param`` is ``m`` for Barabasi-Albert and ``p`` for Erdos-Renyi."""

    model: str
    n: int
    param: float
    seed: int = 0

    def validate(self) -> GeneratorSpec:
        if self.model not in MODELS:
            raise InvalidSpecError(f"unknown model {self.model!r}; expected one of {MODELS}")
        if int(self.n) != self.n or self.n < 1:
            raise InvalidSpecError(f"n must be a positive integer, got {self.n!r}")
        if self.model == "barabasi-albert":
            if int(self.param) != self.param or self.param < 1:
                raise InvalidSpecError(f"barabasi-albert needs integer m >= 1, got {self.param!r}")
            if self.n <= self.param:
                raise InvalidSpecError(f"barabasi-albert needs n > m, got n={self.n}, m={self.param}")
        elif not 0.0 <= self.param <= 1.0:
            raise InvalidSpecError(f"erdos-renyi needs 0 <= p <= 1, got {self.param!r}")
        return self


def _from_pairs(n, src, dst) -> Graph:
    labels = [str(i) for i in range(n)]
    return build_graph(((labels[i], labels[j]) for i, j in zip(src, dst)), weighted=False, nodes=labels)


def _barabasi_albert(n, m, rng):
    # seed graph: star with centre 0 and leaves 1..m
    src = [0] * m
    dst = list(range(1, m + 1))
    deg = np.zeros(n)
    deg[0] = m
    deg[1 : m + 1] = 1
    for v in range(m + 1, n):
        w = deg[:v]
        targets = rng.choice(v, size=m, replace=False, p=w / w.sum())
        for t in targets:
            src.append(v)
            dst.append(int(t))
        deg[targets] += 1
        deg[v] = m
    return _from_pairs(n, src, dst)


def _erdos_renyi(n, p, rng):
    src, dst = [], []
    for i in range(n - 1):
        hits = np.flatnonzero(rng.random(n - i - 1) < p) + i + 1
        src.extend([i] * len(hits))
        dst.extend(hits.tolist())
    return _from_pairs(n, src, dst)


def generate(spec: GeneratorSpec) -> Graph:
    """Binary undirected graph, fully determined by ``spec``.

    Barabasi-Albert starts from a star on ``m + 1`` nodes; every later node
    attaches to ``m`` distinct existing nodes drawn one at a time with
    probability proportional to degree, giving ``m (n - m)`` edges.
    Erdos-Renyi keeps each unordered pair with probability ``p``.
    """
    spec.validate()
    rng = np.random.default_rng(spec.seed)
    if spec.model == "barabasi-albert":
        return _barabasi_albert(int(spec.n), int(spec.param), rng)
    return _erdos_renyi(int(spec.n), float(spec.param), rng)


def with_random_weights(g: Graph, rng, low: float = 0.1, high: float = 5.0) -> Graph:
    """Same topology with i.i.d. uniform positive weights (symmetric if undirected)."""
    edges = [(s, d, float(rng.uniform(low, high))) for s, d, _ in g.edges()]
    return build_graph(edges, directed=g.directed, weighted=True, nodes=g.labels)


def random_orientation(g: Graph, rng, reciprocal: float = 0.3) -> Graph:
    """Directed graph: each edge becomes one arc of random direction, or
    both arcs with probability ``reciprocal``."""
    edges = []
    for s, d, w in g.edges():
        u = rng.random()
        if u < reciprocal:
            edges += [(s, d, w), (d, s, w)]
        elif u < (1 + reciprocal) / 2:
            edges.append((s, d, w))
        else:
            edges.append((d, s, w))
    return build_graph(edges, directed=True, weighted=g.weighted, nodes=g.labels)


BENCH_MEASURES = {
    "effective-size": (matrix.effective_size, oracle.oracle_effective_size),
    "redundancy": (matrix.redundancy, oracle.oracle_redundancy),
    "constraint": (matrix.constraint, oracle.oracle_constraint),
}


def _implementations(measure, threads):
    try:
        fast, naive = BENCH_MEASURES[measure]
    except KeyError:
        raise InvalidSpecError(f"cannot benchmark measure {measure!r}; choose from {sorted(BENCH_MEASURES)}") from None
    if measure == "constraint":
        return {"matrix": lambda g: fast(g, PAPER, threads=threads), "naive": lambda g: naive(g, PAPER)}
    return {"matrix": lambda g: fast(g, threads=threads), "naive": naive}


@dataclass(frozen=True)
class TimingRecord:
    spec: GeneratorSpec
    measure: str
    impl: str
    times: tuple
    threads: int = 1

    @property
    def repetitions(self) -> int:
        return len(self.times)

    @property
    def median(self) -> float:
        return statistics.median(self.times)


def _max_discrepancy(a, b):
    if not np.array_equal(np.isnan(a), np.isnan(b)):
        return float("inf")
    ok = ~np.isnan(a)
    return float(np.max(np.abs(a[ok] - b[ok]), initial=0.0))


def run_benchmark(specs, measures, reps: int = 3, threads: int = 1, timer=time.perf_counter) -> list:
    """Time matrix and naive implementations of each measure on each graph.

    Per graph and measure, both implementations run once untimed and their
    values are compared; that run is also the warm-up. Graph generation is
    not timed.
    """
    if reps < 3:
        raise InvalidSpecError(f"reps must be >= 3, got {reps}")
    measures = list(measures)
    for m in measures:
        _implementations(m, threads)
    specs = [s.validate() for s in specs]
    records = []
    for spec in specs:
        if not measures:
            continue
        g = generate(spec)
        for measure in measures:
            impls = _implementations(measure, threads)
            fast_vals = impls["matrix"](g).values
            naive_vals = impls["naive"](g).values
            gap = _max_discrepancy(fast_vals, naive_vals)
            if gap > TOLERANCE:
                raise BenchmarkMismatchError(f"{measure} on {spec}: matrix and naive differ by {gap:.3g}")
            for impl, fn in impls.items():
                times = []
                for _ in range(reps):
                    t0 = timer()
                    fn(g)
                    times.append(timer() - t0)
                rec = TimingRecord(spec, measure, impl, tuple(times), threads if impl == "matrix" else 1)
                log.info("%s n=%d %s %s: median %.4fs", spec.model, spec.n, measure, impl, rec.median)
                records.append(rec)
    return records


def write_timings(records, fh) -> None:
    """One CSV row per repetition, columns ``TIMING_COLUMNS``."""
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(TIMING_COLUMNS)
    for rec in records:
        s = rec.spec
        for rep, t in enumerate(rec.times):
            w.writerow([s.model, s.n, s.param, s.seed, rec.measure, rec.impl, rep, f"{t:.9f}"])
