"""Experiment registry and chunked, worker-count-independent execution.

Work is cut into fixed chunks of :data:`CHUNK_SIZE` trials. Chunk ``i`` of
the experiment registered at position ``e`` always draws from
``RngStream(seed).substream(e).substream(i)`` and results are merged in
chunk order, so the report does not depend on how many workers ran it.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Optional

import numpy as np

from . import __version__
from .analytic import ObtuseModel, analytic_obtuse, count_angle_line, count_big_angle, hit_test
from .bertrand import ChordMethod, analytic_long_probability, count_long
from .discrete import (
    PrisonerStrategy,
    TwoBoysProtocol,
    exact_value,
    prisoners_counts,
    two_boys_counts,
)
from .errors import ConfigError
from .geometry import obtuse_mask, ratios_array, side_lengths_array
from .rng import RngStream
from .samplers import CATALOG, TABLE_P, Method, SamplerSpec, generated_obtuse_fraction, sample_batch
from .stats import Summary, SummaryStats, finalize, merge
from .stick import CutPolicy, Mode, analytic_probability, cut_parallel_array, cut_sequential_array, forms_triangle_array

log = logging.getLogger(__name__)

CHUNK_SIZE = 4096
DEFAULT_TRIALS = 175_000
DEFAULT_SEED = 0
FORMATS = ("csv", "json", "table")
METRICS = ("SdM", "MdL", "rho", "theta")


@dataclass(frozen=True)
class Experiment:
    name: str
    kind: str  # triangle | bertrand | stick | obtuse | discrete
    target: Any
    description: str

    def analytic(self, trials: int) -> Optional[float]:
        t = self.target
        if self.kind == "triangle":
            if t.method is Method.GENERATED:
                return float(generated_obtuse_fraction(trials))
            if t.method is Method.L_METHOD:
                return analytic_obtuse(ObtuseModel.L_METHOD)
            if t == CATALOG["m-method"]:
                return analytic_obtuse(ObtuseModel.M_METHOD)
            return None
        if self.kind == "bertrand":
            return analytic_long_probability(t)
        if self.kind == "stick":
            return analytic_probability(*t)
        if self.kind == "obtuse":
            return analytic_obtuse(t)
        if self.kind == "discrete":
            return float(exact_value(t))
        raise AssertionError(self.kind)


def _registry() -> dict[str, Experiment]:
    exps = [Experiment(name, "triangle", spec, f"triangle sampler {spec.method.value}") for name, spec in CATALOG.items()]
    exps += [
        Experiment("bertrand-endpoints", "bertrand", ChordMethod.ENDPOINTS, "chord between two uniform points on the circle"),
        Experiment("bertrand-radius-point", "bertrand", ChordMethod.RADIUS_POINT, "chord perpendicular to a radius at a uniform point on it"),
        Experiment("bertrand-disk-point", "bertrand", ChordMethod.DISK_POINT, "chord with an area-uniform midpoint"),
        Experiment("stick-parallel", "stick", (Mode.PARALLEL, None), "two independent uniform cuts"),
        Experiment("stick-sequential-random", "stick", (Mode.SEQUENTIAL, CutPolicy.RANDOM_PIECE), "second cut on a coin-chosen piece"),
        Experiment("stick-sequential-larger", "stick", (Mode.SEQUENTIAL, CutPolicy.LARGER_PIECE), "second cut on the larger piece"),
        Experiment("stick-sequential-smaller", "stick", (Mode.SEQUENTIAL, CutPolicy.SMALLER_PIECE), "second cut on the smaller piece"),
        Experiment("obtuse-angle-line", "obtuse", ObtuseModel.ANGLE_LINE, "two uniform points on a segment of length pi"),
        Experiment("obtuse-big-angle", "obtuse", ObtuseModel.BIG_ANGLE, "big angle uniform on [pi/3, pi]"),
        Experiment("obtuse-l-region", "obtuse", ObtuseModel.L_METHOD, "hit test of the longest-side-fixed region"),
        Experiment("obtuse-m-region", "obtuse", ObtuseModel.M_METHOD, "hit test of the medium-side-fixed region"),
        Experiment("two-boys-filter", "discrete", TwoBoysProtocol.FILTER_FAMILIES, "random family among those with a boy"),
        Experiment("two-boys-informant", "discrete", TwoBoysProtocol.INFORMANT, "informant names a random child's sex"),
        Experiment("prisoners-stay", "discrete", PrisonerStrategy.STAY, "A keeps his own chance"),
        Experiment("prisoners-switch", "discrete", PrisonerStrategy.SWITCH, "A takes the unnamed prisoner's chance"),
    ]
    return {e.name: e for e in exps}


EXPERIMENTS = _registry()
STREAM_ID = {name: i for i, name in enumerate(EXPERIMENTS)}


@dataclass
class ExperimentConfig:
    experiments: list[str]
    trials: int = DEFAULT_TRIALS
    seed: int = DEFAULT_SEED
    workers: int = 1
    output_format: str = "json"
    output_path: Optional[str] = None

    def validate(self) -> None:
        unknown = [e for e in self.experiments if e not in EXPERIMENTS]
        if unknown:
            raise ConfigError(f"unknown method(s): {', '.join(unknown)}")
        if not isinstance(self.trials, int) or self.trials < 1:
            raise ConfigError(f"trials must be a positive integer, got {self.trials!r}")
        if not isinstance(self.workers, int) or self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers!r}")
        if not 0 <= self.seed < 1 << 64:
            raise ConfigError(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")
        if self.output_format not in FORMATS:
            raise ConfigError(f"format must be one of {FORMATS}, got {self.output_format!r}")


@dataclass
class ChunkResult:
    successes: int
    denominator: int
    stats: Optional[dict[str, SummaryStats]] = None
    rejections: int = 0


def run_chunk(name: str, seed: int, chunk_index: int, trials: int) -> ChunkResult:
    """Run one chunk; pure function of its arguments."""
    exp = EXPERIMENTS[name]
    start = chunk_index * CHUNK_SIZE
    n = min(CHUNK_SIZE, trials - start)
    rng = RngStream(seed).substream(STREAM_ID[name]).substream(chunk_index)
    t = exp.target

    if exp.kind == "triangle":
        batch = sample_batch(t, rng, start, n, trials)
        sides = side_lengths_array(batch.vertices)
        sdm, mdl = ratios_array(sides)
        stats = {
            "SdM": SummaryStats.from_values(sdm),
            "MdL": SummaryStats.from_values(mdl),
            "rho": SummaryStats.from_values(batch.rho),
            "theta": SummaryStats.from_values(batch.theta),
        }
        hits = int(np.count_nonzero(obtuse_mask(sides)))
        return ChunkResult(hits, n, stats, int(batch.rejections.sum()))
    if exp.kind == "bertrand":
        return ChunkResult(count_long(t, rng, n), n)
    if exp.kind == "stick":
        mode, policy = t
        pieces = cut_parallel_array(rng, n) if mode is Mode.PARALLEL else cut_sequential_array(policy, rng, n)
        return ChunkResult(int(np.count_nonzero(forms_triangle_array(pieces))), n)
    if exp.kind == "obtuse":
        if t is ObtuseModel.ANGLE_LINE:
            return ChunkResult(count_angle_line(rng, n), n)
        if t is ObtuseModel.BIG_ANGLE:
            return ChunkResult(count_big_angle(rng, n), n)
        h = hit_test(t, n, rng)
        return ChunkResult(h.favorable_hits, h.total_hits)
    if exp.kind == "discrete":
        if isinstance(t, TwoBoysProtocol):
            hits, kept = two_boys_counts(t, n, rng)
            return ChunkResult(hits, kept)
        stay, switch = prisoners_counts(n, rng)
        return ChunkResult(stay if t is PrisonerStrategy.STAY else switch, n)
    raise AssertionError(exp.kind)


def _run_chunk_args(args):
    return run_chunk(*args)


@dataclass
class ExperimentResult:
    name: str
    kind: str
    trials: int
    successes: int
    denominator: int
    p: float
    analytic: Optional[float]
    table_p: Optional[float]
    se: float
    rejections: int = 0
    stats: Optional[dict[str, Summary]] = None
    raw_stats: Optional[dict[str, SummaryStats]] = field(default=None, repr=False)

    @property
    def abs_error(self) -> Optional[float]:
        return None if self.analytic is None else abs(self.p - self.analytic)

    @property
    def within_4se(self) -> Optional[bool]:
        if self.analytic is None:
            return None
        return self.abs_error <= 4.0 * self.se + 1e-15

    def to_dict(self) -> dict:
        d = {
            "name": self.name,
            "kind": self.kind,
            "trials": self.trials,
            "successes": self.successes,
            "denominator": self.denominator,
            "p": self.p,
            "analytic": self.analytic,
            "abs_error": self.abs_error,
            "se": self.se,
            "within_4se": self.within_4se,
            "table_p": self.table_p,
        }
        if self.kind == "triangle":
            d["rejections"] = self.rejections
            d["stats"] = {k: (v.as_dict() if v else None) for k, v in (self.stats or {}).items()}
        return d


@dataclass
class ExperimentReport:
    seed: int
    trials: int
    results: list[ExperimentResult]
    version: str = __version__
    chunk_size: int = CHUNK_SIZE

    def __getitem__(self, name: str) -> ExperimentResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "provenance": {
                "seed": self.seed,
                "trials": self.trials,
                "version": self.version,
                "chunk_size": self.chunk_size,
            },
            "experiments": [r.to_dict() for r in self.results],
        }


def _finalize_or_none(s: SummaryStats) -> Optional[Summary]:
    return finalize(s) if s.count >= 3 else None


def _collect(name: str, trials: int, chunks: list[ChunkResult]) -> ExperimentResult:
    exp = EXPERIMENTS[name]
    successes = sum(c.successes for c in chunks)
    denom = sum(c.denominator for c in chunks)
    p = successes / denom if denom else math.nan
    analytic = exp.analytic(trials)
    p_se = analytic if analytic is not None else p
    se = math.sqrt(p_se * (1.0 - p_se) / denom) if denom else math.nan
    raw = None
    if exp.kind == "triangle":
        raw = {}
        for metric in METRICS:
            acc = SummaryStats()
            for c in chunks:
                acc = merge(acc, c.stats[metric])
            raw[metric] = acc
    return ExperimentResult(
        name=name,
        kind=exp.kind,
        trials=trials,
        successes=successes,
        denominator=denom,
        p=p,
        analytic=analytic,
        table_p=TABLE_P.get(name),
        se=se,
        rejections=sum(c.rejections for c in chunks),
        stats={k: _finalize_or_none(v) for k, v in raw.items()} if raw else None,
        raw_stats=raw,
    )


def run(config: ExperimentConfig) -> ExperimentReport:
    config.validate()
    n_chunks = math.ceil(config.trials / CHUNK_SIZE)
    tasks = [(name, config.seed, i, config.trials) for name in config.experiments for i in range(n_chunks)]
    log.info("running %d experiment(s), %d chunk(s) each, %d worker(s)", len(config.experiments), n_chunks, config.workers)
    if config.workers == 1:
        outputs = [_run_chunk_args(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            outputs = list(pool.map(_run_chunk_args, tasks, chunksize=max(1, len(tasks) // (4 * config.workers))))
    results = []
    for k, name in enumerate(config.experiments):
        results.append(_collect(name, config.trials, outputs[k * n_chunks : (k + 1) * n_chunks]))
    return ExperimentReport(seed=config.seed, trials=config.trials, results=results)
