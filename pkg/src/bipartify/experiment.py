"""Reproduction sweep: sample instances, run every method, aggregate.

Seeding
-------
Instance ``i`` of model ``M`` is generated from
``numpy.random.default_rng(instance_seed(master, M, i))`` and method ``K`` on
that instance from ``default_rng(method_seed(master, M, i, K))``. Both seeds
are 64-bit integers drawn from ``numpy.random.SeedSequence(master,
spawn_key=...)`` whose spawn key holds the model's and method's fixed
position in ``ALL_MODELS`` / ``ALL_METHODS``. Results therefore do not depend
on which other models or methods are run, nor on worker scheduling.
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from .bipartivity import greedy_method
from .errors import BipartifyError, EmptyInput, MisalignedRecords
from .generators import ALL_MODELS, Model, sample_instance
from .graph import Graph
from .partitioning import (
    ALL_METHODS,
    EIGEN_KINDS,
    Method,
    MethodResult,
    eigen_sign_partition,
    local_switching,
)

SCHEMA_VERSION = 1
RNG_DESCRIPTION = (
    "numpy PCG64; seeds from SeedSequence(master_seed, spawn_key=(model_index, instance"
    "[, 1 + method_index]))"
)
CSV_HEADER = ["model", "instance", "params", "seed", "method", "r_b_num", "r_b_den",
              "r_b", "retained", "runtime_ns"]
DEFAULT_BINS = 50
DEFAULT_RANGE = (0.5, 1.0)


@dataclass(frozen=True)
class SweepConfig:
    models: tuple[Model, ...] = ALL_MODELS
    n: int = 20
    instances: int = 1000
    restarts: int = 100
    methods: tuple[Method, ...] = ALL_METHODS
    master_seed: int = 0
    include_greedy: bool = True
    timing: bool = False

    def __post_init__(self):
        if self.instances < 1:
            raise ValueError("instances must be >= 1")
        if self.restarts < 1:
            raise ValueError("restarts must be >= 1")
        object.__setattr__(self, "models", tuple(Model.parse(m) for m in self.models))
        object.__setattr__(self, "methods", tuple(Method.parse(m) for m in self.methods))

    @property
    def active_methods(self) -> tuple[Method, ...]:
        chosen = set(self.methods)
        return tuple(m for m in ALL_METHODS
                     if m in chosen and (self.include_greedy or not m.is_greedy))

    def as_dict(self) -> dict:
        return {
            "models": [m.value for m in self.models],
            "n": self.n,
            "instances": self.instances,
            "restarts": self.restarts,
            "methods": [m.value for m in self.active_methods],
            "master_seed": self.master_seed,
            "include_greedy": self.include_greedy,
        }


@dataclass(frozen=True)
class ExperimentRecord:
    model: Model
    instance_index: int
    sampled_params: str
    instance_seed: int
    method: Method
    r_b: Fraction
    retained_edges: int
    runtime_ns: int = 0

    @property
    def r_b_float(self) -> float:
        return float(self.r_b)


def _seed(master: int, key: tuple[int, ...]) -> int:
    state = np.random.SeedSequence(int(master), spawn_key=key).generate_state(2, np.uint32)
    return int(state[0]) | (int(state[1]) << 32)


def instance_seed(master: int, model, index: int) -> int:
    return _seed(master, (ALL_MODELS.index(Model.parse(model)), int(index)))


def method_seed(master: int, model, index: int, method) -> int:
    return _seed(master, (ALL_MODELS.index(Model.parse(model)), int(index),
                          1 + ALL_METHODS.index(Method.parse(method))))


def run_method(g: Graph, method, seed: Optional[int] = None, restarts: int = 100,
               solver: Optional[str] = None) -> MethodResult:
    method = Method.parse(method)
    if method is Method.LOCAL_SWITCHING:
        return local_switching(g, restarts, seed)
    if method in EIGEN_KINDS:
        return eigen_sign_partition(g, EIGEN_KINDS[method], seed, solver)
    return greedy_method(g, method, solver)


def _instance_records(args) -> list[ExperimentRecord]:
    cfg, model, index = args
    seed = instance_seed(cfg.master_seed, model, index)
    try:
        g, spec = sample_instance(model, cfg.n, seed)
        out = []
        for method in cfg.active_methods:
            start = time.perf_counter_ns()
            res = run_method(g, method, method_seed(cfg.master_seed, model, index, method),
                             cfg.restarts)
            elapsed = time.perf_counter_ns() - start if cfg.timing else 0
            out.append(ExperimentRecord(model, index, spec.params_text(), seed, method,
                                        res.r_b, res.retained_edges, elapsed))
        return out
    except BipartifyError as exc:
        raise type(exc)(f"{model.value} instance {index}: {exc}") from exc


def run_sweep(cfg: SweepConfig, threads: int = 1, progress=None) -> list[ExperimentRecord]:
    """Records ordered by model, instance, then method; identical for any ``threads``."""
    tasks = [(cfg, model, i) for model in cfg.models for i in range(cfg.instances)]
    records: list[ExperimentRecord] = []
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for k, chunk in enumerate(pool.map(_instance_records, tasks, chunksize=8)):
                records.extend(chunk)
                if progress:
                    progress(k + 1, len(tasks))
    else:
        for k, task in enumerate(tasks):
            records.extend(_instance_records(task))
            if progress:
                progress(k + 1, len(tasks))
    return records


# -- aggregation -------------------------------------------------------------


def ecdf(values: Iterable) -> list[tuple[object, Fraction]]:
    """Right-continuous step points ``(x, F(x))`` over the sorted distinct values."""
    vals = sorted(values)
    if not vals:
        raise EmptyInput("ecdf of an empty sample")
    total = len(vals)
    steps = []
    for i, x in enumerate(vals):
        if i + 1 == total or vals[i + 1] != x:
            steps.append((x, Fraction(i + 1, total)))
    return steps


def ecdf_at(steps: Sequence[tuple[object, Fraction]], x) -> Fraction:
    value = Fraction(0)
    for sx, f in steps:
        if sx <= x:
            value = f
        else:
            break
    return value


def histogram(values: Iterable[float], bins: int = DEFAULT_BINS,
              range: tuple[float, float] = DEFAULT_RANGE) -> list[tuple[float, float]]:
    """Equal-width density histogram; out-of-range values land in the end bins."""
    vals = [float(v) for v in values]
    if not vals:
        raise EmptyInput("histogram of an empty sample")
    lo, hi = float(range[0]), float(range[1])
    if bins < 1 or not lo < hi:
        raise ValueError("need bins >= 1 and lo < hi")
    width = (hi - lo) / bins
    counts = [0] * bins
    for v in vals:
        k = int((v - lo) // width)
        counts[min(max(k, 0), bins - 1)] += 1
    total = len(vals)
    return [(lo + (k + 0.5) * width, c / (total * width)) for k, c in enumerate(counts)]


@dataclass(frozen=True)
class ComparisonMatrices:
    """``superiority[i][j]``: fraction of instances where method i beats j;
    ``similarity[i][j]``: fraction where they tie."""

    methods: tuple[Method, ...]
    superiority: tuple[tuple[Fraction, ...], ...]
    similarity: tuple[tuple[Fraction, ...], ...]
    instances: int = 0

    def sup(self, a, b) -> Fraction:
        return self.superiority[self.methods.index(Method.parse(a))][
            self.methods.index(Method.parse(b))]

    def sim(self, a, b) -> Fraction:
        return self.similarity[self.methods.index(Method.parse(a))][
            self.methods.index(Method.parse(b))]


def values_by_method(records: Iterable[ExperimentRecord], model) -> dict:
    """``{method: {instance_index: r_b}}`` for one model."""
    model = Model.parse(model)
    table: dict = {}
    for rec in records:
        if rec.model is model:
            table.setdefault(rec.method, {})[rec.instance_index] = rec.r_b
    return table


def comparison_matrices(records: Iterable[ExperimentRecord], model) -> ComparisonMatrices:
    table = values_by_method(records, model)
    if not table:
        raise EmptyInput(f"no records for model {Model.parse(model).value}")
    methods = tuple(m for m in ALL_METHODS if m in table)
    instances = sorted(set().union(*(t.keys() for t in table.values())))
    for m in methods:
        missing = set(instances) - table[m].keys()
        if missing:
            raise MisalignedRecords(f"{m.value} lacks instances {sorted(missing)[:5]}")
    total = len(instances)
    sup = []
    sim = []
    for a in methods:
        srow, trow = [], []
        for b in methods:
            wins = sum(1 for i in instances if table[a][i] > table[b][i])
            ties = sum(1 for i in instances if table[a][i] == table[b][i])
            srow.append(Fraction(wins, total))
            trow.append(Fraction(ties, total))
        sup.append(tuple(srow))
        sim.append(tuple(trow))
    return ComparisonMatrices(methods, tuple(sup), tuple(sim), total)


def summarize(records: Sequence[ExperimentRecord], cfg: Optional[SweepConfig] = None,
              bins: int = DEFAULT_BINS, range: tuple[float, float] = DEFAULT_RANGE) -> dict:
    models = [m for m in ALL_MODELS if any(r.model is m for r in records)]
    out = {
        "schema_version": SCHEMA_VERSION,
        "rng": RNG_DESCRIPTION,
        "config": cfg.as_dict() if cfg else None,
        "histogram": {"bins": bins, "range": [float(range[0]), float(range[1])]},
        "models": {},
    }
    for model in models:
        table = values_by_method(records, model)
        methods = [m for m in ALL_METHODS if m in table]
        mats = comparison_matrices(records, model)
        entry = {"methods": [m.value for m in methods], "instances": mats.instances,
                 "ecdf": {}, "histogram": {}}
        for m in methods:
            vals = [table[m][i] for i in sorted(table[m])]
            entry["ecdf"][m.value] = [[float(x), float(f)] for x, f in ecdf(vals)]
            entry["histogram"][m.value] = [[c, d] for c, d in histogram(vals, bins, range)]
        entry["superiority"] = [[float(v) for v in row] for row in mats.superiority]
        entry["similarity"] = [[float(v) for v in row] for row in mats.similarity]
        entry["superiority_counts"] = [[int(v * mats.instances) for v in row]
                                       for row in mats.superiority]
        entry["similarity_counts"] = [[int(v * mats.instances) for v in row]
                                      for row in mats.similarity]
        out["models"][model.value] = entry
    return out


# -- serialization -----------------------------------------------------------


def records_to_csv(records: Iterable[ExperimentRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow([r.model.value, r.instance_index, r.sampled_params, r.instance_seed,
                         r.method.value, r.r_b.numerator, r.r_b.denominator,
                         repr(float(r.r_b)), r.retained_edges, r.runtime_ns])
    return buf.getvalue()


def records_from_csv(text: str) -> list[ExperimentRecord]:
    rows = csv.DictReader(io.StringIO(text))
    if rows.fieldnames != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {rows.fieldnames}")
    return [
        ExperimentRecord(Model.parse(row["model"]), int(row["instance"]), row["params"],
                         int(row["seed"]), Method.parse(row["method"]),
                         Fraction(int(row["r_b_num"]), int(row["r_b_den"])),
                         int(row["retained"]), int(row["runtime_ns"]))
        for row in rows
    ]


def summary_to_json(summary: dict) -> str:
    return json.dumps(summary, indent=1, sort_keys=False) + "\n"

