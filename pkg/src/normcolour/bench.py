"""Benchmark harness for the resolution algorithms and baselines.

Reproduces the evaluation setup of the original conflict-graph experiments:
systems of 16 norms, a sweep over the number of randomly placed conflicts,
a fixed number of trials per conflict count, and per-trial metrics written
as CSV rows.

Seeding is paired: the graph for (conflict count, trial) is derived from
the master seed alone, so every algorithm in a run sees the same instance
and curves can be compared point by point. The only other consumer of
randomness, the random-drop baseline, draws from its own derived stream.
"""
from __future__ import annotations

import csv
import hashlib
import io
import random
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import EmptyInput, TooManyConflicts
from .graph import ConflictGraph, Norm, NormId, build_graph
from .oracle import max_cardinality_admissible, random_drop
from .policies import Policy, WeakOrdering, policy_label, score_admitted_set
from .resolution import ALGORITHMS, Resolution

BASELINES = ("random-drop", "preferred")
CSV_HEADER = ("num_conflicts", "trial", "algorithm", "policy", "metric", "value", "seed")


class Metric(Enum):
    ADMITTED_COUNT = "admitted-count"
    SCORE_SUM = "score-sum"
    SCORE_AVG = "score-avg"


@dataclass(frozen=True)
class BenchConfig:
    policy: Policy
    metric: Metric
    n_norms: int = 16
    conflict_range: tuple[int, int] = (1, 240)
    trials_per_point: int = 10
    duplicate_directed_pairs: bool = True
    seed: int = 0
    algorithms: tuple[str, ...] = ("resolve",)

    def __post_init__(self) -> None:
        lo, hi = self.conflict_range
        cap = max_conflicts(self.n_norms, self.duplicate_directed_pairs)
        if not 0 <= lo <= hi:
            raise ValueError(f"bad conflict range {self.conflict_range}")
        if hi > cap:
            raise TooManyConflicts(f"{hi} conflicts exceed the maximum of {cap}")
        unknown = [a for a in self.algorithms if a not in ALGORITHMS and a not in BASELINES]
        if unknown:
            raise ValueError(f"unknown algorithms: {unknown}")


@dataclass(frozen=True)
class BenchRow:
    num_conflicts: int
    trial: int
    algorithm: str
    policy: str
    metric: str
    value: float
    seed: int


def max_conflicts(n_norms: int, duplicate_directed_pairs: bool) -> int:
    ordered = n_norms * (n_norms - 1)
    return ordered if duplicate_directed_pairs else ordered // 2


def benchmark_norms(n: int) -> list[Norm]:
    """The standard norm set: n0..n(n-1), zero-padded, declared in index
    order, with authority falling as the index rises."""
    width = len(str(max(n - 1, 0)))
    return [
        Norm(id=f"n{i:0{width}d}", declared_at=i, authority_rank=n - 1 - i)
        for i in range(n)
    ]


def default_weak_ordering(n: int) -> dict[NormId, int]:
    """Distinct ranks n-1..0 by norm index: the first norm is most preferred."""
    return {norm.id: n - 1 - i for i, norm in enumerate(benchmark_norms(n))}


def derive_seed(master: int, *parts: object) -> int:
    """Stable 64-bit seed for a sub-stream of the master seed."""
    text = ":".join(map(repr, (master, *parts)))
    return int.from_bytes(hashlib.sha256(text.encode()).digest()[:8], "big")


def generate_random_conflicts(
    n_norms: int,
    n_conflicts: int,
    duplicate_directed_pairs: bool,
    rng: random.Random,
) -> list[tuple[NormId, NormId]]:
    """Sample distinct conflict pairs uniformly, without self-loops.

    With duplicate_directed_pairs, (a, b) and (b, a) are distinct draws that
    both count toward n_conflicts yet collapse to one undirected edge at
    graph build; that replicates the 240-conflict ceiling of the original
    directed-graph methodology. Without it, unordered pairs are sampled.
    """
    cap = max_conflicts(n_norms, duplicate_directed_pairs)
    if n_conflicts > cap:
        raise TooManyConflicts(f"{n_conflicts} conflicts exceed the maximum of {cap}")
    ids = [norm.id for norm in benchmark_norms(n_norms)]
    if duplicate_directed_pairs:
        population = [(i, j) for i in range(n_norms) for j in range(n_norms) if i != j]
    else:
        population = [(i, j) for i in range(n_norms) for j in range(i + 1, n_norms)]
    chosen = rng.sample(population, n_conflicts)
    return [(ids[i], ids[j]) for i, j in chosen]


def _scores(
    g: ConflictGraph, admitted: Sequence[NormId] | frozenset[NormId], ranks: WeakOrdering
) -> tuple[float, float]:
    total = float(score_admitted_set(g, admitted, ranks))
    avg = total / len(admitted) if admitted else 0.0
    return total, avg


def _measure(
    algorithm: str,
    g: ConflictGraph,
    cfg: BenchConfig,
    ranks: WeakOrdering,
    point_seed: int,
) -> list[tuple[str, str, float]]:
    """Run one algorithm on one instance; returns (policy, metric, value) rows."""
    if algorithm in BASELINES:
        if algorithm == "random-drop":
            rng = random.Random(derive_seed(point_seed, "random-drop"))
            admitted: frozenset[NormId] = random_drop(g, rng)
        else:
            admitted = max_cardinality_admissible(g)
        label = "none"
        if cfg.metric is Metric.ADMITTED_COUNT:
            return [(label, "admitted_count", float(len(admitted)))]
        total, avg = _scores(g, admitted, ranks)
        value = total if cfg.metric is Metric.SCORE_SUM else avg
        return [(label, cfg.metric.value.replace("-", "_"), value)]

    res: Resolution = ALGORITHMS[algorithm](g, cfg.policy)
    label = policy_label(cfg.policy)
    curtailing = algorithm in ("curtail", "curtail-complete")
    if cfg.metric is Metric.ADMITTED_COUNT:
        if curtailing:
            # Curtailing algorithms admit everything, so a raw count says
            # nothing; report how much survived uncurtailed instead.
            return [
                (label, "uncurtailed_count", float(len(res.admitted_unconditionally))),
                (label, "curtailment_total", float(res.total_curtailments)),
            ]
        return [(label, "admitted_count", float(len(res.entries)))]
    scored = res.admitted_unconditionally if curtailing else res.admitted
    total, avg = _scores(g, scored, ranks)
    value = total if cfg.metric is Metric.SCORE_SUM else avg
    return [(label, cfg.metric.value.replace("-", "_"), value)]


def run_benchmark(cfg: BenchConfig) -> list[BenchRow]:
    """Run the configured sweep; deterministic for a fixed config."""
    norms = benchmark_norms(cfg.n_norms)
    if isinstance(cfg.policy, Policy) and cfg.policy.ranks is not None:
        ranks: WeakOrdering = cfg.policy.ranks
    else:
        ranks = default_weak_ordering(cfg.n_norms)
    rows: list[BenchRow] = []
    lo, hi = cfg.conflict_range
    for num_conflicts in range(lo, hi + 1):
        for trial in range(cfg.trials_per_point):
            point_seed = derive_seed(cfg.seed, num_conflicts, trial)
            rng = random.Random(point_seed)
            pairs = generate_random_conflicts(
                cfg.n_norms, num_conflicts, cfg.duplicate_directed_pairs, rng
            )
            g = build_graph(norms, pairs)
            for algorithm in cfg.algorithms:
                for policy, metric, value in _measure(algorithm, g, cfg, ranks, point_seed):
                    rows.append(
                        BenchRow(num_conflicts, trial, algorithm, policy, metric, value, point_seed)
                    )
    rows.sort(key=lambda r: (r.num_conflicts, r.trial, r.algorithm, r.metric))
    return rows


def summarise(rows: Iterable[BenchRow]) -> dict[tuple[int, str, str, str], float]:
    """Mean value per (num_conflicts, algorithm, policy, metric) group."""
    sums: dict[tuple[int, str, str, str], list[float]] = {}
    for row in rows:
        sums.setdefault((row.num_conflicts, row.algorithm, row.policy, row.metric), []).append(
            row.value
        )
    if not sums:
        raise EmptyInput("no benchmark rows to summarise")
    return {key: sum(values) / len(values) for key, values in sums.items()}


def rows_to_csv(rows: Iterable[BenchRow]) -> str:
    """Render rows as CSV: UTF-8 friendly, LF line endings, floats to six
    significant digits."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(
            [
                row.num_conflicts,
                row.trial,
                row.algorithm,
                row.policy,
                row.metric,
                format(row.value, ".6g"),
                row.seed,
            ]
        )
    return out.getvalue()


def preset_config(name: str, *, seed: int = 0, trials: int | None = None) -> BenchConfig:
    """The three canned experiment configurations used by the CLI."""
    n = 16
    if name == "oren-count":
        return BenchConfig(
            policy=Policy.max_class(),
            metric=Metric.ADMITTED_COUNT,
            n_norms=n,
            conflict_range=(1, 240),
            trials_per_point=10 if trials is None else trials,
            duplicate_directed_pairs=True,
            seed=seed,
            algorithms=("resolve", "resolve-complete", "random-drop", "preferred"),
        )
    if name in ("score-sum", "score-avg"):
        return BenchConfig(
            policy=Policy.weak_order(default_weak_ordering(n)),
            metric=Metric.SCORE_SUM if name == "score-sum" else Metric.SCORE_AVG,
            n_norms=n,
            conflict_range=(1, 120),
            trials_per_point=250 if trials is None else trials,
            duplicate_directed_pairs=False,
            seed=seed,
            algorithms=("resolve", "resolve-complete"),
        )
    raise ValueError(f"unknown preset {name!r}")
