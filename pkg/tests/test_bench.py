import random

import pytest

from normcolour import EmptyInput, Policy, TooManyConflicts, build_graph
from normcolour.bench import (
    BenchConfig,
    Metric,
    benchmark_norms,
    default_weak_ordering,
    derive_seed,
    generate_random_conflicts,
    max_conflicts,
    preset_config,
    rows_to_csv,
    run_benchmark,
    summarise,
)


class TestGenerateRandomConflicts:
    def test_zero_conflicts(self):
        assert generate_random_conflicts(16, 0, True, random.Random(0)) == []

    def test_full_directed_budget_collapses_to_complete_graph(self):
        pairs = generate_random_conflicts(16, 240, True, random.Random(1))
        assert len(pairs) == 240
        g = build_graph(benchmark_norms(16), pairs)
        assert len(g.edges) == 120
        assert all(g.degree(v) == 15 for v in g.ids)

    def test_full_undirected_budget_is_complete_graph(self):
        pairs = generate_random_conflicts(16, 120, False, random.Random(1))
        g = build_graph(benchmark_norms(16), pairs)
        assert len(g.edges) == 120

    def test_pairs_are_distinct(self):
        pairs = generate_random_conflicts(10, 60, True, random.Random(5))
        assert len(set(pairs)) == 60

    def test_over_budget(self):
        with pytest.raises(TooManyConflicts):
            generate_random_conflicts(16, 241, True, random.Random(0))
        with pytest.raises(TooManyConflicts):
            generate_random_conflicts(16, 121, False, random.Random(0))

    def test_deterministic(self):
        a = generate_random_conflicts(12, 30, False, random.Random(9))
        b = generate_random_conflicts(12, 30, False, random.Random(9))
        assert a == b


class TestConfig:
    def test_range_validation(self):
        with pytest.raises(TooManyConflicts):
            BenchConfig(policy=Policy.max_class(), metric=Metric.ADMITTED_COUNT,
                        conflict_range=(1, 241))
        with pytest.raises(ValueError):
            BenchConfig(policy=Policy.max_class(), metric=Metric.ADMITTED_COUNT,
                        conflict_range=(5, 2))

    def test_unknown_algorithm(self):
        with pytest.raises(ValueError):
            BenchConfig(policy=Policy.max_class(), metric=Metric.ADMITTED_COUNT,
                        algorithms=("resolve", "quantum"))

    def test_max_conflicts(self):
        assert max_conflicts(16, True) == 240
        assert max_conflicts(16, False) == 120

    def test_presets(self):
        oren = preset_config("oren-count", seed=4)
        assert oren.conflict_range == (1, 240)
        assert oren.trials_per_point == 10
        assert oren.duplicate_directed_pairs
        score = preset_config("score-sum", trials=3)
        assert score.conflict_range == (1, 120)
        assert score.trials_per_point == 3
        assert not score.duplicate_directed_pairs
        with pytest.raises(ValueError):
            preset_config("mystery")


def small_config(**overrides):
    base = dict(
        policy=Policy.weak_order(default_weak_ordering(16)),
        metric=Metric.ADMITTED_COUNT,
        conflict_range=(1, 1),
        trials_per_point=1,
        algorithms=("resolve",),
        seed=11,
    )
    base.update(overrides)
    return BenchConfig(**base)


class TestRunBenchmark:
    def test_single_point_single_trial(self):
        rows = run_benchmark(small_config())
        assert len(rows) == 1
        row = rows[0]
        assert (row.num_conflicts, row.trial, row.algorithm) == (1, 0, "resolve")
        assert row.metric == "admitted_count"
        assert row.value == 15.0  # one conflict leaves a 15-norm colour class

    def test_one_row_per_algorithm(self):
        rows = run_benchmark(
            small_config(algorithms=("resolve", "resolve-complete", "random-drop", "preferred"))
        )
        assert [r.algorithm for r in rows] == ["preferred", "random-drop", "resolve", "resolve-complete"]

    def test_curtailing_algorithms_report_exploratory_metrics(self):
        rows = run_benchmark(small_config(algorithms=("curtail", "curtail-complete")))
        metrics = {(r.algorithm, r.metric): r.value for r in rows}
        assert metrics[("curtail", "uncurtailed_count")] == 15.0
        assert metrics[("curtail", "curtailment_total")] == 1.0
        assert metrics[("curtail-complete", "curtailment_total")] == 1.0

    def test_paired_seeds_share_instances(self):
        rows = run_benchmark(small_config(algorithms=("resolve", "preferred")))
        assert len({r.seed for r in rows}) == 1

    def test_baseline_rows_carry_no_policy(self):
        rows = run_benchmark(small_config(algorithms=("random-drop",)))
        assert rows[0].policy == "none"

    def test_score_metrics(self):
        rows = run_benchmark(
            small_config(metric=Metric.SCORE_SUM, conflict_range=(120, 120),
                         duplicate_directed_pairs=False)
        )
        assert rows[0].metric == "score_sum"
        assert rows[0].value == 15.0  # complete graph: only the top norm survives
        rows = run_benchmark(
            small_config(metric=Metric.SCORE_AVG, conflict_range=(120, 120),
                         duplicate_directed_pairs=False)
        )
        assert rows[0].value == 15.0

    def test_deterministic_rows(self):
        cfg = small_config(conflict_range=(1, 5), trials_per_point=3,
                           algorithms=("resolve", "random-drop"))
        assert run_benchmark(cfg) == run_benchmark(cfg)

    def test_score_avg_near_zero_at_one_conflict(self):
        rows = run_benchmark(
            small_config(metric=Metric.SCORE_AVG, trials_per_point=20,
                         duplicate_directed_pairs=False)
        )
        assert all(-1.0 <= r.value <= 1.0 for r in rows)

    def test_paired_instance_ordering(self):
        # per shared instance: resolve <= resolve-complete <= exact maximum
        cfg = small_config(conflict_range=(20, 60), trials_per_point=2,
                           algorithms=("resolve", "resolve-complete", "preferred"))
        rows = run_benchmark(cfg)
        by_instance: dict[tuple[int, int], dict[str, float]] = {}
        for r in rows:
            by_instance.setdefault((r.num_conflicts, r.trial), {})[r.algorithm] = r.value
        for values in by_instance.values():
            assert values["resolve"] <= values["resolve-complete"] <= values["preferred"]

    def test_different_seeds_differ(self):
        rows_a = run_benchmark(small_config(conflict_range=(40, 40), seed=1))
        rows_b = run_benchmark(small_config(conflict_range=(40, 40), seed=2))
        assert rows_a[0].seed != rows_b[0].seed


class TestSummarise:
    def test_single_row_is_its_own_mean(self):
        rows = run_benchmark(small_config())
        means = summarise(rows)
        key = (1, "resolve", "weak-order:net", "admitted_count")
        assert means[key] == rows[0].value

    def test_two_value_mean(self):
        rows = run_benchmark(small_config(conflict_range=(30, 30), trials_per_point=2))
        means = summarise(rows)
        values = [r.value for r in rows]
        assert means[(30, "resolve", "weak-order:net", "admitted_count")] == sum(values) / 2

    def test_group_mean_matches_recomputation(self):
        rows = run_benchmark(small_config(conflict_range=(10, 12), trials_per_point=10))
        means = summarise(rows)
        for point in (10, 11, 12):
            group = [r.value for r in rows if r.num_conflicts == point]
            assert means[(point, "resolve", "weak-order:net", "admitted_count")] == pytest.approx(
                sum(group) / len(group)
            )

    def test_empty_input(self):
        with pytest.raises(EmptyInput):
            summarise([])


class TestCsv:
    def test_header_and_line_endings(self):
        text = rows_to_csv(run_benchmark(small_config()))
        assert text.startswith("num_conflicts,trial,algorithm,policy,metric,value,seed\n")
        assert "\r" not in text
        assert text.endswith("\n")

    def test_float_rendering(self):
        rows = run_benchmark(
            small_config(metric=Metric.SCORE_AVG, conflict_range=(7, 7), trials_per_point=1)
        )
        line = rows_to_csv(rows).splitlines()[1]
        value = line.split(",")[5]
        assert len(value.replace("-", "").replace(".", "")) <= 7  # 6 significant digits

    def test_derive_seed_is_stable(self):
        assert derive_seed(7, 10, 3) == derive_seed(7, 10, 3)
        assert derive_seed(7, 10, 3) != derive_seed(7, 10, 4)
        assert derive_seed(7, 10, 3) != derive_seed(8, 10, 3)
