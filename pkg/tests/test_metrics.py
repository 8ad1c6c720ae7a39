import math

import numpy as np
import pytest

from udnsim.metrics import AggregateRow, RunResult, aggregate_scenario, handover_rate, ho_avg_sinr


def run(ho_times, sinrs=None, **kw):
    sinrs = sinrs if sinrs is not None else [10.0] * ho_times
    defaults = dict(case="A", den_gnb=10, ttt_tics=1, velocity_kmh=50, replicate=0, seed=1)
    defaults.update(kw)
    return RunResult(ho_times=ho_times, ho_event_sinrs=sinrs, **defaults)


class TestHandoverRate:
    def test_constant(self):
        assert handover_rate([run(4) for _ in range(4)]) == 4.0

    def test_failure_convention(self):
        results = [run(0), run(0), run(0), run(1)]
        assert handover_rate(results) == 0.25
        assert aggregate_scenario(results).failure_flag is True

    def test_two_values(self):
        assert handover_rate([run(3), run(5)]) == 4.0

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            handover_rate([])

    def test_permutation_invariant_exactly(self):
        rng = np.random.default_rng(1)
        results = [run(int(rng.integers(0, 20))) for _ in range(50)]
        base = handover_rate(results)
        for _ in range(20):
            perm = list(results)
            rng.shuffle(perm)
            assert handover_rate(perm) == base


class TestHoAvgSinr:
    def test_two_events(self):
        assert ho_avg_sinr([run(2, [10.0, 20.0])]) == 15.0

    def test_no_events_is_nan(self):
        assert math.isnan(ho_avg_sinr([run(0, []), run(0, [])]))

    def test_pooling_ignores_empty_replicates(self):
        assert ho_avg_sinr([run(1, [30.0]), run(0, [])]) == 30.0

    def test_pooled_not_mean_of_means(self):
        # one replicate with two events, one with a single event
        results = [run(2, [0.0, 0.0]), run(1, [30.0])]
        assert ho_avg_sinr(results) == pytest.approx(10.0, abs=1e-12)

    def test_within_pooled_range(self):
        rng = np.random.default_rng(2)
        results = []
        pool = []
        for rep in range(30):
            n = int(rng.integers(0, 6))
            sinrs = [float(rng.uniform(-10, 40)) for _ in range(n)]
            results.append(run(n, sinrs, replicate=rep))
            pool.extend(sinrs)
        got = ho_avg_sinr(results)
        assert min(pool) <= got <= max(pool)


class TestAggregate:
    def test_row_fields(self):
        results = [run(2, [1.0, 3.0], replicate=0), run(0, [], replicate=1)]
        row = aggregate_scenario(results)
        assert row == AggregateRow(
            case="A",
            den_gnb=10,
            ttt_tics=1,
            velocity_kmh=50,
            replicates=2,
            mean_ho_rate=1.0,
            ho_avg_sinr_db=2.0,
            failure_flag=False,
        )

    def test_failure_flag_boundary(self):
        # mean exactly 1 is not a failure (strict < 1)
        assert aggregate_scenario([run(1), run(1)]).failure_flag is False
        assert aggregate_scenario([run(1), run(0)]).failure_flag is True

    def test_nan_iff_zero_events(self):
        row = aggregate_scenario([run(0, []) for _ in range(5)])
        assert math.isnan(row.ho_avg_sinr_db)
        row = aggregate_scenario([run(0, []), run(1, [5.0])])
        assert not math.isnan(row.ho_avg_sinr_db)

    def test_mixed_scenarios_rejected(self):
        with pytest.raises(ValueError):
            aggregate_scenario([run(1), run(1, den_gnb=20)])

    def test_partition_recombination(self):
        # pooled aggregation over any partition agrees (carried sums/counts)
        rng = np.random.default_rng(3)
        results = []
        for rep in range(100):
            n = int(rng.integers(0, 5))
            results.append(run(n, [float(rng.uniform(-5, 35)) for _ in range(n)], replicate=rep))
        whole = aggregate_scenario(results)
        # recombine partial sums explicitly
        for split in (1, 13, 50, 99):
            a, b = results[:split], results[split:]
            sum_a = sum(s for r in a for s in r.ho_event_sinrs)
            sum_b = sum(s for r in b for s in r.ho_event_sinrs)
            n_a = sum(len(r.ho_event_sinrs) for r in a)
            n_b = sum(len(r.ho_event_sinrs) for r in b)
            rate = (sum(r.ho_times for r in a) + sum(r.ho_times for r in b)) / len(results)
            assert rate == whole.mean_ho_rate
            assert (sum_a + sum_b) / (n_a + n_b) == pytest.approx(
                whole.ho_avg_sinr_db, rel=1e-12
            )


def test_event_list_length_enforced():
    with pytest.raises(ValueError):
        run(2, [1.0])
