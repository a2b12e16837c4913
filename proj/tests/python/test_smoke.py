"""Smoke tests for the compiled rss module."""

import math

import pytest

import rss


@pytest.fixture
def toy():
    return rss.Instance(periods=3, demand_means=[20, 30, 40], K=30, W=10, h=1, b=10)


def test_truncated_pmf():
    dist = rss.truncated_pmf(0.0)
    assert dist.pmf == [1.0]
    assert dist.support_max == 0

    dist = rss.truncated_pmf(40.0, 1e-4)
    assert abs(sum(dist.pmf) - 1.0) < 1e-12
    assert abs(dist.mean - 40.0) < 1e-3
    assert dist.cdf(dist.support_max) == pytest.approx(1.0)


def test_pattern_demands():
    assert rss.pattern_demands("STA", 4) == [50, 50, 50, 50]
    assert rss.pattern_demands("INC", 3) == [0, 50, 100]
    with pytest.raises(ValueError):
        rss.pattern_demands("INC", 1)
    with pytest.raises(ValueError):
        rss.pattern_demands("nope", 5)


def test_baseline_matches_printed_table(toy):
    result = rss.enumerate_baseline(toy)
    assert result.best_plan == [1, 0, 1]
    assert result.best_cost == pytest.approx(142.7, abs=0.05)
    assert len(result.all_costs) == 8
    assert result.all_costs[0b101] == result.best_cost


def test_bnb_solve(toy):
    result = rss.bnb_solve(toy)
    assert result.best_plan == [1, 0, 1]
    assert result.best_cost == pytest.approx(142.7, abs=0.05)
    assert result.stats.nodes_computed == 10
    assert result.stats.nodes_pruned == 4
    assert result.stats.pruning_pct_visited() == pytest.approx(28.57, abs=0.01)

    periods = [review.period for review in result.policy.reviews]
    assert periods == [1, 3]
    for review in result.policy.reviews:
        assert review.has_order_region
        assert review.s < review.S


def test_strategies_agree(toy):
    reference = rss.bnb_solve(toy).best_cost
    for strategy in ("det0", "det1", "rand", "guided"):
        assert rss.bnb_solve(toy, strategy=strategy, seed=3).best_cost == pytest.approx(
            reference, abs=1e-9
        )
    assert rss.bnb_solve(toy, use_bounds=False).best_cost == pytest.approx(reference, abs=1e-9)


def test_fixed_plan_and_guidance(toy):
    assert rss.solve_fixed_plan(toy, [1, 0, 1]) == pytest.approx(142.7, abs=0.05)
    assert rss.solve_fixed_plan(toy, [0, 0, 0]) == pytest.approx(1600.0, abs=0.05)
    assert rss.compute_rs_plan(toy) == [1, 0, 1]


def test_simulation_cross_check(toy):
    policy = rss.extract_policy(toy, [1, 0, 1])
    report = rss.simulate_policy(toy, policy, runs=30000, seed=11)
    assert report.runs == 30000
    assert report.std_error > 0
    assert math.isclose(report.mean_cost, 142.74, abs_tol=3 * report.std_error + 0.2)


def test_instance_files_roundtrip(tmp_path, toy):
    path = tmp_path / "toy.instance"
    rss.save_instance(toy, str(path))
    loaded = rss.load_instance(str(path))
    assert loaded.periods == toy.periods
    assert loaded.demand_means == toy.demand_means
    assert loaded.K == toy.K

    bad = tmp_path / "bad.instance"
    bad.write_text("T 2\ndemand_means 5 6\nK soup\nW 2\nh 3\nb 4\n")
    with pytest.raises(rss.ParseError):
        rss.load_instance(str(bad))
