"""
Tests for the seeded verification campaign.
"""

import itertools
from fractions import Fraction

import numpy as np
import pytest

import asymgauge.symmetry as symmetry
from asymgauge.campaign import (
    CORNER_FIXTURES,
    SUITES,
    CheckFailed,
    RunConfig,
    random_gauge,
    render_report,
    run_campaign,
    sampled_index,
    shrink,
)
from asymgauge.errors import InputError
from asymgauge.gauge import is_symmetric
from asymgauge.operators import lc_is_vector_space, lc_supremum, negate, nonreversible_witness
from asymgauge.spaces import fixture, linf_sym, weighted_linf
from asymgauge.symmetry import index, is_t1


class TestRunConfig:
    """Test cases for campaign configuration."""

    def test_defaults(self):
        """Test the default configuration."""
        config = RunConfig()
        assert config.dim_range == (1, 4)
        assert config.oracle_samples == 100_000

    def test_dim_range(self):
        """Test 1 <= min <= max <= 6."""
        with pytest.raises(InputError, match="dim_range must satisfy"):
            RunConfig.build(dim_range=(0, 3))
        with pytest.raises(InputError, match="dim_range must satisfy"):
            RunConfig.build(dim_range=(3, 2))
        with pytest.raises(InputError, match="dim_range must satisfy"):
            RunConfig.build(dim_range=(1, 7))

    def test_seed_range(self):
        """Test the signed 64-bit seed range."""
        assert RunConfig.build(seed=-(2 ** 63)).seed == -(2 ** 63)
        with pytest.raises(InputError, match="seed"):
            RunConfig.build(seed=2 ** 63)

    def test_unknown_suite(self):
        """Test the suite allow-list."""
        with pytest.raises(InputError, match="unknown suites"):
            RunConfig.build(suites=["associativity"])

    def test_negative_cases(self):
        """Test that cases must be nonnegative."""
        with pytest.raises(InputError, match="cases must be nonnegative"):
            RunConfig.build(cases=-1)


class TestRandomGauges:
    """Test cases for the random gauge populations."""

    @pytest.mark.parametrize("seed", range(10))
    def test_kinds(self, seed):
        """Test each forced subpopulation."""
        rng = np.random.default_rng(seed)
        dim = 1 + seed % 3
        assert not is_t1(random_gauge(rng, dim, "non_t1"))[0]
        assert is_symmetric(random_gauge(rng, dim, "symmetric"))
        assert is_t1(random_gauge(rng, dim, "t1"))[0]

    def test_entries_bounded(self):
        """Test integer entries in [-5, 5]."""
        rng = np.random.default_rng(1)
        g = random_gauge(rng, 3, "generic")
        assert all(abs(c) <= 5 and c.denominator == 1 for a in g.generators for c in a)

    def test_unknown_kind(self):
        """Test kind validation."""
        with pytest.raises(InputError, match="kind must be one of"):
            random_gauge(np.random.default_rng(0), 2, "round")


class TestSampledIndex:
    """Test cases for the floating-point oracle."""

    def test_weighted_linf(self):
        """Test the oracle reaches 1/3 for weighted_linf(3)."""
        estimate = sampled_index(weighted_linf(3), 2000, np.random.default_rng(0))
        assert abs(estimate - 1 / 3) < 1e-9

    def test_symmetric(self):
        """Test the oracle on a norm."""
        estimate = sampled_index(linf_sym(2), 2000, np.random.default_rng(0))
        assert abs(estimate - 1) < 1e-9

    def test_pure_sampling(self):
        """Test Gaussian directions alone approach 1/2 for weighted_linf(2) from above."""
        estimate = sampled_index(weighted_linf(2), 20000, np.random.default_rng(0), arrangement=False)
        assert 0.5 - 1e-12 <= estimate < 0.5 + 1e-2


class TestShrink:
    """Test cases for counterexample minimization."""

    def test_drops_generators(self):
        """Test that generators are dropped while the check keeps failing."""
        def check(inputs):
            if len(inputs["g"].generators) >= 3:
                raise CheckFailed("too many generators")

        minimized, message = shrink({"g": linf_sym(2)}, check)
        assert len(minimized["g"].generators) == 3
        assert "too many generators" in message

    def test_zeroes_coordinates(self):
        """Test that coordinates are zeroed while the check keeps failing."""
        def check(inputs):
            if any(c == Fraction(-1, 2) for a in inputs["g"].generators for c in a):
                raise CheckFailed("weight -1/2 present")

        minimized, _ = shrink({"g": weighted_linf(2)}, check)
        entries = [c for a in minimized["g"].generators for c in a]
        assert Fraction(-1, 2) in entries
        assert len(minimized["g"].generators) <= 4


class TestRunCampaign:
    """Test cases for run_campaign."""

    def test_zero_cases(self):
        """Test that cases = 0 gives an empty, passing report."""
        report = run_campaign(RunConfig(cases=0))
        assert report.suites == []
        assert report.ok

    def test_small_campaign_passes(self):
        """Test every suite on a few cases."""
        report = run_campaign(RunConfig(seed=42, cases=2, dim_range=(1, 2), oracle_samples=5000))
        assert [s.name for s in report.suites] == list(SUITES)
        failures = [s for s in report.suites if s.failed]
        assert failures == [], render_report(report)

    def test_deterministic(self):
        """Test that the same configuration yields byte-identical reports."""
        config = RunConfig(seed=7, cases=3, dim_range=(1, 3), suites=["subadditivity", "index_range"])
        first = run_campaign(config).model_dump_json(indent=2)
        second = run_campaign(config).model_dump_json(indent=2)
        assert first == second

    def test_negative_seed(self):
        """Test that negative seeds run."""
        report = run_campaign(RunConfig(seed=-5, cases=2, suites=["homogeneity"]))
        assert report.suites[0].passed == 2

    def test_sum_gauge_index_beyond_the_line(self):
        """Test that the sum gauge index check runs and passes in dimensions 2 and 3."""
        report = run_campaign(RunConfig(seed=5, cases=6, dim_range=(2, 3), suites=["sum_with_symmetric"]))
        assert report.ok, render_report(report)
        assert report.suites[0].passed == 6

    def test_mutant_index_fails_product_identity(self, monkeypatch):
        """Test that dropping the >= 1 facet rows is caught with a counterexample."""
        original = symmetry._facet_program

        def mutant(g, i):
            poly = original(g, i)
            a_i = g.generators[i]
            dropped = (tuple(-c for c in a_i) + (Fraction(0),), Fraction(-1))
            return type(poly)(poly.dim, tuple(row for row in poly.rows if row != dropped))

        monkeypatch.setattr(symmetry, "_facet_program", mutant)
        report = run_campaign(RunConfig(seed=42, cases=20, dim_range=(1, 3), suites=["product_identity"]))
        result = report.suites[0]
        assert result.failed > 0
        assert result.counterexample is not None
        assert not report.ok
        assert "FAILED" in render_report(report)


class TestVectorSpaceGrid:
    """Test cases for the vector-space decision over the fixture grid."""

    def test_grid(self):
        """Test 25 ordered fixture pairs against the index predicate with 100 trials each."""
        names = ["upper_real", "referee_plane", "weighted_linf:2", "sup_gauge:3", "linf_sym:1"]
        assert set(names) <= set(CORNER_FIXTURES)
        pairs = list(itertools.product(names, repeat=2))
        assert len(pairs) == 25
        for x_name, y_name in pairs:
            X, Y = fixture(x_name), fixture(y_name)
            predicate = not (index(X).c == 0 and index(Y).c == 0)
            assert lc_is_vector_space(X, Y, trials=100) == predicate
            if not predicate:
                T = nonreversible_witness(X, Y)
                assert lc_supremum(T)[0].is_finite
                assert not lc_supremum(negate(T))[0].is_finite


@pytest.mark.slow
class TestLargeCampaigns:
    """Large seeded campaigns."""

    def test_finite_dimensional_equivalence(self):
        """Test the equivalence of c > 0, T1, full dual cone and bounded ball."""
        report = run_campaign(RunConfig(
            seed=11, cases=1000, dim_range=(1, 5),
            suites=["finite_dim_equivalence", "dual_cone_full_iff_t1"],
        ))
        assert report.ok, render_report(report)

    def test_inequalities(self):
        """Test the point and operator inequalities."""
        report = run_campaign(RunConfig(
            seed=12, cases=1000, dim_range=(1, 4),
            suites=["inequality_reverse", "inequality_symmetric"],
        ))
        assert report.ok, render_report(report)
        report = run_campaign(RunConfig(
            seed=13, cases=300, dim_range=(1, 3),
            suites=["inequality_operator_reverse", "inequality_operator_symmetric", "ls_below_lc"],
        ))
        assert report.ok, render_report(report)

    def test_oracle(self):
        """Test the facet LP index against sphere sampling."""
        report = run_campaign(RunConfig(seed=14, cases=100, dim_range=(1, 3), suites=["oracle_index"]))
        assert report.ok, render_report(report)

    def test_full_campaign(self):
        """Test every suite with seed 42 over dims 1 to 4."""
        report = run_campaign(RunConfig(seed=42, cases=500, dim_range=(1, 4)))
        assert report.ok, render_report(report)


if __name__ == "__main__":
    pytest.main([__file__])
