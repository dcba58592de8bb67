"""
Tests for the flat dual cone and its norms.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from asymgauge.dual import (
    dual_cone_full,
    dual_equivalence_bounds,
    flat_norm,
    in_dual_cone,
    nonreversible_functional,
    star_norm,
    support_functional,
)
from asymgauge.errors import InputError, PreconditionError
from asymgauge.gauge import eval_norm
from asymgauge.rationals import ExtendedRational, dot
from asymgauge.spaces import linf_sym, referee_plane, upper_real, weighted_linf

weights = st.lists(st.integers(min_value=0, max_value=4), min_size=3, max_size=3)


class TestFlatNorm:
    """Test cases for ||p|_b."""

    def test_upper_real(self):
        """Test ||1|_b = 1 and ||-1|_b = +inf with the ray -1."""
        value, certificate = flat_norm(upper_real(), [1])
        assert value == ExtendedRational.of(1)
        value, certificate = flat_norm(upper_real(), ["-1"])
        assert not value.is_finite
        assert str(certificate) == "ray -1"

    def test_referee_plane(self):
        """Test finite values on the dual cone of the referee plane."""
        g = referee_plane()
        assert flat_norm(g, [0, 1])[0].finite() == 1
        assert flat_norm(g, [1, 1])[0].finite() == 2
        assert not flat_norm(g, [0, -1])[0].is_finite

    def test_dimension_mismatch(self):
        """Test the functional length check."""
        with pytest.raises(InputError, match="functional has 2 coordinates"):
            flat_norm(upper_real(), [1, 0])

    def test_star_norm(self):
        """Test the dual norm of the associated l-infinity norm."""
        assert star_norm(referee_plane(), [3, -1]) == 4
        assert star_norm(upper_real(), [-1]) == 1

    @settings(max_examples=30, deadline=None)
    @given(weights, st.lists(st.integers(-6, 6), min_size=2, max_size=2))
    def test_continuity_bound(self, w, x):
        """Test <p, x> <= ||p|_b ||x| for nonnegative combinations of generators."""
        g = referee_plane()
        p = [sum(wi * a[k] for wi, a in zip(w, g.generators)) for k in range(2)]
        value, _ = flat_norm(g, p)
        assert value.is_finite
        assert dot(tuple(Fraction(c) for c in p), tuple(Fraction(c) for c in x)) <= value.finite() * eval_norm(g, x)
        assert value >= ExtendedRational(star_norm(g, p))


class TestDualCone:
    """Test cases for membership in X^b."""

    def test_membership(self):
        """Test both outcomes with certificates."""
        member, certificate = in_dual_cone(referee_plane(), [1, 1])
        assert member and certificate.kind == "point"
        member, certificate = in_dual_cone(referee_plane(), [0, -1])
        assert not member and certificate.kind == "ray"

    def test_full_iff_t1(self):
        """Test that X^b is the whole dual exactly for T1 spaces."""
        assert dual_cone_full(weighted_linf(3))
        assert dual_cone_full(linf_sym(2))
        assert not dual_cone_full(upper_real())
        assert not dual_cone_full(referee_plane())

    @settings(max_examples=30, deadline=None)
    @given(weights, weights)
    def test_closed_under_sums(self, u, v):
        """Test that the cone is closed under addition."""
        g = referee_plane()
        p = [sum(wi * a[k] for wi, a in zip(u, g.generators)) for k in range(2)]
        q = [sum(wi * a[k] for wi, a in zip(v, g.generators)) for k in range(2)]
        assert in_dual_cone(g, [a + b for a, b in zip(p, q)])[0]


class TestSupportFunctional:
    """Test cases for support_functional."""

    def test_weighted_linf(self):
        """Test the lowest-index active generator is returned."""
        functional = support_functional(weighted_linf(3), [0, 1, 0])
        assert functional.p == (Fraction(0), Fraction(1), Fraction(0))
        assert functional.flat_norm == ExtendedRational.of(1)
        assert functional.continuous

    def test_normalizes(self):
        """Test <p, x0> = ||x0| and ||p|_b = 1."""
        g = weighted_linf(2)
        x0 = [Fraction(-3), Fraction(1, 2)]
        functional = support_functional(g, x0)
        assert dot(functional.p, tuple(x0)) == eval_norm(g, x0)
        assert functional.flat_norm.finite() == 1

    def test_zero_norm_point(self):
        """Test the precondition ||x0| > 0."""
        with pytest.raises(PreconditionError, match=r"\|\|x0\| = 0"):
            support_functional(upper_real(), [-1])


class TestNonreversibleFunctional:
    """Test cases for p in X^b with -p outside."""

    def test_upper_real(self):
        """Test that p = 1 witnesses the failure of a vector space structure."""
        functional, ray = nonreversible_functional(upper_real())
        assert functional.p == (Fraction(1),)
        assert not flat_norm(upper_real(), [-1])[0].is_finite
        assert ray.vector == (Fraction(-1),)

    def test_referee_plane(self):
        """Test the functional (0, 1)."""
        functional, _ = nonreversible_functional(referee_plane())
        assert functional.p == (Fraction(0), Fraction(1))
        assert not in_dual_cone(referee_plane(), [0, -1])[0]

    def test_t1_space(self):
        """Test the precondition c(X) = 0."""
        with pytest.raises(PreconditionError, match="vector space"):
            nonreversible_functional(weighted_linf(2))


class TestDualEquivalence:
    """Test cases for c ||p|_b <= ||-p|_b <= ||p|_b / c."""

    @pytest.mark.parametrize("p", [[1, 0], [0, 1], [2, -3], [-1, -1]])
    def test_weighted_linf(self, p):
        """Test the bounds on a type I space."""
        assert dual_equivalence_bounds(weighted_linf(2), p)

    def test_requires_positive_index(self):
        """Test the precondition."""
        with pytest.raises(PreconditionError, match="c\\(X\\) > 0"):
            dual_equivalence_bounds(upper_real(), [1])


if __name__ == "__main__":
    pytest.main([__file__])
