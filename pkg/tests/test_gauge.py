"""
Tests for the PolyhedralGauge type, its axioms and evaluations.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from asymgauge.errors import AxiomError, InputError
from asymgauge.gauge import (
    canonicalize,
    eval_norm,
    eval_reverse,
    is_symmetric,
    new_gauge,
    quasi_distance,
    sum_with_symmetric,
    symmetric_norm,
    symmetrize,
    unit_ball,
)
from asymgauge.spaces import linf_sym, referee_plane, sup_gauge, upper_real, weighted_linf
from asymgauge.symmetry import index

SPACES = [
    upper_real(),
    referee_plane(),
    weighted_linf(2),
    weighted_linf(3),
    linf_sym(2),
    sup_gauge(3),
    new_gauge(2, [[1, 0], [0, 1], [-1, -1]], "simplex"),
]

coordinates = st.fractions(min_value=-10, max_value=10, max_denominator=6)


def eval_norm_raw(generators, x):
    return max(sum(Fraction(a) * c for a, c in zip(row, x)) for row in generators)


@st.composite
def gauge_and_points(draw, count=2):
    g = draw(st.sampled_from(SPACES))
    points = [draw(st.lists(coordinates, min_size=g.dim, max_size=g.dim)) for _ in range(count)]
    return (g, *points)


class TestNewGauge:
    """Test cases for gauge construction and axiom checks."""

    def test_valid_gauge(self):
        """Test that a valid generator list is stored exactly."""
        g = new_gauge(1, [["0"], [1]], "upper")
        assert g.generators == ((Fraction(0),), (Fraction(1),))
        assert g.label == "upper"

    def test_positivity_failure(self):
        """Test that 0 outside the hull of the generators is rejected."""
        with pytest.raises(AxiomError, match="not nonnegative") as info:
            new_gauge(1, [[1]])
        assert info.value.axiom == "positivity"
        assert eval_norm_raw([[1]], info.value.witness) < 0

    def test_separation_failure(self):
        """Test that a degenerate generator list is rejected with a witness."""
        with pytest.raises(AxiomError, match="degenerate") as info:
            new_gauge(2, [[1, 0], [-1, 0]])
        assert info.value.axiom == "separation"
        assert info.value.witness[0] == 0 and info.value.witness[1] != 0

    def test_structure_errors(self):
        """Test dimension and emptiness checks."""
        with pytest.raises(InputError, match="nonempty"):
            new_gauge(1, [])
        with pytest.raises(InputError, match="expected 2"):
            new_gauge(2, [[1, 0], [1]])
        with pytest.raises(InputError, match="positive integer"):
            new_gauge(0, [[1]])

    def test_malformed_entry(self):
        """Test the field path of a malformed entry."""
        with pytest.raises(InputError, match=r"generators\.1\.0"):
            new_gauge(1, [[1], ["x"]])


class TestEvaluations:
    """Test cases for ||x|, ||-x| and ||x||_s."""

    def test_upper_real(self):
        """Test max(0, t) and its reverse."""
        g = upper_real()
        assert eval_norm(g, [3]) == 3
        assert eval_norm(g, [-2]) == 0
        assert eval_reverse(g, [-2]) == 2

    def test_weighted_linf(self):
        """Test ||e_n| = 1 and ||-e_n| = 1/n."""
        g = weighted_linf(4)
        e4 = [0, 0, 0, 1]
        assert eval_norm(g, e4) == 1
        assert eval_reverse(g, e4) == Fraction(1, 4)

    def test_symmetric_norm(self):
        """Test the associated symmetric norm of the referee plane."""
        g = referee_plane()
        assert symmetric_norm(g, [Fraction(1, 2), -3]) == 3

    def test_quasi_distance(self):
        """Test that the quasi-metric is not symmetric."""
        g = upper_real()
        assert quasi_distance(g, [1], [0]) == 0
        assert quasi_distance(g, [0], [1]) == 1

    def test_dimension_mismatch(self):
        """Test the point length check."""
        with pytest.raises(InputError, match="dimension 1"):
            eval_norm(upper_real(), [1, 2])

    @settings(max_examples=60, deadline=None)
    @given(gauge_and_points())
    def test_subadditive(self, case):
        """Test ||x + y| <= ||x| + ||y|."""
        g, x, y = case
        total = [a + b for a, b in zip(x, y)]
        assert eval_norm(g, total) <= eval_norm(g, x) + eval_norm(g, y)

    @settings(max_examples=60, deadline=None)
    @given(gauge_and_points(count=1), st.fractions(min_value=0, max_value=20, max_denominator=7))
    def test_positively_homogeneous(self, case, lam):
        """Test ||lam x| = lam ||x| for lam >= 0."""
        g, x = case
        assert eval_norm(g, [lam * c for c in x]) == lam * eval_norm(g, x)

    @settings(max_examples=60, deadline=None)
    @given(gauge_and_points(count=1))
    def test_norm_below_symmetric(self, case):
        """Test ||x| <= ||x||_s and the symmetrized gauge."""
        g, x = case
        assert eval_norm(g, x) <= symmetric_norm(g, x)
        assert eval_norm(symmetrize(g), x) == symmetric_norm(g, x)


class TestCombinators:
    """Test cases for symmetrize, sum_with_symmetric and canonicalize."""

    def test_symmetrize(self):
        """Test that symmetrization appends the negated generators."""
        g = symmetrize(upper_real())
        assert g.generators[2:] == ((Fraction(0),), (Fraction(-1),))
        assert is_symmetric(g)

    @settings(max_examples=40, deadline=None)
    @given(gauge_and_points(count=1))
    def test_sum_with_symmetric(self, case):
        """Test ||x|_1 = ||x| + ||x||_s pointwise."""
        g, x = case
        summed = sum_with_symmetric(g)
        assert eval_norm(summed, x) == eval_norm(g, x) + symmetric_norm(g, x)

    def test_sum_is_t1(self):
        """Test that summing with the symmetric norm removes degeneracy."""
        summed = sum_with_symmetric(upper_real(), canonical=True)
        assert eval_norm(summed, [-1]) == 1
        assert eval_norm(summed, [1]) == 2
        assert set(summed.generators) == {(Fraction(2),), (Fraction(-1),)}

    @pytest.mark.parametrize(
        "g, expected",
        [
            (referee_plane(), Fraction(1, 2)),
            (weighted_linf(2), Fraction(3, 4)),
            (weighted_linf(3), Fraction(2, 3)),
        ],
    )
    def test_sum_index_in_open_interval(self, g, expected):
        """Test that the sum gauge of an asymmetric gauge has index strictly inside (0, 1)."""
        c = index(sum_with_symmetric(g, canonical=True)).c
        assert c == expected
        assert 0 < c < 1

    def test_canonicalize(self):
        """Test removal of duplicate and dominated generators."""
        g = new_gauge(1, [[1], [1], [0], [-1], [Fraction(1, 2)]])
        reduced = canonicalize(g)
        assert set(reduced.generators) == {(Fraction(1),), (Fraction(-1),)}
        for x in ([3], [-2], [Fraction(1, 3)]):
            assert eval_norm(reduced, x) == eval_norm(g, x)

    def test_is_symmetric(self):
        """Test symmetry detection."""
        assert is_symmetric(linf_sym(3))
        assert not is_symmetric(weighted_linf(2))
        assert not is_symmetric(upper_real())

    def test_unit_ball_rows(self):
        """Test that the unit ball has one row (a_i, 1) per generator."""
        ball = unit_ball(referee_plane())
        assert ball.bounds == (1, 1, 1)
        assert ball.normals == referee_plane().generators


if __name__ == "__main__":
    pytest.main([__file__])
