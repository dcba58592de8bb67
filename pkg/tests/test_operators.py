"""
Tests for asymmetric operator norms, witnesses and perturbations.
"""

from fractions import Fraction

import numpy as np
import pytest

from asymgauge.dual import flat_norm
from asymgauge.errors import InputError, PreconditionError
from asymgauge.gauge import eval_norm
from asymgauge.operators import (
    add,
    apply,
    asymmetry_blowup,
    is_continuous,
    lc_is_vector_space,
    lc_norm,
    lc_supremum,
    ls_norm,
    negate,
    new_operator,
    nonreversible_witness,
    operator_space_gauge,
    perturb_nonsymmetric,
    random_continuous_operator,
    rank_one,
    scale,
    witness_ingredients,
)
from asymgauge.spaces import fixture, linf_sym, referee_plane, sup_gauge, upper_real, weighted_linf
from asymgauge.symmetry import index

EPSILONS = [Fraction(1), Fraction(1, 10), Fraction(1, 1000)]


class TestOperatorAlgebra:
    """Test cases for construction and arithmetic."""

    def test_shape_and_apply(self):
        """Test evaluation of T(x)."""
        T = new_operator([[0, 1]], referee_plane(), upper_real())
        assert T.shape == (1, 2)
        assert apply(T, [5, "-1/2"]) == (Fraction(-1, 2),)

    def test_dimension_checks(self):
        """Test that rows and columns must match the gauges."""
        with pytest.raises(InputError, match="codomain has dimension 1"):
            new_operator([[0, 1], [1, 0]], referee_plane(), upper_real())
        with pytest.raises(InputError, match="domain has dimension 2"):
            new_operator([[1]], referee_plane(), upper_real())

    def test_arithmetic(self):
        """Test negate, scale and add."""
        T = new_operator([[2]], upper_real(), upper_real())
        assert negate(T).matrix == ((Fraction(-2),),)
        assert scale(T, "1/2").matrix == ((Fraction(1),),)
        assert add(T, T).matrix == ((Fraction(4),),)

    def test_add_needs_same_spaces(self):
        """Test that sums across spaces are refused."""
        S = new_operator([[1]], upper_real(), upper_real())
        T = new_operator([[1]], linf_sym(1), upper_real())
        with pytest.raises(InputError, match="different spaces"):
            add(S, T)


class TestOperatorNorms:
    """Test cases for lc_norm and ls_norm."""

    def test_referee_to_upper_real(self):
        """Test ||(0, 1)|_Lc = 1 from the referee plane to the upper real line."""
        T = new_operator([[0, 1]], referee_plane(), upper_real())
        report = lc_norm(T)
        assert str(report.lc_norm) == "1"
        assert report.attaining_point_or_ray.kind == "point"
        assert report.ls_norm == 1

    def test_discontinuous(self):
        """Test +inf with a discontinuity ray for -Id on the upper real line."""
        T = new_operator([[-1]], upper_real(), upper_real())
        report = lc_norm(T)
        assert not report.lc_norm.is_finite
        assert str(report.attaining_point_or_ray) == "ray -1"
        assert report.ls_norm == 1
        assert is_continuous(T) == (False, report.attaining_point_or_ray)

    def test_ls_below_lc(self):
        """Test ||T||_Ls <= ||T|_Lc on a type I domain."""
        T = new_operator([[1, -2], [3, 1]], weighted_linf(2), linf_sym(2))
        value, _ = lc_supremum(T)
        assert ls_norm(T) <= value.finite()

    def test_operator_inequalities(self):
        """Test c ||T|_Lc <= ||-T|_Lc <= ||T|_Lc / c with c = c(X)."""
        X = weighted_linf(3)
        T = new_operator([[1, -1, 2]], X, upper_real())
        c = index(X).c
        forward = lc_supremum(T)[0].finite()
        backward = lc_supremum(negate(T))[0].finite()
        assert c * forward <= backward <= forward / c


class TestRankOne:
    """Test cases for the embedding p -> p(x)e."""

    def test_isometry(self):
        """Test ||p(x)e|_Lc = ||p|_b."""
        T = rank_one([1, 2], [1], referee_plane(), upper_real())
        assert T.matrix == ((Fraction(1), Fraction(2)),)
        assert lc_supremum(T)[0] == flat_norm(referee_plane(), [1, 2])[0]

    def test_bad_direction(self):
        """Test that e must satisfy ||e| = 1 and ||-e| = 0."""
        with pytest.raises(InputError, match="needs \\|\\|e\\| = 1"):
            rank_one([1], [2], upper_real(), upper_real())
        with pytest.raises(InputError, match="needs"):
            rank_one([1], [1], upper_real(), linf_sym(1))


class TestWitness:
    """Test cases for nonreversible_witness."""

    def test_upper_real(self):
        """Test the witness [[1]] with the discontinuity ray -1."""
        T = nonreversible_witness(upper_real(), upper_real())
        assert T.matrix == ((Fraction(1),),)
        value, ray = lc_supremum(negate(T))
        assert not value.is_finite
        assert ray.vector == (Fraction(-1),)

    def test_ingredients(self):
        """Test p and e for the referee plane into the upper real line."""
        p, e = witness_ingredients(referee_plane(), upper_real())
        assert p == (Fraction(0), Fraction(1))
        assert e == (Fraction(1),)

    def test_hypotheses(self):
        """Test the precondition message."""
        with pytest.raises(PreconditionError, match="witness hypotheses not met"):
            nonreversible_witness(weighted_linf(2), upper_real())
        with pytest.raises(PreconditionError, match="witness hypotheses not met"):
            nonreversible_witness(upper_real(), linf_sym(1))


class TestVectorSpaceDecision:
    """Test cases for lc_is_vector_space."""

    def test_referee_into_symmetric(self):
        """Test that a T1 codomain makes L_c a vector space."""
        assert lc_is_vector_space(referee_plane(), linf_sym(2), trials=100)

    def test_referee_into_upper_real(self):
        """Test that two non-T1 spaces break the vector space structure."""
        assert not lc_is_vector_space(referee_plane(), upper_real())

    def test_t1_domain(self):
        """Test a T1 domain with a non-T1 codomain."""
        assert lc_is_vector_space(weighted_linf(2), upper_real(), trials=20)

    def test_random_operators_are_continuous(self):
        """Test that sampled operators lie in L_c."""
        rng = np.random.default_rng(7)
        for X, Y in [(referee_plane(), upper_real()), (sup_gauge(3), referee_plane())]:
            for _ in range(10):
                assert is_continuous(random_continuous_operator(X, Y, rng))[0]

    @pytest.mark.parametrize("X", [linf_sym(9), weighted_linf(9)], ids=["linf_sym", "weighted_linf"])
    def test_domain_beyond_enumeration_caps(self, X):
        """Test a nine-dimensional domain, past the vertex enumeration dimension cap."""
        assert lc_is_vector_space(X, upper_real(), trials=1)

    def test_random_operator_high_dimension(self):
        """Test sampling from a nine-dimensional space into the upper real line."""
        rng = np.random.default_rng(3)
        T = random_continuous_operator(weighted_linf(9), upper_real(), rng)
        assert len(T.matrix) == 1 and len(T.matrix[0]) == 9
        assert is_continuous(T)[0]


class TestPerturbation:
    """Test cases for perturb_nonsymmetric."""

    @pytest.mark.parametrize("eps", EPSILONS)
    def test_upper_real(self, eps):
        """Test the perturbation of a continuous H on the upper real line."""
        H = new_operator([[2]], upper_real(), upper_real())
        T = perturb_nonsymmetric(H, eps)
        assert T.matrix == ((eps,),)
        assert lc_supremum(T)[0].finite() <= eps
        assert not is_continuous(negate(add(H, T)))[0]

    @pytest.mark.parametrize("seed", range(50))
    def test_random_continuous(self, seed):
        """Test perturbations of random continuous operators."""
        rng = np.random.default_rng(seed)
        X = upper_real() if seed % 2 == 0 else referee_plane()
        H = random_continuous_operator(X, upper_real(), rng)
        for eps in EPSILONS:
            T = perturb_nonsymmetric(H, eps)
            perturbed = add(H, T)
            assert lc_supremum(T)[0].finite() <= eps
            assert is_continuous(perturbed)[0]
            continuous, ray = is_continuous(negate(perturbed))
            assert not continuous
            assert eval_norm(X, ray.vector) == 0

    def test_nonpositive_eps(self):
        """Test that eps must be positive."""
        H = new_operator([[1]], upper_real(), upper_real())
        with pytest.raises(InputError, match="eps must be positive"):
            perturb_nonsymmetric(H, 0)

    def test_discontinuous_h(self):
        """Test that H must be continuous."""
        H = new_operator([[-1]], upper_real(), upper_real())
        with pytest.raises(PreconditionError, match="H must be continuous"):
            perturb_nonsymmetric(H, Fraction(1, 2))


class TestOperatorSpace:
    """Test cases for operator_space_gauge."""

    def test_symmetric_line(self):
        """Test the gauge of L_c(|.|, upper real line)."""
        G = operator_space_gauge(linf_sym(1), upper_real())
        assert G.dim == 1
        assert eval_norm(G, [3]) == 3
        assert eval_norm(G, [-3]) == 3

    @pytest.mark.parametrize("X_name,Y", [
        ("weighted_linf:2", upper_real()),
        ("weighted_linf:2", linf_sym(2)),
        ("linf_sym:2", referee_plane()),
        ("weighted_linf:3", upper_real()),
    ])
    def test_index_and_norm(self, X_name, Y):
        """Test c(L_c(X, Y)) >= c(X) and agreement with lc_norm."""
        X = fixture(X_name)
        G = operator_space_gauge(X, Y)
        assert index(G).c >= index(X).c
        rng = np.random.default_rng(3)
        for _ in range(20):
            matrix = rng.integers(-4, 5, size=(Y.dim, X.dim)).tolist()
            T = new_operator(matrix, X, Y)
            assert eval_norm(G, T.flatten()) == lc_supremum(T)[0].finite()

    def test_requires_t1_domain(self):
        """Test the precondition c(X) > 0."""
        with pytest.raises(PreconditionError, match="c\\(X\\) > 0"):
            operator_space_gauge(upper_real(), upper_real())


class TestAsymmetryBlowup:
    """Test cases for the eps / c(X) lower bound."""

    @pytest.mark.parametrize("n", [2, 3, 5])
    def test_weighted_linf(self, n):
        """Test ||-T|_Lc >= eps n while ||T|_Lc <= eps."""
        eps = Fraction(1, 10)
        report = asymmetry_blowup(weighted_linf(n), upper_real(), eps)
        assert report.lower_bound == eps * n
        assert report.reverse_lc_norm >= report.lower_bound
        assert report.lc_norm <= eps

    def test_requires_non_t1_codomain(self):
        """Test the precondition on Y."""
        with pytest.raises(PreconditionError):
            asymmetry_blowup(weighted_linf(2), linf_sym(1), 1)


if __name__ == "__main__":
    pytest.main([__file__])
