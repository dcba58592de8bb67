"""
Operators Module

Linear operators between polyhedral asymmetric spaces. With codomain
generators b_j, ||Tx|_Y = max_j <T^t b_j, x>, so the asymmetric operator norm
||T|_Lc = sup { ||Tx|_Y : ||x|_X <= 1 } is a maximum of support values over
the domain ball, one LP per codomain generator.

Available Functions:
    - new_operator(matrix, domain, codomain): Validated operator construction
    - apply(T, x), negate(T), add(S, T), scale(T, factor): Operator algebra
    - lc_supremum(T): ||T|_Lc with an attaining point or a discontinuity ray
    - lc_norm(T): OpNormReport with both operator norms
    - ls_norm(T): Operator norm between the associated normed spaces
    - is_continuous(T): Continuity with a certificate
    - rank_one(p, e, domain, codomain): The operator x -> <p, x> e
    - random_continuous_operator(X, Y, rng): Sample an element of L_c(X, Y)
    - lc_is_vector_space(X, Y): Whether T in L_c always gives -T in L_c
    - witness_ingredients(X, Y): The functional p and direction e of the witness
    - nonreversible_witness(X, Y): T in L_c(X, Y) with -T outside
    - perturb_nonsymmetric(H, eps): eps p(x)e so that -(H + eps p(x)e) is discontinuous
    - operator_space_gauge(X, Y): ||.|_Lc as a gauge on flattened matrices
    - asymmetry_blowup(X, Y, eps): ||-eps p(x)e|_Lc >= eps / c(X) on T1 domains

Available Classes:
    - LinearOperator: A rational matrix with its domain and codomain gauges
    - OpNormReport: Result of lc_norm
    - BlowupReport: Result of asymmetry_blowup
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .dual import flat_norm, support_functional
from .errors import InputError, InvariantViolation, PreconditionError
from .gauge import (
    PolyhedralGauge,
    eval_norm,
    eval_reverse,
    new_gauge,
    symmetrize,
    unit_ball,
)
from .polyhedra import (
    DEFAULT_MAX_DIM,
    DEFAULT_MAX_ROWS,
    enumerate_vrep,
    null_space,
    recession_span,
    support_value,
)
from .rationals import (
    Certificate,
    ExtendedRational,
    RationalLike,
    Vector,
    dot,
    format_rational,
    format_vector,
    to_fraction,
    vector,
)
from .symmetry import index, is_t1

logger = logging.getLogger(__name__)

Matrix = Tuple[Vector, ...]


@dataclass(frozen=True)
class LinearOperator:
    """
    A linear map T(x) = matrix . x from (Q^n, domain) to (Q^m, codomain).

    Attributes:
        matrix (Matrix): m rows of n rationals
        domain (PolyhedralGauge): Gauge on Q^n
        codomain (PolyhedralGauge): Gauge on Q^m
    """

    matrix: Matrix
    domain: PolyhedralGauge
    codomain: PolyhedralGauge

    def __post_init__(self) -> None:
        if len(self.matrix) != self.codomain.dim:
            raise InputError(
                f"matrix has {len(self.matrix)} rows, codomain has dimension {self.codomain.dim}"
            )
        for r, row in enumerate(self.matrix):
            if len(row) != self.domain.dim:
                raise InputError(
                    f"matrix row {r} has {len(row)} entries, domain has dimension {self.domain.dim}"
                )

    @property
    def shape(self) -> Tuple[int, int]:
        return self.codomain.dim, self.domain.dim

    def transpose_apply(self, y: Sequence[Fraction]) -> Vector:
        """Return T^t y."""
        return tuple(
            sum((self.matrix[r][c] * y[r] for r in range(len(self.matrix))), Fraction(0))
            for c in range(self.domain.dim)
        )

    def flatten(self) -> Vector:
        """Entries in row-major order."""
        return tuple(entry for row in self.matrix for entry in row)


@dataclass(frozen=True)
class OpNormReport:
    """
    Both operator norms of T.

    Attributes:
        lc_norm (ExtendedRational): ||T|_Lc, +inf iff T is not continuous
        attaining_point_or_ray (Certificate): Ball point attaining the norm, or
            a ray r with ||r|_X = 0 and ||Tr|_Y > 0
        ls_norm (Fraction): Norm of T between the associated normed spaces
    """

    lc_norm: ExtendedRational
    attaining_point_or_ray: Certificate
    ls_norm: Fraction


@dataclass(frozen=True)
class BlowupReport:
    perturbation: LinearOperator
    lc_norm: Fraction
    reverse_lc_norm: Fraction
    lower_bound: Fraction


def new_operator(
    matrix: Sequence[Sequence[RationalLike]],
    domain: PolyhedralGauge,
    codomain: PolyhedralGauge,
) -> LinearOperator:
    """
    Build an operator from rational-like entries.

    Raises:
        InputError: On malformed entries or inconsistent dimensions

    Example:
        >>> from asymgauge.spaces import referee_plane, upper_real
        >>> new_operator([[0, 1]], referee_plane(), upper_real()).shape
        (1, 2)
    """
    rows = tuple(vector(row, f"matrix.{r}") for r, row in enumerate(matrix))
    return LinearOperator(rows, domain, codomain)


def apply(T: LinearOperator, x: Sequence[RationalLike]) -> Vector:
    """Evaluate T(x)."""
    point = vector(x, "x")
    if len(point) != T.domain.dim:
        raise InputError(f"point has {len(point)} coordinates, domain has dimension {T.domain.dim}")
    return tuple(dot(row, point) for row in T.matrix)


def negate(T: LinearOperator) -> LinearOperator:
    return LinearOperator(tuple(tuple(-c for c in row) for row in T.matrix), T.domain, T.codomain)


def scale(T: LinearOperator, factor: RationalLike) -> LinearOperator:
    f = to_fraction(factor, "factor")
    return LinearOperator(tuple(tuple(f * c for c in row) for row in T.matrix), T.domain, T.codomain)


def add(S: LinearOperator, T: LinearOperator) -> LinearOperator:
    """Sum of two operators with the same domain and codomain."""
    if S.domain != T.domain or S.codomain != T.codomain:
        raise InputError("operators act between different spaces")
    rows = tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(S.matrix, T.matrix))
    return LinearOperator(rows, S.domain, S.codomain)


def _norm_over_ball(
    T: LinearOperator, domain: PolyhedralGauge, codomain: PolyhedralGauge
) -> Tuple[ExtendedRational, Certificate]:
    ball = unit_ball(domain)
    best: Optional[Fraction] = None
    best_point: Vector = ()
    for b in codomain.generators:
        value, certificate = support_value(ball, T.transpose_apply(b))
        if not value.is_finite:
            return value, certificate
        if best is None or value.finite() > best:
            best, best_point = value.finite(), certificate.vector
    assert best is not None
    return ExtendedRational(best), Certificate("point", best_point, "ball point attaining the norm")


def lc_supremum(T: LinearOperator) -> Tuple[ExtendedRational, Certificate]:
    """
    Compute ||T|_Lc = max_j sup over the domain ball of <T^t b_j, x>.

    Returns:
        Tuple[ExtendedRational, Certificate]: The finite norm with an attaining
        ball point, or +inf with a ray r such that ||r|_X = 0 and ||Tr|_Y > 0

    Raises:
        InvariantViolation: If the certificate fails re-verification
    """
    value, certificate = _norm_over_ball(T, T.domain, T.codomain)
    if value.is_finite:
        image = apply(T, certificate.vector)
        if eval_norm(T.codomain, image) != value.finite():
            raise InvariantViolation(f"point {certificate} does not attain ||T|_Lc = {value}")
        return value, certificate
    ray = certificate.vector
    if eval_norm(T.domain, ray) != 0 or eval_norm(T.codomain, apply(T, ray)) <= 0:
        raise InvariantViolation(f"discontinuity ray {format_vector(ray)} fails re-verification")
    return value, Certificate("ray", ray, "||r|_X = 0 and ||Tr|_Y > 0")


def ls_norm(T: LinearOperator) -> Fraction:
    """
    Norm of T as a map between the associated normed spaces X_s and Y_s.

    Always finite: the symmetrized unit balls are bounded.
    """
    value, _ = _norm_over_ball(T, symmetrize(T.domain), symmetrize(T.codomain))
    return value.finite()


def lc_norm(T: LinearOperator) -> OpNormReport:
    """
    Compute the asymmetric operator norm with its certificate and the symmetric norm.

    Example:
        >>> from asymgauge.spaces import upper_real
        >>> report = lc_norm(new_operator([[-1]], upper_real(), upper_real()))
        >>> str(report.lc_norm), str(report.attaining_point_or_ray), report.ls_norm
        ('+inf', 'ray -1', Fraction(1, 1))
    """
    value, certificate = lc_supremum(T)
    symmetric = ls_norm(T)
    if value.is_finite and symmetric > value.finite():
        raise InvariantViolation(
            f"||T||_Ls = {format_rational(symmetric)} exceeds ||T|_Lc = {value}"
        )
    return OpNormReport(value, certificate, symmetric)


def is_continuous(T: LinearOperator) -> Tuple[bool, Optional[Certificate]]:
    """Return (True, None) when ||T|_Lc is finite, else (False, discontinuity ray)."""
    value, certificate = lc_supremum(T)
    if value.is_finite:
        return True, None
    return False, certificate


def rank_one(
    p: Sequence[RationalLike],
    e: Sequence[RationalLike],
    domain: PolyhedralGauge,
    codomain: PolyhedralGauge,
) -> LinearOperator:
    """
    Build x -> <p, x> e, an isometric copy of p inside L_c(X, Y).

    When ||e|_Y = 1 and ||-e|_Y = 0, ||<p, x> e|_Y = max(<p, x>, 0), so the
    operator norm equals ||p|_b. The equality is re-verified before returning.

    Raises:
        InputError: If e does not satisfy ||e| = 1 and ||-e| = 0

    Example:
        >>> from asymgauge.spaces import upper_real
        >>> rank_one([1], [1], upper_real(), upper_real()).matrix
        ((Fraction(1, 1),),)
    """
    functional = vector(p, "p")
    direction = vector(e, "e")
    if len(functional) != domain.dim or len(direction) != codomain.dim:
        raise InputError("p must live on the domain and e in the codomain")
    if eval_norm(codomain, direction) != 1 or eval_reverse(codomain, direction) != 0:
        raise InputError(
            f"the rank-one isometry needs ||e| = 1 and ||-e| = 0, got e = {format_vector(direction)}"
        )
    matrix = tuple(tuple(er * pc for pc in functional) for er in direction)
    T = LinearOperator(matrix, domain, codomain)
    expected, _ = flat_norm(domain, functional)
    actual, _ = lc_supremum(T)
    if actual != expected:
        raise InvariantViolation(f"||p(x)e|_Lc = {actual} differs from ||p|_b = {expected}")
    return T


def _random_integers(rng: np.random.Generator, rows: int, cols: int, bound: int) -> List[List[int]]:
    return rng.integers(-bound, bound + 1, size=(rows, cols)).tolist()


def random_continuous_operator(
    X: PolyhedralGauge, Y: PolyhedralGauge, rng: np.random.Generator, bound: int = 5
) -> LinearOperator:
    """
    Sample a continuous operator from X to Y.

    The sample is R B^t, whose rows are orthogonal to the recession cone of
    X's ball (R random, B a basis of the orthogonal complement), plus
    sum_k (-r_k) p_k^t over recession directions r_k spanning the recession
    cone of Y's ball, with random p_k in X^b. Both parts are continuous, hence
    so is their sum. No vertex enumeration is involved, so every dimension works.

    Args:
        X (PolyhedralGauge): Domain
        Y (PolyhedralGauge): Codomain
        rng (np.random.Generator): Source of randomness
        bound (int, optional): Entry bound of the random integer data. Defaults to 5

    Returns:
        LinearOperator: An element of L_c(X, Y)
    """
    n, m = X.dim, Y.dim
    basis = null_space(recession_span(unit_ball(X)), n)
    matrix = [[Fraction(0)] * n for _ in range(m)]
    if basis:
        weights = _random_integers(rng, m, len(basis), bound)
        for r in range(m):
            for k, b in enumerate(basis):
                for c in range(n):
                    matrix[r][c] += weights[r][k] * b[c]
    for ray in recession_span(unit_ball(Y)):
        coefficients = rng.integers(0, bound + 1, size=len(X.generators)).tolist()
        p = [
            sum((coefficients[i] * a[c] for i, a in enumerate(X.generators)), Fraction(0))
            for c in range(n)
        ]
        for r in range(m):
            for c in range(n):
                matrix[r][c] += -ray[r] * p[c]
    return LinearOperator(tuple(tuple(row) for row in matrix), X, Y)


def lc_is_vector_space(
    X: PolyhedralGauge, Y: PolyhedralGauge, trials: int = 100, seed: int = 0
) -> bool:
    """
    Decide whether L_c(X, Y) is a vector space: false iff c(X) = c(Y) = 0.

    When false, a nonreversible witness is built and verified. When true,
    ``trials`` random continuous operators T are checked to have -T continuous.

    Raises:
        InvariantViolation: If the randomized confirmation finds a counterexample
    """
    if index(X).c == 0 and index(Y).c == 0:
        nonreversible_witness(X, Y)
        return False
    rng = np.random.default_rng(seed)
    for trial in range(trials):
        T = random_continuous_operator(X, Y, rng)
        continuous, _ = is_continuous(T)
        reverse_continuous, ray = is_continuous(negate(T))
        if not continuous or not reverse_continuous:
            raise InvariantViolation(
                f"trial {trial}: T = {T.matrix} breaks the vector-space property (ray {ray})"
            )
    logger.debug("confirmed -T continuous for %d random operators", trials)
    return True


def _check_witness_hypotheses(X: PolyhedralGauge, Y: PolyhedralGauge) -> None:
    c = index(X).c
    y_t1, _ = is_t1(Y)
    if c != 0 or y_t1:
        raise PreconditionError(
            "witness hypotheses not met: need c(X) = 0 and Y not T1, "
            f"got c(X) = {format_rational(c)} and Y {'T1' if y_t1 else 'not T1'}"
        )


def witness_ingredients(X: PolyhedralGauge, Y: PolyhedralGauge) -> Tuple[Vector, Vector]:
    """
    Return (p, e): p supports a = -d / ||-d|_X at level 1, where d != 0 has
    ||d|_X = 0, and e = -d_Y / ||-d_Y|_Y satisfies ||e|_Y = 1, ||-e|_Y = 0.

    Raises:
        PreconditionError: Unless c(X) = 0 and Y is not T1
    """
    _check_witness_hypotheses(X, Y)
    _, x_certificate = is_t1(X)
    _, y_certificate = is_t1(Y)
    assert x_certificate is not None and y_certificate is not None
    d = x_certificate.vector
    level = eval_reverse(X, d)
    a = tuple(-c / level for c in d)
    p = support_functional(X, a).p
    d_y = y_certificate.vector
    e = tuple(-c / eval_reverse(Y, d_y) for c in d_y)
    return p, e


def nonreversible_witness(X: PolyhedralGauge, Y: PolyhedralGauge) -> LinearOperator:
    """
    Build T in L_c(X, Y) with -T not in L_c(X, Y).

    Realizes the constructive case of the non-vector-space argument: with
    ||a|_X = 1 and ||-a|_X = 0, a support functional p at a and a direction e
    of Y with ||e| = 1 and ||-e| = 0, the operator p(x)e is continuous while
    its negative is discontinuous along -a.

    Raises:
        PreconditionError: "witness hypotheses not met" unless
            c(X) = 0 and Y is not T1
        InvariantViolation: If the result fails re-verification

    Example:
        >>> from asymgauge.spaces import upper_real
        >>> nonreversible_witness(upper_real(), upper_real()).matrix
        ((Fraction(1, 1),),)
    """
    p, e = witness_ingredients(X, Y)
    T = rank_one(p, e, X, Y)
    continuous, _ = is_continuous(T)
    reverse_continuous, _ = is_continuous(negate(T))
    if not continuous or reverse_continuous:
        raise InvariantViolation(f"witness {T.matrix} fails re-verification")
    return T


def perturb_nonsymmetric(H: LinearOperator, eps: RationalLike) -> LinearOperator:
    """
    Build T = eps p(x)e with ||T|_Lc <= eps such that -(H + T) is discontinuous.

    Every continuous H is thus within eps of an operator whose negative is
    discontinuous.

    Args:
        H (LinearOperator): A continuous operator
        eps (RationalLike): Positive rational

    Returns:
        LinearOperator: The perturbation T

    Raises:
        InputError: If eps <= 0
        PreconditionError: If H is discontinuous or the witness hypotheses fail
    """
    epsilon = to_fraction(eps, "eps")
    if epsilon <= 0:
        raise InputError(f"eps must be positive, got {format_rational(epsilon)}")
    continuous, ray = is_continuous(H)
    if not continuous:
        raise PreconditionError(f"H must be continuous, it diverges along {ray}")
    p, e = witness_ingredients(H.domain, H.codomain)
    T = scale(rank_one(p, e, H.domain, H.codomain), epsilon)
    size, _ = lc_supremum(T)
    perturbed = add(H, T)
    if not size <= ExtendedRational(epsilon):
        raise InvariantViolation(f"||T|_Lc = {size} exceeds eps = {format_rational(epsilon)}")
    if not is_continuous(perturbed)[0] or is_continuous(negate(perturbed))[0]:
        raise InvariantViolation(f"perturbed operator {perturbed.matrix} fails re-verification")
    return T


def operator_space_gauge(
    X: PolyhedralGauge,
    Y: PolyhedralGauge,
    max_dim: int = DEFAULT_MAX_DIM,
    max_rows: int = DEFAULT_MAX_ROWS,
) -> PolyhedralGauge:
    """
    Express ||T|_Lc as a polyhedral gauge on row-major flattened m x n matrices.

    With a bounded domain ball, ||T|_Lc = max over codomain generators b_j and
    ball vertices v of <b_j, T v>, which is linear in the entries of T with
    coefficient vector b_j (x) v.

    Raises:
        PreconditionError: If c(X) = 0 (the domain ball is unbounded)
        CapacityError: If X exceeds the vertex enumeration caps
    """
    if index(X).c == 0:
        raise PreconditionError("the operator space is a gauge space only when c(X) > 0")
    vertices = enumerate_vrep(unit_ball(X), max_dim=max_dim, max_rows=max_rows).vertices
    generators = [
        [b_r * v_c for b_r in b for v_c in v]
        for b in Y.generators
        for v in vertices
    ]
    label = f"L_c({X.label or 'X'}, {Y.label or 'Y'})"
    return new_gauge(X.dim * Y.dim, generators, label)


def asymmetry_blowup(X: PolyhedralGauge, Y: PolyhedralGauge, eps: RationalLike) -> BlowupReport:
    """
    On a T1 domain, show ||-eps p(x)e|_Lc >= eps / c(X) for p supporting the index minimizer.

    Along the weighted l-infinity family c(X) = 1/n, so the reverse norm of
    these eps-small operators grows without bound as n increases.

    Raises:
        PreconditionError: If c(X) = 0 or Y is T1
    """
    epsilon = to_fraction(eps, "eps")
    if epsilon <= 0:
        raise InputError(f"eps must be positive, got {format_rational(epsilon)}")
    c, minimizer = index(X)
    y_t1, y_certificate = is_t1(Y)
    if c == 0 or y_t1 or y_certificate is None:
        raise PreconditionError("asymmetry blow-up needs c(X) > 0 and Y not T1")
    p = support_functional(X, minimizer).p
    d_y = y_certificate.vector
    e = tuple(-x / eval_reverse(Y, d_y) for x in d_y)
    T = scale(rank_one(p, e, X, Y), epsilon)
    forward, _ = lc_supremum(T)
    backward, _ = lc_supremum(negate(T))
    bound = epsilon / c
    if backward.finite() < bound:
        raise InvariantViolation(f"||-T|_Lc = {backward} below eps / c = {format_rational(bound)}")
    return BlowupReport(T, forward.finite(), backward.finite(), bound)


__all__ = [
    'Matrix', 'LinearOperator', 'OpNormReport', 'BlowupReport', 'new_operator',
    'apply', 'negate', 'scale', 'add', 'lc_supremum', 'lc_norm', 'ls_norm',
    'is_continuous', 'rank_one', 'random_continuous_operator',
    'lc_is_vector_space', 'witness_ingredients', 'nonreversible_witness',
    'perturb_nonsymmetric', 'operator_space_gauge', 'asymmetry_blowup'
]
