"""
Dual Module

The flat dual X^b: linear functionals continuous from (X, ||.|) to the upper
real line. For a polyhedral gauge X^b is the convex cone generated by the
generators, and ||p|_b = sup { <p, x> : ||x| <= 1 } is finite exactly on it.

Available Functions:
    - flat_norm(g, p): ||p|_b with an attaining point or a divergence ray
    - star_norm(g, p): ||p||_*, the dual norm of the associated normed space
    - in_dual_cone(g, p): Membership in X^b with a certificate
    - support_functional(g, x0): p in X^b with ||p|_b = 1 and <p, x0> = ||x0|
    - dual_cone_full(g): Whether X^b is the whole dual space
    - nonreversible_functional(g): p in X^b with -p outside, when X is not T1
    - dual_equivalence_bounds(g, p): c ||p|_b <= ||-p|_b <= ||p|_b / c

Available Classes:
    - DualFunctional: A functional with its flat norm
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .errors import InputError, InvariantViolation, PreconditionError
from .gauge import PolyhedralGauge, eval_norm, symmetrize, unit_ball
from .polyhedra import positively_spans, support_value
from .rationals import (
    Certificate,
    ExtendedRational,
    RationalLike,
    Vector,
    dot,
    format_vector,
    vector,
)
from .symmetry import index, is_t1

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DualFunctional:
    """
    A linear functional together with its flat norm.

    Attributes:
        p (Vector): Coefficients of the functional
        flat_norm (ExtendedRational): ||p|_b, finite iff p lies in X^b
    """

    p: Vector
    flat_norm: ExtendedRational

    @property
    def continuous(self) -> bool:
        return self.flat_norm.is_finite


def _functional(g: PolyhedralGauge, p: Sequence[RationalLike]) -> Vector:
    functional = vector(p, "p")
    if len(functional) != g.dim:
        raise InputError(
            f"functional has {len(functional)} coordinates, gauge has dimension {g.dim}"
        )
    return functional


def flat_norm(g: PolyhedralGauge, p: Sequence[RationalLike]) -> Tuple[ExtendedRational, Certificate]:
    """
    Compute ||p|_b = sup of <p, x> over the unit ball.

    Args:
        g (PolyhedralGauge): The space
        p (Sequence[RationalLike]): The functional

    Returns:
        Tuple[ExtendedRational, Certificate]: A finite value with an attaining
        ball point, or +inf with a ray r such that <p, r> > 0 and ||r| = 0

    Raises:
        InputError: On dimension mismatch

    Example:
        >>> from asymgauge.spaces import upper_real
        >>> value, cert = flat_norm(upper_real(), [-1])
        >>> str(value), str(cert)
        ('+inf', 'ray -1')
    """
    functional = _functional(g, p)
    value, certificate = support_value(unit_ball(g), functional)
    if not value.is_finite and eval_norm(g, certificate.vector) != 0:
        raise InvariantViolation(
            f"divergence ray {format_vector(certificate.vector)} has positive norm"
        )
    return value, certificate


def star_norm(g: PolyhedralGauge, p: Sequence[RationalLike]) -> Fraction:
    """Dual norm ||p||_* = sup of <p, x> over the unit ball of the symmetrized gauge."""
    functional = _functional(g, p)
    value, _ = support_value(unit_ball(symmetrize(g)), functional)
    return value.finite()


def in_dual_cone(g: PolyhedralGauge, p: Sequence[RationalLike]) -> Tuple[bool, Certificate]:
    """
    Decide p in X^b.

    Returns:
        Tuple[bool, Certificate]: (True, attaining point) or (False, violating ray)

    Example:
        >>> from asymgauge.spaces import referee_plane
        >>> in_dual_cone(referee_plane(), [0, -1])[0]
        False
    """
    value, certificate = flat_norm(g, p)
    return value.is_finite, certificate


def support_functional(g: PolyhedralGauge, x0: Sequence[RationalLike]) -> DualFunctional:
    """
    Build p in X^b with ||p|_b = 1 and <p, x0> = ||x0|.

    The lowest-index generator active at x0 is returned; both properties are
    re-verified exactly.

    Args:
        g (PolyhedralGauge): The space
        x0 (Sequence[RationalLike]): A point with ||x0| > 0

    Returns:
        DualFunctional: The supporting functional

    Raises:
        PreconditionError: If ||x0| = 0

    Example:
        >>> from asymgauge.spaces import weighted_linf
        >>> support_functional(weighted_linf(3), [0, 1, 0]).p
        (Fraction(0, 1), Fraction(1, 1), Fraction(0, 1))
    """
    point = _functional(g, x0)
    level = eval_norm(g, point)
    if level == 0:
        raise PreconditionError(
            f"no support functional normalizes at x0 = {format_vector(point)}: ||x0| = 0"
        )
    active = next(a for a in g.generators if dot(a, point) == level)
    value, _ = flat_norm(g, active)
    if value != ExtendedRational(Fraction(1)) or dot(active, point) != level:
        raise InvariantViolation(f"support functional {format_vector(active)} fails re-verification")
    return DualFunctional(active, value)


def dual_cone_full(g: PolyhedralGauge) -> bool:
    """
    Decide X^b = (Q^n)*, i.e. the generators positively span the dual space.

    In finite dimension this holds exactly when X is T1, equivalently c(X) > 0.
    """
    return positively_spans(g.generators)


def nonreversible_functional(g: PolyhedralGauge) -> Tuple[DualFunctional, Certificate]:
    """
    Exhibit p in X^b with -p not in X^b, so X^b is not a vector space.

    With d != 0 and ||d| = 0, p supports x0 = -d; then <-p, d> = ||-d| > 0
    and d is a divergence ray for -p.

    Returns:
        Tuple[DualFunctional, Certificate]: p and the ray certifying -p outside X^b

    Raises:
        PreconditionError: If X is T1 (c(X) > 0)
    """
    t1, certificate = is_t1(g)
    if t1 or certificate is None:
        raise PreconditionError("X^b is a vector space when c(X) > 0")
    d = certificate.vector
    functional = support_functional(g, tuple(-c for c in d))
    reversed_value, ray = flat_norm(g, tuple(-c for c in functional.p))
    if reversed_value.is_finite:
        raise InvariantViolation(f"-p is continuous for p = {format_vector(functional.p)}")
    logger.debug("nonreversible functional %s along ray %s", functional.p, ray.vector)
    return functional, ray


def dual_equivalence_bounds(g: PolyhedralGauge, p: Sequence[RationalLike]) -> bool:
    """
    Check c ||p|_b <= ||-p|_b <= ||p|_b / c exactly.

    Raises:
        PreconditionError: If c(X) = 0
    """
    functional = _functional(g, p)
    c = index(g).c
    if c == 0:
        raise PreconditionError("dual equivalence bounds require c(X) > 0")
    forward, _ = flat_norm(g, functional)
    backward, _ = flat_norm(g, tuple(-x for x in functional))
    value, reverse = forward.finite(), backward.finite()
    return c * value <= reverse and reverse * c <= value


__all__ = [
    'DualFunctional', 'flat_norm', 'star_norm', 'in_dual_cone',
    'support_functional', 'dual_cone_full', 'nonreversible_functional',
    'dual_equivalence_bounds'
]
