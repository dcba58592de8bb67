"""
Symmetry Module

Index of symmetry, reverse supremum, T1 detection and type classification.

The index of symmetry is c(X) = inf { ||-x| : ||x| = 1 }. For a polyhedral
gauge the unit sphere is the union of the facets {<a_i, x> = 1, <a_j, x> <= 1},
so c(X) is the smallest optimum of one LP per generator and is always attained.

Available Functions:
    - index(g): (c, minimizer) from the facet LPs
    - sup_reverse(g): sup of ||-x| over the unit sphere, with a certificate
    - check_identity(g): sup_reverse * c == 1 (requires c > 0)
    - is_t1(g): T1 flag with a nonzero x with ||x| = 0 when it fails
    - ball_is_bounded(g): Boundedness of the closed unit ball
    - classify(g): SpaceType I or III (type II is impossible here)
    - symmetry_report(g): Every quantity above, cross-checked
    - equivalence_constants(g): (c, 1) with c ||x||_s <= ||x| <= ||x||_s

Available Classes:
    - SpaceType: Types I, II and III
    - SymmetryIndex: Result of index
    - SymmetryReport: Result of symmetry_report
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, NamedTuple, Optional, Tuple

from .errors import InvariantViolation, PreconditionError
from .gauge import PolyhedralGauge, eval_norm, eval_reverse, unit_ball
from .polyhedra import HPolyhedron, LpStatus, lp_solve, recession_direction, support_value
from .rationals import Certificate, ExtendedRational, Vector, format_rational, format_vector

logger = logging.getLogger(__name__)


class SpaceType(Enum):
    """Type I: c > 0. Type II: c = 0 but T1. Type III: not T1."""

    I = "I"
    II = "II"
    III = "III"


class SymmetryIndex(NamedTuple):
    c: Fraction
    minimizer: Vector


@dataclass(frozen=True)
class SymmetryReport:
    """
    Index of symmetry and classification of a gauge, with certificates.

    Attributes:
        c (Fraction): Index of symmetry, in [0, 1]
        minimizer (Vector): Point with ||x| = 1 and ||-x| = c
        sup_reverse (ExtendedRational): sup of ||-x| over the unit sphere
        maximizer_or_ray (Certificate): Attaining sphere point, or a ray along
            which ||-x| grows without bound inside the ball
        t1 (bool): Whether ||x| > 0 for every x != 0
        t1_certificate (Optional[Vector]): Nonzero x with ||x| = 0 when not T1
        bounded_ball (bool): Whether the closed unit ball is bounded
        space_type (SpaceType): I or III
    """

    c: Fraction
    minimizer: Vector
    sup_reverse: ExtendedRational
    maximizer_or_ray: Certificate
    t1: bool
    t1_certificate: Optional[Vector]
    bounded_ball: bool
    space_type: SpaceType


def _facet_program(g: PolyhedralGauge, i: int) -> HPolyhedron:
    """
    Feasible set of the facet LP for generator i in variables (x, t):
    <-a_j, x> <= t, <a_i, x> = 1 and <a_j, x> <= 1 for every j.
    """
    zero, one = Fraction(0), Fraction(1)
    a_i = g.generators[i]
    rows: List[Tuple[Vector, Fraction]] = []
    for a in g.generators:
        rows.append((tuple(-c for c in a) + (-one,), zero))
    rows.append((a_i + (zero,), one))
    rows.append((tuple(-c for c in a_i) + (zero,), -one))
    for a in g.generators:
        rows.append((a + (zero,), one))
    return HPolyhedron(g.dim + 1, tuple(rows))


def _least_l1_point(g: PolyhedralGauge, i: int, c: Fraction) -> Vector:
    """The point of least l1 norm on facet i with ||-x| <= c."""
    n = g.dim
    zero, one = Fraction(0), Fraction(1)
    pad = (zero,) * n
    rows: List[Tuple[Vector, Fraction]] = []
    for a in g.generators:
        rows.append((tuple(-x for x in a) + pad, c))
        rows.append((a + pad, one))
    a_i = g.generators[i]
    rows.append((tuple(-x for x in a_i) + pad, -one))
    for k in range(n):
        unit = tuple(one if j == k else zero for j in range(n))
        rows.append((unit + tuple(-u for u in unit), zero))
        rows.append((tuple(-u for u in unit) + tuple(-u for u in unit), zero))
    objective = pad + (one,) * n
    outcome = lp_solve(objective, "min", HPolyhedron(2 * n, tuple(rows)))
    if outcome.status is not LpStatus.OPTIMAL or outcome.point is None:
        raise InvariantViolation(f"optimal face of facet {i} is empty ({outcome.status.value})")
    return outcome.point[:n]


def index(g: PolyhedralGauge) -> SymmetryIndex:
    """
    Compute the index of symmetry c(X) exactly with an attaining point.

    One LP per generator minimizes ||-x| over that generator's facet of the
    unit sphere; infeasible facets (generators never active at level 1) are
    skipped. Among facets attaining the minimum the lowest generator index
    wins, and inside it the point of least l1 norm is returned.

    Args:
        g (PolyhedralGauge): The gauge

    Returns:
        SymmetryIndex: (c, minimizer) with eval_norm(minimizer) = 1 and
        eval_reverse(minimizer) = c

    Raises:
        InvariantViolation: If the minimizer fails re-verification

    Example:
        >>> from asymgauge.spaces import weighted_linf
        >>> index(weighted_linf(3)).c
        Fraction(1, 3)
    """
    objective = (Fraction(0),) * g.dim + (Fraction(1),)
    best: Optional[Fraction] = None
    best_facet = -1
    for i in range(len(g.generators)):
        outcome = lp_solve(objective, "min", _facet_program(g, i))
        if outcome.status is LpStatus.INFEASIBLE:
            logger.debug("facet %d of %s is empty, skipped", i, g.label or "gauge")
            continue
        if outcome.status is LpStatus.UNBOUNDED or outcome.value is None:
            raise InvariantViolation(f"facet LP {i} is unbounded below")
        if best is None or outcome.value < best:
            best, best_facet = outcome.value, i
    if best is None:
        raise InvariantViolation("the unit sphere has no facet")
    minimizer = _least_l1_point(g, best_facet, best)
    if eval_norm(g, minimizer) != 1 or eval_reverse(g, minimizer) != best:
        raise InvariantViolation(
            f"minimizer {format_vector(minimizer)} does not attain c = {format_rational(best)}"
        )
    if not 0 <= best <= 1:
        raise InvariantViolation(f"index {format_rational(best)} outside [0, 1]")
    logger.debug("index %s attained on facet %d", format_rational(best), best_facet)
    return SymmetryIndex(best, minimizer)


def sup_reverse(g: PolyhedralGauge) -> Tuple[ExtendedRational, Certificate]:
    """
    Compute sup { ||-x| : ||x| = 1 }.

    When the ball is bounded this is max_j of the support value of -a_j over
    the ball, attained at a sphere point. Otherwise it is +inf and the
    certificate is a recession ray r of the ball with ||-r| > 0.

    Returns:
        Tuple[ExtendedRational, Certificate]: The value with a sphere point or ray

    Example:
        >>> from asymgauge.spaces import upper_real
        >>> value, cert = sup_reverse(upper_real())
        >>> str(value), str(cert)
        ('+inf', 'ray -1')
    """
    ball = unit_ball(g)
    ray = recession_direction(ball)
    if ray is not None:
        if eval_reverse(g, ray) <= 0:
            raise InvariantViolation(f"recession ray {format_vector(ray)} has ||-r| = 0")
        return ExtendedRational.infinity(), Certificate("ray", ray, "||-x| unbounded on the ball")
    best: Optional[Fraction] = None
    best_point: Vector = ()
    for a in g.generators:
        value, certificate = support_value(ball, tuple(-c for c in a))
        if not value.is_finite:
            raise InvariantViolation("support value diverges on a ball without recession rays")
        if best is None or value.finite() > best:
            best, best_point = value.finite(), certificate.vector
    assert best is not None
    scale = eval_norm(g, best_point)
    if scale <= 0:
        raise InvariantViolation(f"maximizer {format_vector(best_point)} has ||x| = 0")
    point = tuple(c / scale for c in best_point)
    if eval_reverse(g, point) != best:
        raise InvariantViolation(f"sphere point {format_vector(point)} does not attain the supremum")
    return ExtendedRational(best), Certificate("point", point, "sphere point attaining sup ||-x|")


def check_identity(g: PolyhedralGauge) -> bool:
    """
    Check (sup ||-x|) * (inf ||-x|) = 1 over the unit sphere exactly.

    Raises:
        PreconditionError: If c(X) = 0
    """
    c = index(g).c
    if c == 0:
        raise PreconditionError("the product identity requires c(X) > 0, got c = 0")
    value, _ = sup_reverse(g)
    if not value.is_finite:
        raise InvariantViolation("c(X) > 0 but the reverse supremum diverges")
    return value.finite() * c == 1


def is_t1(g: PolyhedralGauge) -> Tuple[bool, Optional[Certificate]]:
    """
    Decide whether ||x| > 0 for every x != 0.

    Returns:
        Tuple[bool, Optional[Certificate]]: (True, None), or (False, d) with
        d != 0 and ||d| = 0

    Example:
        >>> from asymgauge.spaces import referee_plane
        >>> is_t1(referee_plane())[1].vector
        (Fraction(0, 1), Fraction(-1, 1))
    """
    d = recession_direction(unit_ball(g))
    if d is None:
        return True, None
    if eval_norm(g, d) != 0:
        raise InvariantViolation(f"recession direction {format_vector(d)} has ||d| > 0")
    return False, Certificate("ray", d, "nonzero x with ||x| = 0")


def ball_is_bounded(g: PolyhedralGauge) -> bool:
    """Decide boundedness of the unit ball from the support values of +e_k and -e_k."""
    ball = unit_ball(g)
    for k in range(g.dim):
        for sign in (1, -1):
            direction = tuple(Fraction(sign if j == k else 0) for j in range(g.dim))
            value, _ = support_value(ball, direction)
            if not value.is_finite:
                return False
    return True


def symmetry_report(g: PolyhedralGauge) -> SymmetryReport:
    """
    Compute c, sup_reverse, T1 and boundedness independently and classify.

    In finite dimension c > 0, T1 and a bounded ball are equivalent, and a
    T1 space with c = 0 (type II) cannot occur. Any disagreement raises.

    Raises:
        InvariantViolation: If the three characterizations disagree
    """
    c, minimizer = index(g)
    reverse, certificate = sup_reverse(g)
    t1, t1_certificate = is_t1(g)
    bounded = ball_is_bounded(g)
    if t1 and c == 0:
        raise InvariantViolation("type II space in finite dimension")
    if (c > 0) != t1 or t1 != bounded or bounded != reverse.is_finite:
        raise InvariantViolation(
            f"inconsistent classification: c = {format_rational(c)}, t1 = {t1}, "
            f"bounded = {bounded}, sup_reverse = {reverse}"
        )
    return SymmetryReport(
        c=c,
        minimizer=minimizer,
        sup_reverse=reverse,
        maximizer_or_ray=certificate,
        t1=t1,
        t1_certificate=None if t1_certificate is None else t1_certificate.vector,
        bounded_ball=bounded,
        space_type=SpaceType.I if c > 0 else SpaceType.III,
    )


def classify(g: PolyhedralGauge) -> SpaceType:
    """
    Classify a gauge as type I (c > 0) or type III (not T1).

    Raises:
        InvariantViolation: If c = 0 and T1 co-occur

    Example:
        >>> from asymgauge.spaces import referee_plane
        >>> classify(referee_plane())
        <SpaceType.III: 'III'>
    """
    c = index(g).c
    t1, _ = is_t1(g)
    if t1 and c == 0:
        raise InvariantViolation("type II space in finite dimension")
    if c > 0 and not t1:
        raise InvariantViolation("c(X) > 0 in a space that is not T1")
    return SpaceType.I if c > 0 else SpaceType.III


def equivalence_constants(g: PolyhedralGauge) -> Tuple[Fraction, Fraction]:
    """
    Constants (c, 1) with c ||x||_s <= ||x| <= ||x||_s for every x.

    They make the identity an isomorphism onto the associated normed space.

    Raises:
        PreconditionError: If c(X) = 0
    """
    c = index(g).c
    if c == 0:
        raise PreconditionError("no equivalence with the symmetric norm when c(X) = 0")
    return c, Fraction(1)


__all__ = [
    'SpaceType', 'SymmetryIndex', 'SymmetryReport', 'index', 'sup_reverse',
    'check_identity', 'is_t1', 'ball_is_bounded', 'classify', 'symmetry_report',
    'equivalence_constants'
]
