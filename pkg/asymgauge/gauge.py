"""
Gauge Module

Polyhedral asymmetric norms ||x| = max_i <a_i, x> on Q^n, their axiom checks,
evaluations and combinators.

An asymmetric norm is positively homogeneous and subadditive (automatic for a
max of linear functionals), nonnegative (0 lies in conv{a_i}) and separating
(||x| = ||-x| = 0 only at x = 0, i.e. the a_i span Q^n).

Available Functions:
    - new_gauge(dim, generators, label): Validated gauge construction
    - eval_norm(g, x): ||x|
    - eval_reverse(g, x): ||-x|
    - symmetric_norm(g, x): ||x||_s = max(||x|, ||-x|)
    - quasi_distance(g, x, y): The induced quasi-metric ||y - x|
    - symmetrize(g): Gauge of the associated symmetric norm
    - sum_with_symmetric(g): Gauge of ||x| + ||x||_s
    - unit_ball(g): Closed unit ball as an H-polyhedron
    - canonicalize(g): Drop duplicate and dominated generators
    - is_symmetric(g): Exact test of ||x| = ||-x| for all x

Available Classes:
    - PolyhedralGauge: Immutable, validated max-of-linear asymmetric norm
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import AxiomError, InputError
from .polyhedra import HPolyhedron, LpStatus, lp_solve, null_space, rank
from .rationals import (
    RationalLike,
    Vector,
    dot,
    format_vector,
    scale_to_coprime,
    vector,
)

logger = logging.getLogger(__name__)

SpacePoint = Vector


@dataclass(frozen=True)
class PolyhedralGauge:
    """
    An asymmetric norm ||x| = max_i <a_i, x> on Q^dim.

    Construction validates both axioms that are not structural: positivity
    (0 in conv{a_i}, checked by LP) and separation (rank of the a_i equals dim).
    Redundant generators, including the zero functional, are allowed.

    Attributes:
        dim (int): Dimension of the space
        generators (Tuple[Vector, ...]): The linear functionals a_i
        label (str): Free-text name

    Example:
        >>> upper = PolyhedralGauge(1, ((Fraction(0),), (Fraction(1),)), "upper real line")
        >>> eval_norm(upper, [-2])
        Fraction(0, 1)
    """

    dim: int
    generators: Tuple[Vector, ...]
    label: str = ""

    def __post_init__(self) -> None:
        _validate_structure(self.dim, self.generators)
        _validate_positivity(self.dim, self.generators)
        _validate_separation(self.dim, self.generators)

    def __str__(self) -> str:
        name = self.label or "gauge"
        return f"{name} on Q^{self.dim} with {len(self.generators)} generators"


def _validate_structure(dim: int, generators: Sequence[Sequence[Fraction]]) -> None:
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise InputError(f"dimension must be a positive integer, got {dim!r}")
    if not generators:
        raise InputError("generator list must be nonempty")
    for i, a in enumerate(generators):
        if len(a) != dim:
            raise InputError(f"generator {i} has {len(a)} coordinates, expected {dim}")


def _validate_positivity(dim: int, generators: Sequence[Vector]) -> None:
    # 0 in conv{a_i} iff the system <a_i, x> <= -1 (all i) is infeasible
    system = HPolyhedron(dim, tuple((a, Fraction(-1)) for a in generators))
    outcome = lp_solve((Fraction(0),) * dim, "max", system)
    if outcome.status is not LpStatus.INFEASIBLE:
        assert outcome.point is not None
        witness = scale_to_coprime(outcome.point)
        raise AxiomError(
            f"not nonnegative: max_i <a_i, x> < 0 at x = {format_vector(witness)}",
            axiom="positivity",
            witness=witness,
        )


def _validate_separation(dim: int, generators: Sequence[Vector]) -> None:
    if rank(generators) < dim:
        witness = null_space(generators, dim)[0]
        raise AxiomError(
            "degenerate: nonzero x with ||x| = ||-x| = 0 at x = " + format_vector(witness),
            axiom="separation",
            witness=witness,
        )


def new_gauge(
    dim: int, generators: Sequence[Sequence[RationalLike]], label: str = ""
) -> PolyhedralGauge:
    """
    Build a validated polyhedral gauge.

    Args:
        dim (int): Dimension of the space
        generators (Sequence[Sequence[RationalLike]]): Linear functionals a_i
        label (str, optional): Free-text name. Defaults to ""

    Returns:
        PolyhedralGauge: The validated gauge

    Raises:
        InputError: If the list is empty or dimensions are inconsistent
        AxiomError: "not nonnegative" (positivity) or "degenerate" (separation)

    Example:
        >>> upper = new_gauge(1, [[0], [1]], "upper real line")
        >>> new_gauge(1, [[1]])
        Traceback (most recent call last):
        ...
        asymgauge.errors.AxiomError: not nonnegative: max_i <a_i, x> < 0 at x = -1
    """
    if isinstance(generators, (str, bytes)):
        raise InputError("generators must be a list of vectors")
    exact = tuple(vector(a, f"generators.{i}") for i, a in enumerate(generators))
    return PolyhedralGauge(dim, exact, label)


def _point(g: PolyhedralGauge, x: Sequence[RationalLike]) -> Vector:
    point = vector(x, "x")
    if len(point) != g.dim:
        raise InputError(f"point has {len(point)} coordinates, gauge has dimension {g.dim}")
    return point


def eval_norm(g: PolyhedralGauge, x: Sequence[RationalLike]) -> Fraction:
    """
    Evaluate ||x| = max_i <a_i, x>.

    Args:
        g (PolyhedralGauge): The gauge
        x (Sequence[RationalLike]): Point of Q^dim

    Returns:
        Fraction: A nonnegative rational; 0 is possible for x != 0 in non-T1 spaces

    Raises:
        InputError: On dimension mismatch

    Example:
        >>> eval_norm(new_gauge(1, [[0], [1]]), [3])
        Fraction(3, 1)
    """
    point = _point(g, x)
    return max(dot(a, point) for a in g.generators)


def eval_reverse(g: PolyhedralGauge, x: Sequence[RationalLike]) -> Fraction:
    """Evaluate ||-x|."""
    point = _point(g, x)
    return max(-dot(a, point) for a in g.generators)


def symmetric_norm(g: PolyhedralGauge, x: Sequence[RationalLike]) -> Fraction:
    """Evaluate the associated symmetric norm ||x||_s = max(||x|, ||-x|)."""
    return max(eval_norm(g, x), eval_reverse(g, x))


def quasi_distance(
    g: PolyhedralGauge, x: Sequence[RationalLike], y: Sequence[RationalLike]
) -> Fraction:
    """
    Evaluate the quasi-metric d(x, y) = ||y - x| that induces the space's topology.

    Example:
        >>> upper = new_gauge(1, [[0], [1]])
        >>> quasi_distance(upper, [1], [0]), quasi_distance(upper, [0], [1])
        (Fraction(0, 1), Fraction(1, 1))
    """
    start, end = _point(g, x), _point(g, y)
    return eval_norm(g, [b - a for a, b in zip(start, end)])


def symmetrize(g: PolyhedralGauge) -> PolyhedralGauge:
    """
    Gauge of the associated symmetric norm: generators {a_i} followed by {-a_i}.

    Example:
        >>> symmetrize(new_gauge(1, [[0], [1]])).generators
        ((Fraction(0, 1),), (Fraction(1, 1),), (Fraction(0, 1),), (Fraction(-1, 1),))
    """
    negated = tuple(tuple(-c for c in a) for a in g.generators)
    label = f"symmetrization of {g.label}" if g.label else "symmetrization"
    return PolyhedralGauge(g.dim, g.generators + negated, label)


def _dedup(vectors: Sequence[Vector]) -> Tuple[Vector, ...]:
    seen = set()
    unique: List[Vector] = []
    for v in vectors:
        if v not in seen:
            seen.add(v)
            unique.append(v)
    return tuple(unique)


def sum_with_symmetric(g: PolyhedralGauge, canonical: bool = False) -> PolyhedralGauge:
    """
    Gauge of ||x|_1 = ||x| + ||x||_s.

    A sum of two max-of-linear functions is the max over all pairwise sums, so
    the generators are {a_i + b_j} with b_j ranging over symmetrize(g)'s
    generators (duplicates removed, first occurrence kept).

    Args:
        g (PolyhedralGauge): Base gauge
        canonical (bool, optional): Also drop dominated generators. Defaults to False

    Returns:
        PolyhedralGauge: The summed gauge; its index lies strictly in (0, 1)
        whenever g is not symmetric

    Example:
        >>> summed = sum_with_symmetric(new_gauge(1, [[0], [1]]))
        >>> eval_norm(summed, [Fraction(1, 2)]), eval_norm(summed, [-1])
        (Fraction(1, 1), Fraction(1, 1))
    """
    symmetric_generators = symmetrize(g).generators
    sums = [
        tuple(x + y for x, y in zip(a, b))
        for a in g.generators
        for b in symmetric_generators
    ]
    label = f"sum of {g.label} with its symmetrization" if g.label else "sum with symmetrization"
    result = PolyhedralGauge(g.dim, _dedup(sums), label)
    return canonicalize(result) if canonical else result


def unit_ball(g: PolyhedralGauge) -> HPolyhedron:
    """
    Closed unit ball {y : ||y| <= 1} as rows (a_i, 1).

    Example:
        >>> unit_ball(new_gauge(1, [[0], [1]])).rows
        (((Fraction(0, 1),), Fraction(1, 1)), ((Fraction(1, 1),), Fraction(1, 1)))
    """
    return HPolyhedron(g.dim, tuple((a, Fraction(1)) for a in g.generators))


def _exceeding_point(candidate: Vector, others: Sequence[Vector]) -> Optional[Vector]:
    """Return x with <candidate, x> > max <other, x>, or None if candidate is dominated."""
    n = len(candidate)
    lifted = tuple(candidate) + (Fraction(-1),)
    rows = [(tuple(a) + (Fraction(-1),), Fraction(0)) for a in others]
    rows.append((lifted, Fraction(1)))
    outcome = lp_solve(lifted, "max", HPolyhedron(n + 1, tuple(rows)))
    if outcome.status is LpStatus.OPTIMAL and outcome.value and outcome.value > 0:
        assert outcome.point is not None
        return outcome.point[:n]
    return None


def canonicalize(g: PolyhedralGauge) -> PolyhedralGauge:
    """
    Remove duplicate generators and generators lying in the convex hull of the others.

    The result evaluates identically to g at every point.
    """
    kept = list(_dedup(g.generators))
    i = 0
    while i < len(kept):
        others = kept[:i] + kept[i + 1:]
        if others and _exceeding_point(kept[i], others) is None:
            logger.debug("dropping dominated generator %s", format_vector(kept[i]))
            del kept[i]
        else:
            i += 1
    return PolyhedralGauge(g.dim, tuple(kept), g.label)


def is_symmetric(g: PolyhedralGauge) -> bool:
    """
    Exact test that ||x| = ||-x| for every x.

    Holds iff every -a_i is dominated by the generators, i.e. lies in conv{a_j}.
    """
    return all(
        _exceeding_point(tuple(-c for c in a), g.generators) is None
        for a in g.generators
    )


__all__ = [
    'SpacePoint', 'PolyhedralGauge', 'new_gauge', 'eval_norm', 'eval_reverse',
    'symmetric_norm', 'quasi_distance', 'symmetrize', 'sum_with_symmetric',
    'unit_ball', 'canonicalize', 'is_symmetric'
]
