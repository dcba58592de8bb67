"""
Polyhedra Module

Exact rational linear programming and polyhedral geometry. Every routine works
on ``fractions.Fraction`` data and returns re-checkable certificates.

Available Functions:
    - lp_solve(objective, sense, poly): Exact two-phase simplex (Bland's rule)
    - support_value(poly, p): sup of <p, x> over poly with a point or ray certificate
    - recession_direction(poly): A nonzero recession direction, or None
    - recession_span(poly): Recession directions spanning the recession cone
    - positively_spans(vectors): Whether the cone of the vectors is the whole space
    - enumerate_vrep(poly): Vertices and extreme rays by double description
    - contains(poly, x): Exact membership test
    - rank(vectors): Exact rank of a list of vectors
    - null_space(vectors): Exact basis of {y : <v, y> = 0 for every v}

Available Classes:
    - HPolyhedron: {x : <a_i, x> <= b_i}
    - LpStatus, LpOutcome: Result of lp_solve
    - VRep: Vertex/ray representation
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import sympy

from .errors import CapacityError, InputError, InvariantViolation
from .rationals import (
    Certificate,
    ExtendedRational,
    RationalLike,
    Vector,
    dot,
    scale_to_coprime,
    to_fraction,
    vector,
)

logger = logging.getLogger(__name__)

# Default caps for vertex enumeration (double description is exponential)
DEFAULT_MAX_DIM = 8
DEFAULT_MAX_ROWS = 64

SENSES = ("max", "min")


@dataclass(frozen=True)
class HPolyhedron:
    """
    A polyhedron {x in Q^dim : <a_i, x> <= b_i for every row}.

    Attributes:
        dim (int): Ambient dimension, at least 1
        rows (Tuple[Tuple[Vector, Fraction], ...]): Pairs (normal a_i, bound b_i)

    Example:
        >>> ball = HPolyhedron.from_rows(1, [([1], 1)])
        >>> ball.rows
        (((Fraction(1, 1),), Fraction(1, 1)),)
    """

    dim: int
    rows: Tuple[Tuple[Vector, Fraction], ...]

    def __post_init__(self) -> None:
        if not isinstance(self.dim, int) or isinstance(self.dim, bool) or self.dim < 1:
            raise InputError(f"dimension must be a positive integer, got {self.dim!r}")
        for i, (normal, _) in enumerate(self.rows):
            if len(normal) != self.dim:
                raise InputError(
                    f"row {i} has {len(normal)} coordinates, expected {self.dim}"
                )

    @classmethod
    def from_rows(
        cls, dim: int, rows: Iterable[Tuple[Iterable[RationalLike], RationalLike]]
    ) -> "HPolyhedron":
        """Build a polyhedron from rational-like rows, converting every entry exactly."""
        converted = tuple(
            (vector(normal, f"rows.{i}.normal"), to_fraction(bound, f"rows.{i}.bound"))
            for i, (normal, bound) in enumerate(rows)
        )
        return cls(dim, converted)

    @property
    def normals(self) -> Tuple[Vector, ...]:
        return tuple(normal for normal, _ in self.rows)

    @property
    def bounds(self) -> Tuple[Fraction, ...]:
        return tuple(bound for _, bound in self.rows)


class LpStatus(Enum):
    OPTIMAL = "optimal"
    UNBOUNDED = "unbounded"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class LpOutcome:
    """
    Outcome of lp_solve.

    Exactly one of the shapes Optimal(value, point), UnboundedAlong(ray) or
    Infeasible is populated, according to ``status``.

    Attributes:
        status (LpStatus): Outcome kind
        value (Optional[Fraction]): Optimal objective value
        point (Optional[Vector]): Attaining point
        ray (Optional[Vector]): Improving recession ray (coprime integer coordinates)
    """

    status: LpStatus
    value: Optional[Fraction] = None
    point: Optional[Vector] = None
    ray: Optional[Vector] = None

    @classmethod
    def optimal(cls, value: Fraction, point: Vector) -> "LpOutcome":
        return cls(LpStatus.OPTIMAL, value=value, point=point)

    @classmethod
    def unbounded_along(cls, ray: Vector) -> "LpOutcome":
        return cls(LpStatus.UNBOUNDED, ray=ray)

    @classmethod
    def infeasible(cls) -> "LpOutcome":
        return cls(LpStatus.INFEASIBLE)


@dataclass(frozen=True)
class VRep:
    """
    Vertex/ray representation: poly = conv(vertices) + cone(rays).

    Lines of a polyhedron with lineality are listed as two opposite rays.
    """

    vertices: Tuple[Vector, ...]
    rays: Tuple[Vector, ...]


def _validate_dimension(poly: HPolyhedron, v: Sequence[Fraction], what: str) -> None:
    if len(v) != poly.dim:
        raise InputError(f"{what} has {len(v)} coordinates, polyhedron has dimension {poly.dim}")


def contains(poly: HPolyhedron, x: Sequence[RationalLike]) -> bool:
    """Return True iff x satisfies every row of poly exactly."""
    point = vector(x)
    _validate_dimension(poly, point, "point")
    return all(dot(a, point) <= b for a, b in poly.rows)


class _Tableau:
    """
    Dense simplex tableau in canonical form: maximize cost . v s.t. T v = rhs, v >= 0.

    Basis columns are unit columns. Pivoting follows Bland's rule (lowest
    eligible index enters, ties in the ratio test go to the lowest basic index).
    """

    def __init__(self, rows: List[List[Fraction]], rhs: List[Fraction], basis: List[int]):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.pivots = 0

    def reduced_costs(self, cost: List[Fraction], allowed: Sequence[int]) -> Dict[int, Fraction]:
        basic_cost = [cost[b] for b in self.basis]
        reduced = {}
        for j in allowed:
            d = cost[j]
            for r, row in enumerate(self.rows):
                entry = row[j]
                if entry and basic_cost[r]:
                    d -= basic_cost[r] * entry
            reduced[j] = d
        return reduced

    def pivot(self, r: int, j: int) -> None:
        pivot_row = self.rows[r]
        factor = pivot_row[j]
        if factor != 1:
            for k, entry in enumerate(pivot_row):
                if entry:
                    pivot_row[k] = entry / factor
            self.rhs[r] /= factor
        support = [k for k, entry in enumerate(pivot_row) if entry]
        for i, row in enumerate(self.rows):
            if i == r:
                continue
            multiplier = row[j]
            if not multiplier:
                continue
            for k in support:
                row[k] -= multiplier * pivot_row[k]
            self.rhs[i] -= multiplier * self.rhs[r]
        self.basis[r] = j
        self.pivots += 1

    def maximize(
        self, cost: List[Fraction], allowed: Sequence[int]
    ) -> Tuple[str, Optional[Dict[int, Fraction]]]:
        """
        Run primal simplex from the current feasible basis.

        Returns:
            ("optimal", None) or ("unbounded", direction) where direction maps
            variable index to its rate of change along the improving edge.
        """
        while True:
            reduced = self.reduced_costs(cost, allowed)
            entering = next((j for j in allowed if reduced[j] > 0), None)
            if entering is None:
                return "optimal", None
            leaving = None
            best: Optional[Fraction] = None
            for r, row in enumerate(self.rows):
                entry = row[entering]
                if entry > 0:
                    ratio = self.rhs[r] / entry
                    if (
                        best is None
                        or ratio < best
                        or (ratio == best and self.basis[r] < self.basis[leaving])
                    ):
                        best, leaving = ratio, r
            if leaving is None:
                direction = {entering: Fraction(1)}
                for r, row in enumerate(self.rows):
                    if row[entering]:
                        direction[self.basis[r]] = -row[entering]
                return "unbounded", direction
            self.pivot(leaving, entering)

    def values(self, size: int) -> List[Fraction]:
        result = [Fraction(0)] * size
        for r, b in enumerate(self.basis):
            if b < size:
                result[b] = self.rhs[r]
        return result


def lp_solve(
    objective: Sequence[RationalLike], sense: str, poly: HPolyhedron
) -> LpOutcome:
    """
    Optimize a linear objective over an H-polyhedron with exact arithmetic.

    Free variables are split as x = x+ - x-; rows with negative bounds get an
    artificial variable and are handled by a phase-one problem.

    Args:
        objective (Sequence[RationalLike]): Objective vector c
        sense (str): "max" or "min"
        poly (HPolyhedron): Feasible region

    Returns:
        LpOutcome: Optimal(value, point), UnboundedAlong(ray) or Infeasible

    Raises:
        InputError: On dimension mismatch or unknown sense
        InvariantViolation: If the returned certificate fails re-verification

    Example:
        >>> poly = HPolyhedron.from_rows(1, [([1], 1)])
        >>> lp_solve([1], "max", poly).value
        Fraction(1, 1)
        >>> lp_solve([-1], "max", poly).ray
        (Fraction(-1, 1),)
    """
    if sense not in SENSES:
        raise InputError(f"sense must be one of {SENSES}, got {sense!r}")
    c = vector(objective, "objective")
    _validate_dimension(poly, c, "objective")
    n, m = poly.dim, len(poly.rows)
    sign = Fraction(1) if sense == "max" else Fraction(-1)

    # columns: x+ (n), x- (n), slacks (m), artificials (one per negative bound)
    width = 2 * n + m
    negative_rows = [i for i, (_, b) in enumerate(poly.rows) if b < 0]
    total = width + len(negative_rows)
    rows: List[List[Fraction]] = []
    rhs: List[Fraction] = []
    basis: List[int] = []
    artificial_of = {i: width + k for k, i in enumerate(negative_rows)}
    for i, (a, b) in enumerate(poly.rows):
        row = [Fraction(0)] * total
        flip = -1 if b < 0 else 1
        for k in range(n):
            row[k] = flip * a[k]
            row[n + k] = -flip * a[k]
        row[2 * n + i] = Fraction(flip)
        if b < 0:
            row[artificial_of[i]] = Fraction(1)
            basis.append(artificial_of[i])
        else:
            basis.append(2 * n + i)
        rows.append(row)
        rhs.append(flip * b)
    tableau = _Tableau(rows, rhs, basis)

    if negative_rows:
        phase_one = [Fraction(0)] * width + [Fraction(-1)] * len(negative_rows)
        tableau.maximize(phase_one, range(total))
        infeasibility = sum(
            (tableau.rhs[r] for r, b in enumerate(tableau.basis) if b >= width),
            Fraction(0),
        )
        if infeasibility > 0:
            logger.debug("lp infeasible after %d phase-one pivots", tableau.pivots)
            return LpOutcome.infeasible()
        _drive_out_artificials(tableau, width)

    cost = [sign * c[k] for k in range(n)] + [-sign * c[k] for k in range(n)]
    cost += [Fraction(0)] * (total - 2 * n)
    status, direction = tableau.maximize(cost, range(width))
    logger.debug("lp %s after %d pivots", status, tableau.pivots)

    if status == "unbounded":
        assert direction is not None
        ray = tuple(
            direction.get(k, Fraction(0)) - direction.get(n + k, Fraction(0))
            for k in range(n)
        )
        ray = scale_to_coprime(ray)
        if any(dot(a, ray) > 0 for a in poly.normals) or sign * dot(c, ray) <= 0:
            raise InvariantViolation(f"unbounded ray {ray} fails re-verification")
        return LpOutcome.unbounded_along(ray)

    values = tableau.values(2 * n)
    point = tuple(values[k] - values[n + k] for k in range(n))
    violated = [i for i, (a, b) in enumerate(poly.rows) if dot(a, point) > b]
    if violated:
        raise InvariantViolation(f"optimal point {point} violates rows {violated}")
    return LpOutcome.optimal(dot(c, point), point)


def _drive_out_artificials(tableau: _Tableau, width: int) -> None:
    """Pivot zero-level artificials out of the basis; drop rows that are redundant."""
    r = 0
    while r < len(tableau.rows):
        if tableau.basis[r] >= width:
            row = tableau.rows[r]
            column = next((j for j in range(width) if row[j] != 0), None)
            if column is None:
                del tableau.rows[r]
                del tableau.rhs[r]
                del tableau.basis[r]
                continue
            tableau.pivot(r, column)
        r += 1


def support_value(
    poly: HPolyhedron, p: Sequence[RationalLike]
) -> Tuple[ExtendedRational, Certificate]:
    """
    Compute sup {<p, x> : x in poly}.

    Args:
        poly (HPolyhedron): A nonempty polyhedron
        p (Sequence[RationalLike]): Direction functional

    Returns:
        Tuple[ExtendedRational, Certificate]: The finite value with an attaining
        point, or +inf with an improving ray

    Raises:
        InputError: If poly is empty or dimensions differ

    Example:
        >>> ball = HPolyhedron.from_rows(2, [([1, 0], 1), ([-1, 0], 1), ([0, 1], 1)])
        >>> value, cert = support_value(ball, [0, 1])
        >>> str(value), cert.kind
        ('1', 'point')
    """
    outcome = lp_solve(p, "max", poly)
    if outcome.status is LpStatus.INFEASIBLE:
        raise InputError("support value of an empty polyhedron is undefined")
    if outcome.status is LpStatus.UNBOUNDED:
        assert outcome.ray is not None
        return ExtendedRational.infinity(), Certificate("ray", outcome.ray, "improving ray")
    assert outcome.value is not None and outcome.point is not None
    return ExtendedRational(outcome.value), Certificate("point", outcome.point, "attaining point")


def _boxed_recession_cone(poly: HPolyhedron) -> HPolyhedron:
    """The recession cone {d : <a_i, d> <= 0} cut down to the box [-1, 1]^n."""
    n = poly.dim
    rows = [(a, Fraction(0)) for a in poly.normals]
    for k in range(n):
        unit = tuple(Fraction(1 if j == k else 0) for j in range(n))
        rows.append((unit, Fraction(1)))
        rows.append((tuple(-u for u in unit), Fraction(1)))
    return HPolyhedron(n, tuple(rows))


def recession_direction(poly: HPolyhedron) -> Optional[Vector]:
    """
    Find a nonzero d with <a_i, d> <= 0 for every row, if one exists.

    The recession cone is intersected with the box [-1, 1]^n and each signed
    coordinate is maximized in turn; the first positive optimum is returned.

    Args:
        poly (HPolyhedron): Polyhedron (bounds are irrelevant to the cone)

    Returns:
        Optional[Vector]: A direction with coprime integer coordinates, or None

    Example:
        >>> referee = HPolyhedron.from_rows(2, [([1, 0], 1), ([-1, 0], 1), ([0, 1], 1)])
        >>> recession_direction(referee)
        (Fraction(0, 1), Fraction(-1, 1))
    """
    n = poly.dim
    boxed = _boxed_recession_cone(poly)
    for k in range(n):
        for sign in (1, -1):
            objective = tuple(Fraction(sign if j == k else 0) for j in range(n))
            outcome = lp_solve(objective, "max", boxed)
            if outcome.status is LpStatus.OPTIMAL and outcome.value and outcome.value > 0:
                assert outcome.point is not None
                return scale_to_coprime(outcome.point)
    return None


def recession_span(poly: HPolyhedron) -> List[Vector]:
    """
    Recession directions spanning the linear hull of the recession cone.

    Each round maximizes +-<y, d> over the boxed cone for the basis vectors y
    of the orthogonal complement of the directions found so far. Only LPs are
    solved, so no enumeration cap applies.

    Args:
        poly (HPolyhedron): Polyhedron (bounds are irrelevant to the cone)

    Returns:
        List[Vector]: Linearly independent recession directions with coprime
        integer coordinates, empty when poly is bounded

    Example:
        >>> strip = HPolyhedron.from_rows(2, [([1, 0], 1), ([-1, 0], 1)])
        >>> recession_span(strip)
        [(Fraction(0, 1), Fraction(1, 1))]
    """
    n = poly.dim
    boxed = _boxed_recession_cone(poly)
    directions: List[Vector] = []
    while len(directions) < n:
        found: Optional[Vector] = None
        for y in null_space(directions, n):
            for sign in (1, -1):
                objective = tuple(sign * c for c in y)
                outcome = lp_solve(objective, "max", boxed)
                if outcome.status is LpStatus.OPTIMAL and outcome.value and outcome.value > 0:
                    assert outcome.point is not None
                    found = scale_to_coprime(outcome.point)
                    break
            if found is not None:
                break
        if found is None:
            break
        directions.append(found)
    logger.debug("recession cone spanned by %d directions", len(directions))
    return directions


def positively_spans(vectors: Sequence[Sequence[RationalLike]]) -> bool:
    """
    Decide whether cone(vectors) = Q^n.

    Equivalent to {x : <v_i, x> <= 0 for all i} = {0}.

    Raises:
        InputError: If the list is empty or the vectors have different lengths

    Example:
        >>> positively_spans([[1], [-1]])
        True
        >>> positively_spans([[1, 0], [-1, 0], [0, 1]])
        False
    """
    if not vectors:
        raise InputError("positively_spans needs a nonempty list of vectors")
    exact = [vector(v, f"vectors.{i}") for i, v in enumerate(vectors)]
    dim = len(exact[0])
    poly = HPolyhedron(dim, tuple((v, Fraction(0)) for v in exact))
    return recession_direction(poly) is None


def _to_sympy(q: Fraction) -> sympy.Rational:
    return sympy.Rational(q.numerator, q.denominator)


def _from_sympy(value: sympy.Expr) -> Fraction:
    rational = sympy.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


def _matrix(vectors: Sequence[Sequence[Fraction]]) -> sympy.Matrix:
    return sympy.Matrix([[_to_sympy(Fraction(c)) for c in v] for v in vectors])


def rank(vectors: Sequence[Sequence[RationalLike]]) -> int:
    """Exact rank of the matrix whose rows are the given vectors."""
    if not vectors:
        return 0
    return int(_matrix([vector(v) for v in vectors]).rank())


def null_space(vectors: Sequence[Sequence[RationalLike]], dim: int) -> List[Vector]:
    """
    Exact basis of {y in Q^dim : <v, y> = 0 for every v}, scaled to coprime integers.
    """
    if not vectors:
        return [tuple(Fraction(1 if j == k else 0) for j in range(dim)) for k in range(dim)]
    basis = _matrix([vector(v) for v in vectors]).nullspace()
    return [scale_to_coprime(tuple(_from_sympy(c) for c in column)) for column in basis]


def _initial_cone(
    rows: List[Vector], dim: int
) -> Tuple[List[int], List[Vector]]:
    """Pick dim independent rows (lowest indices first) and the rays of their simplicial cone."""
    chosen: List[int] = []
    for i, row in enumerate(rows):
        if rank([rows[j] for j in chosen] + [row]) > len(chosen):
            chosen.append(i)
            if len(chosen) == dim:
                break
    inverse = _matrix([rows[i] for i in chosen]).inv()
    rays = [
        scale_to_coprime(tuple(-_from_sympy(inverse[r, j]) for r in range(dim)))
        for j in range(dim)
    ]
    return chosen, rays


def enumerate_vrep(
    poly: HPolyhedron,
    max_dim: int = DEFAULT_MAX_DIM,
    max_rows: int = DEFAULT_MAX_ROWS,
) -> VRep:
    """
    Enumerate vertices and extreme rays with the double description method.

    The polyhedron is homogenized to the cone {(x, t) : <a_i, x> - b_i t <= 0, t >= 0};
    extreme rays with t > 0 become vertices, those with t = 0 become rays.
    Lineality is split off first and reported as pairs of opposite rays.

    Args:
        poly (HPolyhedron): Polyhedron to enumerate
        max_dim (int, optional): Dimension cap. Defaults to 8
        max_rows (int, optional): Row-count cap. Defaults to 64

    Returns:
        VRep: Lexicographically sorted vertices and coprime integer rays

    Raises:
        CapacityError: If poly exceeds either cap

    Example:
        >>> vrep = enumerate_vrep(HPolyhedron.from_rows(1, [([1], 1)]))
        >>> vrep.vertices, vrep.rays
        (((Fraction(1, 1),),), ((Fraction(-1, 1),),))
    """
    if poly.dim > max_dim:
        raise CapacityError(f"dimension {poly.dim} exceeds the enumeration cap {max_dim}")
    if len(poly.rows) > max_rows:
        raise CapacityError(f"{len(poly.rows)} rows exceed the enumeration cap {max_rows}")
    n = poly.dim
    d = n + 1
    rows: List[Vector] = [tuple(a) + (-b,) for a, b in poly.rows]
    rows.append(tuple([Fraction(0)] * n + [Fraction(-1)]))

    lines = null_space(rows, d)
    for line in lines:
        rows.append(line)
        rows.append(tuple(-c for c in line))

    chosen, rays = _initial_cone(rows, d)
    processed = list(chosen)
    zero_sets: List[FrozenSet[int]] = [
        frozenset(i for i in processed if dot(rows[i], ray) == 0) for ray in rays
    ]
    for h in range(len(rows)):
        if h in chosen:
            continue
        values = [dot(rows[h], ray) for ray in rays]
        positive = [k for k, v in enumerate(values) if v > 0]
        negative = [k for k, v in enumerate(values) if v < 0]
        zero = [k for k, v in enumerate(values) if v == 0]
        new_rays: List[Vector] = []
        new_zero_sets: List[FrozenSet[int]] = []
        for k in zero + negative:
            new_rays.append(rays[k])
            new_zero_sets.append(zero_sets[k] | {h} if values[k] == 0 else zero_sets[k])
        for p in positive:
            for q in negative:
                common = zero_sets[p] & zero_sets[q]
                if len(common) < d - 2:
                    continue
                if any(
                    common <= zero_sets[r] for r in range(len(rays)) if r != p and r != q
                ):
                    continue
                combined = tuple(
                    values[p] * rays[q][c] - values[q] * rays[p][c] for c in range(d)
                )
                new_rays.append(scale_to_coprime(combined))
                new_zero_sets.append(common | {h})
        rays, zero_sets = new_rays, new_zero_sets
        processed.append(h)
    logger.debug("double description produced %d extreme rays in Q^%d", len(rays), d)

    vertices = set()
    recession = set()
    for ray in rays:
        t = ray[-1]
        if t > 0:
            vertices.add(tuple(c / t for c in ray[:-1]))
        elif any(ray[:-1]):
            recession.add(scale_to_coprime(ray[:-1]))
    if not vertices:
        return VRep((), ())
    for line in lines:
        recession.add(scale_to_coprime(line[:-1]))
        recession.add(scale_to_coprime(tuple(-c for c in line[:-1])))
    return VRep(tuple(sorted(vertices)), tuple(sorted(recession)))


__all__ = [
    'DEFAULT_MAX_DIM', 'DEFAULT_MAX_ROWS', 'HPolyhedron', 'LpStatus', 'LpOutcome',
    'VRep', 'lp_solve', 'support_value', 'recession_direction', 'recession_span',
    'positively_spans',
    'enumerate_vrep', 'contains', 'rank', 'null_space'
]
