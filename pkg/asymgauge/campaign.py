"""
Campaign Module

Seeded randomized verification of every law the library implements. Each
suite draws independent cases from a per-case random generator, so a report
depends only on (seed, cases, dim_range, suites) and never on scheduling.
A failing case is minimized by dropping generators and zeroing coordinates
while it keeps failing.

Available Functions:
    - run_campaign(config): Run the selected suites and build a CampaignReport
    - random_gauge(rng, dim, kind): Random valid gauge of a given population
    - random_point(rng, dim): Random rational point
    - sampled_index(g, samples, rng): Floating-point sampling oracle for c(X)
    - shrink(inputs, check): Minimize a failing case
    - render_report(report): Text rendering of a CampaignReport

Available Classes:
    - RunConfig: Validated campaign configuration
    - Suite: A named (generate, check) pair
    - CheckFailed: Raised by a check whose law does not hold
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, List, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, ValidationError, field_validator, model_validator

from .dual import (
    dual_cone_full,
    dual_equivalence_bounds,
    flat_norm,
    in_dual_cone,
    nonreversible_functional,
    star_norm,
)
from .errors import AsymGaugeError, AxiomError, InputError, PreconditionError
from .gauge import (
    PolyhedralGauge,
    eval_norm,
    eval_reverse,
    is_symmetric,
    new_gauge,
    sum_with_symmetric,
    symmetric_norm,
    symmetrize,
    unit_ball,
)
from .operators import (
    LinearOperator,
    add,
    is_continuous,
    lc_is_vector_space,
    lc_supremum,
    ls_norm,
    negate,
    nonreversible_witness,
    operator_space_gauge,
    perturb_nonsymmetric,
    random_continuous_operator,
    rank_one,
)
from .polyhedra import (
    HPolyhedron,
    LpStatus,
    enumerate_vrep,
    lp_solve,
    recession_direction,
    support_value,
)
from .rationals import ExtendedRational, Vector, dot, format_rational, format_vector
from .serialization import CampaignReport, SuiteResult
from .spaces import fixture
from .symmetry import (
    ball_is_bounded,
    check_identity,
    classify,
    index,
    is_t1,
    SpaceType,
    sup_reverse,
    symmetry_report,
)

logger = logging.getLogger(__name__)

MAX_CAMPAIGN_DIM = 6
ENTRY_BOUND = 5
ORACLE_TOLERANCE = 1e-6
SHRINK_BUDGET = 200

Inputs = Dict[str, Any]


class CheckFailed(AssertionError):
    """Raised when a verified law does not hold on a case."""


class _Skip(Exception):
    """The case does not meet the law's hypotheses."""


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise CheckFailed(message)


def _require(condition: bool) -> None:
    if not condition:
        raise _Skip()


@dataclass(frozen=True)
class Suite:
    name: str
    generate: Callable[[np.random.Generator, int, "RunConfig"], Inputs]
    check: Callable[[Inputs], None]
    max_dim: int = MAX_CAMPAIGN_DIM


SUITES: Dict[str, Suite] = {}


def _register(
    name: str,
    generate: Callable[[np.random.Generator, int, "RunConfig"], Inputs],
    check: Callable[[Inputs], None],
    max_dim: int = MAX_CAMPAIGN_DIM,
) -> None:
    SUITES[name] = Suite(name, generate, check, max_dim)


class RunConfig(BaseModel):
    """
    Configuration of a verification campaign.

    Attributes:
        seed (int): Signed 64-bit seed; determines every random case
        cases (int): Cases per suite, 0 gives an empty report
        dim_range (Tuple[int, int]): Inclusive dimension range within 1..6
        output (str): "text" or "json"
        oracle_samples (int): Random directions for the sampling oracle
        suites (Optional[List[str]]): Allow-list of suite names, all when None
    """

    model_config = ConfigDict(extra="forbid")

    seed: int = 0
    cases: int = 100
    dim_range: Tuple[int, int] = (1, 4)
    output: Literal["text", "json"] = "text"
    oracle_samples: int = 100_000
    suites: Optional[List[str]] = None

    @field_validator("seed")
    @classmethod
    def _seed_in_range(cls, value: int) -> int:
        if not -(2 ** 63) <= value < 2 ** 63:
            raise ValueError("seed must fit in a signed 64-bit integer")
        return value

    @field_validator("cases")
    @classmethod
    def _cases_nonnegative(cls, value: int) -> int:
        if value < 0:
            raise ValueError("cases must be nonnegative")
        return value

    @field_validator("oracle_samples")
    @classmethod
    def _samples_positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("oracle_samples must be positive")
        return value

    @field_validator("suites")
    @classmethod
    def _known_suites(cls, value: Optional[List[str]]) -> Optional[List[str]]:
        if value is not None:
            unknown = [name for name in value if name not in SUITES]
            if unknown:
                raise ValueError(f"unknown suites {unknown}; choose from {list(SUITES)}")
        return value

    @model_validator(mode="after")
    def _dims_ordered(self) -> "RunConfig":
        low, high = self.dim_range
        if not 1 <= low <= high <= MAX_CAMPAIGN_DIM:
            raise ValueError(f"dim_range must satisfy 1 <= min <= max <= {MAX_CAMPAIGN_DIM}")
        return self

    @classmethod
    def build(cls, **values: Any) -> "RunConfig":
        """Validate keyword values, raising InputError instead of ValidationError."""
        try:
            return cls(**values)
        except ValidationError as exc:
            error = exc.errors()[0]
            field = ".".join(str(part) for part in error["loc"]) or None
            message = str(error["msg"]).replace("Value error, ", "")
            raise InputError(message, field) from None


# Random data


def _integers(rng: np.random.Generator, low: int, high: int, size: Any = None) -> Any:
    """Inclusive integer draws converted to Python ints."""
    values = rng.integers(low, high + 1, size=size)
    return values.tolist() if size is not None else int(values)


def random_point(rng: np.random.Generator, dim: int) -> Vector:
    """Random point with numerators in [-10, 10] and denominators in [1, 4]."""
    numerators = _integers(rng, -10, 10, dim)
    denominators = _integers(rng, 1, 4, dim)
    return tuple(Fraction(p, q) for p, q in zip(numerators, denominators))


def _random_vectors(rng: np.random.Generator, count: int, dim: int) -> List[List[int]]:
    return _integers(rng, -ENTRY_BOUND, ENTRY_BOUND, (count, dim))


GAUGE_KINDS = ["any", "generic", "symmetric", "non_t1", "t1"]


def random_gauge(rng: np.random.Generator, dim: int, kind: str = "any") -> PolyhedralGauge:
    """
    Draw a random valid gauge.

    Generic gauges have k in [n+1, 3n] integer generators with entries in
    [-5, 5]. Symmetric gauges add the negative of every generator. Non-T1
    gauges flip every generator with <a, d> > 0 for a random d and add the zero
    functional. Kind "any" picks symmetric and non-T1 with probability 1/4
    each; kind "t1" redraws generic gauges until the ball is bounded.

    Args:
        rng (np.random.Generator): Source of randomness
        dim (int): Dimension
        kind (str, optional): One of GAUGE_KINDS. Defaults to "any"

    Returns:
        PolyhedralGauge: A gauge passing new_gauge validation
    """
    if kind not in GAUGE_KINDS:
        raise InputError(f"kind must be one of {GAUGE_KINDS}, got {kind!r}")
    if kind == "any":
        draw = float(rng.random())
        kind = "symmetric" if draw < 0.25 else "non_t1" if draw < 0.5 else "generic"
    while True:
        count = _integers(rng, dim + 1, 3 * dim)
        if kind == "symmetric":
            half = _random_vectors(rng, max(1, count // 2), dim)
            generators = half + [[-c for c in a] for a in half]
        elif kind == "non_t1":
            d = _random_vectors(rng, 1, dim)[0]
            if not any(d):
                continue
            generators = []
            for a in _random_vectors(rng, count, dim):
                flipped = sum(x * y for x, y in zip(a, d)) > 0
                generators.append([-c for c in a] if flipped else a)
            generators.append([0] * dim)
        else:
            generators = _random_vectors(rng, count, dim)
        try:
            g = new_gauge(dim, generators, f"random {kind}")
        except AxiomError:
            continue
        if kind == "t1" and not is_t1(g)[0]:
            continue
        return g


def _random_functional_in_cone(rng: np.random.Generator, g: PolyhedralGauge) -> Vector:
    weights = _integers(rng, 0, 3, len(g.generators))
    return tuple(
        sum((w * a[c] for w, a in zip(weights, g.generators)), Fraction(0))
        for c in range(g.dim)
    )


def _random_matrix(rng: np.random.Generator, rows: int, cols: int) -> Tuple[Vector, ...]:
    return tuple(random_point(rng, cols) for _ in range(rows))


# Sampling oracle


def _arrangement_directions(generators: np.ndarray) -> np.ndarray:
    """
    Null directions of every n-1 independent differences a_p - a_q.

    The minimum of ||-x| over a facet is attained where n-1 such differences
    vanish, so these directions contain an exact minimizer.
    """
    k, n = generators.shape
    if n == 1:
        return np.array([[1.0], [-1.0]])
    differences = [generators[p] - generators[q] for p, q in itertools.combinations(range(k), 2)]
    directions = []
    for subset in itertools.combinations(differences, n - 1):
        matrix = np.array(subset)
        _, singular, vt = np.linalg.svd(matrix)
        if np.sum(singular > 1e-9) < n - 1:
            continue
        directions.append(vt[-1])
        directions.append(-vt[-1])
    return np.array(directions) if directions else np.zeros((0, n))


def sampled_index(
    g: PolyhedralGauge, samples: int, rng: np.random.Generator, arrangement: bool = True
) -> float:
    """
    Estimate c(X) as the minimum of ||-u| / ||u| over sampled directions u.

    By default the Gaussian directions are joined by the arrangement
    directions of the generators. Those contain an exact minimizer, so the
    default result matches c(X) up to rounding and is not a pure sampling
    estimate. With ``arrangement=False`` only the Gaussian directions are
    used, and the result is an upper bound that approaches c(X) as
    ``samples`` grows.

    Args:
        g (PolyhedralGauge): The gauge
        samples (int): Number of Gaussian directions
        rng (np.random.Generator): Source of randomness
        arrangement (bool, optional): Add the arrangement directions. Defaults to True

    Returns:
        float: The smallest sampled ratio
    """
    generators = np.array([[float(c) for c in a] for a in g.generators])
    directions = rng.standard_normal((samples, g.dim))
    if arrangement:
        directions = np.vstack([directions, _arrangement_directions(generators)])
    values = directions @ generators.T
    forward = values.max(axis=1)
    backward = (-values).max(axis=1)
    mask = forward > 1e-12
    return float(np.min(backward[mask] / forward[mask]))


# Suites: gauges and polyhedra


def _gen_polyhedron(rng: np.random.Generator, dim: int, config: "RunConfig") -> Inputs:
    count = _integers(rng, 1, 2 * dim + 2)
    rows = tuple(
        (tuple(Fraction(c) for c in a), Fraction(_integers(rng, -ENTRY_BOUND, ENTRY_BOUND)))
        for a in _random_vectors(rng, count, dim)
    )
    objective = tuple(Fraction(c) for c in _random_vectors(rng, 1, dim)[0])
    return {"poly": HPolyhedron(dim, rows), "objective": objective}


def _check_lp_feasibility(inputs: Inputs) -> None:
    poly, objective = inputs["poly"], inputs["objective"]
    outcome = lp_solve(objective, "max", poly)
    vrep = enumerate_vrep(poly)
    _expect(
        (outcome.status is LpStatus.INFEASIBLE) == (not vrep.vertices),
        f"lp status {outcome.status.value} but {len(vrep.vertices)} vertices",
    )
    if outcome.status is LpStatus.OPTIMAL:
        assert outcome.point is not None and outcome.value is not None
        _expect(all(dot(a, outcome.point) <= b for a, b in poly.rows), "optimal point infeasible")
        _expect(
            outcome.value == max(dot(objective, v) for v in vrep.vertices),
            f"optimum {format_rational(outcome.value)} differs from the best vertex",
        )
    elif outcome.status is LpStatus.UNBOUNDED:
        _expect(any(dot(objective, r) > 0 for r in vrep.rays), "unbounded lp without improving ray")


def _gen_gauge_functional(rng: np.random.Generator, dim: int, config: "RunConfig") -> Inputs:
    return {"g": random_gauge(rng, dim), "p": random_point(rng, dim)}


def _gen_bounded_gauge_functional(rng: np.random.Generator, dim: int, config: "RunConfig") -> Inputs:
    return {"g": random_gauge(rng, dim, "t1"), "p": random_point(rng, dim)}


def _check_support_vs_vertices(inputs: Inputs) -> None:
    g, p = inputs["g"], inputs["p"]
    _require(is_t1(g)[0])
    value, _ = support_value(unit_ball(g), p)
    vertices = enumerate_vrep(unit_ball(g)).vertices
    best = max(dot(p, v) for v in vertices)
    _expect(value == ExtendedRational(best), f"support {value} but best vertex {format_rational(best)}")


def _check_support_ray_iff(inputs: Inputs) -> None:
    g, p = inputs["g"], inputs["p"]
    value, _ = support_value(unit_ball(g), p)
    rays = enumerate_vrep(unit_ball(g)).rays
    improving = any(dot(p, r) > 0 for r in rays)
    _expect((not value.is_finite) == improving, f"support {value} but improving ray: {improving}")


def _gen_gauge(rng: np.random.Generator, dim: int, config: "RunConfig") -> Inputs:
    return {"g": random_gauge(rng, dim)}


def _gen_t1_gauge(rng: np.random.Generator, dim: int, config: "RunConfig") -> Inputs:
    return {"g": random_gauge(rng, dim, "t1")}


def _check_recession_iff_rays(inputs: Inputs) -> None:
    g = inputs["g"]
    direction = recession_direction(unit_ball(g))
    rays = enumerate_vrep(unit_ball(g)).rays
    _expect((direction is None) == (not rays), f"recession {direction} but {len(rays)} rays")


def _gen_gauge_points(rng: np.random.Generator, dim: int, config: "RunConfig") -> Inputs:
    lam = Fraction(_integers(rng, 0, 10), _integers(rng, 1, 4))
    return {
        "g": random_gauge(rng, dim),
        "x": random_point(rng, dim),
        "y": random_point(rng, dim),
        "lam": lam,
    }


def _check_subadditivity(inputs: Inputs) -> None:
    g, x, y = inputs["g"], inputs["x"], inputs["y"]
    total = tuple(a + b for a, b in zip(x, y))
    _expect(eval_norm(g, total) <= eval_norm(g, x) + eval_norm(g, y), "||x + y| > ||x| + ||y|")


def _check_homogeneity(inputs: Inputs) -> None:
    g, x, lam = inputs["g"], inputs["x"], inputs["lam"]
    scaled = tuple(lam * c for c in x)
    _expect(eval_norm(g, scaled) == lam * eval_norm(g, x), "||lam x| != lam ||x|")


def _check_separation(inputs: Inputs) -> None:
    g, x = inputs["g"], inputs["x"]
    rows = [(a, Fraction(0)) for a in g.generators] + [
        (tuple(-c for c in a), Fraction(0)) for a in g.generators
    ]
    kernel = recession_direction(HPolyhedron(g.dim, tuple(rows)))
    _expect(kernel is None, f"nonzero x = {kernel} with ||x| = ||-x| = 0")
    if eval_norm(g, x) == 0 and eval_reverse(g, x) == 0:
        _expect(not any(x), "nonzero point with both norms zero")


def _check_symmetric_norm(inputs: Inputs) -> None:
    g, x, y = inputs["g"], inputs["x"], inputs["y"]
    minus_x = tuple(-c for c in x)
    total = tuple(a + b for a, b in zip(x, y))
    _expect(symmetric_norm(g, x) == symmetric_norm(g, minus_x), "||x||_s != ||-x||_s")
    _expect(
        symmetric_norm(g, total) <= symmetric_norm(g, x) + symmetric_norm(g, y),
        "||.||_s not subadditive",
    )
    _expect((symmetric_norm(g, x) == 0) == (not any(x)), "||.||_s vanishes off zero")
    _expect(eval_norm(symmetrize(g), x) == symmetric_norm(g, x), "symmetrize disagrees with ||.||_s")


def _check_norm_below_symmetric(inputs: Inputs) -> None:
    g, x = inputs["g"], inputs["x"]
    _expect(eval_norm(g, x) <= symmetric_norm(g, x), "||x| > ||x||_s")


def _check_sum_with_symmetric(inputs: Inputs) -> None:
    g, x = inputs["g"], inputs["x"]
    summed = sum_with_symmetric(g)
    _expect(
        eval_norm(summed, x) == eval_norm(g, x) + symmetric_norm(g, x),
        "sum gauge differs from ||x| + ||x||_s",
    )
    if g.dim <= 3 and not is_symmetric(g):
        c = index(sum_with_symmetric(g, canonical=True)).c
        _expect(0 < c < 1, f"index {format_rational(c)} of the sum gauge outside (0, 1)")


# Suites: symmetry


def _check_index_range(inputs: Inputs) -> None:
    g = inputs["g"]
    c, minimizer = index(g)
    _expect(0 <= c <= 1, f"c = {format_rational(c)} outside [0, 1]")
    _expect(eval_norm(g, minimizer) == 1, "minimizer off the unit sphere")
    _expect(eval_reverse(g, minimizer) == c, "minimizer does not attain c")


def _check_index_one_iff_symmetric(inputs: Inputs) -> None:
    g, x = inputs["g"], inputs["x"]
    c = index(g).c
    symmetric = is_symmetric(g)
    _expect((c == 1) == symmetric, f"c = {format_rational(c)} but symmetric = {symmetric}")
    if c == 1:
        _expect(eval_norm(g, x) == eval_reverse(g, x), "c = 1 but ||x| != ||-x|")


def _check_t1_from_positive_index(inputs: Inputs) -> None:
    g = inputs["g"]
    c = index(g).c
    t1, certificate = is_t1(g)
    if c > 0:
        _expect(t1, f"c = {format_rational(c)} > 0 but not T1")
    else:
        _expect(certificate is not None and eval_norm(g, certificate.vector) == 0, "bad T1 certificate")


def _check_finite_dim_equivalence(inputs: Inputs) -> None:
    g = inputs["g"]
    report = symmetry_report(g)
    full = dual_cone_full(g)
    _expect(report.space_type is not SpaceType.II, "type II in finite dimension")
    _expect(
        (report.c > 0) == report.t1 == report.bounded_ball == full,
        f"c > 0: {report.c > 0}, T1: {report.t1}, bounded: {report.bounded_ball}, dual full: {full}",
    )
    _expect(classify(g) is report.space_type, "classify disagrees with the report")


def _check_product_identity(inputs: Inputs) -> None:
    g = inputs["g"]
    bounded = ball_is_bounded(g)
    c, _ = index(g)
    value, _ = sup_reverse(g)
    if bounded:
        _expect(value.is_finite and value.finite() * c == 1, f"sup = {value}, c = {format_rational(c)}")
        _expect(check_identity(g), "check_identity failed")
    else:
        _expect(c == 0 and not value.is_finite, f"unbounded ball with c = {format_rational(c)}")


def _check_inequality_reverse(inputs: Inputs) -> None:
    g, x = inputs["g"], inputs["x"]
    c = index(g).c
    _require(c > 0)
    forward, backward = eval_norm(g, x), eval_reverse(g, x)
    _expect(c * forward <= backward, "c ||x| > ||-x|")
    _expect(backward * c <= forward, "||-x| > ||x| / c")


def _check_inequality_symmetric(inputs: Inputs) -> None:
    g, x = inputs["g"], inputs["x"]
    c = index(g).c
    _require(c > 0)
    forward, symmetric = eval_norm(g, x), symmetric_norm(g, x)
    _expect(c * symmetric <= forward <= symmetric, "c ||x||_s <= ||x| <= ||x||_s fails")


def _gen_oracle(rng: np.random.Generator, dim: int, config: "RunConfig") -> Inputs:
    return {"g": random_gauge(rng, dim), "samples": config.oracle_samples, "seed": _integers(rng, 0, 2 ** 31)}


def _check_oracle_index(inputs: Inputs) -> None:
    g = inputs["g"]
    c = index(g).c
    estimate = sampled_index(g, inputs["samples"], np.random.default_rng(inputs["seed"]))
    _expect(float(c) <= estimate + 1e-9, f"exact c = {format_rational(c)} above a sampled value {estimate}")
    _expect(abs(estimate - float(c)) <= ORACLE_TOLERANCE, f"sampled {estimate} vs exact {format_rational(c)}")


# Suites: dual


def _gen_dual(rng: np.random.Generator, dim: int, config: "RunConfig") -> Inputs:
    g = random_gauge(rng, dim)
    return {
        "g": g,
        "p": random_point(rng, dim),
        "q": random_point(rng, dim),
        "cone_p": _random_functional_in_cone(rng, g),
        "x": random_point(rng, dim),
        "lam": Fraction(_integers(rng, 0, 10), _integers(rng, 1, 4)),
    }


def _check_dual_continuity_bound(inputs: Inputs) -> None:
    g, x = inputs["g"], inputs["x"]
    for p in (inputs["cone_p"], inputs["p"]):
        value, _ = flat_norm(g, p)
        if value.is_finite:
            _expect(dot(p, x) <= value.finite() * eval_norm(g, x), "<p, x> > ||p|_b ||x|")


def _check_flat_above_star(inputs: Inputs) -> None:
    g, p = inputs["g"], inputs["p"]
    value, _ = flat_norm(g, p)
    _expect(value >= ExtendedRational(star_norm(g, p)), "||p|_b < ||p||_*")


def _check_dual_cone_convex(inputs: Inputs) -> None:
    g, lam = inputs["g"], inputs["lam"]
    _expect(in_dual_cone(g, inputs["cone_p"])[0], "nonnegative combination of generators outside X^b")
    members = [v for v in (inputs["p"], inputs["q"], inputs["cone_p"]) if in_dual_cone(g, v)[0]]
    for u, v in itertools.product(members, repeat=2):
        _expect(in_dual_cone(g, tuple(a + b for a, b in zip(u, v)))[0], "X^b not closed under sums")
    for u in members:
        _expect(in_dual_cone(g, tuple(lam * a for a in u))[0], "X^b not closed under scaling")


def _check_dual_nonreversible(inputs: Inputs) -> None:
    g, p = inputs["g"], inputs["p"]
    if is_t1(g)[0]:
        try:
            nonreversible_functional(g)
        except PreconditionError:
            _expect(dual_equivalence_bounds(g, p), "c ||p|_b <= ||-p|_b <= ||p|_b / c fails")
            return
        raise CheckFailed("nonreversible functional built on a T1 space")
    functional, ray = nonreversible_functional(g)
    _expect(in_dual_cone(g, functional.p)[0], "p outside X^b")
    minus = tuple(-c for c in functional.p)
    _expect(not in_dual_cone(g, minus)[0] and dot(minus, ray.vector) > 0, "-p inside X^b")


def _check_dual_cone_full_iff_t1(inputs: Inputs) -> None:
    g = inputs["g"]
    full, t1, c = dual_cone_full(g), is_t1(g)[0], index(g).c
    _expect(full == t1 == (c > 0), f"dual full {full}, T1 {t1}, c {format_rational(c)}")


# Suites: operators


def _gen_operator(rng: np.random.Generator, dim: int, config: "RunConfig") -> Inputs:
    m = _integers(rng, 1, dim)
    X, Y = random_gauge(rng, dim), random_gauge(rng, m)
    return {"X": X, "Y": Y, "T": _random_matrix(rng, m, dim)}


def _gen_operator_t1(rng: np.random.Generator, dim: int, config: "RunConfig") -> Inputs:
    m = _integers(rng, 1, dim)
    X, Y = random_gauge(rng, dim, "t1"), random_gauge(rng, m)
    return {"X": X, "Y": Y, "T": _random_matrix(rng, m, dim)}


def _operator(inputs: Inputs, key: str = "T") -> LinearOperator:
    return LinearOperator(inputs[key], inputs["X"], inputs["Y"])


def _check_ls_below_lc(inputs: Inputs) -> None:
    T = _operator(inputs)
    value, _ = lc_supremum(T)
    _expect(ExtendedRational(ls_norm(T)) <= value, "||T||_Ls > ||T|_Lc")


def _check_inequality_operator_reverse(inputs: Inputs) -> None:
    T = _operator(inputs)
    c = index(T.domain).c
    _require(c > 0)
    forward, _ = lc_supremum(T)
    backward, _ = lc_supremum(negate(T))
    a, b = forward.finite(), backward.finite()
    _expect(c * a <= b and b * c <= a, "c ||T|_Lc <= ||-T|_Lc <= ||T|_Lc / c fails")


def _check_inequality_operator_symmetric(inputs: Inputs) -> None:
    T = _operator(inputs)
    c = index(T.domain).c
    _require(c > 0)
    value = lc_supremum(T)[0].finite()
    symmetric = ls_norm(T)
    _expect(symmetric <= value and value * c <= symmetric, "||T||_Ls <= ||T|_Lc <= ||T||_Ls / c fails")


def _gen_continuous_pair(rng: np.random.Generator, dim: int, config: "RunConfig") -> Inputs:
    m = _integers(rng, 1, dim)
    X, Y = random_gauge(rng, dim), random_gauge(rng, m)
    S = random_continuous_operator(X, Y, rng)
    T = random_continuous_operator(X, Y, rng)
    return {"X": X, "Y": Y, "S": S.matrix, "T": T.matrix}


def _check_lc_triangle(inputs: Inputs) -> None:
    S, T = _operator(inputs, "S"), _operator(inputs, "T")
    s, t = lc_supremum(S)[0], lc_supremum(T)[0]
    _require(s.is_finite and t.is_finite)
    _expect(lc_supremum(add(S, T))[0] <= s + t, "||S + T|_Lc > ||S|_Lc + ||T|_Lc")


def _gen_rank_one(rng: np.random.Generator, dim: int, config: "RunConfig") -> Inputs:
    m = _integers(rng, 1, dim)
    return {"X": random_gauge(rng, dim), "Y": random_gauge(rng, m, "non_t1"), "p": random_point(rng, dim)}


def _check_rank_one_isometry(inputs: Inputs) -> None:
    X, Y, p = inputs["X"], inputs["Y"], inputs["p"]
    t1, certificate = is_t1(Y)
    _require(not t1 and certificate is not None)
    d = certificate.vector
    e = tuple(-c / eval_reverse(Y, d) for c in d)
    T = rank_one(p, e, X, Y)
    _expect(lc_supremum(T)[0] == flat_norm(X, p)[0], "||p(x)e|_Lc != ||p|_b")


def _gen_non_t1_pair(rng: np.random.Generator, dim: int, config: "RunConfig") -> Inputs:
    m = _integers(rng, 1, dim)
    X, Y = random_gauge(rng, dim, "non_t1"), random_gauge(rng, m, "non_t1")
    H = random_continuous_operator(X, Y, rng)
    eps = [Fraction(1), Fraction(1, 10), Fraction(1, 1000)][_integers(rng, 0, 2)]
    return {"X": X, "Y": Y, "H": H.matrix, "eps": eps}


def _check_witness_validity(inputs: Inputs) -> None:
    X, Y = inputs["X"], inputs["Y"]
    _require(not is_t1(X)[0] and not is_t1(Y)[0])
    T = nonreversible_witness(X, Y)
    forward, _ = lc_supremum(T)
    backward, ray = lc_supremum(negate(T))
    _expect(forward.is_finite and not backward.is_finite, "witness fails independent re-verification")
    _expect(eval_norm(X, ray.vector) == 0, "discontinuity ray has positive norm")


def _check_perturbation_validity(inputs: Inputs) -> None:
    H = _operator(inputs, "H")
    eps = inputs["eps"]
    _require(not is_t1(H.domain)[0] and not is_t1(H.codomain)[0] and is_continuous(H)[0])
    T = perturb_nonsymmetric(H, eps)
    perturbed = add(H, T)
    _expect(lc_supremum(T)[0] <= ExtendedRational(eps), "||T|_Lc > eps")
    _expect(is_continuous(perturbed)[0], "H + T discontinuous")
    _expect(not is_continuous(negate(perturbed))[0], "-(H + T) continuous")


def _gen_operator_space(rng: np.random.Generator, dim: int, config: "RunConfig") -> Inputs:
    m = _integers(rng, 1, dim)
    X, Y = random_gauge(rng, dim, "t1"), random_gauge(rng, m)
    return {"X": X, "Y": Y, "T": _random_matrix(rng, m, dim)}


def _check_operator_space_index(inputs: Inputs) -> None:
    X, Y = inputs["X"], inputs["Y"]
    c = index(X).c
    _require(c > 0)
    G = operator_space_gauge(X, Y)
    T = _operator(inputs)
    _expect(eval_norm(G, T.flatten()) == lc_supremum(T)[0].finite(), "operator gauge != ||T|_Lc")
    _expect(index(G).c >= c, "c(L_c(X, Y)) < c(X)")


CORNER_FIXTURES = [
    "upper_real", "referee_plane", "weighted_linf:2", "weighted_linf:3",
    "sup_gauge:3", "sup_gauge_aug:2", "linf_sym:1", "linf_sym:2",
]


def _gen_fixture_pair(rng: np.random.Generator, dim: int, config: "RunConfig") -> Inputs:
    pairs = list(itertools.product(CORNER_FIXTURES, repeat=2))
    x_name, y_name = pairs[_integers(rng, 0, len(pairs) - 1)]
    return {"X": fixture(x_name), "Y": fixture(y_name)}


def _check_vector_space_grid(inputs: Inputs) -> None:
    X, Y = inputs["X"], inputs["Y"]
    predicate = not (index(X).c == 0 and index(Y).c == 0)
    decision = lc_is_vector_space(X, Y)
    _expect(decision == predicate, f"vector-space decision {decision}, index predicate {predicate}")
    if not decision:
        T = nonreversible_witness(X, Y)
        _expect(not lc_supremum(negate(T))[0].is_finite, "witness negative is continuous")


_register("lp_feasibility", _gen_polyhedron, _check_lp_feasibility, max_dim=4)
_register("support_vs_vertices", _gen_bounded_gauge_functional, _check_support_vs_vertices, max_dim=4)
_register("support_ray_iff", _gen_gauge_functional, _check_support_ray_iff, max_dim=4)
_register("recession_iff_rays", _gen_gauge, _check_recession_iff_rays, max_dim=4)
_register("subadditivity", _gen_gauge_points, _check_subadditivity)
_register("homogeneity", _gen_gauge_points, _check_homogeneity)
_register("separation", _gen_gauge_points, _check_separation)
_register("symmetric_norm_is_norm", _gen_gauge_points, _check_symmetric_norm)
_register("norm_below_symmetric", _gen_gauge_points, _check_norm_below_symmetric)
_register("sum_with_symmetric", _gen_gauge_points, _check_sum_with_symmetric)
_register("index_range", _gen_gauge, _check_index_range, max_dim=5)
_register("index_one_iff_symmetric", _gen_gauge_points, _check_index_one_iff_symmetric, max_dim=5)
_register("t1_from_positive_index", _gen_gauge, _check_t1_from_positive_index, max_dim=5)
_register("finite_dim_equivalence", _gen_gauge, _check_finite_dim_equivalence, max_dim=5)
_register("product_identity", _gen_gauge, _check_product_identity, max_dim=5)
_register("inequality_reverse", _gen_gauge_points, _check_inequality_reverse, max_dim=5)
_register("inequality_symmetric", _gen_gauge_points, _check_inequality_symmetric, max_dim=5)
_register("oracle_index", _gen_oracle, _check_oracle_index, max_dim=3)
_register("dual_continuity_bound", _gen_dual, _check_dual_continuity_bound, max_dim=5)
_register("flat_above_star", _gen_dual, _check_flat_above_star, max_dim=5)
_register("dual_cone_convex", _gen_dual, _check_dual_cone_convex, max_dim=5)
_register("dual_nonreversible", _gen_dual, _check_dual_nonreversible, max_dim=5)
_register("dual_cone_full_iff_t1", _gen_gauge, _check_dual_cone_full_iff_t1, max_dim=5)
_register("ls_below_lc", _gen_operator, _check_ls_below_lc, max_dim=3)
_register("inequality_operator_reverse", _gen_operator_t1, _check_inequality_operator_reverse, max_dim=3)
_register("inequality_operator_symmetric", _gen_operator_t1, _check_inequality_operator_symmetric, max_dim=3)
_register("lc_triangle", _gen_continuous_pair, _check_lc_triangle, max_dim=3)
_register("rank_one_isometry", _gen_rank_one, _check_rank_one_isometry, max_dim=3)
_register("witness_validity", _gen_non_t1_pair, _check_witness_validity, max_dim=3)
_register("perturbation_validity", _gen_non_t1_pair, _check_perturbation_validity, max_dim=3)
_register("operator_space_index", _gen_operator_space, _check_operator_space_index, max_dim=2)
_register("vector_space_grid", _gen_fixture_pair, _check_vector_space_grid)


# Running, shrinking and reporting


def _fails(check: Callable[[Inputs], None], inputs: Inputs) -> Optional[str]:
    """Run a check; return the failure message, or None on success or skip."""
    try:
        check(inputs)
    except _Skip:
        return None
    except (AsymGaugeError, AssertionError) as exc:
        return f"{type(exc).__name__}: {exc}"
    return None


def _smaller_gauges(g: PolyhedralGauge) -> List[PolyhedralGauge]:
    """Valid gauges obtained by dropping one generator or zeroing one entry."""
    candidates = []
    generators = [list(a) for a in g.generators]
    for i in range(len(generators)):
        candidates.append(generators[:i] + generators[i + 1:])
    for i, a in enumerate(generators):
        for k, entry in enumerate(a):
            if entry != 0:
                zeroed = [list(b) for b in generators]
                zeroed[i][k] = Fraction(0)
                candidates.append(zeroed)
    result = []
    for candidate in candidates:
        try:
            result.append(new_gauge(g.dim, candidate, g.label))
        except (AxiomError, InputError):
            continue
    return result


def shrink(inputs: Inputs, check: Callable[[Inputs], None]) -> Tuple[Inputs, str]:
    """
    Minimize a failing case by shrinking its gauges while the check still fails.

    Args:
        inputs (Inputs): A failing case
        check (Callable[[Inputs], None]): The failing check

    Returns:
        Tuple[Inputs, str]: The minimized case and its failure message
    """
    message = _fails(check, inputs) or "check failed"
    budget = SHRINK_BUDGET
    progress = True
    while progress and budget > 0:
        progress = False
        for key, value in inputs.items():
            if not isinstance(value, PolyhedralGauge):
                continue
            for smaller in _smaller_gauges(value):
                budget -= 1
                trial = dict(inputs)
                trial[key] = smaller
                failure = _fails(check, trial)
                if failure is not None:
                    inputs, message, progress = trial, failure, True
                    break
                if budget <= 0:
                    break
            if progress or budget <= 0:
                break
    return inputs, message


def _describe(value: Any) -> str:
    if isinstance(value, PolyhedralGauge):
        return "gauge[" + ", ".join(format_vector(a) for a in value.generators) + "]"
    if isinstance(value, HPolyhedron):
        return "poly[" + ", ".join(
            f"{format_vector(a)} <= {format_rational(b)}" for a, b in value.rows
        ) + "]"
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, tuple) and value and isinstance(value[0], tuple):
        return "[" + ", ".join(format_vector(row) for row in value) + "]"
    if isinstance(value, tuple):
        return format_vector(value)
    return str(value)


def describe_case(inputs: Inputs, message: str) -> str:
    fields = "; ".join(f"{key} = {_describe(value)}" for key, value in inputs.items())
    return f"{fields} -> {message}"


def _case_rng(seed: int, suite_number: int, case: int) -> np.random.Generator:
    return np.random.default_rng([seed % 2 ** 64, suite_number, case])


def run_suite(suite: Suite, suite_number: int, config: RunConfig) -> SuiteResult:
    """Run one suite over config.cases cases; keep the first minimized counterexample."""
    passed = failed = 0
    counterexample: Optional[str] = None
    low, high = config.dim_range
    for case in range(config.cases):
        rng = _case_rng(config.seed, suite_number, case)
        dim = min(_integers(rng, low, high), suite.max_dim)
        inputs = suite.generate(rng, dim, config)
        failure = _fails(suite.check, inputs)
        if failure is None:
            passed += 1
            continue
        failed += 1
        logger.info("%s failed on case %d: %s", suite.name, case, failure)
        if counterexample is None:
            counterexample = describe_case(*shrink(inputs, suite.check))
    return SuiteResult(name=suite.name, passed=passed, failed=failed, counterexample=counterexample)


def run_campaign(config: RunConfig) -> CampaignReport:
    """
    Run the configured suites.

    Args:
        config (RunConfig): Seed, case count, dimensions and suite selection

    Returns:
        CampaignReport: Per-suite pass and fail counts in registry order;
        empty when config.cases is 0
    """
    results = []
    if config.cases > 0:
        for number, (name, suite) in enumerate(SUITES.items()):
            if config.suites is not None and name not in config.suites:
                continue
            logger.info("running suite %s", name)
            results.append(run_suite(suite, number, config))
    return CampaignReport(
        seed=config.seed, cases=config.cases, dim_range=config.dim_range, suites=results
    )


def render_report(report: CampaignReport) -> str:
    """Render a campaign report as aligned text lines."""
    lines = [
        f"seed {report.seed}, {report.cases} cases per suite, "
        f"dims {report.dim_range[0]}-{report.dim_range[1]}"
    ]
    width = max((len(s.name) for s in report.suites), default=0)
    for suite in report.suites:
        status = "ok" if suite.failed == 0 else "FAILED"
        lines.append(f"  {suite.name:<{width}}  {suite.passed} passed  {suite.failed} failed  {status}")
        if suite.counterexample:
            lines.append(f"    counterexample: {suite.counterexample}")
    lines.append("all suites passed" if report.ok else "some suites failed")
    return "\n".join(lines)


__all__ = [
    'MAX_CAMPAIGN_DIM', 'ORACLE_TOLERANCE', 'GAUGE_KINDS', 'CORNER_FIXTURES',
    'SUITES', 'Suite', 'RunConfig', 'CheckFailed', 'random_point', 'random_gauge',
    'sampled_index', 'shrink', 'describe_case', 'run_suite', 'run_campaign',
    'render_report'
]
