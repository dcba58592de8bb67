"""
Command-line interface for asymgauge.

Every command prints an exact value followed by its certificate, as text or
as a JSON report (``--output json``). Exit codes: 0 success, 1 input error
(usage errors included), 2 precondition failure, 3 verification failure,
4 internal invariant violation.

Usage:
    asym-gauge classify upper_real
    asym-gauge index --fixture weighted_linf:4
    asym-gauge dual-norm upper_real -1
    asym-gauge opnorm operator.json
    asym-gauge witness upper_real upper_real
    asym-gauge perturb operator.json 1/10
    asym-gauge verify --seed 42 --cases 500 --dims 1-4
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel

from . import __version__
from .campaign import SUITES, RunConfig, render_report, run_campaign
from .dual import dual_cone_full, flat_norm, star_norm
from .errors import AsymGaugeError, InputError, InvariantViolation, PreconditionError
from .gauge import PolyhedralGauge
from .operators import (
    LinearOperator,
    add,
    lc_norm,
    lc_supremum,
    negate,
    new_operator,
    nonreversible_witness,
    operator_space_gauge,
    perturb_nonsymmetric,
    witness_ingredients,
)
from .polyhedra import DEFAULT_MAX_DIM, DEFAULT_MAX_ROWS
from .rationals import format_rational, format_vector, to_fraction, vector
from .serialization import (
    ClassifyReport,
    DualNormReport,
    IndexReport,
    OperatorFile,
    OpNormView,
    PerturbReport,
    WitnessReport,
    certificate_model,
    parse_model,
)
from .spaces import FIXTURE_NAMES, load_space
from .symmetry import check_identity, index, symmetry_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_PRECONDITION = 2
EXIT_CAMPAIGN = 3
EXIT_INVARIANT = 4

Rendered = Tuple[Optional[BaseModel], str]


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def _space(args: argparse.Namespace) -> PolyhedralGauge:
    """Resolve the positional space or --fixture, exactly one of them."""
    if (args.space is None) == (args.fixture is None):
        raise InputError("give either a space file or --fixture NAME")
    return load_space(args.fixture if args.fixture is not None else args.space)


def _matrix_text(matrix: Tuple[Tuple, ...]) -> str:
    return "[" + ", ".join(
        "[" + ", ".join(format_rational(c) for c in row) + "]" for row in matrix
    ) + "]"


def _load_operator(path_text: str) -> LinearOperator:
    path = Path(path_text)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read operator file {path_text!r}: {exc.strerror}") from None
    model = parse_model(OperatorFile, text, path_text)
    domain = load_space(model.domain, base_dir=path.parent)
    codomain = load_space(model.codomain, base_dir=path.parent)
    return new_operator(model.matrix, domain, codomain)


def cmd_classify(args: argparse.Namespace) -> Rendered:
    g = _space(args)
    report = symmetry_report(g)
    full = dual_cone_full(g)
    model = ClassifyReport(
        label=g.label,
        dim=g.dim,
        c=report.c,
        minimizer=list(report.minimizer),
        t1=report.t1,
        t1_certificate=None if report.t1_certificate is None else list(report.t1_certificate),
        bounded_ball=report.bounded_ball,
        dual_cone_full=full,
        space_type=report.space_type.value,
    )
    if report.t1:
        separation = "T1"
    else:
        separation = f"non-T1 certificate d = {format_vector(report.t1_certificate or ())}"
    lines = [
        f"{g.label or 'space'}: type {report.space_type.value}, c = {format_rational(report.c)}, {separation}",
        f"  minimizer: {format_vector(report.minimizer)}",
        f"  c > 0: {report.c > 0}, T1: {report.t1}, bounded ball: {report.bounded_ball}, "
        f"dual cone full: {full}",
    ]
    return model, "\n".join(lines)


def cmd_index(args: argparse.Namespace) -> Rendered:
    g = _space(args)
    report = symmetry_report(g)
    identity = check_identity(g) if report.c > 0 else None
    model = IndexReport(
        label=g.label,
        c=report.c,
        minimizer=list(report.minimizer),
        sup_reverse=report.sup_reverse,
        sup_certificate=certificate_model(report.maximizer_or_ray),
        identity_holds=identity,
    )
    lines = [
        f"c = {format_rational(report.c)}, minimizer {format_vector(report.minimizer)}",
        f"sup ||-x| = {report.sup_reverse}, {report.maximizer_or_ray}",
    ]
    if identity is not None:
        lines.append(f"sup * c = 1: {identity}")
    return model, "\n".join(lines)


def cmd_sup_reverse(args: argparse.Namespace) -> Rendered:
    model, _ = cmd_index(args)
    assert isinstance(model, IndexReport)
    certificate = model.sup_certificate
    return model, f"{model.sup_reverse}, {certificate.kind} {format_vector(tuple(certificate.vector))}"


def cmd_dual_norm(args: argparse.Namespace) -> Rendered:
    g = _space(args)
    p = vector(args.functional.split(","), "functional")
    value, certificate = flat_norm(g, p)
    model = DualNormReport(
        functional=list(p),
        flat_norm=value,
        certificate=certificate_model(certificate),
        in_dual_cone=value.is_finite,
        star_norm=star_norm(g, p),
    )
    membership = "p ∈ X♭" if value.is_finite else "p ∉ X♭"
    lines = [
        f"{value}, {certificate}, {membership}",
        f"  ||p||_* = {format_rational(model.star_norm)}",
    ]
    return model, "\n".join(lines)


def cmd_opnorm(args: argparse.Namespace) -> Rendered:
    T = _load_operator(args.operator)
    report = lc_norm(T)
    model = OpNormView(
        matrix=[list(row) for row in T.matrix],
        lc_norm=report.lc_norm,
        certificate=certificate_model(report.attaining_point_or_ray),
        ls_norm=report.ls_norm,
        continuous=report.lc_norm.is_finite,
    )
    lines = [
        f"{report.lc_norm}",
        f"  certificate: {report.attaining_point_or_ray}",
        f"  ||T||_Ls = {format_rational(report.ls_norm)}",
    ]
    return model, "\n".join(lines)


def cmd_witness(args: argparse.Namespace) -> Rendered:
    X, Y = load_space(args.domain), load_space(args.codomain)
    T = nonreversible_witness(X, Y)
    p, e = witness_ingredients(X, Y)
    forward, _ = lc_supremum(T)
    backward, ray = lc_supremum(negate(T))
    model = WitnessReport(
        matrix=[list(row) for row in T.matrix],
        functional=list(p),
        direction=list(e),
        lc_norm=forward.finite(),
        reverse_lc_norm=backward,
        discontinuity_ray=list(ray.vector),
    )
    lines = [
        f"matrix {_matrix_text(T.matrix)}, discontinuity ray {format_vector(ray.vector)}",
        f"  p = {format_vector(p)}, e = {format_vector(e)}",
        f"  ||T|_Lc = {forward}, ||-T|_Lc = {backward}",
    ]
    return model, "\n".join(lines)


def cmd_perturb(args: argparse.Namespace) -> Rendered:
    H = _load_operator(args.operator)
    eps = to_fraction(args.eps, "eps")
    T = perturb_nonsymmetric(H, eps)
    result = add(H, T)
    size, _ = lc_supremum(T)
    forward, _ = lc_supremum(result)
    backward, ray = lc_supremum(negate(result))
    model = PerturbReport(
        epsilon=eps,
        perturbation=[list(row) for row in T.matrix],
        result=[list(row) for row in result.matrix],
        perturbation_lc_norm=size.finite(),
        result_lc_norm=forward.finite(),
        reverse_result_lc_norm=backward,
        discontinuity_ray=list(ray.vector),
    )
    lines = [
        f"T = {_matrix_text(T.matrix)}, ||T|_Lc = {size} <= {format_rational(eps)}",
        f"  H + T = {_matrix_text(result.matrix)}, ||H + T|_Lc = {forward}",
        f"  ||-(H + T)|_Lc = {backward}, discontinuity ray {format_vector(ray.vector)}",
    ]
    return model, "\n".join(lines)


def cmd_op_index(args: argparse.Namespace) -> Rendered:
    X, Y = load_space(args.domain), load_space(args.codomain)
    G = operator_space_gauge(X, Y, max_dim=args.max_dim, max_rows=args.max_rows)
    report = symmetry_report(G)
    x_index = index(X).c
    model = IndexReport(
        label=G.label,
        c=report.c,
        minimizer=list(report.minimizer),
        sup_reverse=report.sup_reverse,
        sup_certificate=certificate_model(report.maximizer_or_ray),
        identity_holds=check_identity(G) if report.c > 0 else None,
    )
    lines = [
        f"c({G.label}) = {format_rational(report.c)} >= c(X) = {format_rational(x_index)}",
        f"  {len(G.generators)} generators in dimension {G.dim}",
    ]
    return model, "\n".join(lines)


def _dims(text: str) -> Tuple[int, int]:
    low, _, high = text.partition("-")
    try:
        return int(low), int(high or low)
    except ValueError:
        raise InputError(f"dims must look like '1-4', got {text!r}", "dims") from None


def cmd_verify(args: argparse.Namespace) -> Rendered:
    config = RunConfig.build(
        seed=args.seed,
        cases=args.cases,
        dim_range=_dims(args.dims),
        output=args.output,
        oracle_samples=args.oracle_samples,
        suites=args.suite,
    )
    report = run_campaign(config)
    return report, render_report(report)


def cmd_fixtures(args: argparse.Namespace) -> Rendered:
    return None, "\n".join(FIXTURE_NAMES)


COMMANDS: Dict[str, Callable[[argparse.Namespace], Rendered]] = {
    "classify": cmd_classify,
    "index": cmd_index,
    "sup-reverse": cmd_sup_reverse,
    "dual-norm": cmd_dual_norm,
    "opnorm": cmd_opnorm,
    "witness": cmd_witness,
    "perturb": cmd_perturb,
    "op-index": cmd_op_index,
    "verify": cmd_verify,
    "fixtures": cmd_fixtures,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=["text", "json"], default="text", help="report format")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logs")
    common.add_argument("--max-dim", type=int, default=DEFAULT_MAX_DIM, help="vertex enumeration dimension cap")
    common.add_argument("--max-rows", type=int, default=DEFAULT_MAX_ROWS, help="vertex enumeration row cap")

    parser = argparse.ArgumentParser(
        prog="asym-gauge",
        description="Exact computations on polyhedral asymmetric normed spaces.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    for name, help_text in [
        ("classify", "type, index and T1 classification"),
        ("index", "index of symmetry and the reverse supremum"),
        ("sup-reverse", "sup of ||-x| over the unit sphere"),
    ]:
        sub = commands.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("space", nargs="?", help="gauge file or fixture name")
        sub.add_argument("--fixture", help=f"one of {', '.join(FIXTURE_NAMES)}")

    sub = commands.add_parser("dual-norm", parents=[common], help="flat norm of a functional")
    sub.add_argument("space", nargs="?", help="gauge file or fixture name")
    sub.add_argument("functional", help="comma-separated rationals; use -- before values like -1/2")
    sub.add_argument("--fixture", help="fixture name instead of a space file")

    sub = commands.add_parser("opnorm", parents=[common], help="asymmetric operator norm")
    sub.add_argument("operator", help="operator file")

    for name, help_text in [
        ("witness", "continuous T with -T discontinuous"),
        ("op-index", "index of symmetry of L_c(X, Y)"),
    ]:
        sub = commands.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("domain", help="gauge file or fixture name")
        sub.add_argument("codomain", help="gauge file or fixture name")

    sub = commands.add_parser("perturb", parents=[common], help="eps-perturbation with discontinuous negative")
    sub.add_argument("operator", help="operator file of a continuous H")
    sub.add_argument("eps", help="positive rational")

    sub = commands.add_parser("verify", parents=[common], help="randomized verification campaign")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--cases", type=int, default=100)
    sub.add_argument("--dims", default="1-4", help="dimension range, e.g. 1-4")
    sub.add_argument("--oracle-samples", type=int, default=100_000)
    sub.add_argument("--suite", action="append", choices=list(SUITES), help="restrict to a suite (repeatable)")

    commands.add_parser("fixtures", parents=[common], help="list fixture names")
    return parser


def _exit_code(exc: AsymGaugeError) -> int:
    if isinstance(exc, InvariantViolation):
        return EXIT_INVARIANT
    if isinstance(exc, PreconditionError):
        return EXIT_PRECONDITION
    return EXIT_INPUT


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run the command line.

    Args:
        argv (Optional[List[str]]): Arguments without the program name; sys.argv when None

    Returns:
        int: The process exit code
    """
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_INPUT
    _configure_logging(args.verbose)
    try:
        model, text = COMMANDS[args.command](args)
    except AsymGaugeError as exc:
        logger.debug("command %s failed", args.command, exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return _exit_code(exc)
    if args.output == "json" and model is not None:
        print(model.model_dump_json(indent=2))
    else:
        print(text)
    if args.command == "verify" and not getattr(model, "ok", True):
        return EXIT_CAMPAIGN
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
