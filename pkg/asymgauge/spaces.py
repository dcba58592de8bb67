"""
Spaces Module

Named example spaces and gauge files.

Available Functions:
    - upper_real(): max(0, t) on Q^1
    - referee_plane(): max(|x1|, x2+) on Q^2
    - weighted_linf(n): n-coordinate truncation of sup_k max(x_k, -x_k / k)
    - linf_sym(n): The symmetric l-infinity norm on Q^n
    - sup_gauge(n, variant): sup f over an n-point grid of [-1, 1]
    - fixture(name): Build a fixture from a name such as "weighted_linf:4"
    - load_space(reference, base_dir): A fixture name or a gauge file path
    - from_file(path): Read a JSON gauge file
    - to_file(g, path): Write a JSON gauge file
"""

import logging
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, List, Optional, Union

from .errors import InputError
from .gauge import PolyhedralGauge, new_gauge
from .serialization import GaugeFile, parse_model

logger = logging.getLogger(__name__)

SUP_GAUGE_VARIANTS = ["pinned", "augmented"]

PathLike = Union[str, Path]


def _validate_order(n: int, minimum: int = 1) -> None:
    """Validate a fixture size parameter."""
    if not isinstance(n, int) or isinstance(n, bool) or n < minimum:
        raise InputError(f"fixture size must be an integer >= {minimum}, got {n!r}")


def _unit(n: int, k: int, value: Fraction = Fraction(1)) -> List[Fraction]:
    return [value if j == k else Fraction(0) for j in range(n)]


def upper_real() -> PolyhedralGauge:
    """
    The upper real line ||t| = max(0, t), generators {0, 1}. Not T1.

    Example:
        >>> from asymgauge.gauge import eval_norm
        >>> eval_norm(upper_real(), [3]), eval_norm(upper_real(), [-2])
        (Fraction(3, 1), Fraction(0, 1))
    """
    return new_gauge(1, [[0], [1]], "upper_real")


def referee_plane() -> PolyhedralGauge:
    """The plane with ||(x1, x2)| = max(|x1|, max(x2, 0)). Not T1."""
    return new_gauge(2, [[1, 0], [-1, 0], [0, 1]], "referee_plane")


def weighted_linf(n: int) -> PolyhedralGauge:
    """
    Truncation to n coordinates of ||x| = sup_k max(x_k, -x_k / k).

    Generators are e_1*, ..., e_n* followed by -e_1*/1, ..., -e_n*/n, so
    ||e_n| = 1 and ||-e_n| = 1/n. The index of symmetry is exactly 1/n.

    Args:
        n (int): Number of coordinates, at least 1

    Returns:
        PolyhedralGauge: A T1 gauge on Q^n

    Raises:
        InputError: If n < 1
    """
    _validate_order(n)
    forward = [_unit(n, k) for k in range(n)]
    backward = [_unit(n, k, Fraction(-1, k + 1)) for k in range(n)]
    return new_gauge(n, forward + backward, f"weighted_linf:{n}")


def linf_sym(n: int) -> PolyhedralGauge:
    """The symmetric l-infinity norm max_k |x_k| on Q^n."""
    _validate_order(n)
    generators = []
    for k in range(n):
        generators.append(_unit(n, k))
        generators.append(_unit(n, k, Fraction(-1)))
    return new_gauge(n, generators, f"linf_sym:{n}")


def sup_gauge(n: int, variant: str = "pinned") -> PolyhedralGauge:
    """
    Discretization of ||f| = sup_{x in [-1, 1]} f(x) on an n-point grid.

    The "pinned" variant keeps the constraint f(0) = 0 exactly: n must be odd,
    the center grid point is removed and the space has dimension n - 1. The
    evaluation at the center restricts to the zero functional, which is kept as
    a generator. The "augmented" variant keeps all n grid values and adds the
    zero functional, so ||f| = max(0, max_k f_k).

    Args:
        n (int): Number of grid points
        variant (str, optional): "pinned" or "augmented". Defaults to "pinned"

    Returns:
        PolyhedralGauge: Generators are the point evaluations followed by zero

    Raises:
        InputError: If n is too small, n is even for the pinned variant, or the
            variant is unknown

    Example:
        >>> from asymgauge.gauge import eval_norm
        >>> eval_norm(sup_gauge(4, "augmented"), [-1, -1, -1, -1])
        Fraction(0, 1)
    """
    if variant not in SUP_GAUGE_VARIANTS:
        raise InputError(f"variant must be one of {SUP_GAUGE_VARIANTS}, got {variant!r}")
    if variant == "augmented":
        _validate_order(n)
        dim = n
        label = f"sup_gauge_aug:{n}"
    else:
        _validate_order(n, minimum=3)
        if n % 2 == 0:
            raise InputError(f"the pinned sup gauge needs an odd number of grid points, got {n}")
        dim = n - 1
        label = f"sup_gauge:{n}"
    generators = [_unit(dim, k) for k in range(dim)]
    generators.append([Fraction(0)] * dim)
    return new_gauge(dim, generators, label)


_SIZED: Dict[str, Callable[[int], PolyhedralGauge]] = {
    "weighted_linf": weighted_linf,
    "sup_gauge": sup_gauge,
    "sup_gauge_aug": lambda n: sup_gauge(n, "augmented"),
    "linf_sym": linf_sym,
}
_PLAIN: Dict[str, Callable[[], PolyhedralGauge]] = {
    "upper_real": upper_real,
    "referee_plane": referee_plane,
}

FIXTURE_NAMES = list(_PLAIN) + [f"{name}:<n>" for name in _SIZED]


def is_fixture_name(reference: str) -> bool:
    """Return True if the string names a fixture rather than a file."""
    return reference.split(":", 1)[0] in _PLAIN or reference.split(":", 1)[0] in _SIZED


def fixture(name: str) -> PolyhedralGauge:
    """
    Build a named fixture.

    Args:
        name (str): One of upper_real, referee_plane, weighted_linf:<n>,
            sup_gauge:<n>, sup_gauge_aug:<n>, linf_sym:<n>

    Returns:
        PolyhedralGauge: The fixture gauge

    Raises:
        InputError: On an unknown name or a bad size

    Example:
        >>> fixture("weighted_linf:3").dim
        3
    """
    base, _, size = name.strip().partition(":")
    if base in _PLAIN:
        if size:
            raise InputError(f"fixture {base!r} takes no size, got {name!r}")
        return _PLAIN[base]()
    if base in _SIZED:
        if not size.strip().isdigit():
            raise InputError(f"fixture {base!r} needs a size, e.g. '{base}:3', got {name!r}")
        return _SIZED[base](int(size))
    raise InputError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURE_NAMES)}")


def from_file(path: PathLike) -> PolyhedralGauge:
    """
    Read a gauge file.

    Raises:
        InputError: If the file is unreadable or malformed (with the field path)
        AxiomError: If the generators do not define an asymmetric norm
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read gauge file {str(path)!r}: {exc.strerror}") from None
    logger.debug("loaded gauge file %s", path)
    return parse_model(GaugeFile, text, str(path)).to_gauge()


def to_file(g: PolyhedralGauge, path: PathLike) -> None:
    """Write g as a gauge file with rationals encoded as "p/q" strings."""
    Path(path).write_text(GaugeFile.from_gauge(g).model_dump_json(indent=2) + "\n", encoding="utf-8")


def load_space(
    reference: Union[str, GaugeFile], base_dir: Optional[PathLike] = None
) -> PolyhedralGauge:
    """
    Resolve a space reference: an inline GaugeFile, a fixture name or a file path.

    Relative paths resolve against base_dir when given.
    """
    if isinstance(reference, GaugeFile):
        return reference.to_gauge()
    if is_fixture_name(reference):
        return fixture(reference)
    path = Path(reference)
    if base_dir is not None and not path.is_absolute():
        path = Path(base_dir) / path
    return from_file(path)


__all__ = [
    'SUP_GAUGE_VARIANTS', 'FIXTURE_NAMES', 'upper_real', 'referee_plane',
    'weighted_linf', 'linf_sym', 'sup_gauge', 'is_fixture_name',
    'fixture', 'from_file', 'to_file', 'load_space'
]
