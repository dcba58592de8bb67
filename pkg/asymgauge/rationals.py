"""
Rationals Module

Exact scalar and vector plumbing shared by the geometry and gauge modules.
Everything is a ``fractions.Fraction``; no floating point value is ever accepted.

Available Functions:
    - to_fraction(value, field): Convert an int, Fraction or "p/q" string exactly
    - format_rational(q): Render a Fraction as "p/q" (or "p" for integers)
    - vector(values, field): Build an exact vector (tuple of Fractions)
    - format_vector(v): Render a vector as "(a, b, ...)" or a bare scalar in Q^1
    - dot(a, b): Exact inner product
    - scale_to_coprime(v): Rescale a nonzero vector to coprime integer coordinates

Available Classes:
    - ExtendedRational: A rational number or +inf with sup-semantics
    - Certificate: A re-checkable point, ray or functional witnessing a claim
"""

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Optional, Sequence, Tuple, Union

from .errors import InputError

Vector = Tuple[Fraction, ...]
RationalLike = Union[int, Fraction, str]

INF_TOKEN = "+inf"

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def to_fraction(value: RationalLike, field: Optional[str] = None) -> Fraction:
    """
    Convert a value to an exact Fraction.

    Args:
        value (RationalLike): An int, a Fraction, or a string "p/q" / "p"
        field (Optional[str]): Field path used in the error message

    Returns:
        Fraction: The exact value, reduced with a positive denominator

    Raises:
        InputError: If the value is a float, a bool, or a malformed string

    Example:
        >>> to_fraction("-3/6")
        Fraction(-1, 2)
    """
    if isinstance(value, bool):
        raise InputError(f"expected a rational, got boolean {value!r}", field)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        match = _RATIONAL_PATTERN.match(value)
        if not match:
            raise InputError(f"malformed rational {value!r}", field)
        numerator = int(match.group(1))
        denominator = int(match.group(2)) if match.group(2) else 1
        if denominator == 0:
            raise InputError(f"zero denominator in {value!r}", field)
        return Fraction(numerator, denominator)
    raise InputError(
        f"expected an integer or a 'p/q' string, got {type(value).__name__} {value!r}",
        field,
    )


def format_rational(q: Fraction) -> str:
    """Render a Fraction as "p/q", or "p" when the denominator is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def vector(values: Iterable[RationalLike], field: Optional[str] = None) -> Vector:
    """
    Build an exact vector from rational-like entries.

    Args:
        values (Iterable[RationalLike]): Coordinates
        field (Optional[str]): Field path prefix used in error messages

    Returns:
        Vector: Tuple of Fractions

    Raises:
        InputError: If any coordinate is not an exact rational
    """
    if isinstance(values, (str, bytes)):
        raise InputError("expected a list of coordinates, got a string", field)
    result = []
    for k, entry in enumerate(values):
        path = f"{field}.{k}" if field else str(k)
        result.append(to_fraction(entry, path))
    return tuple(result)


def format_vector(v: Sequence[Fraction]) -> str:
    """Render a vector as "(a, b, ...)"; vectors of Q^1 print as a bare scalar."""
    if len(v) == 1:
        return format_rational(v[0])
    return "(" + ", ".join(format_rational(c) for c in v) + ")"


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    """Exact inner product of two equal-length vectors."""
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def scale_to_coprime(v: Sequence[Fraction]) -> Vector:
    """
    Rescale a vector by a positive factor so its coordinates are coprime integers.

    The zero vector is returned unchanged.

    Example:
        >>> scale_to_coprime((Fraction(0), Fraction(-2, 3)))
        (Fraction(0, 1), Fraction(-1, 1))
    """
    if all(c == 0 for c in v):
        return tuple(Fraction(c) for c in v)
    lcm = 1
    for c in v:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    integers = [int(c * lcm) for c in v]
    gcd = 0
    for c in integers:
        gcd = math.gcd(gcd, abs(c))
    return tuple(Fraction(c // gcd) for c in integers)


@total_ordering
@dataclass(frozen=True)
class ExtendedRational:
    """
    An exact scalar that is either a rational number or +inf.

    Arithmetic follows sup-semantics: finite + inf = inf, min(inf, r) = r.
    Multiplication is only defined by nonnegative factors, where 0 * inf = 0
    (the convention for scaled suprema over an empty scaling).

    Attributes:
        value (Optional[Fraction]): The finite value, or None for +inf

    Example:
        >>> ExtendedRational.of(1) + ExtendedRational.infinity()
        ExtendedRational(value=None)
        >>> str(ExtendedRational.of(Fraction(1, 3)))
        '1/3'
    """

    value: Optional[Fraction] = None

    @classmethod
    def of(cls, value: RationalLike) -> "ExtendedRational":
        return cls(to_fraction(value))

    @classmethod
    def infinity(cls) -> "ExtendedRational":
        return cls(None)

    @classmethod
    def parse(cls, text: str, field: Optional[str] = None) -> "ExtendedRational":
        """Parse "+inf" or a rational string."""
        if text.strip() in (INF_TOKEN, "inf"):
            return cls.infinity()
        return cls(to_fraction(text, field))

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def finite(self) -> Fraction:
        """Return the finite value, raising if this is +inf."""
        if self.value is None:
            raise ValueError("value is +inf")
        return self.value

    def __add__(self, other: object) -> "ExtendedRational":
        other = _coerce(other)
        if self.value is None or other.value is None:
            return ExtendedRational.infinity()
        return ExtendedRational(self.value + other.value)

    __radd__ = __add__

    def __mul__(self, factor: object) -> "ExtendedRational":
        factor = _coerce(factor)
        if factor.value is None:
            if self.value is not None and self.value < 0:
                raise ValueError("extended rationals only scale by nonnegative factors")
            return ExtendedRational(Fraction(0)) if self.value == 0 else factor
        if factor.value < 0:
            raise ValueError("extended rationals only scale by nonnegative factors")
        if self.value is None:
            return ExtendedRational(Fraction(0)) if factor.value == 0 else self
        return ExtendedRational(self.value * factor.value)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        try:
            other = _coerce(other)
        except (InputError, TypeError):
            return NotImplemented
        return self.value == other.value

    def __lt__(self, other: object) -> bool:
        other = _coerce(other)
        if self.value is None:
            return False
        if other.value is None:
            return True
        return self.value < other.value

    def __hash__(self) -> int:
        return hash(self.value)

    def __str__(self) -> str:
        return INF_TOKEN if self.value is None else format_rational(self.value)


def _coerce(value: object) -> ExtendedRational:
    if isinstance(value, ExtendedRational):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return ExtendedRational(Fraction(value))
    raise TypeError(f"cannot combine ExtendedRational with {type(value).__name__}")


@dataclass(frozen=True)
class Certificate:
    """
    A point, ray or functional witnessing a claim; always re-checkable by evaluation.

    Attributes:
        kind (str): "point", "ray" or "functional"
        vector (Vector): The witnessing coordinates
        claim (str): Short description of what the vector certifies
    """

    kind: str
    vector: Vector
    claim: str = field(default="")

    def __str__(self) -> str:
        return f"{self.kind} {format_vector(self.vector)}"


__all__ = [
    'Vector', 'RationalLike', 'INF_TOKEN', 'to_fraction', 'format_rational',
    'vector', 'format_vector', 'dot', 'scale_to_coprime', 'ExtendedRational',
    'Certificate'
]
