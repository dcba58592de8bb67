"""
Errors Module

Exception hierarchy shared by every asymgauge module. Invalid arguments keep
raising ``ValueError`` subclasses, so callers that only catch ``ValueError``
continue to work.

Available Classes:
    - AsymGaugeError: Root of the hierarchy
    - InputError: Malformed data, dimension mismatches, bad files
    - AxiomError: Generators that do not define an asymmetric norm
    - PreconditionError: A mathematical hypothesis of an operation fails
    - CapacityError: Enumeration caps exceeded
    - InvariantViolation: An internal self-check failed (a bug signal)
"""

from typing import Optional, Sequence


class AsymGaugeError(Exception):
    """Base class for every error raised by asymgauge."""


class InputError(AsymGaugeError, ValueError):
    """
    Raised when input data is malformed.

    Attributes:
        field (Optional[str]): Dotted path of the offending field in a file, if any
    """

    def __init__(self, message: str, field: Optional[str] = None):
        self.field = field
        if field:
            message = f"{field}: {message}"
        super().__init__(message)


class AxiomError(InputError):
    """
    Raised when a generator list fails an asymmetric-norm axiom.

    Attributes:
        axiom (str): Either "positivity" or "separation"
        witness (tuple): A vector exhibiting the failure
    """

    def __init__(self, message: str, axiom: str, witness: Sequence = ()):
        self.axiom = axiom
        self.witness = tuple(witness)
        super().__init__(message)


class PreconditionError(AsymGaugeError, ValueError):
    """Raised when an operation is called outside its hypotheses."""


class CapacityError(AsymGaugeError):
    """Raised when a combinatorial enumeration would exceed its configured cap."""


class InvariantViolation(AsymGaugeError, AssertionError):
    """Raised when a result fails its own exact re-verification."""


__all__ = [
    'AsymGaugeError', 'InputError', 'AxiomError', 'PreconditionError',
    'CapacityError', 'InvariantViolation'
]
