"""
Serialization Module

pydantic models for gauge files, operator files and every machine-readable
report. Rationals travel as "p/q" strings (bare JSON integers are accepted on
input) and divergent suprema as the literal token "+inf".

Available Functions:
    - parse_model(model, text, source): Validate JSON text, mapping failures to InputError

Available Classes:
    - GaugeFile: {"dim", "generators", "label"}
    - OperatorFile: {"matrix", "domain", "codomain"}
    - CertificateModel: A point, ray or functional certificate
    - ClassifyReport, IndexReport, DualNormReport, OpNormView,
      WitnessReport, PerturbReport, SuiteResult, CampaignReport: Command reports
"""

from fractions import Fraction
from typing import Annotated, Any, List, Optional, Tuple, Type, TypeVar, Union

from pydantic import BaseModel, BeforeValidator, ConfigDict, PlainSerializer, ValidationError

from .errors import InputError
from .gauge import PolyhedralGauge, new_gauge
from .rationals import Certificate, ExtendedRational, format_rational, to_fraction

ModelT = TypeVar("ModelT", bound=BaseModel)


def _parse_rational(value: Any) -> Fraction:
    return to_fraction(value)


def _parse_extended(value: Any) -> ExtendedRational:
    if isinstance(value, ExtendedRational):
        return value
    if isinstance(value, str):
        return ExtendedRational.parse(value)
    return ExtendedRational(to_fraction(value))


Rational = Annotated[
    Fraction,
    BeforeValidator(_parse_rational),
    PlainSerializer(format_rational, return_type=str),
]
Extended = Annotated[
    ExtendedRational,
    BeforeValidator(_parse_extended),
    PlainSerializer(str, return_type=str),
]


class _Model(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, extra="forbid")


class GaugeFile(_Model):
    """
    On-disk form of a polyhedral gauge.

    Example:
        >>> GaugeFile.model_validate({"dim": 1, "generators": [["0"], [1]]}).to_gauge().dim
        1
    """

    dim: int
    generators: List[List[Rational]]
    label: str = ""

    def to_gauge(self) -> PolyhedralGauge:
        return new_gauge(self.dim, self.generators, self.label)

    @classmethod
    def from_gauge(cls, g: PolyhedralGauge) -> "GaugeFile":
        return cls(dim=g.dim, generators=[list(a) for a in g.generators], label=g.label)


class OperatorFile(_Model):
    """
    On-disk form of a linear operator.

    ``domain`` and ``codomain`` are a gauge file path (relative paths resolve
    against the operator file's directory), a fixture name such as
    "weighted_linf:3", or an inline gauge object.
    """

    matrix: List[List[Rational]]
    domain: Union[GaugeFile, str]
    codomain: Union[GaugeFile, str]


class CertificateModel(_Model):
    kind: str
    vector: List[Rational]
    claim: str = ""

    @classmethod
    def from_certificate(cls, certificate: Certificate) -> "CertificateModel":
        return cls(kind=certificate.kind, vector=list(certificate.vector), claim=certificate.claim)


def certificate_model(certificate: Optional[Certificate]) -> Optional[CertificateModel]:
    return None if certificate is None else CertificateModel.from_certificate(certificate)


class ClassifyReport(_Model):
    label: str
    dim: int
    c: Rational
    minimizer: List[Rational]
    t1: bool
    t1_certificate: Optional[List[Rational]] = None
    bounded_ball: bool
    dual_cone_full: bool
    space_type: str


class IndexReport(_Model):
    label: str
    c: Rational
    minimizer: List[Rational]
    sup_reverse: Extended
    sup_certificate: CertificateModel
    identity_holds: Optional[bool] = None


class DualNormReport(_Model):
    functional: List[Rational]
    flat_norm: Extended
    certificate: CertificateModel
    in_dual_cone: bool
    star_norm: Rational


class OpNormView(_Model):
    matrix: List[List[Rational]]
    lc_norm: Extended
    certificate: CertificateModel
    ls_norm: Rational
    continuous: bool


class WitnessReport(_Model):
    matrix: List[List[Rational]]
    functional: List[Rational]
    direction: List[Rational]
    lc_norm: Rational
    reverse_lc_norm: Extended
    discontinuity_ray: List[Rational]


class PerturbReport(_Model):
    epsilon: Rational
    perturbation: List[List[Rational]]
    result: List[List[Rational]]
    perturbation_lc_norm: Rational
    result_lc_norm: Rational
    reverse_result_lc_norm: Extended
    discontinuity_ray: List[Rational]


class SuiteResult(_Model):
    name: str
    passed: int
    failed: int
    counterexample: Optional[str] = None


class CampaignReport(_Model):
    seed: int
    cases: int
    dim_range: Tuple[int, int]
    suites: List[SuiteResult]

    @property
    def ok(self) -> bool:
        return all(suite.failed == 0 for suite in self.suites)


def _location(loc: Tuple[Union[int, str], ...]) -> str:
    # pydantic appends union member names to the location
    parts = [str(part) for part in loc if part not in ("GaugeFile", "str")]
    return ".".join(parts)


def parse_model(model: Type[ModelT], text: str, source: str = "input") -> ModelT:
    """
    Validate JSON text against a model, reporting the first failing field.

    Args:
        model (Type[ModelT]): The pydantic model class
        text (str): JSON document
        source (str, optional): Name used in the diagnostic. Defaults to "input"

    Returns:
        ModelT: The validated model

    Raises:
        InputError: With a message such as
            "generators.2.1: malformed rational '1//3' (in ball.json)"
    """
    try:
        return model.model_validate_json(text)
    except ValidationError as exc:
        error = exc.errors()[0]
        message = str(error["msg"])
        if message.startswith("Value error, "):
            message = message[len("Value error, "):]
        field = _location(tuple(error["loc"])) or None
        raise InputError(f"{message} (in {source})", field) from None


__all__ = [
    'Rational', 'Extended', 'GaugeFile', 'OperatorFile', 'CertificateModel',
    'certificate_model', 'ClassifyReport', 'IndexReport', 'DualNormReport',
    'OpNormView', 'WitnessReport', 'PerturbReport', 'SuiteResult',
    'CampaignReport', 'parse_model'
]
