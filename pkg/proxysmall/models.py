from enum import Enum
from typing import Dict, List, Optional, Union

from pydantic import BaseModel, Field, field_validator

from proxysmall.config import CERTIFICATE_VERSION, DEFAULT_COEFF_BOUND, DEFAULT_MAX_ATTEMPTS, DEFAULT_SEED
from proxysmall.scalar import FieldSpec


class CIStatus(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


class CertificateMode(str, Enum):
    ALGORITHM = "algorithm"
    MONOMIAL = "monomial"
    TRUNCATED = "truncated"
    MANUAL = "manual"


class CertificateStatus(str, Enum):
    EQUIGENERATED = "witness-found-equigenerated"
    BOUNDED = "witness-found-bounded"
    FULL_SUPPORT = "witness-found-full-support"
    INCONCLUSIVE = "inconclusive"
    COMPLETE_INTERSECTION = "complete-intersection"


STATUS_LABELS = {
    CertificateStatus.EQUIGENERATED: "witness found: the kernels intersect in zero",
    CertificateStatus.BOUNDED: "witness found: the intersection is smaller than the span bound",
    CertificateStatus.FULL_SUPPORT: "witness found: the ring has full cohomological support",
    CertificateStatus.INCONCLUSIVE: "inconclusive: the intersection is too large",
    CertificateStatus.COMPLETE_INTERSECTION: "complete intersection: no witness exists",
}

WITNESS_STATUSES = {
    CertificateStatus.EQUIGENERATED,
    CertificateStatus.BOUNDED,
    CertificateStatus.FULL_SUPPORT,
}


# --- Input files ---

class RingFile(BaseModel):
    field: Union[str, Dict[str, int]] = "QQ"
    variables: List[str]
    generators: List[str]
    assume_minimal: bool = False
    span_dim: Optional[int] = None

    @field_validator("field")
    @classmethod
    def _check_field(cls, value):
        if isinstance(value, str):
            if value not in ("QQ", "Fp"):
                raise ValueError('field must be "QQ", "Fp" or {"Fp": p}')
        elif set(value) != {"Fp"}:
            raise ValueError('a prime field is written {"Fp": p}')
        return value

    def field_spec(self) -> FieldSpec:
        if self.field == "QQ":
            return FieldSpec.rational()
        if self.field == "Fp":
            return FieldSpec.prime()
        return FieldSpec.prime(self.field["Fp"])


class ComplexFile(BaseModel):
    """A simplicial complex by its facets; vertices become the variables."""

    field: Union[str, Dict[str, int]] = "QQ"
    vertices: List[str]
    facets: List[List[str]]


# --- Reports ---

class AnalysisReport(BaseModel):
    field: str
    variables: List[str]
    generators: List[str]
    e: int
    n: int
    d: int
    c: int
    lhs: int
    equipresented: bool
    homogeneous: bool
    minimality_certified: bool
    is_complete_intersection: CIStatus
    span_dim: Optional[int] = None
    large_support: Optional[bool] = None
    construction_applicable: bool
    caveats: List[str] = []


# --- Certificates ---

class PresentationEcho(BaseModel):
    field: str
    variables: List[str]
    generators: List[str]
    orders: List[int]
    n: int
    d: int
    c: int
    homogeneous: bool
    minimality_certified: bool


class StepRecord(BaseModel):
    index: int
    coordinates: Optional[List[str]] = None
    g: Optional[str] = None
    linear_forms: List[str] = []
    ideal: List[str]
    truncation_level: int
    kernel: List[List[str]]
    kernel_dim: int
    running_dim: int
    conclusive_alone: bool = False


class SearchConfig(BaseModel):
    seed: int = DEFAULT_SEED
    max_attempts: int = Field(DEFAULT_MAX_ATTEMPTS, ge=1)
    coeff_bound: int = Field(DEFAULT_COEFF_BOUND, ge=1)
    span_dim: Optional[int] = Field(None, ge=1)


class Certificate(BaseModel):
    version: int = CERTIFICATE_VERSION
    mode: CertificateMode
    presentation: PresentationEcho
    is_complete_intersection: CIStatus
    span_dim: Optional[int] = None
    steps: List[StepRecord] = []
    final_intersection: List[List[str]]
    final_dim: int
    status: CertificateStatus
    complete: bool = True
    search: Optional[SearchConfig] = None
    premises: List[str] = []


class CheckResult(BaseModel):
    step: Optional[int] = None
    name: str
    passed: bool
    detail: str = ""


class VerificationReport(BaseModel):
    passed: bool
    status: CertificateStatus
    final_dim: int
    checks: List[CheckResult]

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]
