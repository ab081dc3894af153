"""Exact arithmetic in the residue field k: arbitrary-precision rationals or a prime field F_p.

Scalars are plain sympy domain elements (``mpq``/``PythonMPQ`` for QQ, modular integers for
GF(p)); sympy keeps them canonical, so this module only adds field bookkeeping, the
checked ``arith`` entry point, seeded sampling and the decimal string form used in files.
"""

import random
from enum import Enum
from functools import lru_cache
from typing import Optional

from pydantic import BaseModel, ConfigDict, model_validator
from sympy import isprime
from sympy.polys.domains import GF, QQ

from proxysmall.config import DEFAULT_PRIME, MAX_PRIME, MIN_RANDOM_PRIME
from proxysmall.errors import DivisionByZero, FieldMismatch, InvalidField


class FieldKind(str, Enum):
    RATIONAL = "rational"
    PRIME = "prime"


class ArithOp(str, Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"


@lru_cache(maxsize=None)
def _domain(kind: FieldKind, p: Optional[int]):
    if kind is FieldKind.RATIONAL:
        return QQ
    return GF(p, symmetric=False)


class FieldSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: FieldKind = FieldKind.RATIONAL
    p: Optional[int] = None

    @model_validator(mode="after")
    def _check_modulus(self):
        if self.kind is FieldKind.RATIONAL:
            if self.p is not None:
                raise InvalidField("the rational field takes no modulus")
            return self
        if self.p is None:
            raise InvalidField("a prime field needs a modulus")
        if not 2 < self.p < MAX_PRIME:
            raise InvalidField(f"modulus must satisfy 2 < p < 2^62, got {self.p}")
        if not isprime(self.p):
            raise InvalidField(f"modulus {self.p} is not prime")
        return self

    @classmethod
    def rational(cls) -> "FieldSpec":
        return cls(kind=FieldKind.RATIONAL)

    @classmethod
    def prime(cls, p: Optional[int] = None) -> "FieldSpec":
        return cls(kind=FieldKind.PRIME, p=DEFAULT_PRIME if p is None else p)

    @property
    def domain(self):
        return _domain(self.kind, self.p)

    @property
    def is_rational(self) -> bool:
        return self.kind is FieldKind.RATIONAL

    @property
    def label(self) -> str:
        return "QQ" if self.is_rational else f"GF({self.p})"

    @property
    def suits_random_search(self) -> bool:
        """Large enough that random linear forms are generic with high probability."""
        return self.is_rational or self.p >= MIN_RANDOM_PRIME


def _check_member(a, spec: FieldSpec):
    if not spec.domain.of_type(a):
        raise FieldMismatch(f"{a!r} is not an element of {spec.label}")


def arith(a, b, op: ArithOp, spec: FieldSpec):
    """Exact field operation; the result is canonical because the domain keeps it so."""
    _check_member(a, spec)
    _check_member(b, spec)
    op = ArithOp(op)
    if op is ArithOp.ADD:
        return a + b
    if op is ArithOp.SUB:
        return a - b
    if op is ArithOp.MUL:
        return a * b
    if not b:
        raise DivisionByZero(f"division by zero in {spec.label}")
    return spec.domain.quo(a, b)


def from_int(n: int, spec: FieldSpec):
    return spec.domain(n)


def from_fraction(numerator: int, denominator: int, spec: FieldSpec):
    """numerator/denominator as an element of the field; zero denominators raise."""
    if denominator == 0 or (not spec.is_rational and denominator % spec.p == 0):
        raise DivisionByZero(f"{numerator}/{denominator} is undefined in {spec.label}")
    if spec.is_rational:
        return QQ(numerator, denominator)
    K = spec.domain
    return K.quo(K(numerator), K(denominator))


def sample(rng: random.Random, spec: FieldSpec, bound: int):
    """Draw one scalar: uniform over F_p, or a uniform integer in [-bound, bound] over QQ."""
    if spec.is_rational:
        return QQ(rng.randint(-bound, bound))
    return spec.domain(rng.randrange(spec.p))


def to_int_pair(a, spec: FieldSpec) -> tuple[int, int]:
    """(numerator, denominator) in lowest terms; over F_p the residue in [0, p) over 1."""
    if spec.is_rational:
        return int(QQ.numer(a)), int(QQ.denom(a))
    return int(spec.domain.to_int(a)), 1


def symmetric_int(a, spec: FieldSpec) -> int:
    """Residue in (-p/2, p/2]; used only for printing polynomials readably."""
    r = int(spec.domain.to_int(a))
    return r - spec.p if r > spec.p // 2 else r


def to_string(a, spec: FieldSpec) -> str:
    """Canonical text: "n" or "n/d" with d > 1."""
    num, den = to_int_pair(a, spec)
    return str(num) if den == 1 else f"{num}/{den}"


def from_string(text: str, spec: FieldSpec):
    """Inverse of to_string; also accepts non-reduced fractions."""
    raw = text.strip()
    try:
        if "/" in raw:
            num, den = raw.split("/", 1)
            return from_fraction(int(num), int(den), spec)
        return from_int(int(raw), spec)
    except ValueError as e:
        raise FieldMismatch(f"{text!r} is not a scalar of {spec.label}") from e


def spec_of_domain(domain) -> FieldSpec:
    """FieldSpec behind a sympy domain."""
    if domain == QQ:
        return FieldSpec.rational()
    return FieldSpec.prime(int(domain.mod))
