"""Presentations R = Q/I, their analysis, and support kernels ker(I/mI -> J/mJ)."""

from dataclasses import dataclass, field

from sympy.polys.rings import PolyElement, PolyRing

from proxysmall.config import logger
from proxysmall.errors import NotArtinian, NotContained, NotMPrimary, PresentationError
from proxysmall.gb import Ideal, TruncatedAlgebra, ideal_product_m, minimal_generators
from proxysmall.linalg import Subspace, kernel, matrix, rref
from proxysmall.models import AnalysisReport, CIStatus, PresentationEcho
from proxysmall.poly import (
    combination,
    field_of,
    homogeneous_component,
    is_homogeneous,
    madic_order,
    monomials_of_degree,
    parse,
    polynomial_ring,
    to_string,
    variable_names,
)
from proxysmall.scalar import FieldSpec
from proxysmall.utils import validate_span_dim


@dataclass
class Presentation:
    """Minimal generators f_1..f_n of I sorted by m-adic order; f_1..f_c have the least order d."""

    spec: FieldSpec
    ring: PolyRing
    generators: tuple[PolyElement, ...]
    homogeneous: bool
    minimality_certified: bool
    local_dim: int | None
    ideal: Ideal = field(repr=False)

    @property
    def variables(self) -> list[str]:
        return variable_names(self.ring)

    @property
    def e(self) -> int:
        return self.ring.ngens

    @property
    def n(self) -> int:
        return len(self.generators)

    @property
    def orders(self) -> list[int]:
        return [madic_order(f) for f in self.generators]

    @property
    def d(self) -> int:
        return self.orders[0]

    @property
    def c(self) -> int:
        return sum(1 for k in self.orders if k == self.d)

    def polynomial(self, coordinates) -> PolyElement:
        """sum c_i f_i."""
        return combination(self.ring, self.generators, coordinates)

    def echo(self) -> PresentationEcho:
        return PresentationEcho(
            field=self.spec.label,
            variables=self.variables,
            generators=[to_string(f) for f in self.generators],
            orders=self.orders,
            n=self.n,
            d=self.d,
            c=self.c,
            homogeneous=self.homogeneous,
            minimality_certified=self.minimality_certified,
        )


def _degree_rows(polys, degree: int, ring: PolyRing) -> list[list]:
    basis = monomials_of_degree(ring, degree)
    K = ring.domain
    rows = []
    for f in polys:
        part = homogeneous_component(f, degree)
        rows.append([part.get(m, K.zero) for m in basis])
    return rows


def lowest_form_rank(polys, degree: int, ring: PolyRing) -> int:
    """Rank of the degree-``degree`` components of polys."""
    rows = _degree_rows(polys, degree, ring)
    if not rows:
        return 0
    _, rank = rref(matrix(rows, len(rows[0]), field_of(ring)))
    return rank


def arrange_generators(gens: list[PolyElement]) -> list[PolyElement]:
    """Recombines the least-order generators so that their lowest forms are independent.

    The transform is invertible, so the ideal and the minimality of the set are unchanged;
    combinations whose lowest forms cancel move to higher order.
    """
    ring = gens[0].ring
    d = min(madic_order(f) for f in gens)
    low = [f for f in gens if madic_order(f) == d]
    rest = [f for f in gens if madic_order(f) != d]
    rows = _degree_rows(low, d, ring)
    width = len(rows[0])
    if lowest_form_rank(low, d, ring) == len(low):
        return list(gens)
    K = ring.domain
    augmented = [row + [K.one if j == i else K.zero for j in range(len(low))] for i, row in enumerate(rows)]
    reduced, _ = rref(matrix(augmented, width + len(low), field_of(ring)))
    transform = [row[width:] for row in reduced.to_list()]
    recombined = [combination(ring, low, coeffs) for coeffs in transform]
    logger.info("recombined %d generators of order %d to separate their lowest forms", len(low), d)
    return recombined + rest


def presentation_from_polynomials(polys, assume_minimal: bool = False) -> Presentation:
    """Minimal, arranged and ord-sorted generators of the ideal the polynomials generate."""
    polys = [f for f in polys if f]
    if not polys:
        raise PresentationError("the ideal is zero; R would be regular")
    ring = polys[0].ring
    for f in polys:
        if madic_order(f) < 2:
            raise PresentationError(f"generator {to_string(f)} has order {madic_order(f)}; I must lie in m^2")
    gens, certified = minimal_generators(polys)
    if not certified and not assume_minimal:
        raise PresentationError("minimality not certifiable for non-m-primary inhomogeneous ideal")
    gens = arrange_generators(gens)
    gens = sorted(gens, key=madic_order)
    homogeneous = all(is_homogeneous(f) for f in gens)
    source = Ideal(polys, ring)
    if homogeneous:
        local_dim = source.krull_dim()
    elif source.is_m_primary():
        local_dim = 0
    else:
        local_dim = None
    return Presentation(
        spec=field_of(ring),
        ring=ring,
        generators=tuple(gens),
        homogeneous=homogeneous,
        minimality_certified=certified,
        local_dim=local_dim,
        ideal=Ideal(gens, ring),
    )


def build_presentation(
    spec: FieldSpec,
    variables: list[str],
    generator_texts: list[str],
    assume_minimal: bool = False,
) -> Presentation:
    """Parses generator strings in a fresh ring and builds the presentation."""
    ring = polynomial_ring(tuple(variables), spec)
    return presentation_from_polynomials([parse(text, ring) for text in generator_texts], assume_minimal)


# ==================== Analysis ====================


def complete_intersection_status(P: Presentation) -> CIStatus:
    """YES when the minimal generator count equals the codimension e - dim R."""
    if P.local_dim is None:
        return CIStatus.UNKNOWN
    return CIStatus.YES if P.n == P.e - P.local_dim else CIStatus.NO


def analyze(P: Presentation, span_dim: int | None = None) -> AnalysisReport:
    """Invariants of a presentation and whether the witness construction applies."""
    error = validate_span_dim(span_dim, P.n)
    if error:
        raise PresentationError(error)
    lhs = P.n - lowest_form_rank(P.generators[: P.c], P.d, P.ring)
    ci = complete_intersection_status(P)
    equipresented = P.c == P.n
    large_support = None if span_dim is None else lhs < span_dim
    caveats = []
    if not P.minimality_certified:
        caveats.append("minimality asserted by user")
    if ci is CIStatus.UNKNOWN:
        caveats.append("complete intersection test needs a homogeneous or m-primary ideal")
    if not P.homogeneous:
        caveats.append("lhs = n - c relies on independent lowest forms of f_1..f_c (checked)")
    applicable = ci is not CIStatus.YES and (equipresented or bool(large_support))
    return AnalysisReport(
        field=P.spec.label,
        variables=P.variables,
        generators=[to_string(f) for f in P.generators],
        e=P.e,
        n=P.n,
        d=P.d,
        c=P.c,
        lhs=lhs,
        equipresented=equipresented,
        homogeneous=P.homogeneous,
        minimality_certified=P.minimality_certified,
        is_complete_intersection=ci,
        span_dim=span_dim,
        large_support=large_support,
        construction_applicable=applicable,
        caveats=caveats,
    )


# ==================== Kernels ====================


@dataclass(frozen=True)
class KernelSubspace:
    """K_J = {c in k^n : sum c_i f_i in mJ}."""

    subspace: Subspace
    ideal: Ideal
    truncation_level: int

    @property
    def dim(self) -> int:
        return self.subspace.dim


def _check_quotient(J: Ideal):
    if J.krull_dim() != 0:
        raise NotArtinian(f"Q/J has dimension {J.krull_dim()} for J = {J!r}")
    if not J.is_m_primary():
        raise NotMPrimary(f"{J!r} has zeros away from the origin")


def _truncated_image(m_ideal: Ideal) -> tuple[TruncatedAlgebra, Subspace]:
    level = m_ideal.truncation_index() - 1
    algebra = TruncatedAlgebra(m_ideal.ring, level)
    image = Subspace.from_vectors(algebra.image_of_ideal(m_ideal.generators), algebra.dimension, field_of(m_ideal.ring))
    return algebra, image


def kernel_map(P: Presentation, J: Ideal) -> KernelSubspace:
    """Kernel of I/mI -> J/mJ in the coordinates of the minimal generators of I."""
    _check_quotient(J)
    for i, f in enumerate(P.generators):
        if not J.contains(f):
            raise NotContained(f"f_{i + 1} = {to_string(f)} is not in {J!r}")
    algebra, image = _truncated_image(ideal_product_m(J))
    reduced = [image.reduce(algebra.coordinates(f)) for f in P.generators]
    rows = [[v[r] for v in reduced] for r in range(algebra.dimension) if any(v[r] for v in reduced)]
    if rows:
        subspace = kernel(matrix(rows, P.n, P.spec))
    else:
        subspace = Subspace.full(P.n, P.spec)
    logger.debug("kernel of %r: dim %d at truncation level %d", J, subspace.dim, algebra.level)
    return KernelSubspace(subspace=subspace, ideal=J, truncation_level=algebra.level)


def is_minimal_in(J: Ideal, f: PolyElement) -> bool:
    """f in J but not in mJ, decided by Gröbner membership and by the truncated model."""
    if not J.contains(f):
        raise NotContained(f"{to_string(f)} is not in {J!r}")
    _check_quotient(J)
    m_ideal = ideal_product_m(J)
    direct = not m_ideal.contains(f)
    algebra, image = _truncated_image(m_ideal)
    truncated = not image.contains(algebra.coordinates(f))
    if direct != truncated:
        raise RuntimeError(f"membership oracles disagree on {to_string(f)} in m{J!r}")
    return direct
