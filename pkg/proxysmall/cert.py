"""Witness certificates: assembly, status derivation and independent re-verification.

The verifier recomputes every claim from the ring and the recorded ideals with the Gröbner
engine, the linear algebra layer and ``kernel_map``; it never searches.
"""

from math import comb

from sympy.polys.rings import PolyElement

from proxysmall.config import CERTIFICATE_VERSION, logger
from proxysmall.errors import ProxySmallError
from proxysmall.gb import Ideal, ideal_product_m
from proxysmall.linalg import Subspace, intersect
from proxysmall.models import (
    Certificate,
    CertificateMode,
    CertificateStatus,
    CheckResult,
    CIStatus,
    SearchConfig,
    StepRecord,
    VerificationReport,
)
from proxysmall.poly import is_homogeneous, is_monomial, madic_order, parse, to_string
from proxysmall.scalar import from_string
from proxysmall.scalar import to_string as scalar_to_string
from proxysmall.support import (
    KernelSubspace,
    Presentation,
    complete_intersection_status,
    is_minimal_in,
    kernel_map,
)

PREMISE_SUPPORT = "V_R(R) is contained in V_R(M) for every proxy small R-module M"
PREMISE_CI = "V_R(R) = 0 if and only if R is a complete intersection"
PREMISE_KERNEL = "V_R(Q/J) = ker(I/mI -> J/mJ) when J contains I and is generated by a regular sequence"
PREMISE_FULL_SUPPORT = "for I = m^s, R has infinite projective dimension over Q/(f) for every f in I, so V_R(R) = V_R"


# ==================== Status ====================


def derive_status(
    mode: CertificateMode,
    ci: CIStatus,
    span_dim: int | None,
    final_dim: int,
    n: int,
    step_count: int,
) -> CertificateStatus:
    """First applicable status among CI, full support, bounded, equigenerated."""
    if ci is CIStatus.YES:
        return CertificateStatus.COMPLETE_INTERSECTION
    if step_count == 0:
        return CertificateStatus.INCONCLUSIVE
    if mode is CertificateMode.TRUNCATED and final_dim < n:
        return CertificateStatus.FULL_SUPPORT
    if span_dim is not None and final_dim < span_dim:
        return CertificateStatus.BOUNDED
    if final_dim == 0:
        return CertificateStatus.EQUIGENERATED
    return CertificateStatus.INCONCLUSIVE


def conclusive_alone(mode: CertificateMode, ci: CIStatus, span_dim: int | None, kernel_dim: int, n: int) -> bool:
    """One module already fails to be proxy small when its support misses part of V_R(R)."""
    if ci is CIStatus.YES:
        return False
    if mode is CertificateMode.TRUNCATED:
        return kernel_dim < n
    return span_dim is not None and kernel_dim < span_dim


def premises_for(mode: CertificateMode) -> list[str]:
    """Facts the conclusion of a certificate in this mode rests on."""
    premises = [PREMISE_SUPPORT, PREMISE_CI, PREMISE_KERNEL]
    if mode is CertificateMode.TRUNCATED:
        premises.append(PREMISE_FULL_SUPPORT)
    return premises


# ==================== Assembly ====================


def coordinate_strings(P: Presentation, coordinates) -> list[str]:
    return [scalar_to_string(a, P.spec) for a in coordinates]


def step_record(
    P: Presentation,
    mode: CertificateMode,
    index: int,
    K: KernelSubspace,
    running: Subspace,
    ci: CIStatus,
    span_dim: int | None = None,
    coordinates=None,
    g: PolyElement | None = None,
    linear_forms=(),
) -> StepRecord:
    """Serializable record of one quotient, its kernel and the running intersection dimension."""
    return StepRecord(
        index=index,
        coordinates=None if coordinates is None else coordinate_strings(P, coordinates),
        g=None if g is None else to_string(g),
        linear_forms=[to_string(h) for h in linear_forms],
        ideal=[to_string(h) for h in K.ideal.generators],
        truncation_level=K.truncation_level,
        kernel=K.subspace.to_strings(),
        kernel_dim=K.dim,
        running_dim=running.dim,
        conclusive_alone=conclusive_alone(mode, ci, span_dim, K.dim, P.n),
    )


def assemble_certificate(
    P: Presentation,
    mode: CertificateMode,
    steps: list[StepRecord],
    running: Subspace,
    span_dim: int | None = None,
    search: SearchConfig | None = None,
    complete: bool = True,
) -> Certificate:
    """Wraps steps into a certificate; a partial transcript is always inconclusive."""
    ci = complete_intersection_status(P)
    status = derive_status(mode, ci, span_dim, running.dim, P.n, len(steps))
    if not complete:
        status = CertificateStatus.INCONCLUSIVE
    return Certificate(
        version=CERTIFICATE_VERSION,
        mode=mode,
        presentation=P.echo(),
        is_complete_intersection=ci,
        span_dim=span_dim,
        steps=steps,
        final_intersection=running.to_strings(),
        final_dim=running.dim,
        status=status,
        complete=complete,
        search=search,
        premises=premises_for(mode),
    )


def manual_certificate(
    P: Presentation,
    ideals: list[Ideal],
    span_dim: int | None = None,
    coordinates: list | None = None,
) -> Certificate:
    """Certificate for hand-picked quotients Q/J; optional coordinates name a recorded g per quotient."""
    ci = complete_intersection_status(P)
    running = Subspace.full(P.n, P.spec)
    steps = []
    for r, J in enumerate(ideals, start=1):
        K = kernel_map(P, J)
        running = intersect(running, K.subspace)
        coords = coordinates[r - 1] if coordinates else None
        g = P.polynomial(coords) if coords is not None else None
        steps.append(
            step_record(P, CertificateMode.MANUAL, r, K, running, ci, span_dim, coordinates=coords, g=g)
        )
        logger.info("[manual] quotient %d: dim K = %d, running dim = %d", r, K.dim, running.dim)
    return assemble_certificate(P, CertificateMode.MANUAL, steps, running, span_dim)


def dump_certificate(C: Certificate) -> str:
    """Indented JSON with a trailing newline."""
    return C.model_dump_json(indent=2) + "\n"


def load_certificate(text: str) -> Certificate:
    return Certificate.model_validate_json(text)


# ==================== Verification ====================


class _Checks:
    def __init__(self):
        self.results: list[CheckResult] = []

    def add(self, step: int | None, name: str, passed: bool, detail: str = "") -> bool:
        self.results.append(CheckResult(step=step, name=name, passed=bool(passed), detail=detail))
        return bool(passed)


def _is_truncated_presentation(P: Presentation) -> bool:
    s = P.d
    return (
        all(is_monomial(f) and madic_order(f) == s for f in P.generators)
        and P.n == comb(P.e + s - 1, s)
    )


def _verify_step(
    C: Certificate,
    P: Presentation,
    record: StepRecord,
    running: Subspace,
    checks: _Checks,
) -> Subspace | None:
    r = record.index
    algorithmic = C.mode is CertificateMode.ALGORITHM
    try:
        J = Ideal([parse(text, P.ring) for text in record.ideal], P.ring)
    except ProxySmallError as e:
        checks.add(r, "ideal-parses", False, str(e))
        return None
    checks.add(r, "ideal-parses", True)

    contained = checks.add(r, "contains-I", J.contains_all(P.generators))
    artinian = checks.add(r, "artinian", J.krull_dim() == 0, f"dim Q/J = {J.krull_dim()}")
    primary = artinian and checks.add(r, "m-primary", J.is_m_primary())

    if C.mode is not CertificateMode.MANUAL:
        recorded_g = record.g is not None and record.coordinates is not None
        checks.add(r, "g-recorded", recorded_g, f"{C.mode.value} steps must record g and its coordinates")

    if record.g is not None:
        try:
            g = parse(record.g, P.ring)
        except ProxySmallError as e:
            checks.add(r, "g-parses", False, str(e))
            g = None
        if g is not None and record.coordinates is not None:
            try:
                coords = [from_string(a, P.spec) for a in record.coordinates]
            except ProxySmallError as e:
                checks.add(r, "g-coordinates", False, str(e))
            else:
                checks.add(r, "g-combination", len(coords) == P.n and P.polynomial(coords) == g)
                if algorithmic:
                    checks.add(r, "g-lowest-order-coordinates", not any(coords[P.c:]))
        if g is not None:
            order_ok = bool(g) and madic_order(g) == P.d
            if algorithmic:
                checks.add(r, "g-order", order_ok, f"ord(g) must be {P.d}")
            if contained and primary:
                try:
                    checks.add(r, "g-minimal", is_minimal_in(J, g), "g must lie in J but not in mJ")
                except ProxySmallError as e:
                    checks.add(r, "g-minimal", False, str(e))
            if algorithmic:
                try:
                    forms = [parse(text, P.ring) for text in record.linear_forms]
                except ProxySmallError as e:
                    checks.add(r, "linear-forms", False, str(e))
                else:
                    shaped = all(h and is_homogeneous(h) and madic_order(h) == 1 for h in forms)
                    checks.add(r, "linear-forms", shaped and list(J.generators) == [g, *forms])
                    checks.add(r, "linear-form-count", len(forms) == P.e - 1)

    try:
        recorded = Subspace.from_strings(record.kernel, P.n, P.spec)
    except ProxySmallError as e:
        checks.add(r, "kernel-parses", False, str(e))
        return None
    canonical = recorded.to_strings() == record.kernel
    checks.add(r, "kernel-canonical", canonical, "kernel rows must be in reduced row echelon form")
    checks.add(r, "kernel-dim", recorded.dim == record.kernel_dim)

    if contained and primary:
        K = kernel_map(P, J)
        checks.add(r, "kernel", K.subspace == recorded, f"recomputed dim {K.dim}")
        checks.add(r, "truncation-level", K.truncation_level == record.truncation_level)
    m_ideal = ideal_product_m(J)
    members = all(m_ideal.contains(P.polynomial(row)) for row in recorded.rows)
    checks.add(r, "kernel-membership", members, "each kernel vector must give an element of mJ")

    updated = intersect(running, recorded)
    checks.add(r, "running-dim", updated.dim == record.running_dim, f"recomputed {updated.dim}")
    if algorithmic or C.mode is CertificateMode.MONOMIAL:
        checks.add(r, "descent", updated.dim < running.dim, f"{running.dim} -> {updated.dim}")
    expected = conclusive_alone(C.mode, complete_intersection_status(P), C.span_dim, recorded.dim, P.n)
    checks.add(r, "conclusive-alone", expected == record.conclusive_alone)
    return updated


def verify(C: Certificate, P: Presentation) -> VerificationReport:
    """Re-checks a certificate against the ring and names every failed check."""
    checks = _Checks()
    checks.add(None, "version", C.version == CERTIFICATE_VERSION)
    checks.add(None, "presentation", C.presentation == P.echo(), "certificate was issued for another ring")
    ci = complete_intersection_status(P)
    checks.add(None, "complete-intersection", C.is_complete_intersection is ci, f"recomputed {ci.value}")
    checks.add(None, "complete", C.complete, "partial transcript")
    limit = P.c if C.mode is CertificateMode.ALGORITHM else P.n
    if C.mode is not CertificateMode.MANUAL:
        checks.add(None, "step-count", len(C.steps) <= limit, f"{len(C.steps)} steps, at most {limit}")
    if C.mode is CertificateMode.TRUNCATED:
        checks.add(None, "truncated-presentation", _is_truncated_presentation(P), "I must be a power of m")
    checks.add(None, "step-order", [s.index for s in C.steps] == list(range(1, len(C.steps) + 1)))

    running = Subspace.full(P.n, P.spec)
    broken = False
    for record in C.steps:
        updated = _verify_step(C, P, record, running, checks)
        if updated is None:
            broken = True
            break
        running = updated

    if not broken:
        checks.add(None, "final-intersection", running.to_strings() == C.final_intersection)
        checks.add(None, "final-dim", running.dim == C.final_dim)
        expected = derive_status(C.mode, ci, C.span_dim, running.dim, P.n, len(C.steps))
        if not C.complete:
            expected = CertificateStatus.INCONCLUSIVE
        checks.add(None, "status", expected is C.status, f"recomputed {expected.value}")

    passed = all(c.passed for c in checks.results)
    failed = [c.name for c in checks.results if not c.passed]
    if failed:
        logger.warning("verification failed: %s", ", ".join(failed))
    return VerificationReport(passed=passed, status=C.status, final_dim=C.final_dim, checks=checks.results)
