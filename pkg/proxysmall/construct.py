"""Witness construction: random hypersurface quotients, the intersection loop, and the two
deterministic recipes (squarefree-style monomial ideals and powers of the maximal ideal)."""

import random

from sympy.polys.rings import PolyElement

from proxysmall.cert import assemble_certificate, step_record
from proxysmall.config import COEFF_BOUND_BLOCK, logger
from proxysmall.errors import (
    DegenerateParameters,
    MissingSpanBound,
    NotContained,
    NotMonomial,
    OrderTooSmall,
    PresentationError,
    SearchExhausted,
    SupportsComparable,
)
from proxysmall.gb import Ideal, power_of_maximal
from proxysmall.linalg import Subspace, coordinate_subspace, intersect, restrict_to_coordinates
from proxysmall.models import Certificate, CertificateMode, CIStatus, SearchConfig
from proxysmall.poly import is_monomial, linear_form, madic_order, polynomial_ring, support, to_string
from proxysmall.scalar import FieldSpec, sample
from proxysmall.support import (
    KernelSubspace,
    Presentation,
    complete_intersection_status,
    is_minimal_in,
    kernel_map,
    presentation_from_polynomials,
)
from proxysmall.utils import one_based, validate_span_dim


# ==================== Hypersurface quotients ====================


def _admissible(P: Presentation, J: Ideal, g: PolyElement) -> bool:
    if not J.contains_all(P.generators):
        return False
    if J.krull_dim() != 0:
        return False
    if not J.is_m_primary():
        return False
    return is_minimal_in(J, g)


def find_hypersurface_quotient(
    P: Presentation,
    g: PolyElement,
    cfg: SearchConfig,
    rng: random.Random | None = None,
) -> Ideal:
    """J = (g, l_2, ..., l_e) with random linear forms, accepted once Q/J is an artinian local
    quotient of Q/I in which g stays a minimal generator."""
    if not g or madic_order(g) < 2:
        raise OrderTooSmall("g must have m-adic order at least 2")
    if not P.ideal.contains(g):
        raise NotContained(f"{to_string(g)} is not in I")
    if rng is None:
        rng = random.Random(cfg.seed)
    if not P.spec.suits_random_search:
        logger.warning("%s is small; random linear forms often fail to be generic", P.spec.label)

    bound = cfg.coeff_bound
    for attempt in range(cfg.max_attempts):
        if P.spec.is_rational and attempt and attempt % COEFF_BOUND_BLOCK == 0:
            bound *= 2
        forms = []
        for _ in range(P.e - 1):
            forms.append(linear_form(P.ring, [sample(rng, P.spec, bound) for _ in range(P.e)]))
        if not all(forms):
            continue
        J = Ideal([g, *forms], P.ring)
        if _admissible(P, J, g):
            logger.debug("quotient for %s accepted after %d attempts", to_string(g), attempt + 1)
            return J
    raise SearchExhausted(
        f"no admissible quotient for g = {to_string(g)} after {cfg.max_attempts} attempts; "
        "try a larger prime field or a larger --coeff-bound"
    )


# ==================== Intersection loop ====================


def _next_generator(P: Presentation, restricted: Subspace):
    for row in restricted.rows:
        g = P.polynomial(row)
        if g and madic_order(g) == P.d:
            return row, g
        logger.info("skipping a combination whose order jumps above %d", P.d)
    return None, None


def construct_witnesses(P: Presentation, cfg: SearchConfig) -> Certificate:
    """Adds quotients Q/J_r until the running intersection of kernels meets span{e_1..e_c} in zero."""
    span_dim = cfg.span_dim
    error = validate_span_dim(span_dim, P.n)
    if error:
        raise PresentationError(error)
    if P.c < P.n and span_dim is None:
        raise MissingSpanBound(
            f"only {P.c} of {P.n} generators have the least order {P.d}; supply a span bound s"
        )
    tag = f"seed={cfg.seed}"
    ci = complete_intersection_status(P)
    if ci is CIStatus.YES:
        logger.info("[%s] complete intersection: the certificate will claim no witness", tag)
    rng = random.Random(cfg.seed)
    lowest = range(P.c)
    running = Subspace.full(P.n, P.spec)
    steps = []

    while True:
        restricted = restrict_to_coordinates(running, lowest)
        if restricted.dim == 0:
            break
        coords, g = _next_generator(P, restricted)
        if g is None:
            logger.warning("[%s] no combination of minimal order is left", tag)
            break
        index = len(steps) + 1
        try:
            J = find_hypersurface_quotient(P, g, cfg, rng)
        except SearchExhausted as e:
            partial = assemble_certificate(
                P, CertificateMode.ALGORITHM, steps, running, span_dim, search=cfg, complete=False
            )
            raise SearchExhausted(str(e), partial=partial) from e
        K = kernel_map(P, J)
        updated = intersect(running, K.subspace)
        if updated.dim >= running.dim:
            raise RuntimeError(f"step {index} did not shrink the intersection")
        running = updated
        steps.append(
            step_record(
                P,
                CertificateMode.ALGORITHM,
                index,
                K,
                running,
                ci,
                span_dim,
                coordinates=coords,
                g=g,
                linear_forms=J.generators[1:],
            )
        )
        logger.info("[%s] step %d: g = %s, dim K = %d, running dim = %d", tag, index, to_string(g), K.dim, running.dim)

    return assemble_certificate(P, CertificateMode.ALGORITHM, steps, running, span_dim, search=cfg)


# ==================== Monomial recipe ====================


def monomial_quotient(f: PolyElement) -> Ideal:
    """(f) + (x_p - x_i : x_i in supp f, i != p) + (x_j : x_j not in supp f), p the first support index."""
    ring = f.ring
    indices = sorted(support(f))
    p = indices[0]
    gens = ring.gens
    forms = [gens[p] - gens[i] for i in indices[1:]]
    forms += [gens[j] for j in range(ring.ngens) if j not in indices]
    return Ideal([f, *forms], ring)


def monomial_witnesses(P: Presentation) -> Certificate:
    """One quotient per generator; kernel i is the coordinate hyperplane {a_i = 0}.

    Needs every generator whose support sits inside the support of f to have degree above deg f;
    squarefree ideals satisfy this because their supports are pairwise incomparable.
    """
    for f in P.generators:
        if not is_monomial(f):
            raise NotMonomial(f"{to_string(f)} is not a monomial")
    supports = [support(f) for f in P.generators]
    degrees = [sum(f.LM) for f in P.generators]
    for i in range(P.n):
        for j in range(P.n):
            if i != j and supports[j] <= supports[i] and degrees[j] <= degrees[i]:
                first, second = sorted((i, j))
                raise SupportsComparable(to_string(P.generators[first]), to_string(P.generators[second]))

    ci = complete_intersection_status(P)
    K_field = P.spec.domain
    running = Subspace.full(P.n, P.spec)
    steps = []
    for i, f in enumerate(P.generators):
        J = monomial_quotient(f)
        hyperplane = coordinate_subspace([j for j in range(P.n) if j != i], P.n, P.spec)
        logger.debug("[monomial] quotient %d: kernel spans coordinates %s", i + 1, one_based(hyperplane.pivots))
        K = KernelSubspace(subspace=hyperplane, ideal=J, truncation_level=sum(f.LM))
        running = intersect(running, hyperplane)
        coords = [K_field.one if j == i else K_field.zero for j in range(P.n)]
        steps.append(
            step_record(P, CertificateMode.MONOMIAL, i + 1, K, running, ci, coordinates=coords, g=f)
        )
    logger.info("[monomial] %d quotients, running dim %d", len(steps), running.dim)
    return assemble_certificate(P, CertificateMode.MONOMIAL, steps, running)


# ==================== Powers of the maximal ideal ====================


def truncated_presentation(d: int, s: int, spec: FieldSpec | None = None) -> Presentation:
    """I = m^s in k[x1..xd]."""
    if d < 2 or s < 2:
        raise DegenerateParameters(f"truncated rings need d >= 2 and s >= 2, got d={d}, s={s}")
    ring = polynomial_ring(tuple(f"x{i}" for i in range(1, d + 1)), spec or FieldSpec.rational())
    return presentation_from_polynomials(power_of_maximal(ring, s).generators)


def truncated_witness(d: int, s: int, spec: FieldSpec | None = None) -> Certificate:
    """Certificate for m^s in d variables from the single quotient (x_1^s, x_2, ..., x_d)."""
    P = truncated_presentation(d, s, spec)
    x = P.ring.gens
    J = Ideal([x[0] ** s, *x[1:]], P.ring)
    ci = complete_intersection_status(P)
    K = kernel_map(P, J)
    running = intersect(Subspace.full(P.n, P.spec), K.subspace)
    g = x[0] ** s
    coords = [P.spec.domain.one if f == g else P.spec.domain.zero for f in P.generators]
    step = step_record(P, CertificateMode.TRUNCATED, 1, K, running, ci, coordinates=coords, g=g)
    return assemble_certificate(P, CertificateMode.TRUNCATED, [step], running)
