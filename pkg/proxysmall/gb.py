"""Gröbner engine over sympy's Buchberger implementation.

Everything local is answered globally: the only membership questions the pipeline asks are
about ideals containing a power of m, where polynomial-ring membership and local membership
agree.
"""

import threading
from itertools import combinations

from sympy.polys.groebnertools import groebner as _groebner
from sympy.polys.groebnertools import is_groebner, is_reduced
from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import PolyElement, PolyRing

from proxysmall.config import logger
from proxysmall.errors import ArityMismatch, EmptyAfterTrim, FieldMismatch, NotMPrimary
from proxysmall.linalg import Subspace
from proxysmall.poly import (
    divides,
    field_of,
    is_homogeneous,
    is_monomial,
    madic_order,
    monomial,
    monomials_of_degree,
    monomials_up_to,
    sort_monomials,
    to_string,
    total_degree,
)


def _check_ring(f: PolyElement, ring: PolyRing):
    if f.ring == ring:
        return
    if f.ring.ngens != ring.ngens:
        raise ArityMismatch(f"polynomial in {f.ring.ngens} variables, ideal in {ring.ngens}")
    if f.ring.domain != ring.domain:
        raise FieldMismatch(f"polynomial over {f.ring.domain}, ideal over {ring.domain}")
    raise ArityMismatch("polynomial and ideal use different variables")


class Ideal:
    """Generators plus a reduced Gröbner basis computed on first demand."""

    def __init__(self, generators, ring: PolyRing | None = None):
        generators = tuple(generators)
        if ring is None:
            if not generators:
                raise ValueError("an ideal without generators needs an explicit ring")
            ring = generators[0].ring
        for g in generators:
            _check_ring(g, ring)
        self.ring = ring
        self.generators = generators
        self._basis: list[PolyElement] | None = None
        self._lock = threading.Lock()

    def __repr__(self):
        return f"({', '.join(to_string(g) for g in self.generators)})"

    @property
    def arity(self) -> int:
        return self.ring.ngens

    def basis(self) -> list[PolyElement]:
        if self._basis is None:
            with self._lock:
                if self._basis is None:
                    nonzero = [g for g in self.generators if g]
                    basis = _groebner(nonzero, self.ring, method="buchberger") if nonzero else []
                    logger.debug("groebner: %d generators -> %d basis elements", len(nonzero), len(basis))
                    self._basis = basis
        return list(self._basis)

    def normal_form(self, f: PolyElement) -> PolyElement:
        _check_ring(f, self.ring)
        basis = self.basis()
        return f.rem(basis) if basis and f else f

    def contains(self, f: PolyElement) -> bool:
        return not self.normal_form(f)

    def contains_all(self, polys) -> bool:
        return all(self.contains(f) for f in polys)

    def is_unit(self) -> bool:
        return any(g.LM == self.ring.zero_monom for g in self.basis())

    def leading_monomials(self) -> list[tuple[int, ...]]:
        return [g.LM for g in self.basis()]

    def krull_dim(self) -> int:
        """Largest set of variables carrying no leading monomial; -1 for the unit ideal."""
        if self.is_unit():
            return -1
        leads = [frozenset(i for i, a in enumerate(m) if a) for m in self.leading_monomials()]
        n = self.arity
        for size in range(n, -1, -1):
            for chosen in combinations(range(n), size):
                free = frozenset(chosen)
                if not any(lead <= free for lead in leads):
                    return size
        return 0

    def standard_monomials(self) -> list[tuple[int, ...]]:
        """Monomials outside the leading-term ideal, descending. Requires krull_dim 0."""
        if self.krull_dim() != 0:
            raise NotMPrimary("standard monomials are infinite unless the quotient is artinian")
        leads = self.leading_monomials()
        n = self.arity
        found = {self.ring.zero_monom}
        frontier = [self.ring.zero_monom]
        while frontier:
            next_frontier = []
            for mon in frontier:
                for i in range(n):
                    up = tuple(a + (1 if j == i else 0) for j, a in enumerate(mon))
                    if up in found or any(divides(lead, up) for lead in leads):
                        continue
                    found.add(up)
                    next_frontier.append(up)
            frontier = next_frontier
        return sort_monomials(found, self.ring)

    def multiplication_matrix(self, i: int) -> DomainMatrix:
        """Matrix of multiplication by x_i on Q/I in the standard-monomial basis (columns = images)."""
        basis = self.standard_monomials()
        position = {m: j for j, m in enumerate(basis)}
        K = self.ring.domain
        cols = []
        for m in basis:
            image = self.normal_form(monomial(self.ring, m) * self.ring.gens[i])
            col = [K.zero] * len(basis)
            for mon, c in image.items():
                col[position[mon]] = c
            cols.append(col)
        rows = [[cols[j][r] for j in range(len(basis))] for r in range(len(basis))]
        return DomainMatrix(rows, (len(basis), len(basis)), K)

    def nilpotency_indices(self) -> list[int] | None:
        """Least k with x_i^k in I for every variable, or None if some x_i is not nilpotent on Q/I.

        x_i^k lies in I exactly when the k-th power of its multiplication matrix vanishes; a
        nilpotent operator on a space of dimension N has vanishing N-th power.
        """
        if self.krull_dim() != 0:
            return None
        size = len(self.standard_monomials())
        indices = []
        for i in range(len(self.ring.gens)):
            M = self.multiplication_matrix(i)
            power, k = M, 1
            while not power.is_zero_matrix:
                if k >= size:
                    return None
                power = power.matmul(M)
                k += 1
            indices.append(k)
        return indices

    def is_m_primary(self) -> bool:
        return self.nilpotency_indices() is not None

    def truncation_index(self) -> int:
        """Least N with m^N contained in the ideal."""
        indices = self.nilpotency_indices()
        if indices is None:
            raise NotMPrimary(f"{self!r} is not primary to the maximal ideal")
        start = max(total_degree(m) for m in self.standard_monomials()) + 1
        upper = 1 + sum(k - 1 for k in indices)
        for level in range(start, upper + 1):
            if all(self.contains(monomial(self.ring, m)) for m in monomials_of_degree(self.ring, level)):
                return level
        return upper


# ==================== Module-level operations ====================


def groebner(ideal: Ideal) -> list[PolyElement]:
    return ideal.basis()


def normal_form(f: PolyElement, ideal: Ideal) -> PolyElement:
    return ideal.normal_form(f)


def contains(ideal: Ideal, f: PolyElement) -> bool:
    return ideal.contains(f)


def krull_dim(ideal: Ideal) -> int:
    return ideal.krull_dim()


def is_m_primary(ideal: Ideal) -> bool:
    return ideal.is_m_primary()


def truncation_index(ideal: Ideal) -> int:
    return ideal.truncation_index()


def satisfies_buchberger_criterion(basis: list[PolyElement], ring: PolyRing) -> bool:
    """Every S-polynomial of the basis reduces to zero."""
    return is_groebner(list(basis), ring)


def is_reduced_basis(basis: list[PolyElement], ring: PolyRing) -> bool:
    """Monic basis where no term of an element is divisible by another element's leading monomial."""
    return is_reduced(list(basis), ring)


def power_of_maximal(ring: PolyRing, s: int) -> Ideal:
    """m^s, generated by the monomials of degree s."""
    return Ideal([monomial(ring, m) for m in monomials_of_degree(ring, s)], ring)


def ideal_sum(first: Ideal, second: Ideal) -> Ideal:
    """I + J over the same ring."""
    _check_ring(second.ring.one, first.ring)
    return Ideal(first.generators + second.generators, first.ring)


def ideal_product_m(ideal: Ideal) -> Ideal:
    """m·I, generated by x_i·g over every generator g and every variable x_i."""
    ring = ideal.ring
    return Ideal([x * g for g in ideal.generators for x in ring.gens], ring)


# ==================== Truncated algebra ====================


class TruncatedAlgebra:
    """Q/m^(N+1) with the basis of monomials of degree at most N."""

    def __init__(self, ring: PolyRing, level: int):
        self.ring = ring
        self.level = level
        self.basis = monomials_up_to(ring, level)
        self.index = {m: i for i, m in enumerate(self.basis)}

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def coordinates(self, f: PolyElement) -> list:
        row = [self.ring.domain.zero] * self.dimension
        for m, c in f.items():
            i = self.index.get(m)
            if i is not None:
                row[i] = c
        return row

    def image_of_ideal(self, generators) -> list[list]:
        """Truncated images of mu·h for every generator h and every monomial mu with mu·h below the cut."""
        rows = []
        for h in generators:
            if not h:
                continue
            room = self.level - madic_order(h)
            if room < 0:
                continue
            for mu in monomials_up_to(self.ring, room):
                rows.append(self.coordinates(monomial(self.ring, mu) * h))
        return rows


# ==================== Minimal generators ====================


def _trim_globally(gens: list[PolyElement]) -> list[PolyElement]:
    kept = list(gens)
    for i in range(len(kept) - 1, -1, -1):
        others = kept[:i] + kept[i + 1:]
        if others and Ideal(others, kept[i].ring).contains(kept[i]):
            del kept[i]
    return kept


def _trim_monomials(gens: list[PolyElement]) -> list[PolyElement]:
    kept: list[PolyElement] = []
    for i, g in enumerate(gens):
        dividers = [h for j, h in enumerate(gens) if j != i and divides(h.LM, g.LM)]
        if any(h.LM != g.LM for h in dividers):
            continue
        if any(h.LM == g.LM for h in kept):
            continue
        kept.append(g)
    return kept


def _trim_locally(gens: list[PolyElement], ideal: Ideal) -> list[PolyElement]:
    spec = field_of(ideal.ring)
    m_ideal = ideal_product_m(ideal)
    algebra = TruncatedAlgebra(ideal.ring, m_ideal.truncation_index() - 1)
    running = Subspace.from_vectors(algebra.image_of_ideal(m_ideal.generators), algebra.dimension, spec)
    kept = []
    for g in gens:
        v = algebra.coordinates(g)
        if not running.contains(v):
            kept.append(g)
            running = Subspace.from_vectors([*running.rows, v], algebra.dimension, spec)
    return kept


def minimal_generators(gens) -> tuple[list[PolyElement], bool]:
    """A minimal generating subset and whether its minimality is certified.

    Monomial and homogeneous inputs are trimmed exactly; inhomogeneous m-primary input is trimmed
    in I/mI through a truncated algebra; anything else is trimmed globally and left uncertified.
    """
    nonzero = [g for g in gens if g]
    if not nonzero:
        raise EmptyAfterTrim("the generators span the zero ideal")
    if all(is_monomial(g) for g in nonzero):
        return _trim_monomials(nonzero), True
    if all(is_homogeneous(g) for g in nonzero):
        return _trim_globally(nonzero), True
    ideal = Ideal(nonzero)
    if ideal.is_m_primary():
        return _trim_locally(nonzero, ideal), True
    logger.warning("minimality of %d inhomogeneous generators is not certified", len(nonzero))
    return _trim_globally(nonzero), False
