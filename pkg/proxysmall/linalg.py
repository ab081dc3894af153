"""Exact dense linear algebra over k on top of sympy's DomainMatrix.

Subspaces of k^n are kept in reduced row echelon form, so equal subspaces have equal rows and
comparisons in certificates are structural.
"""

from dataclasses import dataclass

from sympy.polys.matrices import DomainMatrix

from proxysmall.errors import AmbientMismatch, FieldMismatch
from proxysmall.scalar import FieldSpec, from_string, spec_of_domain
from proxysmall.scalar import to_string as scalar_to_string


def matrix(rows, ncols: int, spec: FieldSpec) -> DomainMatrix:
    """DomainMatrix over the field of spec from rows of domain elements."""
    rows = [list(r) for r in rows]
    return DomainMatrix(rows, (len(rows), ncols), spec.domain)


def rref(M: DomainMatrix) -> tuple[DomainMatrix, int]:
    """Reduced row echelon form and rank."""
    if M.shape[0] == 0 or M.shape[1] == 0:
        return M, 0
    reduced, pivots = M.rref()
    return reduced, len(pivots)


def _echelon_rows(M: DomainMatrix) -> tuple[tuple, ...]:
    reduced, rank = rref(M)
    if rank == 0:
        return ()
    return tuple(tuple(row) for row in reduced.to_list()[:rank])


def _pivot(row) -> int:
    return next(i for i, a in enumerate(row) if a)


@dataclass(frozen=True)
class Subspace:
    ambient: int
    rows: tuple[tuple, ...]
    spec: FieldSpec

    @classmethod
    def from_vectors(cls, vectors, ambient: int, spec: FieldSpec) -> "Subspace":
        vectors = [list(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient:
                raise AmbientMismatch(f"vector of length {len(v)} in k^{ambient}")
        if not vectors:
            return cls(ambient, (), spec)
        return cls(ambient, _echelon_rows(matrix(vectors, ambient, spec)), spec)

    @classmethod
    def full(cls, ambient: int, spec: FieldSpec) -> "Subspace":
        K = spec.domain
        rows = tuple(tuple(K.one if j == i else K.zero for j in range(ambient)) for i in range(ambient))
        return cls(ambient, rows, spec)

    @classmethod
    def zero(cls, ambient: int, spec: FieldSpec) -> "Subspace":
        return cls(ambient, (), spec)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> list[int]:
        return [_pivot(row) for row in self.rows]

    def reduce(self, v) -> list:
        """Remainder of v after clearing every pivot column; zero iff v lies in the subspace."""
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            a = v[p]
            if a:
                v = [x - a * y for x, y in zip(v, row)]
        return v

    def contains(self, v) -> bool:
        return not any(self.reduce(v))

    def annihilator(self) -> "Subspace":
        """Linear equations cutting out this subspace, as a subspace of the dual."""
        if not self.rows:
            return Subspace.full(self.ambient, self.spec)
        return kernel(matrix(self.rows, self.ambient, self.spec))

    def to_strings(self) -> list[list[str]]:
        return [[scalar_to_string(a, self.spec) for a in row] for row in self.rows]

    @classmethod
    def from_strings(cls, rows: list[list[str]], ambient: int, spec: FieldSpec) -> "Subspace":
        return cls.from_vectors([[from_string(a, spec) for a in row] for row in rows], ambient, spec)


def kernel(M: DomainMatrix) -> Subspace:
    """Right null space: one basis vector per free column, then canonicalised."""
    spec = spec_of_domain(M.domain)
    nrows, ncols = M.shape
    if nrows == 0:
        return Subspace.full(ncols, spec)
    reduced, rank = rref(M)
    rows = reduced.to_list()[:rank]
    pivots = [_pivot(row) for row in rows]
    K = spec.domain
    vectors = []
    for free in range(ncols):
        if free in pivots:
            continue
        v = [K.zero] * ncols
        v[free] = K.one
        for row, p in zip(rows, pivots):
            v[p] = -row[free]
        vectors.append(v)
    return Subspace.from_vectors(vectors, ncols, spec)


def _check_compatible(U: Subspace, V: Subspace):
    if U.ambient != V.ambient:
        raise AmbientMismatch(f"subspaces of k^{U.ambient} and k^{V.ambient}")
    if U.spec != V.spec:
        raise FieldMismatch(f"subspaces over {U.spec.label} and {V.spec.label}")


def intersect(U: Subspace, V: Subspace) -> Subspace:
    """U ∩ V as the kernel of both annihilators stacked."""
    _check_compatible(U, V)
    constraints = U.annihilator().rows + V.annihilator().rows
    if not constraints:
        return Subspace.full(U.ambient, U.spec)
    return kernel(matrix(constraints, U.ambient, U.spec))


def coordinate_subspace(indices, ambient: int, spec: FieldSpec) -> Subspace:
    """span{e_i : i in indices}, 0-based."""
    K = spec.domain
    chosen = sorted(set(indices))
    for i in chosen:
        if not 0 <= i < ambient:
            raise AmbientMismatch(f"coordinate {i + 1} outside k^{ambient}")
    rows = [[K.one if j == i else K.zero for j in range(ambient)] for i in chosen]
    return Subspace.from_vectors(rows, ambient, spec)


def restrict_to_coordinates(U: Subspace, indices) -> Subspace:
    """Vectors of U supported on the given 0-based coordinates."""
    return intersect(U, coordinate_subspace(indices, U.ambient, U.spec))
