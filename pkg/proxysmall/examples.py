"""Bundled worked examples: ring files plus hand-encoded or generated certificates."""

from dataclasses import dataclass
from itertools import combinations

from pydantic import ValidationError

from proxysmall.cert import manual_certificate
from proxysmall.construct import construct_witnesses, monomial_witnesses, truncated_presentation, truncated_witness
from proxysmall.errors import DegenerateParameters, InputFileError, UnknownExample
from proxysmall.gb import Ideal
from proxysmall.models import Certificate, ComplexFile, RingFile, SearchConfig
from proxysmall.poly import parse, to_string
from proxysmall.support import Presentation, build_presentation
from proxysmall.utils import parse_example_name, read_json_file

BUNDLED = (
    "shortgor3",
    "thomas",
    "monomial4",
    "truncated:d,s",
    "shortgor:e",
    "tensor[:a1,...,am]",
    "sr:<file>",
)


@dataclass
class ExampleBundle:
    name: str
    ring: RingFile
    certificate: Certificate | None


def presentation_of(ring: RingFile) -> Presentation:
    """Presentation of a ring file, honouring its assume_minimal flag."""
    return build_presentation(ring.field_spec(), ring.variables, ring.generators, ring.assume_minimal)


def _manual_bundle(name: str, ring: RingFile, ideals: list[list[str]], coordinates: list[list[int]]) -> ExampleBundle:
    P = presentation_of(ring)
    K = P.spec.domain
    Js = [Ideal([parse(text, P.ring) for text in gens], P.ring) for gens in ideals]
    coords = [[K(a) for a in row] for row in coordinates]
    return ExampleBundle(name, ring, manual_certificate(P, Js, ring.span_dim, coords))


def short_gorenstein_3() -> ExampleBundle:
    """The short Gorenstein ring in three variables with five hand-picked quotients."""
    ring = RingFile(field="QQ", variables=["x", "y", "z"], generators=["x^2-y^2", "x^2-z^2", "xy", "xz", "yz"])
    ideals = [
        ["x^2-y^2", "y-z", "x"],
        ["y^2-z^2", "y", "x"],
        ["xy", "x-y", "x-z"],
        ["x^2-y^2+yz-xy", "y-z", "x-y-z"],
        ["xy-xz", "y", "x-z"],
    ]
    coordinates = [
        [1, 0, 0, 0, 0],
        [-1, 1, 0, 0, 0],
        [0, 0, 1, 0, 0],
        [1, 0, -1, 0, 1],
        [0, 0, 1, -1, 0],
    ]
    return _manual_bundle("shortgor3", ring, ideals, coordinates)


def thomas() -> ExampleBundle:
    """Two quotients with one-dimensional kernels meeting in zero; s = 2."""
    # (x^2-2z, xyz, y+z) misses x^2+y^2+z^2; (x^2+2z^2, xyz, y+z) is the quotient that works.
    ring = RingFile(field="QQ", variables=["x", "y", "z"], generators=["x^2+y^2+z^2", "xyz", "x^3"], span_dim=2)
    ideals = [["x^2+y^2+z^2", "y", "x^3"], ["x^2+2z^2", "xyz", "y+z"]]
    return _manual_bundle("thomas", ring, ideals, [[1, 0, 0], [0, 1, 0]])


def monomial_4() -> ExampleBundle:
    """(x^4, xy, yz, zw, w^3) with three monomial quotients; s = 5."""
    ring = RingFile(field="QQ", variables=["x", "y", "z", "w"], generators=["x^4", "xy", "yz", "zw", "w^3"], span_dim=5)
    # generators sort by order to (xy, yz, zw, w^3, x^4)
    ideals = [["yz", "y-z", "x", "w"], ["x^4", "y", "z", "w"], ["w^3", "x", "y", "z"]]
    coordinates = [[0, 1, 0, 0, 0], [0, 0, 0, 0, 1], [0, 0, 0, 1, 0]]
    return _manual_bundle("monomial4", ring, ideals, coordinates)


def truncated(d: int, s: int) -> ExampleBundle:
    """m^s in d variables with its one-step certificate."""
    P = truncated_presentation(d, s)
    ring = RingFile(field="QQ", variables=P.variables, generators=[to_string(f) for f in P.generators])
    return ExampleBundle(f"truncated:{d},{s}", ring, truncated_witness(d, s))


def short_gorenstein(e: int) -> ExampleBundle:
    """{x_1^2 - x_i^2} and all x_i x_j in e variables, certified by the default search."""
    if e < 3:
        raise DegenerateParameters(f"short Gorenstein examples need e >= 3, got {e}")
    names = [f"x{i}" for i in range(1, e + 1)]
    gens = [f"x1^2-{v}^2" for v in names[1:]]
    gens += [f"{a}{b}" for a, b in combinations(names, 2)]
    ring = RingFile(field="QQ", variables=names, generators=gens)
    certificate = construct_witnesses(presentation_of(ring), SearchConfig())
    return ExampleBundle(f"shortgor:{e}", ring, certificate)


def tensor(exponents: list[int] | None = None) -> ExampleBundle:
    """shortgor3 tensored with k[w_1..w_m]/(w_1^a_1, ..., w_m^a_m): not equipresented, support still large.

    The support of R is that of shortgor3 times zero, so s = 5 bounds its span.
    """
    exponents = exponents or [3]
    if not 1 <= len(exponents) < 5:
        raise DegenerateParameters(f"tensor examples take 1 to 4 exponents, got {len(exponents)}")
    if any(a < 3 for a in exponents):
        raise DegenerateParameters(f"tensor exponents must be at least 3, got {exponents}")
    extra = ["w"] if len(exponents) == 1 else [f"w{i}" for i in range(1, len(exponents) + 1)]
    ring = RingFile(
        field="QQ",
        variables=["x", "y", "z", *extra],
        generators=["x^2-y^2", "x^2-z^2", "xy", "xz", "yz", *(f"{w}^{a}" for w, a in zip(extra, exponents))],
        span_dim=5,
    )
    certificate = construct_witnesses(presentation_of(ring), SearchConfig(span_dim=ring.span_dim))
    name = "tensor" if exponents == [3] else "tensor:" + ",".join(str(a) for a in exponents)
    return ExampleBundle(name, ring, certificate)


def minimal_nonfaces(vertices: list[str], facets: list[list[str]]) -> list[tuple[str, ...]]:
    """Vertex sets contained in no facet all of whose proper subsets are faces."""
    faces = [set(f) for f in facets]

    def is_face(subset) -> bool:
        return any(set(subset) <= f for f in faces)

    result = []
    for size in range(1, len(vertices) + 1):
        for subset in combinations(vertices, size):
            if is_face(subset):
                continue
            if all(is_face(smaller) for smaller in combinations(subset, size - 1)):
                result.append(subset)
    return result


def stanley_reisner(path: str) -> ExampleBundle:
    """Ring file from a complex (vertices + facets) or an explicit monomial ring file."""
    data = read_json_file(path)
    try:
        if "facets" in data:
            complex_ = ComplexFile.model_validate(data)
            unknown = {v for facet in complex_.facets for v in facet} - set(complex_.vertices)
            if unknown:
                raise InputFileError(f"facets use unknown vertices {sorted(unknown)}", path)
            gens = ["".join(face) for face in minimal_nonfaces(complex_.vertices, complex_.facets)]
            ring = RingFile(field=complex_.field, variables=complex_.vertices, generators=gens)
        else:
            ring = RingFile.model_validate(data)
    except ValidationError as e:
        raise InputFileError(str(e), path) from e
    return ExampleBundle(f"sr:{path}", ring, monomial_witnesses(presentation_of(ring)))


def _int_args(kind: str, args: list[str], count: int) -> list[int]:
    if len(args) != count:
        raise UnknownExample(f"{kind} takes {count} integer parameter(s)")
    try:
        return [int(a) for a in args]
    except ValueError as e:
        raise UnknownExample(f"{kind} parameters must be integers") from e


def _exponents(args: list[str]) -> list[int] | None:
    if not args:
        return None
    return _int_args("tensor", args, len(args))


def load_example(name: str) -> ExampleBundle:
    """Resolves a bundled example name and its parameters."""
    kind, args = parse_example_name(name)
    if kind == "shortgor3" and not args:
        return short_gorenstein_3()
    if kind == "thomas" and not args:
        return thomas()
    if kind == "monomial4" and not args:
        return monomial_4()
    if kind == "truncated":
        d, s = _int_args(kind, args, 2)
        return truncated(d, s)
    if kind == "shortgor":
        (e,) = _int_args(kind, args, 1)
        return short_gorenstein(e)
    if kind == "tensor":
        return tensor(_exponents(args))
    if kind == "sr" and args and args[0]:
        return stanley_reisner(args[0])
    raise UnknownExample(f"unknown example {name!r}; choose from {', '.join(BUNDLED)}")
