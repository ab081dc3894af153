"""Multivariate polynomials over k.

Polynomials are sympy ``PolyElement``s of a ``PolyRing`` built once per (variables, field,
order): a sparse dict from dense exponent tuples (the monomials, total degree = sum of the
tuple) to nonzero scalars, iterated in descending monomial order by ``terms()``.
"""

import re
from enum import Enum
from functools import lru_cache
from itertools import combinations_with_replacement

from sympy.polys.orderings import grevlex, lex
from sympy.polys.rings import PolyElement, PolyRing

from proxysmall.errors import (
    ArityMismatch,
    FieldMismatch,
    PolynomialSyntaxError,
    PresentationError,
    UnknownVariable,
    ZeroPolynomial,
)
from proxysmall.scalar import ArithOp, FieldSpec, from_fraction, spec_of_domain, symmetric_int, to_int_pair
from proxysmall.utils import validate_variables


class MonomialOrder(str, Enum):
    GREVLEX = "grevlex"
    LEX = "lex"


_ORDERS = {MonomialOrder.GREVLEX: grevlex, MonomialOrder.LEX: lex}


@lru_cache(maxsize=None)
def polynomial_ring(
    variables: tuple[str, ...],
    spec: FieldSpec,
    order: MonomialOrder = MonomialOrder.GREVLEX,
) -> PolyRing:
    """Cached sparse polynomial ring over the field of spec; rejects ambiguous variable lists."""
    error = validate_variables(list(variables))
    if error:
        raise PresentationError(error)
    return PolyRing(list(variables), spec.domain, _ORDERS[MonomialOrder(order)])


def field_of(ring: PolyRing) -> FieldSpec:
    """FieldSpec of a ring's coefficient domain."""
    return spec_of_domain(ring.domain)


def variable_names(ring: PolyRing) -> list[str]:
    return [str(s) for s in ring.symbols]


# ==================== Monomials ====================


def total_degree(monom: tuple[int, ...]) -> int:
    """Sum of the exponents."""
    return sum(monom)


def sort_monomials(monoms, ring: PolyRing) -> list[tuple[int, ...]]:
    """Descending in the ring's monomial order."""
    return sorted(monoms, key=ring.order, reverse=True)


def monomials_of_degree(ring: PolyRing, degree: int) -> list[tuple[int, ...]]:
    """Every monomial of the given degree, descending in the ring's order."""
    n = ring.ngens
    result = []
    for combo in combinations_with_replacement(range(n), degree):
        exps = [0] * n
        for i in combo:
            exps[i] += 1
        result.append(tuple(exps))
    return sort_monomials(result, ring)


def monomials_up_to(ring: PolyRing, degree: int) -> list[tuple[int, ...]]:
    """Monomials of degree at most ``degree``, highest degree first."""
    result = []
    for t in range(degree, -1, -1):
        result.extend(monomials_of_degree(ring, t))
    return result


def monomial(ring: PolyRing, exps: tuple[int, ...]) -> PolyElement:
    return ring.term_new(tuple(exps), ring.domain.one)


def divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    """Monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def support(f: PolyElement) -> frozenset[int]:
    """Indices of the variables that occur in some term of f."""
    return frozenset(i for monom in f.itermonoms() for i, e in enumerate(monom) if e)


def is_monomial(f: PolyElement) -> bool:
    """Exactly one term, whatever its coefficient."""
    return len(f) == 1


# ==================== Construction ====================


def linear_form(ring: PolyRing, coeffs) -> PolyElement:
    """sum c_i x_i."""
    result = ring.zero
    for x, c in zip(ring.gens, coeffs):
        if c:
            result += x * c
    return result


def combination(ring: PolyRing, polys, coeffs) -> PolyElement:
    """sum c_i f_i over paired polynomials and coefficients."""
    result = ring.zero
    for f, c in zip(polys, coeffs):
        if c:
            result += f * c
    return result


# ==================== Arithmetic ====================


def poly_arith(f: PolyElement, g: PolyElement, op: ArithOp) -> PolyElement:
    """Ring operation on two polynomials of the same ring; mixed arities or fields raise."""
    if f.ring != g.ring:
        if f.ring.ngens != g.ring.ngens:
            raise ArityMismatch(f"arity {f.ring.ngens} vs {g.ring.ngens}")
        if f.ring.domain != g.ring.domain:
            raise FieldMismatch(f"{f.ring.domain} vs {g.ring.domain}")
        raise ArityMismatch("polynomials live in rings with different variables")
    op = ArithOp(op)
    if op is ArithOp.ADD:
        return f + g
    if op is ArithOp.SUB:
        return f - g
    if op is ArithOp.MUL:
        return f * g
    raise ValueError("polynomial division is not a ring operation")


def madic_order(f: PolyElement) -> int:
    """Least total degree of a term: the m-adic order of f at the origin."""
    if not f:
        raise ZeroPolynomial("the zero polynomial has no m-adic order")
    return min(total_degree(m) for m in f.itermonoms())


def homogeneous_component(f: PolyElement, degree: int) -> PolyElement:
    """Sum of the terms of f of total degree ``degree``."""
    return f.ring.from_dict({m: c for m, c in f.items() if total_degree(m) == degree})


def lowest_form(f: PolyElement) -> PolyElement:
    """Homogeneous component of f in degree ord(f)."""
    return homogeneous_component(f, madic_order(f))


def is_homogeneous(f: PolyElement) -> bool:
    """All terms share one total degree (the zero polynomial counts)."""
    return len({total_degree(m) for m in f.itermonoms()}) <= 1


# ==================== Parsing ====================

_TOKEN_RE = re.compile(r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*/^]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN_RE.match(text, pos)
        if not match:
            offset = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolynomialSyntaxError(f"unexpected character {text[offset]!r}", text, offset)
        kind = match.lastgroup
        tokens.append((kind, match.group(kind), match.start(kind)))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.text = text
        self.ring = ring
        self.spec = field_of(ring)
        self.index = {name: i for i, name in enumerate(variable_names(ring))}
        self.longest = max(len(name) for name in self.index)
        self.tokens = _tokenize(text)
        self.pos = 0

    def _peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _take(self):
        token = self._peek()
        self.pos += 1
        return token

    def _fail(self, message: str):
        token = self._peek()
        offset = token[2] if token else len(self.text)
        raise PolynomialSyntaxError(message, self.text, offset)

    def _is_op(self, symbol: str) -> bool:
        token = self._peek()
        return token is not None and token[0] == "op" and token[1] == symbol

    def parse(self) -> PolyElement:
        if not self.tokens:
            raise PolynomialSyntaxError("empty polynomial", self.text, 0)
        negate = False
        if self._is_op("-"):
            self._take()
            negate = True
        result = self._term()
        if negate:
            result = -result
        while self._is_op("+") or self._is_op("-"):
            sign = self._take()[1]
            term = self._term()
            result = result - term if sign == "-" else result + term
        if self._peek() is not None:
            self._fail(f"unexpected {self._peek()[1]!r}")
        return result

    def _uint(self) -> int:
        token = self._peek()
        if token is None or token[0] != "num":
            self._fail("expected an unsigned integer")
        self._take()
        return int(token[1])

    def _term(self) -> PolyElement:
        ring = self.ring
        coeff = None
        token = self._peek()
        if token is not None and token[0] == "num":
            numerator = self._uint()
            denominator = 1
            if self._is_op("/"):
                self._take()
                denominator = self._uint()
            coeff = from_fraction(numerator, denominator, self.spec)
            if self._is_op("*"):
                self._take()
                if self._peek() is None or self._peek()[0] != "ident":
                    self._fail("expected a variable after '*'")
        exps = [0] * ring.ngens
        saw_factor = False
        while True:
            token = self._peek()
            if token is not None and token[0] == "ident":
                self._factor(exps)
                saw_factor = True
            elif saw_factor and self._is_op("*"):
                self._take()
                if self._peek() is None or self._peek()[0] != "ident":
                    self._fail("expected a variable after '*'")
            else:
                break
        if coeff is None and not saw_factor:
            self._fail("expected a term")
        if coeff is None:
            coeff = ring.domain.one
        return ring.term_new(tuple(exps), coeff) if coeff else ring.zero

    def _factor(self, exps: list[int]):
        _, run, offset = self._take()
        names = self._segment(run)
        if names is None:
            raise UnknownVariable(run, offset)
        for name in names:
            exps[self.index[name]] += 1
        if self._is_op("^"):
            self._take()
            power = self._uint()
            exps[self.index[names[-1]]] += power - 1

    def _segment(self, run: str) -> list[str] | None:
        """Splits an identifier run into variable names, longest match first."""
        if not run:
            return []
        for size in range(min(len(run), self.longest), 0, -1):
            head = run[:size]
            if head in self.index:
                rest = self._segment(run[size:])
                if rest is not None:
                    return [head, *rest]
        return None


def parse(text: str, ring: PolyRing) -> PolyElement:
    """Parses the ASCII polynomial grammar into ``ring``."""
    return _Parser(text, ring).parse()


def parse_in(text: str, variables: list[str], spec: FieldSpec) -> PolyElement:
    return parse(text, polynomial_ring(tuple(variables), spec))


# ==================== Printing ====================


def _monomial_text(monom: tuple[int, ...], names: list[str]) -> str:
    parts = []
    for name, e in zip(names, monom):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "".join(parts)


def to_string(f: PolyElement) -> str:
    """Canonical text: descending monomial order, unit coefficients suppressed, no '*'."""
    if not f:
        return "0"
    spec = field_of(f.ring)
    names = variable_names(f.ring)
    out = []
    for monom, coeff in f.terms():
        if spec.is_rational:
            num, den = to_int_pair(coeff, spec)
        else:
            num, den = symmetric_int(coeff, spec), 1
        body = _monomial_text(monom, names)
        magnitude = str(abs(num)) if den == 1 else f"{abs(num)}/{den}"
        if body and magnitude == "1":
            magnitude = ""
        sign = "-" if num < 0 else "+"
        if not out:
            out.append(("-" if sign == "-" else "") + magnitude + body)
        else:
            out.append(sign + magnitude + body)
    return "".join(out)
