"""Tests for the Gröbner engine, ideal predicates and minimal generators."""

import random

import pytest

from proxysmall.errors import EmptyAfterTrim, NotMPrimary
from proxysmall.gb import (
    Ideal,
    TruncatedAlgebra,
    ideal_product_m,
    ideal_sum,
    is_reduced_basis,
    minimal_generators,
    power_of_maximal,
    satisfies_buchberger_criterion,
)
from proxysmall.poly import divides, monomial, parse, polynomial_ring, to_string
from proxysmall.scalar import FieldSpec


@pytest.fixture
def ring():
    return polynomial_ring(("x", "y", "z"), FieldSpec.rational())


@pytest.fixture
def plane():
    return polynomial_ring(("x", "y"), FieldSpec.rational())


def ideal(ring, *texts):
    return Ideal([parse(t, ring) for t in texts], ring)


def strings(polys):
    return sorted(to_string(f) for f in polys)


class TestBasis:
    def test_variables(self, plane):
        assert strings(ideal(plane, "x", "y").basis()) == ["x", "y"]

    def test_single_spair_reduces(self, plane):
        assert strings(ideal(plane, "x^2", "xy").basis()) == ["x^2", "xy"]

    def test_reduction_by_variable(self, plane):
        assert strings(ideal(plane, "x^2-y^2", "y").basis()) == ["x^2", "y"]

    def test_reduced_and_groebner(self, ring):
        I = ideal(ring, "x^2-y^2", "x^2-z^2", "xy", "xz", "yz")
        basis = I.basis()
        assert satisfies_buchberger_criterion(basis, ring)
        assert is_reduced_basis(basis, ring)


class TestMembership:
    def test_generators_reduce_to_zero(self, ring):
        I = ideal(ring, "x^2-y^2", "y-z", "x")
        for g in I.generators:
            assert not I.normal_form(g)

    def test_combination(self, plane):
        assert ideal(plane, "x^2-y^2", "xy").contains(parse("x^3", plane))

    def test_non_member(self, ring):
        # modulo (y - z, x) the square x^2 - y^2 becomes -z^2
        assert not ideal(ring, "y-z", "x").contains(parse("x^2-y^2", ring))


class TestDimension:
    def test_hyperplane(self, ring):
        assert ideal(ring, "x").krull_dim() == 2

    def test_artinian(self, ring):
        assert ideal(ring, "x^2-y^2", "y-z", "x").krull_dim() == 0

    def test_axes(self, plane):
        assert ideal(plane, "xy").krull_dim() == 1

    def test_unit(self, plane):
        assert ideal(plane, "x", "1").krull_dim() == -1


class TestPrimary:
    def test_fat_point(self, plane):
        assert ideal(plane, "x^2", "y").is_m_primary()

    def test_point_away_from_origin(self, plane):
        assert not ideal(plane, "x-1", "y").is_m_primary()

    def test_inhomogeneous(self, ring):
        assert ideal(ring, "x^2-2z", "xyz", "y+z").is_m_primary()

    def test_positive_dimension(self, plane):
        assert not ideal(plane, "xy").is_m_primary()


class TestTruncationIndex:
    def test_squares(self, plane):
        assert ideal(plane, "x^2", "y^2").truncation_index() == 3

    def test_one_variable(self):
        line = polynomial_ring(("x",), FieldSpec.rational())
        assert ideal(line, "x").truncation_index() == 1

    def test_powers_of_maximal(self, ring):
        for s in (1, 2, 3):
            assert power_of_maximal(ring, s).truncation_index() == s

    def test_not_primary(self, plane):
        with pytest.raises(NotMPrimary):
            ideal(plane, "x-1", "y").truncation_index()


class TestMultiplicationMatrix:
    def test_nilpotent(self, plane):
        I = ideal(plane, "x^2", "y^2")
        M = I.multiplication_matrix(0)
        assert M.shape == (4, 4)
        assert (M**2).is_zero_matrix

    def test_nilpotency_indices(self, plane):
        assert ideal(plane, "x^3", "y^2").nilpotency_indices() == [3, 2]

    def test_indices_match_membership_of_powers(self, plane):
        I = ideal(plane, "x^2-y^3", "xy")
        indices = I.nilpotency_indices()
        for x, k in zip(plane.gens, indices):
            assert I.contains(x**k)
            assert not I.contains(x ** (k - 1))

    def test_zero_dimensional_away_from_origin(self, plane):
        I = ideal(plane, "x-1", "y")
        assert I.krull_dim() == 0
        assert I.nilpotency_indices() is None
        assert not I.is_m_primary()


class TestMinimalGenerators:
    def test_short_gorenstein(self, ring):
        gens = [parse(t, ring) for t in ["x^2-y^2", "x^2-z^2", "xy", "xz", "yz"]]
        kept, certified = minimal_generators(gens)
        assert len(kept) == 5
        assert certified

    def test_redundant_sum(self, plane):
        gens = [parse(t, plane) for t in ["x^2", "x^2+xy", "xy"]]
        kept, certified = minimal_generators(gens)
        assert len(kept) == 2
        assert certified

    def test_monomials(self):
        R = polynomial_ring(("x", "y", "z", "w"), FieldSpec.rational())
        gens = [parse(t, R) for t in ["x^4", "xy", "yz", "zw", "w^3", "x^2y"]]
        kept, certified = minimal_generators(gens)
        assert strings(kept) == strings(gens[:5])
        assert certified

    def test_local_trim(self, plane):
        # x^2 + y^3 and x^2 differ by y^3, which lies in m·(x^2, y^2)
        gens = [parse(t, plane) for t in ["x^2+y^3", "y^2", "x^2"]]
        kept, certified = minimal_generators(gens)
        assert len(kept) == 2
        assert certified

    def test_uncertified(self, plane):
        kept, certified = minimal_generators([parse("x^2+y^3", plane)])
        assert len(kept) == 1
        assert not certified

    def test_all_zero(self, plane):
        with pytest.raises(EmptyAfterTrim):
            minimal_generators([plane.zero])


class TestIdealOperations:
    def test_product_with_m(self, plane):
        assert strings(ideal_product_m(ideal(plane, "x")).generators) == ["x^2", "xy"]

    def test_product_count(self, ring):
        mJ = ideal_product_m(ideal(ring, "x^2-y^2", "y-z", "x"))
        assert len(mJ.generators) == 9
        assert parse("xy-xz", ring) in mJ.generators

    def test_sum(self, plane):
        assert strings(ideal_sum(ideal(plane, "x"), ideal(plane, "y")).generators) == ["x", "y"]


class TestTruncatedAlgebra:
    def test_dimension(self, ring):
        assert TruncatedAlgebra(ring, 2).dimension == 10

    def test_coordinates_drop_high_terms(self, plane):
        A = TruncatedAlgebra(plane, 1)
        assert sum(1 for a in A.coordinates(parse("x+y^2", plane)) if a) == 1


def _random_poly(rng: random.Random, ring, degree: int, terms: int):
    K = ring.domain
    f = ring.zero
    for _ in range(terms):
        exps = [0] * ring.ngens
        for _ in range(rng.randint(1, degree)):
            exps[rng.randrange(ring.ngens)] += 1
        f += monomial(ring, tuple(exps)) * K(rng.randint(-5, 5))
    return f


class TestRandomSuites:
    def test_normal_form_idempotent(self):
        R = polynomial_ring(("x", "y", "z"), FieldSpec.prime(32003))
        rng = random.Random(7)
        for _ in range(20):
            gens = [_random_poly(rng, R, 3, 3) for _ in range(rng.randint(2, 3))]
            gens = [g for g in gens if g] or [R.gens[0]]
            I = Ideal(gens, R)
            assert satisfies_buchberger_criterion(I.basis(), R)
            assert is_reduced_basis(I.basis(), R)
            for _ in range(50):
                f = _random_poly(rng, R, 4, 4)
                r = I.normal_form(f)
                assert I.normal_form(r) == r
                assert I.contains(f - r)

    def test_monomial_membership_is_divisibility(self):
        R = polynomial_ring(("x", "y", "z"), FieldSpec.rational())
        rng = random.Random(11)

        def random_monomial(top):
            return tuple(rng.randint(0, top) for _ in range(3))

        for _ in range(10):
            leads = [random_monomial(3) for _ in range(rng.randint(1, 4))]
            leads = [m for m in leads if any(m)] or [(1, 0, 0)]
            I = Ideal([monomial(R, m) for m in leads], R)
            for _ in range(100):
                m = random_monomial(4)
                assert I.contains(monomial(R, m)) == any(divides(a, m) for a in leads)

    def test_monomial_membership_of_polynomials(self):
        R = polynomial_ring(("x", "y", "z"), FieldSpec.rational())
        rng = random.Random(12)
        for _ in range(10):
            leads = [tuple(rng.randint(0, 3) for _ in range(3)) for _ in range(rng.randint(1, 4))]
            leads = [m for m in leads if any(m)] or [(0, 1, 0)]
            I = Ideal([monomial(R, m) for m in leads], R)
            for _ in range(50):
                f = _random_poly(rng, R, 5, 3)
                every_term = all(any(divides(a, m) for a in leads) for m in f.itermonoms())
                assert I.contains(f) == every_term

    def test_minimal_generators_ignore_order_and_redundancy(self, ring):
        base = [parse(t, ring) for t in ["x^2-y^2", "x^2-z^2", "xy", "xz", "yz"]]
        rng = random.Random(13)
        for _ in range(10):
            i, j = rng.sample(range(5), 2)
            extra = [base[i] + base[j], base[i] * ring.gens[rng.randrange(3)], base[j] * ring.domain(3)]
            gens = base + extra
            rng.shuffle(gens)
            kept, certified = minimal_generators(gens)
            assert certified
            assert len(kept) == 5
            assert Ideal(kept, ring).contains_all(base)
            assert Ideal(base, ring).contains_all(kept)

    def test_monomial_minimal_generators_ignore_order(self):
        R = polynomial_ring(("x", "y", "z", "w"), FieldSpec.rational())
        base = [parse(t, R) for t in ["x^4", "xy", "yz", "zw", "w^3"]]
        rng = random.Random(14)
        for _ in range(10):
            gens = base + [g * R.gens[rng.randrange(4)] for g in rng.sample(base, 2)]
            rng.shuffle(gens)
            kept, certified = minimal_generators(gens)
            assert certified
            assert strings(kept) == strings(base)
