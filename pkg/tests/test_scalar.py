"""Unit tests for residue-field arithmetic."""

import random
from fractions import Fraction
from math import gcd

import pytest
from sympy.polys.domains import QQ

from proxysmall.errors import DivisionByZero, FieldMismatch, InvalidField
from proxysmall.scalar import (
    ArithOp,
    FieldSpec,
    arith,
    from_fraction,
    from_int,
    from_string,
    sample,
    spec_of_domain,
    to_string,
)


class TestFieldSpec:
    def test_rational_label(self):
        assert FieldSpec.rational().label == "QQ"

    def test_default_prime(self):
        spec = FieldSpec.prime()
        assert spec.p == 32003
        assert spec.label == "GF(32003)"

    def test_composite_modulus(self):
        with pytest.raises(InvalidField):
            FieldSpec.prime(4)

    def test_modulus_two_rejected(self):
        with pytest.raises(InvalidField):
            FieldSpec.prime(2)

    def test_small_prime_not_suited_for_search(self):
        assert not FieldSpec.prime(7).suits_random_search
        assert FieldSpec.prime(101).suits_random_search
        assert FieldSpec.rational().suits_random_search

    def test_domain_round_trip(self):
        for spec in (FieldSpec.rational(), FieldSpec.prime(7)):
            assert spec_of_domain(spec.domain) == spec


class TestArith:
    def test_rational_sum(self):
        Q = FieldSpec.rational()
        assert arith(QQ(1, 2), QQ(1, 3), ArithOp.ADD, Q) == QQ(5, 6)

    def test_prime_division(self):
        F7 = FieldSpec.prime(7)
        assert arith(from_int(1, F7), from_int(3, F7), ArithOp.DIV, F7) == from_int(5, F7)

    def test_division_by_zero(self):
        Q = FieldSpec.rational()
        with pytest.raises(DivisionByZero):
            arith(QQ(1), QQ(0), ArithOp.DIV, Q)

    def test_mixed_fields(self):
        F7 = FieldSpec.prime(7)
        with pytest.raises(FieldMismatch):
            arith(QQ(1, 2), from_int(1, F7), ArithOp.MUL, F7)

    def test_fraction_with_vanishing_denominator(self):
        with pytest.raises(DivisionByZero):
            from_fraction(1, 7, FieldSpec.prime(7))


class TestSample:
    def test_reproducible(self):
        F = FieldSpec.prime(101)
        first = [sample(random.Random(1), F, 10) for _ in range(3)]
        second = [sample(random.Random(1), F, 10) for _ in range(3)]
        assert first == second

    def test_prime_range(self):
        F = FieldSpec.prime(101)
        rng = random.Random(1)
        for _ in range(50):
            assert 0 <= F.domain.to_int(sample(rng, F, 10)) < 101

    def test_rational_bound(self):
        Q = FieldSpec.rational()
        rng = random.Random(1)
        values = [sample(rng, Q, 10) for _ in range(100)]
        assert all(-10 <= v <= 10 and QQ.denom(v) == 1 for v in values)
        assert len(set(values)) > 1


class TestStrings:
    def test_rational(self):
        Q = FieldSpec.rational()
        assert to_string(QQ(-3, 4), Q) == "-3/4"
        assert from_string("-3/4", Q) == QQ(-3, 4)
        assert to_string(QQ(6, 3), Q) == "2"

    def test_prime_residue(self):
        F7 = FieldSpec.prime(7)
        assert to_string(from_int(-1, F7), F7) == "6"
        assert from_string("1/2", F7) == from_int(4, F7)

    def test_garbage(self):
        with pytest.raises(FieldMismatch):
            from_string("abc", FieldSpec.rational())


FIELDS = [FieldSpec.rational(), FieldSpec.prime(101), FieldSpec.prime(32003)]


def _random_scalar(rng: random.Random, spec: FieldSpec):
    if spec.is_rational:
        return from_fraction(rng.randint(-20, 20), rng.randint(1, 20), spec)
    return sample(rng, spec, 0)


@pytest.mark.parametrize("spec", FIELDS, ids=["QQ", "GF101", "GF32003"])
class TestFieldAxioms:
    def test_ring_laws(self, spec):
        rng = random.Random(3)
        zero, one = from_int(0, spec), from_int(1, spec)

        def add(a, b):
            return arith(a, b, ArithOp.ADD, spec)

        def mul(a, b):
            return arith(a, b, ArithOp.MUL, spec)

        for _ in range(200):
            a, b, c = (_random_scalar(rng, spec) for _ in range(3))
            assert add(add(a, b), c) == add(a, add(b, c))
            assert mul(mul(a, b), c) == mul(a, mul(b, c))
            assert add(a, b) == add(b, a)
            assert mul(a, b) == mul(b, a)
            assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
            assert add(a, zero) == a
            assert mul(a, one) == a
            assert arith(a, a, ArithOp.SUB, spec) == zero

    def test_inverses(self, spec):
        rng = random.Random(4)
        one = from_int(1, spec)
        for _ in range(200):
            a, b = _random_scalar(rng, spec), _random_scalar(rng, spec)
            if a:
                assert arith(a, arith(one, a, ArithOp.DIV, spec), ArithOp.MUL, spec) == one
                assert arith(arith(b, a, ArithOp.DIV, spec), a, ArithOp.MUL, spec) == b


class TestCanonicalStrings:
    def test_rational_lowest_terms(self):
        Q = FieldSpec.rational()
        rng = random.Random(5)
        for _ in range(300):
            num = rng.randint(-1000, 1000)
            den = rng.choice([-1, 1]) * rng.randint(1, 1000)
            text = to_string(from_fraction(num, den, Q), Q)
            head, _, tail = text.partition("/")
            denominator = int(tail) if tail else 1
            assert denominator > 0
            assert gcd(int(head), denominator) == 1
            assert text == str(Fraction(num, den))
            assert from_string(text, Q) == from_fraction(num, den, Q)

    @pytest.mark.parametrize("p", [101, 32003])
    def test_prime_residues(self, p):
        F = FieldSpec.prime(p)
        rng = random.Random(p)
        for _ in range(300):
            n = rng.randint(-10**6, 10**6)
            text = to_string(from_int(n, F), F)
            assert text == str(n % p)
            assert from_string(text, F) == from_int(n, F)

    @pytest.mark.parametrize("p", [101, 32003])
    def test_prime_fractions(self, p):
        F = FieldSpec.prime(p)
        rng = random.Random(p + 1)
        for _ in range(300):
            num, den = rng.randint(-500, 500), rng.randint(1, p - 1)
            assert to_string(from_fraction(num, den, F), F) == str(num * pow(den, -1, p) % p)
