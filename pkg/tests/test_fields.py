from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qhopf import Fp, PrimeField, QQ, parse_field


def test_rational_basics():
    assert QQ.zero() == Fraction(0)
    assert QQ.one() == Fraction(1)
    assert QQ.from_int(-3) == Fraction(-3)
    assert QQ.from_pair(2, 4) == Fraction(1, 2)
    assert QQ.to_pair(Fraction(-5, 3)) == (-5, 3)
    assert not QQ.zero()
    assert QQ.one()


def test_prime_field_basics():
    F = PrimeField(5)
    a, b = F.from_int(3), F.from_int(4)
    assert a + b == F.from_int(2)
    assert a * b == F.from_int(2)
    assert a - b == F.from_int(4)
    assert (a / b) * b == a
    assert F.to_pair(a) == (3, 1)
    assert F.from_pair(1, 2) * F.from_int(2) == F.one()
    assert not F.zero()


def test_prime_field_rejects_composite():
    with pytest.raises(ValueError):
        PrimeField(6)
    with pytest.raises(ValueError):
        PrimeField(1)


def test_prime_field_division_by_zero():
    F = PrimeField(3)
    with pytest.raises(ZeroDivisionError):
        F.one() / F.zero()


def test_mixed_characteristic_rejected():
    with pytest.raises(ValueError):
        Fp(1, 3) + Fp(1, 5)


def test_parse_field():
    assert parse_field("Q") is QQ
    assert parse_field(" GF(7) ").name == "GF(7)"
    with pytest.raises(ValueError):
        parse_field("R")
    with pytest.raises(ValueError):
        parse_field("GF(4)")


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50))
def test_field_laws_rationals(a, b, c):
    x, y, z = (QQ.from_int(v) for v in (a, b, c))
    assert x * (y + z) == x * y + x * z
    assert (x + y) + z == x + (y + z)
    assert x + QQ.zero() == x
    assert x * QQ.one() == x


@given(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6))
def test_field_laws_gf7(a, b, c):
    F = PrimeField(7)
    x, y, z = (F.from_int(v) for v in (a, b, c))
    assert x * (y + z) == x * y + x * z
    assert (x * y) * z == x * (y * z)
    if y:
        assert (x / y) * y == x


@given(st.integers(-30, 30), st.integers(1, 30))
def test_pair_round_trip(num, den):
    c = QQ.from_pair(num, den)
    n2, d2 = QQ.to_pair(c)
    assert QQ.from_pair(n2, d2) == c
