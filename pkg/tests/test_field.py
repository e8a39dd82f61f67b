from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jaccube.field import QQ, PrimeField, is_prime

F13 = PrimeField(13)


def test_rejects_non_prime_and_char_2():
    with pytest.raises(ValueError):
        PrimeField(15)
    with pytest.raises(ValueError):
        PrimeField(2)


def test_is_prime_small():
    primes = [n for n in range(2, 60) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]


def test_canonical_representatives():
    assert F13(15).value == 2
    assert F13(-1).value == 12
    assert F13(15) == F13(2) == 2
    assert hash(F13(15)) == hash(F13(2))


def test_fraction_coercion_mod_p():
    assert F13(Fraction(1, 2)) == F13(7)  # 2 * 7 = 14 = 1
    with pytest.raises(ZeroDivisionError):
        F13(Fraction(1, 13))


def test_field_axioms_exhaustive_f13():
    els = F13.elements()
    for a in els:
        for b in els:
            assert a + b == b + a
            assert a * b == b * a
            if not a.is_zero():
                assert a * a.inverse() == F13.one
    a, b, c = F13(3), F13(7), F13(11)
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c


@given(st.integers(), st.integers(), st.integers())
def test_field_axioms_random(x, y, z):
    a, b, c = F13(x), F13(y), F13(z)
    assert (a * b) * c == a * (b * c)
    assert a * (b - c) == a * b - a * c


def test_division_and_errors():
    assert F13(6) / F13(2) == F13(3)
    with pytest.raises(ZeroDivisionError):
        F13(1) / F13(0)
    with pytest.raises(ZeroDivisionError):
        F13(0).inverse()


def test_pow_including_negative():
    assert F13(2) ** 12 == F13.one
    assert F13(2) ** -1 == F13(7)


def test_field_mismatch_raises():
    with pytest.raises(ValueError):
        F13(1) + PrimeField(17)(1)
    with pytest.raises(ValueError):
        F13(1) + QQ(1)


def test_rationals_exact():
    a = QQ(Fraction(1, 3))
    b = QQ(Fraction(1, 6))
    assert a + b == QQ(Fraction(1, 2))
    assert (a / b).value == 2
    assert QQ.characteristic == 0
    assert F13.characteristic == 13
