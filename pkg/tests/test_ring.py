from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import scalars
from incalg import InputError, RingSpec
from incalg.ring import one, zero

Q, Z = RingSpec.rationals(), RingSpec.integers()


def test_examples():
    assert str(Q.scalar("1/2") + Q.scalar("1/3")) == "5/6"
    z10 = RingSpec.mod(10)
    assert (z10.scalar(3) * z10.scalar(4)).value == 2
    assert Q.scalar("2/3").invert().value == Fraction(3, 2)
    assert RingSpec.mod(7).scalar(3).invert().value == 5


def test_invert_errors():
    with pytest.raises(ZeroDivisionError):
        Q.scalar(0).invert()
    with pytest.raises(ArithmeticError):
        Z.scalar(3).invert()
    with pytest.raises(ArithmeticError):
        RingSpec.mod(4).scalar(3).invert()


def test_ring_mismatch():
    with pytest.raises(InputError):
        Q.scalar(1) + Z.scalar(1)


def test_parse_and_format():
    assert RingSpec.parse("Z/5") == RingSpec.mod(5)
    assert RingSpec.parse("GF(7)") == RingSpec.mod(7)
    assert str(RingSpec.parse("Q")) == "Q"
    assert str(Q.scalar("-3")) == "-3"
    assert str(RingSpec.mod(5).scalar("-1")) == "4"
    assert RingSpec.mod(5).coerce(Fraction(1, 2)) == 3
    with pytest.raises(InputError):
        RingSpec.parse("R")
    with pytest.raises(InputError):
        RingSpec.mod(1)
    with pytest.raises(InputError):
        Z.parse_value("1/2")


def test_predicates():
    assert Z.is_two_torsion_free and Q.is_two_torsion_free
    assert not RingSpec.mod(6).is_two_torsion_free
    assert RingSpec.mod(5).is_two_torsion_free
    assert Q.is_field and not Z.is_field
    assert not RingSpec.mod(4).is_field and RingSpec.mod(7).is_field


@pytest.mark.parametrize("n", range(2, 101))
def test_two_torsion_exhaustive(n):
    ring = RingSpec.mod(n)
    brute = all(ring.mul(2, a) != 0 for a in range(1, n))
    assert ring.is_two_torsion_free == brute == (n % 2 == 1)


def test_zero_one():
    assert zero(Q).is_zero() and one(RingSpec.mod(3)).value == 1


@pytest.mark.parametrize("ring", [Z, Q, RingSpec.mod(5), RingSpec.mod(12)], ids=str)
@given(data=st.data())
def test_ring_axioms(ring, data):
    a, b, c = (ring.scalar(data.draw(scalars(ring))) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a + (-a)).is_zero()
