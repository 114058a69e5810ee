from fractions import Fraction

import pytest
from hypothesis import given

from strategies import characters, halfints, labels
from twistjac.core_arith import (TRIVIAL, CharLabel, FormalCharacter, HalfInt, char_mul, half, nu,
                                 parse_halfint, whole)


def test_half_and_whole():
    assert str(half(3)) == "3/2"
    assert str(whole(2)) == "2"
    assert half(3) + half(-3) == 0
    assert half(4) == whole(2)


def test_halfint_exact_ops():
    a, b = half(3), half(-1)
    assert a + b == 1
    assert a - b == 2
    assert -a == half(-3)
    assert a * 3 == half(9)
    assert a > b and b < 0
    assert half(5).is_integer() is False and half(6).is_integer()
    assert half(-3).floor() == -2
    assert half(3).as_fraction() == Fraction(3, 2)


def test_halfint_rejects():
    with pytest.raises(ValueError):
        HalfInt.coerce(Fraction(1, 3))
    with pytest.raises(ValueError):
        parse_halfint("0.5")
    with pytest.raises(TypeError):
        HalfInt(1.0)
    with pytest.raises(ValueError):
        int(half(1))


def test_char_mul_examples():
    chi = CharLabel.gen("chi")
    got = char_mul(FormalCharacter(chi, half(1)), FormalCharacter(chi.inverse(), half(1)))
    assert got == FormalCharacter(TRIVIAL, whole(1))
    assert char_mul(nu(half(3)), nu(half(-3))).is_trivial()
    # chi = nu^{-alpha/2} against chi nu^alpha: net exponent alpha/2 on each factor sums to 0
    for alpha in range(1, 6):
        c = nu(HalfInt(-alpha))
        assert (c * c.twist(alpha)).is_trivial()


def test_text_forms():
    chi = CharLabel.gen("chi")
    assert str(FormalCharacter(chi, half(1))) == "chi*nu^{1/2}"
    assert str(nu(1)) == "nu"
    assert str(nu(-1)) == "nu^-1"
    assert str(FormalCharacter()) == "1"
    assert str(chi.inverse() * CharLabel.gen("psi")) == "chi^-1*psi"


@given(halfints)
def test_halfint_print_parse_roundtrip(x):
    assert parse_halfint(str(x)) == x


@given(labels, labels, labels)
def test_label_group_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * TRIVIAL == a
    assert (a * a.inverse()).is_trivial()
    assert a * b == b * a


@given(characters, characters, characters)
def test_character_group_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * FormalCharacter() == a
    assert (a * a.inverse()).is_trivial()
    assert (a ** 3) == a * a * a


@given(labels)
def test_zero_exponents_pruned(a):
    assert (a * a.inverse()).as_dict() == {}
    assert (a * a.inverse()) == TRIVIAL
