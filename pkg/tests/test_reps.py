import pytest
from hypothesis import given

from strategies import characters
from twistjac.core_arith import CharLabel, FormalCharacter, HalfInt, nu
from twistjac.reps import (CharRep, LRep, Product, SteinbergRep, ZRep, central_character, classify,
                           contragredient, gl_rank, is_irreducible, langlands_data, one,
                           product_irreducible, same_rep, st)
from twistjac.segments import Multisegment, seg
from twistjac.zelevinsky import lchialpha_segments


def test_rank():
    assert gl_rank(one(3)) == 3
    assert gl_rank(ZRep(Multisegment([seg("-3/2", "3/2")]))) == 4
    assert gl_rank(Product([st(2), one(1), st(3)])) == 6


def test_normalize_roundtrip():
    c = CharRep(3, nu(HalfInt(1), CharLabel.gen("chi")))
    assert c.normalize() == ZRep(Multisegment([seg("-1/2", "3/2", "chi")]))
    assert SteinbergRep(2, nu(1)).normalize() == LRep(Multisegment([seg("1/2", "3/2")]))


def test_product_irreducible_examples():
    for n in range(1, 5):
        for a in range(1, n + 1):
            assert not product_irreducible(lchialpha_segments(n, a))
    assert product_irreducible([seg(0, 3)])
    assert product_irreducible([seg(-1, 1), seg(0)])


def test_is_irreducible_mixed():
    # linked but not juxtaposed: irreducible
    assert is_irreducible(Product([st(2, HalfInt(1)), one(2, HalfInt(-1))])) is True
    # juxtaposed Steinberg x character: reducible
    assert is_irreducible(Product([st(2, 2), one(2)])) is False
    assert is_irreducible(Product([one(2), one(1, HalfInt(3)), one(1, HalfInt(-3))])) is False


def test_classify_examples():
    c = classify(Product([st(3), one(1)]))
    assert c.is_generic_class
    c = classify(one(4))
    assert c.is_character and not c.is_generic_class
    tau = LRep(Multisegment([seg("1/2", "3/2"), seg("-3/2", "-1/2")]))
    c = classify(tau)
    assert not (c.is_character or c.is_steinberg_twist or c.is_generic_class or c.gl2_class)
    assert classify(st(2, 1)).gl2_class
    assert classify(Product([one(1, 1), one(1, -1)])).gl2_class
    assert classify(ZRep(Multisegment([seg(0), seg(3)]))).gl2_class


def test_central_character_examples():
    assert central_character(SteinbergRep(2, nu(1))) == nu(2)
    chi = FormalCharacter(CharLabel.gen("chi"))
    assert central_character(CharRep(2, chi)) == chi * chi
    assert central_character(Product([one(1, HalfInt(1)), one(1, HalfInt(-1))])).is_trivial()


def test_langlands_data():
    assert langlands_data(one(2)) == Multisegment([seg("1/2"), seg("-1/2")])
    assert langlands_data(st(2)) == Multisegment([seg("-1/2", "1/2")])
    with pytest.raises(ValueError):
        langlands_data(Product([st(2, 2), one(2)]))
    assert same_rep(one(2), ZRep(Multisegment([seg("-1/2", "1/2")])))


def test_empty_multisegment_rejected():
    with pytest.raises(ValueError):
        ZRep(Multisegment())
    with pytest.raises(ValueError):
        CharRep(0, nu())


@given(characters, characters)
def test_rank_additive_and_irreducibility_symmetric(a, b):
    e = Product([CharRep(2, a), SteinbergRep(3, b)])
    assert gl_rank(e) == 5
    segs = [CharRep(2, a).segment(), SteinbergRep(3, b).segment()]
    assert product_irreducible(segs) == product_irreducible(list(reversed(segs)))


@given(characters)
def test_contragredient_involution(c):
    e = Product([CharRep(2, c), SteinbergRep(2, c.inverse())])
    assert contragredient(contragredient(e)) == e
    assert central_character(contragredient(CharRep(3, c))) == central_character(CharRep(3, c)).inverse()
