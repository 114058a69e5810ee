import pytest
from hypothesis import given
from hypothesis import strategies as hst

from twistjac.ff_oracle import (CycInt, FormulaTerm, FpMatrix, InducedCharSpec, character_rep,
                                double_coset_partition, enumerate_cosets, gaussian_multinomial, gl_order,
                                induce_pair, induced_character, parse_block, psi0, psi0_inv, shape_unipotent,
                                siegel_unipotent, steinberg2, tjm_dim_bruteforce, tjm_dim_formula, twisted_dim)
from twistjac.jacquet import block_shapes

cyc = hst.builds(CycInt, hst.integers(-20, 20), hst.integers(-20, 20))


def test_cyclotomic_arithmetic():
    w = CycInt(0, 1)
    assert w * w * w == CycInt(1)
    assert CycInt(1) + w + w * w == CycInt(0)
    assert psi0(1, 3) * psi0_inv(1, 3) == CycInt(1)
    assert psi0(1, 2) == CycInt(-1)
    with pytest.raises(ValueError):
        psi0(1, 5)


@given(cyc, cyc, cyc)
def test_cyclotomic_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == CycInt(0)


def test_matrices():
    g = FpMatrix(3, ((1, 2), (0, 1)))
    assert g.det() == 1
    assert g @ g.inverse() == FpMatrix.identity(2, 3)
    with pytest.raises(ZeroDivisionError):
        FpMatrix(3, ((1, 1), (1, 1))).inverse()


def test_counts():
    assert gl_order(2, 2) == 6 and gl_order(2, 3) == 48 and gl_order(4, 2) == 20160
    assert gaussian_multinomial((2, 2), 2) == 35
    assert gaussian_multinomial((1, 1), 3) == 4
    assert len(enumerate_cosets((2, 2), 2)) == 35
    assert len(enumerate_cosets((1, 2), 2)) == 7


def test_induced_dimensions():
    for p in (2, 3):
        assert steinberg2().dim(p) == p
        assert character_rep(3).dim(p) == 1
        assert induce_pair(steinberg2(), character_rep(2)).dim(p) == p * gaussian_multinomial((2, 2), p)
    spec = InducedCharSpec((1, 1), ("1", "1"))
    assert induced_character(spec, FpMatrix.identity(2, 2)) == CycInt(3)


def test_parse_block():
    assert parse_block("st*sgn", 2).dim(3) == 3
    with pytest.raises(ValueError):
        parse_block("st", 3)
    with pytest.raises(ValueError):
        parse_block("foo", 2)


def test_unipotent_groups():
    assert siegel_unipotent(2).order(2) == 16
    s1, s2 = block_shapes(2, 2, 1)
    assert shape_unipotent(s1).order(3) == 3
    assert shape_unipotent(s2).order(3) == 3
    # a character never sees the nontrivial psi
    assert twisted_dim(character_rep(2), shape_unipotent(s1), 3) == 0
    # Steinberg of GL_2 has a one-dimensional Whittaker space
    assert twisted_dim(steinberg2(), shape_unipotent(s1), 3) == 1


@pytest.mark.parametrize("r,a,b,want", [(2, "1", "1", 1), (2, "st", "1", 2), (1, "1", "1", 0),
                                        (3, "1", "1", 0), (2, "st", "st", None)])
def test_bruteforce_equals_formula_p2(r, a, b, want):
    rho1, rho2 = parse_block(a, r), parse_block(b, 4 - r)
    terms = []
    brute = tjm_dim_bruteforce(2, r, rho1, rho2, 2)
    formula = tjm_dim_formula(2, r, rho1, rho2, 2, terms)
    assert brute == formula
    assert all(isinstance(t, FormulaTerm) for t in terms)
    if want is not None:
        assert brute == want


def test_bruteforce_equals_formula_p3():
    one, st = parse_block("1", 2), parse_block("st", 2)
    assert tjm_dim_bruteforce(2, 2, one, one, 3) == tjm_dim_formula(2, 2, one, one, 3) == 1
    assert tjm_dim_bruteforce(2, 2, st, one, 3) == tjm_dim_formula(2, 2, st, one, 3) == 3
    sgn = parse_block("sgn", 2)
    assert tjm_dim_bruteforce(2, 2, sgn, one, 3) == tjm_dim_formula(2, 2, sgn, one, 3) == 1


def test_size_limits():
    with pytest.raises(ValueError):
        tjm_dim_bruteforce(3, 3, character_rep(3), character_rep(3), 2)
    with pytest.raises(ValueError):
        double_coset_partition(2, 2, p=3)
