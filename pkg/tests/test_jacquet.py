import pytest
from hypothesis import given, settings
from hypothesis import strategies as hst

from strategies import characters
from twistjac.core_arith import CharLabel, FormalCharacter, HalfInt, nu
from twistjac.jacquet import (CHAR_KILLS, CHAR_SMOOTH, EXPECTED, GL2_BLOCK, NONZERO, TWO_CHARACTERS,
                              UNKNOWN, ZERO, InducedModule, TensorModule, analyze_L_family, analyze_preset,
                              analyze_steinberg_char, block_shapes, block_tjm, factor_twists, k_range,
                              net_twist, same_module, split_product, table_mismatches, tjm_char_smooth,
                              tjm_filtration, tjm_product, tjm_smooth_char, vanishing_by_embedding)
from twistjac.reps import CharRep, Product, SteinbergRep, one, st
from twistjac.segments import Multisegment, seg

CHI = FormalCharacter(CharLabel.gen("chi"))
MU = FormalCharacter(CharLabel.gen("mu"), HalfInt(1))


def test_k_range_examples():
    kr = k_range(2, 2)
    assert (kr.alpha, kr.beta, kr.gamma) == (0, 1, 2)
    assert list(k_range(2, 3).ks()) == [1]
    assert list(k_range(3, 1).ks()) == [0]
    for bad in (0, 4):
        with pytest.raises(ValueError):
            k_range(2, bad)


def test_block_shapes():
    s1, s2 = block_shapes(3, 4, 1)
    assert s1.blocks == (1, 1, 2) and s1.rank == 4 and s1.psi_size == 1
    assert s2.blocks == (2, 0, 0) and s2.rank == 2 and s2.is_trivial()
    with pytest.raises(ValueError):
        block_shapes(2, 3, 0)


def test_block_tjm_rules():
    s1, s2 = block_shapes(2, 2, 1)
    # a character on a non-trivial group dies
    assert block_tjm(one(2), s1).resolved.kind == "zero"
    assert block_tjm(one(2), s1).resolved.reason == CHAR_KILLS
    # Steinberg of G_2 on the full unipotent: its central character
    got = block_tjm(st(2, 1), s1).resolved
    assert got.kind == "char" and got.char == nu(2) and got.reason == GL2_BLOCK
    # trivial group: the representation itself
    t1, _ = block_shapes(2, 2, 0)
    assert block_tjm(st(2), t1).resolved.kind == "rep"
    with pytest.raises(ValueError):
        block_tjm(one(3), s1)


def test_block_tjm_never_guesses():
    # a non-generic, non-character rank-4 block on a psi of size 1 has no rule
    s1, _ = block_shapes(3, 4, 1)
    tau = Product([st(2, 1), one(2, -1)])
    assert block_tjm(tau, s1).resolved.kind == "unknown"


def test_two_characters_theorem_examples():
    v = tjm_filtration(2, 2, CharRep(2, CHI), CharRep(2, MU))
    assert v.status == NONZERO and v.theorem == TWO_CHARACTERS
    assert v.resolved_module == TensorModule(CharRep(2, CHI), CharRep(2, MU))
    for r in (1, 3):
        v = tjm_filtration(2, r, CharRep(r, CHI), CharRep(4 - r, MU))
        assert v.status == ZERO


@pytest.mark.parametrize("n", range(1, 7))
def test_two_characters_exhaustive(n):
    for r in range(1, 2 * n):
        v = tjm_filtration(n, r, CharRep(r, CHI), CharRep(2 * n - r, MU))
        assert (v.status == ZERO) == (r != n)
        if r == n:
            assert same_module(v.resolved_module, TensorModule(CharRep(n, CHI), CharRep(n, MU)))


@pytest.mark.parametrize("n", range(1, 9))
def test_equal_rank_twists_cancel(n):
    sizes, tw = factor_twists(n, n, 0)
    assert sizes == {"a": 0, "b": n, "c": 0}
    assert set(tw) == {"tau", "delta_P_half", "delta_DeltaP_-3/2"}
    assert all(v == 0 for v in net_twist(tw).values())


def test_gl4_proposition_factor():
    # St_2 nu x St_2 nu^-1: the k = 1 piece is i_B(nu^{5/2} (x) nu^{-5/2})
    v = tjm_product(Product([st(2, 1), st(2, -1)]), 2, 2)
    assert v.status == NONZERO and len(v.factors) == 2
    f0, f1 = v.factors
    assert f0.module == TensorModule(st(2, 1), st(2, -1))
    assert f1.module == InducedModule((nu(HalfInt(5)), nu(HalfInt(-5))))


def test_char_smooth_and_smooth_char():
    rho = Product([st(2), one(1, 3)])
    v = tjm_char_smooth(2, 1, CHI, rho)
    assert v.theorem == CHAR_SMOOTH and v.status == NONZERO
    assert tjm_char_smooth(1, 1, CHI, one(1)).theorem == TWO_CHARACTERS
    v = tjm_smooth_char(2, 1, one(1, 2), CHI)
    assert v.status == ZERO
    v = tjm_smooth_char(2, 3, Product([st(2), one(1)]), CHI)
    assert v.status != ZERO


def test_generic_next_rank():
    v = tjm_product(Product([st(3), one(1)]), 2, 3)
    assert v.status == NONZERO


def test_split_product():
    a, b = split_product(Product([one(1), st(2), one(1)]), 3)
    assert a == Product([one(1), st(2)]) and b == one(1)
    with pytest.raises(ValueError):
        split_product(Product([st(2), st(2)]), 1)


def test_vanishing_by_embedding():
    ok, why = vanishing_by_embedding(Multisegment([seg("-3/2", "3/2")]), 2)
    assert ok and "character" in why
    ok, _ = vanishing_by_embedding(Multisegment([seg("3/2"), seg("-3/2", "1/2")]), 2)
    assert ok


def test_l_family_examples():
    rep = analyze_L_family(2, 2, nu(-1))
    assert rep.verdict.status == NONZERO
    assert rep.verdict.resolved_module == TensorModule(CharRep(2, nu(1)), CharRep(2, nu(-1)))
    assert rep.verdict.shalika is True
    assert len(rep.lquotient) == 3
    with pytest.raises(ValueError):
        analyze_L_family(2, 3, nu())


@pytest.mark.parametrize("n", range(1, 6))
def test_shalika_flag(n):
    for alpha in range(1, n + 1):
        for t in range(-2 * n - 1, 2 * n + 2):
            for lab in (CharLabel(), CharLabel.gen("chi")):
                chi = FormalCharacter(lab, HalfInt(t))
                got = analyze_L_family(n, alpha, chi).verdict.shalika
                assert got == (lab.is_trivial() and t == -alpha), (n, alpha, chi)


def test_steinberg_char_equal_rank():
    rep = analyze_steinberg_char(2, 2, nu(1))
    assert rep.sub.status == NONZERO and rep.quotient.status == ZERO
    assert rep.dual_sub.status == NONZERO and rep.dual_quotient.status == ZERO
    assert same_module(rep.sub.module, TensorModule(SteinbergRep(2, nu(1)), CharRep(2, nu(-1))))


@pytest.mark.parametrize("n,r", [(3, 1), (3, 2), (4, 3)])
def test_steinberg_char_lower_rank(n, r):
    rep = analyze_steinberg_char(n, r, CHI)
    assert rep.total.status == ZERO
    assert all(c.status == ZERO for c in (rep.sub, rep.quotient))


def test_steinberg_char_rejects():
    with pytest.raises(ValueError):
        analyze_steinberg_char(2, 3, nu())
    with pytest.raises(ValueError):
        analyze_steinberg_char(2, 2, nu(), sign=0)


def test_presets_match_published_verdicts():
    for name in ("xi", "sigma"):
        rows = analyze_preset(name)
        assert [r.name for r in rows] == list(EXPECTED[name])
        assert table_mismatches(name, rows) == []
    tau = next(r for r in analyze_preset("xi") if r.name == "tau")
    assert same_module(tau.module, Product([one(1, HalfInt(3)), one(1, HalfInt(-3))]))
    with pytest.raises(ValueError):
        analyze_preset("nope")


@settings(max_examples=60)
@given(hst.integers(1, 6), hst.data())
def test_factor_count_and_statuses(n, data):
    r = data.draw(hst.integers(1, 2 * n - 1))
    chi = data.draw(characters)
    v = tjm_filtration(n, r, CharRep(r, chi), CharRep(2 * n - r, chi.inverse()))
    kr = k_range(n, r)
    assert len(v.factors) == kr.beta - kr.alpha + 1
    assert [f.k for f in v.factors] == list(kr.ks())
    assert v.status in (ZERO, NONZERO, UNKNOWN)
    for f in v.factors:
        sizes = dict(zip("abc", f.parabolic))
        assert sum(sizes.values()) == n
        assert set(f.net()) == {b for b, s in sizes.items() if s > 0}


@given(hst.integers(1, 8), hst.data())
def test_twist_sources_are_well_defined(n, data):
    r = data.draw(hst.integers(1, 2 * n - 1))
    kr = k_range(n, r)
    for k in kr.ks():
        sizes, tw = factor_twists(n, r, k)
        assert sum(sizes.values()) == n
        for src in tw.values():
            assert all(isinstance(v, HalfInt) for v in src.values())
