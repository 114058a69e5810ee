import pytest
from hypothesis import given
from hypothesis import strategies as hst

from strategies import characters
from twistjac.core_arith import CharLabel, FormalCharacter, HalfInt, nu
from twistjac.jacquet import ZERO, analyze_preset, analyze_steinberg_char
from twistjac.lfun import (LanglandsParam, SpehBlock, adjoint, conjecture_check, dual_param, langlands_param,
                           pole_profile, tensor_blocks, tensor_param, trivial_adjoint_orders)
from twistjac.reps import LRep, Product, SteinbergRep, one, st
from twistjac.segments import Multisegment, seg

blocks = hst.builds(SpehBlock, hst.integers(1, 4), characters)
params = hst.lists(blocks, min_size=1, max_size=3).map(LanglandsParam)


def test_param_of_steinberg_and_character():
    assert langlands_param(st(3)) == LanglandsParam([SpehBlock(3, nu())])
    p = langlands_param(one(2))
    assert p == LanglandsParam([SpehBlock(1, nu(HalfInt(1))), SpehBlock(1, nu(HalfInt(-1)))])
    assert p.dim == 2


def test_sp2_tensor_sp2():
    got = tensor_blocks(SpehBlock(2, nu()), SpehBlock(2, nu()))
    assert sorted(b.a for b in got) == [1, 3]


def test_tau_adjoint_blocks():
    tau = LRep(Multisegment([seg("1/2", "3/2"), seg("-3/2", "-1/2")]))
    a = adjoint(langlands_param(tau))
    assert a.dim == 16
    assert a.counts()[SpehBlock(3, nu())] == 2
    assert a.counts()[SpehBlock(3, nu(2))] == 1
    assert conjecture_check(tau, 2).profile.as_dict() == {1: 1, 2: 1}


@pytest.mark.parametrize("k", range(1, 9))
def test_trivial_character_profile(k):
    prof = pole_profile(adjoint(langlands_param(one(k))), max(k, 1))
    assert prof.as_dict() == trivial_adjoint_orders(k)
    assert prof.half_poles == [] and prof.beyond == []


def test_profile_side_lists():
    p = LanglandsParam([SpehBlock(1, nu(HalfInt(-3))), SpehBlock(1, nu(-5)), SpehBlock(2, nu())])
    prof = pole_profile(p, 2)
    assert prof.half_poles == [HalfInt(3)]
    assert prof.beyond == [5]
    with pytest.raises(ValueError):
        pole_profile(p, 0)


def test_labelled_blocks_have_no_pole():
    assert SpehBlock(2, FormalCharacter(CharLabel.gen("chi"), HalfInt(-1))).pole() is None
    assert SpehBlock(2, nu(HalfInt(-1))).pole() == 0


def test_z_family_parameter():
    # Z_{1,r} is L of [nu^{-(r+1)/2} .. nu^{(r-1)/2}] plus singletons
    for n in range(1, 5):
        for r in range(1, n + 1):
            sub = analyze_steinberg_char(n, r, FormalCharacter()).sub
            assert SpehBlock(r + 1, nu(HalfInt(-1))) in langlands_param(LRep(sub.data))


def test_table_predictions_agree():
    for name in ("xi", "sigma"):
        for row in analyze_preset(name):
            res = conjecture_check(LRep(row.data), 2)
            assert res.kind == "prediction"
            assert res.predicted_tjm_zero == (row.status == ZERO), row.name


def test_conjecture_rank_check():
    with pytest.raises(ValueError):
        conjecture_check(one(3), 2)
    assert len(conjecture_check(st(4), 2).lines()) >= 4


@pytest.mark.parametrize("n", range(2, 6))
def test_character_times_tempered(n):
    sigma = SteinbergRep(n - 1, FormalCharacter(CharLabel.gen("chi")))
    assert conjecture_check(Product([one(n + 1), sigma]), n).predicted_tjm_zero
    assert not conjecture_check(Product([one(n - 1), SteinbergRep(n + 1, nu())]), n).predicted_tjm_zero


@given(params, params)
def test_dim_multiplicative(p, q):
    assert tensor_param(p, q).dim == p.dim * q.dim


@given(params)
def test_adjoint_self_dual(p):
    a = adjoint(p)
    assert dual_param(a) == a
    assert dual_param(dual_param(p)) == p
