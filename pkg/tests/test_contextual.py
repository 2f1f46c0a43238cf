import random

import pytest

from ufkit import kernel as K
from ufkit import syntax as S
from ufkit.contextual import (
    Comparison,
    Configuration,
    CorruptedCU,
    FinMap,
    Sampler,
    SynMor,
    contextualize,
    induce_logical_structure,
    syntactic_cc,
    verify_contextual_laws,
    verify_structure,
)
from ufkit.contextual.structures import along, section, values
from ufkit.setmodel import build_set_universe, hf

BOOL = S.Sum(S.ONE, S.ONE)


@pytest.fixture(scope="module")
def M():
    return build_set_universe(64, 16)


@pytest.fixture(scope="module")
def cu(M):
    return contextualize(M)


def test_terminal_is_the_empty_sequence(cu):
    pt = cu.terminal()
    assert cu.level(pt) == 0 and pt.names == ()
    assert len(cu.real(pt)) == 1


def test_pullback_along_identity_is_the_same_sequence(cu):
    X = along(cu, cu.terminal(), lambda g: hf.ordinal(2))
    assert cu.pullback(cu.identity(cu.terminal()), X) == X


def test_endomorphisms_of_a_two_element_type(cu):
    X = along(cu, cu.terminal(), lambda g: hf.ordinal(2))
    assert len(cu.homset(X, X)) == 4


def test_laws_hold_on_samples(cu):
    sm = Sampler(cu, random.Random(0))
    rep = verify_contextual_laws(cu, [sm.configuration() for _ in range(100)])
    assert rep.checked == 100 and rep.ok, rep.violations[:3]


def test_corrupted_chooser_is_caught(M):
    bad = CorruptedCU(M)
    sm = Sampler(bad, random.Random(0))
    rep = verify_contextual_laws(bad, [sm.configuration() for _ in range(60)])
    assert "(fg)* X = g*(f*X)" in rep.names()


def test_two_choosers_are_canonically_isomorphic(M):
    a = contextualize(M)
    b = contextualize(build_set_universe(64, 16, swap_pullbacks=True))
    sm = Sampler(a, random.Random(2))
    rep = Comparison(a, b).verify([sm.configuration() for _ in range(60)])
    assert rep.ok, rep.violations[:3]


def test_pi_fiber_counts_functions(cu):
    ls = induce_logical_structure(cu)
    A = along(cu, cu.terminal(), lambda g: hf.ordinal(2))
    B = along(cu, A, lambda g: hf.ordinal(3))
    P = ls.pi.form(B)
    assert len(cu.real(P)) == 9


def test_app_of_lambda(cu):
    ls = induce_logical_structure(cu)
    A = along(cu, cu.terminal(), lambda g: hf.ordinal(2))
    B = along(cu, A, lambda g: hf.ordinal(3))
    b = section(cu, B, {e: hf.ordinal(cu.last(e) == hf.ordinal(1)) for e in cu.real(A)})
    lam = ls.pi.lam(B, b)
    for v in hf.sorted_members(hf.ordinal(2)):
        a = section(cu, A, {g: v for g in cu.real(A.ft())})
        got = values(cu, ls.pi.app(B, lam, a))
        assert got == {g: cu.last(b(cu.point(g, v))) for g in cu.real(A.ft())}


def test_structure_equations_hold(cu):
    ls = induce_logical_structure(cu)
    rep = verify_structure(ls, random.Random(4), samples=10)
    assert rep.ok, rep.violations[:3]
    assert set(rep.per_constructor) == {"Pi", "Sigma", "Id", "W", "0/1", "+", "U"}


# -- the syntactic category ------------------------------------------------------------


@pytest.fixture(scope="module")
def syn():
    return syntactic_cc(K.load_prelude())


def test_identity_is_the_variables(syn):
    X = S.Context.of(("x", S.ONE))
    assert syn.identity(X).terms == (S.Var("x"),)


def test_maps_into_the_empty_context(syn):
    X = S.Context.of(("x", S.ONE))
    star = SynMor(S.Context(), X, (S.STAR,))
    assert syn.hom_eq(syn.compose(syn.proj(X), star), syn.identity(S.Context()))


def test_morphism_equality_is_defeq(syn):
    src, tgt = S.Context.of(("x", S.ONE)), S.Context.of(("z", S.ONE))
    redex = S.App(S.lam("y", S.ONE, S.Var("y")), S.Var("x"))
    assert syn.hom_eq(SynMor(src, tgt, (redex,)), SynMor(src, tgt, (S.Var("x"),)))
    B = S.Context.of(("z", BOOL))
    srcB = S.Context.of(("x", BOOL))
    assert not syn.hom_eq(SynMor(srcB, B, (S.Inl(S.STAR),)), SynMor(srcB, B, (S.Var("x"),)))


def _configurations():
    X = S.Context.of(("x", BOOL), ("p", S.Id(BOOL, S.Var("x"), S.Var("x"))))
    Y = S.Context.of(("b", BOOL), ("c", S.ONE))
    Z = S.Context.of(("u", S.ONE))
    flip = S.CaseSum(S.abstract(["m"], BOOL), S.abstract(["l"], S.Inr(S.Var("l"))), S.abstract(["r"], S.Inl(S.Var("r"))), S.Var("b"))
    f1 = SynMor(Y, S.Context.of(("x", BOOL)), (S.Var("b"),))
    f2 = SynMor(Y, S.Context.of(("x", BOOL)), (flip,))
    g1 = SynMor(Z, Y, (S.Inl(S.Var("u")), S.Var("u")))
    g2 = SynMor(Z, Y, (S.Inr(S.STAR), S.STAR))
    W = S.Context.of(("f", S.arrow(S.ONE, BOOL)))
    X2 = S.Context.of(("h", S.arrow(S.ONE, BOOL)), ("e", S.Id(BOOL, S.App(S.Var("h"), S.STAR), S.App(S.Var("h"), S.STAR))))
    f3 = SynMor(W, S.Context.of(("h", S.arrow(S.ONE, BOOL))), (S.lam("t", S.ONE, S.App(S.Var("f"), S.Var("t"))),))
    g3 = SynMor(S.Context(), W, (S.lam("t", S.ONE, S.Inl(S.Var("t"))),))
    return [Configuration(X, f1, g1), Configuration(X, f2, g2), Configuration(X, f2, g1), Configuration(X2, f3, g3)]


def test_syntactic_laws_on_hand_picked_substitutions(syn):
    for c in _configurations():
        syn.check_morphism(c.f)
        syn.check_morphism(c.g)
    rep = verify_contextual_laws(syn, _configurations())
    assert rep.checked == 4 and rep.ok, rep.violations


def test_pullback_renames_on_demand(syn):
    X = S.Context.of(("b", BOOL), ("p", S.Id(BOOL, S.Var("b"), S.Var("b"))))
    Y = S.Context.of(("b", S.ONE))
    f = SynMor(Y, syn.ft(X), (S.Inl(S.Var("b")),))
    fX = syn.pullback(f, X)
    assert fX.entries[-1][1] == S.Id(BOOL, S.Inl(S.Var("b")), S.Inl(S.Var("b")))
    K.check_context(syn.env, fX)


def test_finmap_is_hashable_by_table():
    assert FinMap({1: 2}) == FinMap({1: 2})
    assert len({FinMap({1: 2}), FinMap({1: 2})}) == 1


def test_hom_eq_agrees_with_defeq_on_typed_morphisms(syn):
    src, tgt = S.Context.of(("x", BOOL)), S.Context.of(("z", BOOL))
    candidates = [S.Var("x"), S.Inl(S.STAR), S.Inr(S.STAR), S.App(S.lam("y", BOOL, S.Var("y")), S.Var("x"))]
    for a in candidates:
        for b in candidates:
            same = K.defeq(syn.env, src, a, b, BOOL)
            assert syn.hom_eq(SynMor(src, tgt, (a,)), SynMor(src, tgt, (b,))) == same
