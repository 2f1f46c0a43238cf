import random

from hypothesis import given, settings, strategies as st

from ufkit import syntax as S
from termgen import typed_terms

seeds = st.integers(min_value=0, max_value=10**6)


def test_abstract_then_instantiate_is_identity():
    body = S.App(S.Var("f"), S.Var("x"))
    sc = S.abstract(["x"], body)
    assert "x" not in S.free_vars(sc.body)
    assert S.instantiate(sc, [S.Var("x")]) == body


def test_instantiate_substitutes_the_bound_variable():
    sc = S.abstract(["x"], S.Pair(S.Var("x"), S.Var("y")))
    assert S.instantiate(sc, [S.STAR]) == S.Pair(S.STAR, S.Var("y"))


def test_alpha_equivalent_binders_are_equal():
    assert S.lam("x", S.ONE, S.Var("x")) == S.lam("y", S.ONE, S.Var("y"))
    assert S.alpha_eq(S.pi("a", S.U(), S.El(S.Var("a"))), S.pi("b", S.U(), S.El(S.Var("b"))))
    assert S.lam("x", S.ONE, S.Var("x")) != S.lam("x", S.ONE, S.Var("z"))


def test_substitution_does_not_capture():
    # (fun y => x)[x := y] must not bind the substituted y
    t = S.lam("y", S.ONE, S.Var("x"))
    u = S.substitute(t, "x", S.Var("y"))
    assert S.free_vars(u) == {"y"}
    assert S.instantiate(u.body, [S.STAR]) == S.Var("y")


def test_substitute_many_is_simultaneous():
    t = S.Pair(S.Var("x"), S.Var("y"))
    out = S.substitute_many(t, {"x": S.Var("y"), "y": S.Var("x")})
    assert out == S.Pair(S.Var("y"), S.Var("x"))


def test_spine_and_app():
    t = S.app(S.Var("f"), S.STAR, S.Var("x"))
    head, args = S.spine(t)
    assert head == S.Var("f") and args == [S.STAR, S.Var("x")]


def test_context_lookup_and_extend():
    g = S.Context.of(("x", S.ONE)).extend("y", S.Id(S.ONE, S.Var("x"), S.Var("x")))
    assert g.names() == ["x", "y"]
    assert g.lookup("y") == S.Id(S.ONE, S.Var("x"), S.Var("x"))
    assert len(g) == 2


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_generated_terms_are_closed_and_locally_closed(seed):
    g, ty, tm = typed_terms(seed)
    globals_ = {d.name for d in g.defs}
    assert S.free_vars(tm) <= globals_
    assert not S.has_loose_bound(tm)
    assert not S.has_loose_bound(ty)


@settings(max_examples=60, deadline=None)
@given(seeds, st.sampled_from(["x", "q", "fresh"]))
def test_substituting_an_absent_variable_is_identity(seed, name):
    _, _, tm = typed_terms(seed)
    assert S.substitute(tm, name + "_absent", S.STAR) == tm


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_shift_round_trip(seed):
    _, _, tm = typed_terms(seed)
    assert S.shift(S.shift(tm, 3), -3) == tm


def test_size_counts_nodes():
    assert S.size(S.STAR) == 1
    assert S.size(S.Pair(S.STAR, S.STAR)) == 3


def test_random_terms_are_deterministic_per_seed():
    a = typed_terms(17)[2]
    b = typed_terms(17)[2]
    assert a == b
    assert random.Random(17).random() == random.Random(17).random()
