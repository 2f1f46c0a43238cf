from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from ufkit import kernel as K
from ufkit import syntax as S
from ufkit.frontend import parse_term
from ufkit.setmodel import (
    U0,
    BudgetExceeded,
    LargeW,
    LiftingSquare,
    NotCommuting,
    build_set_universe,
    interpret,
    soundness_sweep,
    term_at,
    type_at,
    verify_internal_closure,
)
from ufkit.setmodel import hf
from ufkit.setmodel.hf import EMPTY

BOOL = S.Sum(S.ONE, S.ONE)


@pytest.fixture(scope="module")
def M():
    return build_set_universe(64, 16)


small = st.integers(min_value=0, max_value=4).map(hf.ordinal)


# -- hereditarily finite codes ----------------------------------------------------------


@given(small, small)
def test_pair_round_trips(a, b):
    assert hf.unpair(hf.pair(a, b)) == (a, b)


@given(st.dictionaries(small, small, max_size=4))
def test_function_round_trips(table):
    f = hf.function(table)
    assert hf.table(f) == table
    for x, y in table.items():
        assert hf.apply(f, x) == y


@given(small, small)
def test_codes_are_extensional(a, b):
    assert (hf.make_set([a, b]) == hf.make_set([b, a, a]))
    assert hf.node_count(hf.make_set([a])) > hf.node_count(a) or a == EMPTY


def test_ordinals():
    assert [hf.natural(hf.ordinal(n)) for n in range(5)] == list(range(5))
    assert len(hf.ordinal(3)) == 3


def test_code_enumeration_is_complete_for_tiny_budgets():
    # codes with at most 3 nodes: {}, {{}}, {{{}}}, {{}, {{}}}
    assert len(hf.enumerate_codes(3)) == 4
    with pytest.raises(BudgetExceeded):
        hf.enumerate_codes(8, limit=10)


# -- universe structure maps -------------------------------------------------------------


def test_pi_fiber_is_all_dependent_functions(M):
    A, B = hf.ordinal(2), hf.ordinal(3)
    code = M.Pi_U(A, {x: B for x in M.members(A)})
    expected = {hf.function(dict(zip(M.members(A), ys))) for ys in product(M.members(B), repeat=2)}
    assert set(M.members(code)) == expected and len(expected) == 9


def test_sigma_fiber_is_the_disjoint_union(M):
    zero, one = hf.ordinal(0), hf.ordinal(1)
    code = M.Sigma_U(hf.ordinal(2), {zero: EMPTY, one: hf.ordinal(2)})
    assert len(M.members(code)) == 2
    assert all(hf.unpair(p)[0] == one for p in M.members(code))


def test_w_with_a_nullary_constructor_is_a_singleton(M):
    a = hf.ordinal(0)
    code = M.W_U(hf.make_set([a]), {a: EMPTY})
    assert M.members(code) == [M.sup(a, hf.function({}))]


def test_infinite_w_is_refused_not_truncated(M):
    one = hf.ordinal(1)
    labels = hf.ordinal(2)
    fam = {hf.ordinal(0): EMPTY, one: one}
    with pytest.raises(BudgetExceeded):
        M.W_U(labels, fam)
    large = M.W_U(labels, fam, symbolic=True)
    assert isinstance(large, LargeW)
    zero_tree = M.sup(hf.ordinal(0), hf.function({}))
    assert M.contains(large, M.sup(one, hf.function({EMPTY: zero_tree})))
    with pytest.raises(BudgetExceeded):
        M.members(large)


def test_identity_fibers(M):
    A = hf.ordinal(2)
    assert M.members(M.Id_U(A, EMPTY, EMPTY)) == [EMPTY]
    assert M.members(M.Id_U(A, EMPTY, hf.ordinal(1))) == []


def test_zero_one_plus(M):
    assert M.members(M.zero) == [] and len(M.members(M.one)) == 1
    assert len(M.members(M.plus_U(hf.ordinal(2), hf.ordinal(3)))) == 5


def test_budget_is_enforced():
    tiny = build_set_universe(8, 4)
    with pytest.raises(BudgetExceeded):
        tiny.Pi_U(hf.ordinal(3), {x: hf.ordinal(3) for x in hf.ordinal(3)})


def test_bad_budgets_are_rejected():
    with pytest.raises(ValueError):
        build_set_universe(16, 16)


# -- the identity lifting --------------------------------------------------------------


def _square(points_ctx, A=hf.ordinal(2), motive=hf.ordinal(1)):
    pts, top, bottom = set(), {}, {}
    for g in points_ctx:
        for x in hf.sorted_members(A):
            pt = (g, A, x, x, EMPTY)
            pts.add(pt)
            top[(g, A, x)] = (motive, EMPTY)
            bottom[pt] = motive
    return LiftingSquare(frozenset(pts), top, bottom)


def test_lifting_is_forced(M):
    sq = _square(["g"])
    filler = M.id_lifting(sq)
    assert all(v == sq.top[k[:3]] for k, v in filler.items())


def test_lifting_rejects_non_commuting_squares(M):
    sq = _square(["g"])
    pt = next(iter(sq.points))
    bad = LiftingSquare(sq.points, sq.top, {**sq.bottom, pt: hf.ordinal(2)})
    with pytest.raises(NotCommuting):
        M.id_lifting(bad)


def test_lifting_commutes_with_reindexing(M):
    sq = _square(["g0", "g1"])
    f = {"h0": "g1", "h1": "g1", "h2": "g0"}
    pulled = LiftingSquare(
        frozenset((h, *pt[1:]) for h in f for pt in sq.points if pt[0] == f[h]),
        {(h, *k[1:]): v for h in f for k, v in sq.top.items() if k[0] == f[h]},
        {(h, *k[1:]): v for h in f for k, v in sq.bottom.items() if k[0] == f[h]},
    )
    upstairs = M.id_lifting(sq)
    downstairs = M.id_lifting(pulled)
    assert all(downstairs[pt] == upstairs[(f[pt[0]], *pt[1:])] for pt in pulled.points)


# -- interpretation ----------------------------------------------------------------------


ENV = K.Environment()


def test_identity_on_one(M):
    v = term_at(ENV, S.lam("x", S.ONE, S.Var("x")), S.arrow(S.ONE, S.ONE), M)
    assert hf.table(v) == {EMPTY: EMPTY}


def test_case_on_inl_is_the_left_branch(M):
    env = K.add_definition(ENV, K.Definition("tt", (), BOOL, S.Inl(S.STAR)))
    t = parse_term("case (q. One + One) (l. inr l) (r. inl r) tt")
    j = S.TermEqJ(S.Context(), t, S.Inr(S.STAR), BOOL)
    assert interpret(env, j, M) is True
    assert interpret(env, S.TermEqJ(S.Context(), t, S.Inl(S.STAR), BOOL), M) is False


def test_el_of_a_pi_code(M):
    ty = S.El(S.CPi(S.Var("a"), S.abstract(["x"], S.Var("a"))))
    st_ = type_at(ENV, ty, M, {"a": (hf.ordinal(2), type_at(ENV, S.U(), M))})
    assert len(st_.elements()) == 4


def test_transport_along_refl_fixes_both_points(M):
    g = S.Context.of(("x", BOOL))
    j = S.J(S.abstract(["a", "b", "p"], BOOL), S.abstract(["z"], S.Var("z")), S.Var("x"), S.Var("x"), S.Refl(BOOL, S.Var("x")))
    assert interpret(ENV, S.TermEqJ(g, j, S.Var("x"), BOOL), M) is True


def test_contexts_become_objects(M):
    X = interpret(ENV, S.Context.of(("x", BOOL), ("y", S.Id(BOOL, S.Var("x"), S.Var("x")))), M)
    assert X.level == 2


def test_universe_as_a_type(M):
    assert type_at(ENV, S.U(), M).code() is U0


def test_univalence_axiom_is_unsupported(M):
    from ufkit.setmodel import Unsupported, describe_definition

    env = K.load_prelude()
    with pytest.raises(Unsupported):
        describe_definition(env, "uvt", M)


def test_internal_universe_is_closed(M):
    rep = verify_internal_closure(M, max_nodes=4, fam_nodes=3, fam_limit=16)
    assert rep.ok and rep.total() > 0


def test_sweep_flags_a_wrong_model():
    # a corpus whose equalities hold: no disagreements
    rep = soundness_sweep("def tt : One + One := inl star\ncheck refl (One + One) tt : Id (One + One) tt (inl star)\n", build_set_universe(64, 16))
    assert rep.ok and rep.agree >= 2


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_generated_terms_agree_with_their_normal_forms(seed):
    from termgen import typed_terms

    g, ty, tm = typed_terms(seed, depth=1)
    env = g.environment()
    nf = K.normalize(env, S.Context(), tm)
    M = build_set_universe(64, 16)
    try:
        assert interpret(env, S.TermEqJ(S.Context(), tm, nf, ty), M) is True
    except BudgetExceeded:
        pass
