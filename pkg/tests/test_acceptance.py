"""The acceptance criteria, one test each.

Every test records a one-line verdict; the lines are printed at the end of
the pytest run (see ``conftest.py``) and also when this file is run as a
script::

    python3 tests/test_acceptance.py
"""

from __future__ import annotations

import itertools
import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ufkit import kernel as K  # noqa: E402
from ufkit import syntax as S  # noqa: E402
from ufkit.contextual import (  # noqa: E402
    CorruptedCU,
    Sampler,
    contextualize,
    induce_logical_structure,
    verify_contextual_laws,
    verify_structure,
)
from ufkit.frontend import parse_term, pretty  # noqa: E402
from ufkit.frontend.session import run_source  # noqa: E402
from ufkit.data import corpus_source  # noqa: E402
from ufkit.setmodel import build_set_universe, soundness_sweep, verify_internal_closure  # noqa: E402
from ufkit.simplicial import (  # noqa: E402
    delta,
    discrete,
    enumerate_maps,
    extend_trivial_fibration,
    fibered_path_object,
    fin_map,
    fixture_names,
    fixture_text,
    format_map,
    format_sset,
    horn,
    identity,
    inclusion,
    is_kan_fibration,
    is_trivial_fibration,
    is_univalent,
    kan_oracle,
    load_sset,
    parse_map,
    parse_sset,
    path_object_base_change,
    point,
    rep_space,
    restriction,
    to_point,
)
from fibrations import catalogue, extension_pairs, sample_qs  # noqa: E402
from ssetgen import SMAP_ENDS, random_map, random_sset  # noqa: E402
from termgen import BOOL, Gen, typed_terms  # noqa: E402

RESULTS: dict = {}

EMPTY = S.Context()


def nondegenerate_count(X, top=3):
    return sum(len(X.nondegenerate(n)) for n in range(top + 1))


# -- 1 ------------------------------------------------------------------------------


def criterion_1():
    start = time.perf_counter()
    rep = run_source(corpus_source(), "rules.uf")
    elapsed = time.perf_counter() - start
    bad = [r.decl for r in rep.records if not r.succeeded]
    assert not bad, f"unexpected outcomes: {bad[:5]}"
    assert elapsed < 5, f"{elapsed:.2f} s"
    expected_errors = sum(r.status == "expected-error" for r in rep.records)
    return f"{len(rep.records)} declarations ({expected_errors} expected errors) in {elapsed:.2f} s"


# -- 2 ------------------------------------------------------------------------------


def criterion_2():
    rng = random.Random(2024)
    done = 0
    for i in range(200):
        g = Gen(random.Random(rng.randrange(10**9)))
        rule = Gen.RULES[i % len(Gen.RULES)]
        ty = g.type(1)
        lhs, rhs = g.rule_instance(ty, [], 1, rule)
        env = g.environment()
        K.check(env, EMPTY, lhs, ty)
        assert K.defeq(env, EMPTY, lhs, rhs, ty), f"{rule}: {pretty(lhs)} vs {pretty(rhs)}"
        done += 1
    for rule in Gen.CODE_RULES:
        g = Gen(random.Random(rng.randrange(10**9)))
        a, b = g.code_equation(rule)
        assert K.defeq_types(g.environment(), EMPTY, a, b), rule
    F = S.arrow(BOOL, BOOL)
    ctx = S.Context.of(("f", F))
    expanded = S.lam("x", BOOL, S.App(S.Var("f"), S.Var("x")))
    on = K.defeq(K.Environment((), K.TheoryFlags(eta_pi=True)), ctx, expanded, S.Var("f"), F)
    off = K.defeq(K.Environment((), K.TheoryFlags(eta_pi=False)), ctx, expanded, S.Var("f"), F)
    assert on and not off, (on, off)
    return f"{done} rule instances, {len(Gen.CODE_RULES)} code equations, eta {on} -> {off}"


# -- 3 ------------------------------------------------------------------------------


TOWER = ["LHInv", "RHInv", "isHIso", "HIso", "isUnivalent"]


def criterion_3():
    full = K.load_prelude(K.TheoryFlags(eta_pi=True, funext=True, univalence_axiom=True))
    missing = [n for n in TOWER + ["uvt"] if n not in full]
    assert not missing, missing
    # re-check every entry from scratch, in order
    env = K.Environment((), full.flags)
    for d in full.defs:
        env = K.add_definition(env, d)
    off = K.load_prelude(K.TheoryFlags(eta_pi=True, funext=True, univalence_axiom=False))
    assert "uvt" not in off
    assert all(n in off for n in TOWER)
    return f"{len(full.defs)} prelude entries with univalence, {len(off.defs)} without"


# -- 4 ------------------------------------------------------------------------------


def criterion_4():
    M = build_set_universe(64, 16)
    cu = contextualize(M)
    sm = Sampler(cu, random.Random(4))
    rep = verify_contextual_laws(cu, [sm.configuration() for _ in range(500)])
    assert rep.checked == 500 and rep.ok, rep.violations[:3]
    srep = verify_structure(induce_logical_structure(cu), random.Random(4), samples=20)
    assert srep.ok, srep.violations[:3]
    assert set(srep.per_constructor) == {"Pi", "Sigma", "Id", "W", "0/1", "+", "U"}
    bad = CorruptedCU(M)
    bsm = Sampler(bad, random.Random(4))
    caught = verify_contextual_laws(bad, [bsm.configuration() for _ in range(100)])
    assert not caught.ok
    return f"500 configurations clean, {srep.checked} structure checks clean, corruption caught ({sorted(caught.names())[0]})"


# -- 5 ------------------------------------------------------------------------------


def criterion_5():
    start = time.perf_counter()
    M = build_set_universe(256, 64)
    rep = soundness_sweep(corpus_source(), M)
    assert rep.ok, rep.disagree[:3]
    assert rep.agree > 0
    closure = verify_internal_closure(build_set_universe(64, 16))
    assert closure.ok, closure.failures[:3]
    elapsed = time.perf_counter() - start
    assert elapsed < 60, f"{elapsed:.1f} s"
    return f"{rep.agree} equalities agree, {len(rep.skipped)} beyond budget, closure {closure.total()} squares, {elapsed:.1f} s"


# -- 6 ------------------------------------------------------------------------------


def _small_fixtures():
    out = [load_sset(n) for n in fixture_names()]
    return [X for X in out if nondegenerate_count(X) <= 8]


def criterion_6():
    rng = random.Random(6)
    sampled = mismatches = yes = 0
    while sampled < 1000:
        E, B = random_sset(rng, 8, 3), random_sset(rng, 4, 2)
        if nondegenerate_count(E) > 8 or nondegenerate_count(B) > 8:
            continue
        p = random_map(rng, E, B, 50)
        if p is None:
            continue
        d = rng.choice([1, 2, 3])
        a, b = is_kan_fibration(p, d).answer, kan_oracle(p, d).answer
        sampled += 1
        yes += a == "yes"
        mismatches += a != b
    exhaustive = 0
    for E, B in itertools.product(_small_fixtures(), repeat=2):
        for table in enumerate_maps(E, B):
            p = fin_map(E, B, table)
            for d in (1, 2, 3):
                exhaustive += 1
                mismatches += is_kan_fibration(p, d).answer != kan_oracle(p, d).answer
    assert mismatches == 0, f"{mismatches} disagreements"
    v = is_kan_fibration(inclusion(horn(2, 1), delta(2)), 2)
    assert v.answer == "no" and v.witness is not None
    return f"{sampled} sampled ({yes} Kan) + {exhaustive} exhaustive, 0 mismatches; horn rejected at {v.witness}"


# -- 7 ------------------------------------------------------------------------------


def _check_path_object(p, f, d=2):
    P = fibered_path_object(p, d)
    E = p.src
    for n in range(d + 1):
        level = E.level(n)
        images = [P.r(n, e) for e in level]
        assert len(set(images)) == len(level), "r is not injective"
        for e, x in zip(level, images):
            assert P.s(n, x) == e and P.t(n, x) == e, "s r = t r = id fails"
    assert is_kan_fibration(P.st, d), "(s, t) is not a Kan fibration"
    _, ok = path_object_base_change(p, f, d)
    assert ok, "not stable under base change"


def criterion_7():
    cat = catalogue()
    assert len(cat) == 20
    for name, p, f in cat:
        try:
            _check_path_object(p, f)
        except AssertionError as e:
            raise AssertionError(f"{name}: {e}") from None
    return "20 fibrations factor the diagonal, stably"


# -- 8 ------------------------------------------------------------------------------


def criterion_8():
    start = time.perf_counter()
    got = (
        is_univalent(identity(point()), 2).answer,
        is_univalent(identity(discrete(2)), 2).answer,
        is_univalent(to_point(discrete(2)), 2).answer,
    )
    elapsed = time.perf_counter() - start
    assert got == ("yes", "no", "no"), got
    assert elapsed < 10, f"{elapsed:.1f} s"
    return f"verdicts {got} in {elapsed:.2f} s"


# -- 9 ------------------------------------------------------------------------------


def criterion_9():
    qs = sample_qs()
    assert len(qs) == 10
    univalent = identity(point())
    verdicts = {}
    for name, q in qs:
        v = rep_space(q, univalent, 2).verdict
        assert v in ("empty", "contractible"), f"{name}: {v}"
        verdicts[v] = verdicts.get(v, 0) + 1
    split = identity(discrete(2))
    witnesses = [name for name, q in qs if rep_space(q, split, 2).verdict == "not connected"]
    assert witnesses, "no q separates the components"
    return f"univalent p: {verdicts}; non-univalent p disconnected for {witnesses[0]!r} and {len(witnesses) - 1} more"


# -- 10 -----------------------------------------------------------------------------


def criterion_10():
    pairs = extension_pairs()
    assert len(pairs) == 10
    for name, t, j in pairs:
        space, proj = extend_trivial_fibration(t, j, 2)
        counit = restriction(space, j)
        for n in range(3):
            src = counit.src.level(n)
            image = [counit(n, x) for x in src]
            assert sorted(image, key=repr) == sorted(t.src.level(n), key=repr), f"{name}: restriction differs at level {n}"
            assert all(t(n, y) == x[0] for x, y in zip(src, image)), f"{name}: restriction leaves the fiber"
        assert is_trivial_fibration(proj, 2), f"{name}: extension is not a trivial fibration"
    return "10 extensions restrict back exactly and are trivial fibrations"


# -- 11 -----------------------------------------------------------------------------


def criterion_11():
    for seed in range(1000):
        _, ty, tm = typed_terms(seed)
        assert parse_term(pretty(tm)) == tm, pretty(tm)
        assert parse_term(pretty(ty)) == ty, pretty(ty)
    names = fixture_names()
    for name in names:
        text = fixture_text(f"{name}.sset")
        assert format_sset(parse_sset(text)) == text, name
    for name, (a, b) in SMAP_ENDS.items():
        text = fixture_text(f"{name}.smap")
        assert format_map(parse_map(text, load_sset(a), load_sset(b))) == text, name
    return f"1000 terms, {len(names)} sets and {len(SMAP_ENDS)} maps round-trip"


CRITERIA = {n: globals()[f"criterion_{n}"] for n in range(1, 12)}


def run(n):
    try:
        detail = CRITERIA[n]()
    except Exception as e:
        RESULTS[n] = ("FAIL", f"{type(e).__name__}: {e}")
        raise
    RESULTS[n] = ("PASS", detail)


def summary_lines():
    return [f"criterion {n:2d}: {RESULTS[n][0]}  {RESULTS[n][1]}" for n in sorted(RESULTS)]


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n):
    run(n)


if __name__ == "__main__":
    for n in CRITERIA:
        try:
            run(n)
        except Exception:
            pass
        print(summary_lines()[-1], flush=True)
    sys.exit(0 if all(v[0] == "PASS" for v in RESULTS.values()) else 1)
