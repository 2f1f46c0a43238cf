import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from ufkit.simplicial import (
    BadIndex,
    FormatError,
    check_identities,
    count_maps,
    delta,
    dependent_product,
    discrete,
    eq_over,
    eq_self,
    extend_trivial_fibration,
    fibered_path_object,
    fin_map,
    fixture_names,
    fixture_text,
    format_map,
    format_sset,
    hom_over,
    homology,
    horn,
    identity,
    inclusion,
    is_kan_complex,
    is_kan_fibration,
    is_trivial_fibration,
    is_univalent,
    is_weak_equivalence,
    kan_oracle,
    load_smap,
    load_sset,
    parse_map,
    parse_sset,
    pi0,
    point,
    product,
    product_projection,
    pullback,
    rep_space,
    restriction,
    to_point,
    InputNotTrivialFibration,
)
from ufkit.simplicial.generators import boundary, chaotic
from fibrations import _projection
from ssetgen import SMAP_ENDS, random_map, random_sset


def groups(X, d):
    return [str(g) for g in homology(X, d)]


# -- generators and limits -------------------------------------------------------------


def test_delta_one():
    X = delta(1)
    assert len(X.nondegenerate(0)) == 2 and len(X.nondegenerate(1)) == 1


def test_horn_two_one():
    X = horn(2, 1)
    assert [len(X.nondegenerate(n)) for n in range(3)] == [3, 2, 0]


def test_discrete_has_only_vertices():
    X = discrete(2)
    assert [len(X.nondegenerate(n)) for n in range(3)] == [2, 0, 0]
    assert [len(X.level(n)) for n in range(3)] == [2, 2, 2]


def test_horn_indices_are_checked():
    with pytest.raises(BadIndex):
        horn(2, 3)


def test_square_has_two_triangles():
    # shuffles of (1, 1)
    assert len(product(delta(1), delta(1)).nondegenerate(2)) == comb(2, 1)


def test_pullbacks():
    X = delta(2)
    P = pullback(identity(X), identity(X))
    assert [len(P.level(n)) for n in range(3)] == [len(X.level(n)) for n in range(3)]
    a = fin_map(point(), discrete(2), {(0,): ((0,), (0,))})
    b = fin_map(point(), discrete(2), {(0,): ((1,), (0,))})
    assert not pullback(a, b).level(0)


@pytest.mark.parametrize("n,m", [(0, 2), (1, 1), (1, 2), (2, 2), (1, 3)])
def test_maps_between_simplices_are_monotone_functions(n, m):
    assert count_maps(delta(n), delta(m)) == comb(n + m + 1, n + 1)


def test_level_sizes_count_monotone_maps():
    # Δ[m]_n is the set of monotone maps [n] → [m]
    for m in range(3):
        assert [len(delta(m).level(n)) for n in range(4)] == [comb(n + m + 1, n + 1) for n in range(4)]


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_random_simplicial_sets_satisfy_the_identities(seed):
    X = random_sset(random.Random(seed))
    check_identities(X, 3)


# -- homology -------------------------------------------------------------------------


def test_homology_of_standard_spaces():
    assert groups(delta(2), 1) == ["Z^1", "0"]
    assert groups(boundary(2), 2) == ["Z^1", "Z^1", "0"]
    assert groups(load_sset("circle"), 2) == ["Z^1", "Z^1", "0"]
    assert groups(load_sset("rp2"), 2) == ["Z^1", "Z/2", "0"]
    assert groups(discrete(3), 1) == ["Z^3", "0"]


def test_rank_of_h0_is_pi0():
    for seed in range(30):
        X = random_sset(random.Random(seed))
        assert homology(X, 0)[0].rank == pi0(X)


def test_euler_characteristic():
    for seed in range(30):
        X = random_sset(random.Random(seed), top=2)
        hs = homology(X, 2)
        chi = sum((-1) ** n * len(X.nondegenerate(n)) for n in range(3))
        assert sum((-1) ** n * g.rank for n, g in enumerate(hs)) == chi


# -- Kan conditions ---------------------------------------------------------------------


def test_point_is_kan():
    assert is_kan_fibration(identity(point()), 3)


def test_horn_inclusion_is_not_kan():
    v = is_kan_fibration(inclusion(horn(2, 1), delta(2)), 2)
    assert v.answer == "no" and v.witness is not None and v.cert_dim == 2


def test_products_with_discrete_fibers_are_kan():
    assert is_kan_fibration(_projection(discrete(2), discrete(3)), 3)
    assert is_kan_fibration(_projection(discrete(3), delta(1)), 2)


def test_kan_complexes():
    # a simplex is not Kan: the edge 0 -> 1 has no reverse
    assert not is_kan_complex(delta(1), 2)
    assert is_kan_complex(chaotic(2, 3), 3)
    assert not is_kan_complex(horn(2, 1), 2)
    assert not is_kan_complex(load_sset("circle"), 2)


def test_trivial_fibrations():
    assert is_trivial_fibration(to_point(chaotic(2, 3)), 2)
    assert not is_trivial_fibration(to_point(delta(1)), 2)
    assert not is_trivial_fibration(to_point(discrete(2)), 2)


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_kan_check_agrees_with_the_oracle(seed):
    rng = random.Random(seed)
    E, B = random_sset(rng, 5, 2), random_sset(rng, 3, 2)
    p = random_map(rng, E, B, 50)
    if p is None:
        return
    assert is_kan_fibration(p, 2).answer == kan_oracle(p, 2).answer


# -- weak equivalences ------------------------------------------------------------------


def test_weak_equivalence_examples():
    swap = fin_map(discrete(2), discrete(2), {(0,): ((1,), (0,)), (1,): ((0,), (0,))})
    assert is_weak_equivalence(identity(discrete(2)), 2).answer == "yes"
    assert is_weak_equivalence(to_point(discrete(2)), 2).answer == "no"
    assert is_weak_equivalence(swap, 2).answer == "yes"
    assert is_weak_equivalence(to_point(delta(2)), 2).answer == "yes"


# -- constructions -------------------------------------------------------------------


def test_dependent_product_counts_sections():
    d2 = discrete(2)
    Pi = dependent_product(to_point(d2), _projection(discrete(3), d2), 2)
    assert len(Pi.level(0)) == 3**2


def test_dependent_product_along_identity():
    X = discrete(2)
    Pi = dependent_product(identity(X), identity(X), 2)
    assert [len(Pi.level(n)) for n in range(3)] == [2, 2, 2]


def test_hom_over():
    pt = point()
    assert len(hom_over(identity(pt), identity(pt), 2).level(0)) == 1
    p = to_point(discrete(2))
    assert len(hom_over(p, p, 2).level(0)) == 2**2
    assert len(hom_over(identity(discrete(2)), identity(discrete(2)), 2).level(0)) == 2


def test_eq_objects():
    e = eq_self(identity(discrete(2)), 2)
    assert len(e.space.level(0)) == 4
    assert len({e.delta(0, b) for b in discrete(2).level(0)}) == 2
    p = to_point(discrete(2))
    assert len(eq_over(p, p, 2).level(0)) == 2


def test_eq_self_retractions():
    p = to_point(discrete(2))
    e = eq_self(p, 2)
    for n in range(3):
        for b in p.tgt.level(n):
            x = e.delta(n, b)
            assert e.s(n, x) == b and e.t(n, x) == b


def test_path_objects():
    P = fibered_path_object(identity(point()), 2)
    assert [len(P.space.level(n)) for n in range(3)] == [1, 1, 1]
    assert len(fibered_path_object(to_point(discrete(2)), 2).space.level(0)) == 2
    p = to_point(delta(1))
    P = fibered_path_object(p, 2)
    for n in range(3):
        for e in p.src.level(n):
            assert P.s(n, P.r(n, e)) == e and P.t(n, P.r(n, e)) == e


def test_univalence_examples():
    assert is_univalent(identity(point()), 2).answer == "yes"
    assert is_univalent(identity(discrete(2)), 2).answer == "no"
    assert is_univalent(to_point(discrete(2)), 2).answer == "no"


def test_representation_spaces():
    pt = point()
    assert rep_space(identity(pt), identity(pt), 2).verdict == "contractible"
    r = rep_space(identity(pt), identity(discrete(2)), 2)
    assert r.verdict == "not connected" and len(r.space.level(0)) == 2
    assert rep_space(to_point(discrete(3)), to_point(discrete(2)), 2).verdict == "empty"


def test_extension_along_a_vertex():
    pt = point()
    t = product_projection(chaotic(2, 3), pt)[1]
    j = inclusion(pt, delta(1))
    space, proj = extend_trivial_fibration(t, j, 2)
    assert is_trivial_fibration(proj, 2)
    counit = restriction(space, j)
    for n in range(3):
        src = counit.src.level(n)
        assert sorted(counit(n, x) for x in src) == sorted(t.src.level(n))


def test_extension_rejects_non_trivial_fibrations():
    p = to_point(discrete(2))
    with pytest.raises(InputNotTrivialFibration):
        extend_trivial_fibration(p, identity(p.tgt), 2)


# -- text format -------------------------------------------------------------------------


@pytest.mark.parametrize("name", fixture_names())
def test_fixture_round_trips(name):
    text = fixture_text(f"{name}.sset")
    assert format_sset(parse_sset(text)) == text


@pytest.mark.parametrize("name", sorted(SMAP_ENDS))
def test_map_fixture_round_trips(name):
    src, tgt = (load_sset(n) for n in SMAP_ENDS[name])
    text = fixture_text(f"{name}.smap")
    assert format_map(parse_map(text, src, tgt)) == text
    assert load_smap(name, src, tgt).src is src


def test_malformed_text_is_reported_with_a_line():
    with pytest.raises(FormatError) as e:
        parse_sset("simplex v dim=0 faces=\nsimplex a dim=one faces=v,v\n")
    assert e.value.lineno == 2
    with pytest.raises(FormatError):
        parse_sset("simplex v dim=0 faces=\nsimplex a dim=2 faces=v!s0s1,v!s1s0,v!s1s0\n")
