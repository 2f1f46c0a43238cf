"""Function-space constructions, computed level by level up to a bound.

All of them are instances of :class:`MapSpace`.  An ``n``-simplex there is a
pair ``(x, u)``: ``x`` is an ``n``-simplex of a base, and ``u`` is a map into a
target out of a finite simplicial set ``pres(n, x)`` built from ``Δ[n]``.
``u`` is recorded on the nondegenerate simplices of ``pres(n, x)``, so equal
maps give equal simplices.  Restriction along ``θ: [m] → [n]`` pulls ``u``
back along ``push``, which sends simplices of ``pres(m, x·θ)`` to simplices
of ``pres(n, x)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .core import (
    Delta,
    Fiber,
    PullbackSSet,
    ProductSSet,
    SMap,
    SSet,
    compose,
    identity_map,
    materialize,
    yoneda,
)
from .homology import components, homology, pi0
from .kan import Verdict, is_trivial_fibration
from .maps import _Index, enumerate_maps
from .weq import OracleInconclusive, is_weak_equivalence


class InputNotTrivialFibration(ValueError):
    pass


class NotAMonomorphism(ValueError):
    pass


class MapSpace(SSet):
    def __init__(
        self,
        base: SSet,
        target: SSet,
        pres: Callable,
        push: Callable,
        d_max: int,
        q: Optional[SMap] = None,
        constraint: Optional[Callable] = None,
        accept: Optional[Callable] = None,
        name: str = "",
    ):
        self.base, self.target = base, target
        self.pres_fn, self.push = pres, push
        self.d_max = d_max
        self.q, self.constraint, self.accept = q, constraint, accept
        self.name = name
        self._pres, self._dicts = {}, {}
        self._index = _Index(target, q)

    def pres(self, n, x):
        hit = self._pres.get((n, x))
        if hit is None:
            P = self.pres_fn(n, x)
            hit = self._pres[(n, x)] = (P, materialize(P))
        return hit

    def _dict(self, u):
        hit = self._dicts.get(u)
        if hit is None:
            hit = self._dicts[u] = dict(u)
        return hit

    def maps_over(self, n, x):
        _, M = self.pres(n, x)
        over = (lambda z: self.constraint(n, x, z, M.dim(z))) if self.q else None
        for table in enumerate_maps(M, self.target, q=self.q, over=over, index=self._index):
            yield frozenset(table.items())

    def _level(self, n):
        out = []
        for x in self.base.level(n):
            for u in self.maps_over(n, x):
                if self.accept is None or self.accept(self, n, x, u):
                    out.append((x, u))
        return out

    def evaluate(self, n, x, u, z, k):
        """``u`` at the ``k``-simplex ``z`` of ``pres(n, x)``."""
        P, _ = self.pres(n, x)
        y, kk, s = P.ez(k, z)
        return self.target.act(kk, self._dict(u)[y], s)

    def act(self, n, elem, theta):
        x, u = elem
        m = len(theta) - 1
        x2 = self.base.act(n, x, theta)
        _, M2 = self.pres(m, x2)
        u2 = frozenset(
            (z, self.evaluate(n, x, u, self.push(n, x, theta, z), M2.dim(z))) for z in M2.simplices
        )
        return (x2, u2)

    def projection(self) -> SMap:
        return SMap(self, self.base, lambda n, e: e[0], "proj")


def _push_first(n, x, theta, z):
    return (compose(theta, z[0]), z[1])


# -- dependent products ----------------------------------------------------------------


def dependent_product(i: SMap, q: SMap, d: int) -> MapSpace:
    """``Π_i E`` over ``B`` for ``q: E → A`` and ``i: A → B``.

    An ``n``-simplex over ``b`` is a section of ``q`` over ``Δ[n] ×_B A``.
    """
    B = i.tgt
    return MapSpace(
        B,
        q.src,
        pres=lambda n, b: PullbackSSet(yoneda(B, n, b), i),
        push=_push_first,
        d_max=d,
        q=q,
        constraint=lambda n, b, z, k: z[1],
        name="Pi",
    )


dependent_product_over = dependent_product


def _is_mono(j: SMap, d: int) -> bool:
    top = d if j.src.d_max is None else min(d, j.src.d_max)
    return all(len({j(n, x) for x in j.src.level(n)}) == len(j.src.level(n)) for n in range(top + 1))


def extend_trivial_fibration(t: SMap, j: SMap, d: int):
    """Extend ``t: Y → X`` along ``j: X ↪ X'`` to ``Π_j t``, a trivial fibration over ``X'``.

    Returns ``(space, projection)``.
    """
    if t.tgt is not j.src:
        raise ValueError("the fibration's base must be the source of the map to extend along")
    verdict = is_trivial_fibration(t, d)
    if not verdict:
        raise InputNotTrivialFibration(str(verdict.witness))
    if not _is_mono(j, d):
        raise NotAMonomorphism("the map to extend along is not levelwise injective")
    space = dependent_product(j, t, d)
    return space, space.projection()


def restriction(space: MapSpace, j: SMap) -> SMap:
    """The counit ``j*(Π_j E) → E``: evaluate a section at the tautological simplex."""
    P = PullbackSSet(j, space.projection())

    def fn(n, elem):
        x, (b, u) = elem
        return space.evaluate(n, b, u, (identity_map(n), x), n)

    return SMap(P, space.target, fn, "counit")


# -- Hom and Eq over a base ------------------------------------------------------------


def hom_over(p1: SMap, p2: SMap, d: int, accept=None, name="Hom") -> MapSpace:
    """``Hom_B(E1, E2)``: over ``b``, the maps ``b*E1 → E2`` lying over ``b``."""
    B = p1.tgt
    return MapSpace(
        B,
        p2.src,
        pres=lambda n, b: PullbackSSet(yoneda(B, n, b), p1),
        push=_push_first,
        d_max=d,
        q=p2,
        constraint=lambda n, b, z, k: B.act(n, b, z[0]),
        accept=accept,
        name=name,
    )


def _vertex_accept(fiber_of, search_budget):
    """Accept a simplex when its restriction to vertex 0 is a fiberwise weak equivalence."""
    seen = {}

    def accept(space, n, x, u):
        x0, u0 = space.act(n, (x, u), (0,)) if n else (x, u)
        key = (x0, u0)
        if key not in seen:
            verdict = Verdict("yes", space.d_max)
            for src, tgt, point in fiber_of(space, x0, u0):
                f = SMap(src, tgt, lambda k, z: space.evaluate(0, x0, u0, point(k, z), k))
                verdict = is_weak_equivalence(f, space.d_max, search_budget)
                if verdict.answer != "yes":
                    break
            if verdict.answer == "unknown":
                raise OracleInconclusive(f"could not decide an equivalence over {x0!r}: {verdict.reason}")
            seen[key] = bool(verdict)
        return seen[key]

    return accept


def eq_over(p1: SMap, p2: SMap, d: int, search_budget: int = 200) -> MapSpace:
    """``Eq_B(E1, E2)``: the simplices of ``Hom_B(E1, E2)`` that are weak equivalences."""

    def fibers(space, b0, u0):
        P, _ = space.pres(0, b0)
        yield P, Fiber(p2, b0), lambda k, z: z

    return hom_over(p1, p2, d, accept=_vertex_accept(fibers, search_budget), name="Eq")


@dataclass
class EqSelf:
    """``Eq(E)`` over ``B × B`` with its source, target and diagonal maps."""

    space: MapSpace
    s: SMap
    t: SMap
    delta: SMap


def eq_self(p: SMap, d: int, search_budget: int = 200) -> EqSelf:
    """Weak equivalences between fibers of ``p``, as a simplicial set over ``B × B``."""
    E, B = p.src, p.tgt
    BB = ProductSSet(B, B)

    def fibers(space, bb0, u0):
        P, _ = space.pres(0, bb0)
        yield P, Fiber(p, bb0[1]), lambda k, z: z

    space = MapSpace(
        BB,
        E,
        pres=lambda n, bb: PullbackSSet(yoneda(B, n, bb[0]), p),
        push=_push_first,
        d_max=d,
        q=p,
        constraint=lambda n, bb, z, k: B.act(n, bb[1], z[0]),
        accept=_vertex_accept(fibers, search_budget),
        name="Eq",
    )

    def diagonal(n, b):
        _, M = space.pres(n, (b, b))
        return ((b, b), frozenset((z, z[1]) for z in M.simplices))

    return EqSelf(
        space,
        SMap(space, B, lambda n, e: e[0][0], "s"),
        SMap(space, B, lambda n, e: e[0][1], "t"),
        SMap(B, space, diagonal, "delta"),
    )


def is_univalent(p: SMap, d: int = 2, search_budget: int = 200) -> Verdict:
    """Is the diagonal ``B → Eq(E)`` a weak equivalence (up to ``d``)?"""
    eq = eq_self(p, d, search_budget)
    verdict = is_weak_equivalence(eq.delta, d, search_budget)
    verdict.details.update(eq_vertices=len(eq.space.level(0)), base_vertices=len(p.tgt.level(0)))
    return verdict


# -- path objects ------------------------------------------------------------------------


@dataclass
class PathObject:
    """``P_B(E)`` with ``r: E → P``, ``s, t: P → E`` and ``(s, t): P → E ×_B E``."""

    space: MapSpace
    r: SMap
    s: SMap
    t: SMap
    st: SMap
    pairs: PullbackSSet


def fibered_path_object(p: SMap, d: int) -> PathObject:
    """Paths in the fibers of ``p``: maps ``Δ[n] × Δ[1] → E`` over ``Δ[n] → B``."""
    E, B = p.src, p.tgt
    space = MapSpace(
        B,
        E,
        pres=lambda n, b: ProductSSet(Delta(n), Delta(1)),
        push=_push_first,
        d_max=d,
        q=p,
        constraint=lambda n, b, z, k: B.act(n, b, z[0]),
        name="P_B",
    )

    def const(n, e):
        b = p(n, e)
        _, M = space.pres(n, b)
        return (b, frozenset((z, E.act(n, e, z[0])) for z in M.simplices))

    def end(eps):
        return lambda n, elem: space.evaluate(n, elem[0], elem[1], (identity_map(n), (eps,) * (n + 1)), n)

    s = SMap(space, E, end(0), "s")
    t = SMap(space, E, end(1), "t")
    pairs = PullbackSSet(p, p)
    st = SMap(space, pairs, lambda n, e: (s(n, e), t(n, e)), "(s,t)")
    return PathObject(space, SMap(E, space, const, "r"), s, t, st, pairs)


# -- representation spaces ------------------------------------------------------------------


@dataclass
class RepSpace:
    space: MapSpace
    verdict: str
    detail: str = ""

    def __str__(self):
        return f"{self.verdict}{': ' + self.detail if self.detail else ''}"


def _maps_into(X: SSet, B: SSet, d: int) -> MapSpace:
    """``Map(X, B)`` as a simplicial set."""
    return MapSpace(
        Delta(0),
        B,
        pres=lambda n, _: ProductSSet(Delta(n), X),
        push=_push_first,
        d_max=d,
        name="Map",
    )


def representation_space(q: SMap, p: SMap, d: int, search_budget: int = 200) -> MapSpace:
    """Squares exhibiting ``q`` as a pullback of ``p`` up to fiberwise weak equivalence.

    An ``n``-simplex is ``f: Δ[n] × X → B`` with ``w: Δ[n] × Y → E`` over
    ``f ∘ (1 × q)`` that is a weak equivalence on every fiber.
    """
    Y, X = q.src, q.tgt
    E = p.src
    maps = _maps_into(X, p.tgt, d)
    reps = sorted(set(components(X).values()), key=repr)

    def fibers(space, f0, w0):
        fb, fu = f0
        for x in reps:
            b = maps.evaluate(0, fb, fu, ((0,), x), 0)
            src = Fiber(q, x)
            yield src, Fiber(p, b), lambda k, y: ((0,) * (k + 1), y)

    return MapSpace(
        maps,
        E,
        pres=lambda n, f: ProductSSet(Delta(n), Y),
        push=_push_first,
        d_max=d,
        q=p,
        constraint=lambda n, f, z, k: maps.evaluate(n, f[0], f[1], (z[0], q(k, z[1])), k),
        accept=_vertex_accept(fibers, search_budget),
        name="Rep",
    )


def rep_space(q: SMap, p: SMap, d: int = 2, search_budget: int = 200) -> RepSpace:
    """The representation space of ``q`` by ``p`` and a verdict on its homotopy type."""
    P = representation_space(q, p, d, search_budget)
    if not P.level(0):
        return RepSpace(P, "empty")
    if pi0(P) > 1:
        return RepSpace(P, "not connected", f"{pi0(P)} components")
    if is_trivial_fibration(SMap(P, Delta(0), lambda n, x: (0,) * (n + 1)), d):
        return RepSpace(P, "contractible", f"contraction witness: every boundary fills up to dimension {d}")
    if any(g.rank or g.torsion for g in homology(P, d - 1)[1:]):
        return RepSpace(P, "not contractible", "nonzero reduced homology")
    return RepSpace(P, "inconclusive", f"homologically trivial through dimension {d - 1}")


def path_object_base_change(p: SMap, f: SMap, d: int):
    """Compare ``P_{B'}(f*E)`` with ``f*P_B(E)`` for ``f: B' → B``.

    Returns the canonical map between them (drop the ``B'`` component of each
    path) and whether it is a levelwise bijection commuting with faces.
    """
    fE = PullbackSSet(f, p)
    left = fibered_path_object(fE.proj1(), d)
    right_space = fibered_path_object(p, d).space
    right = PullbackSSet(f, right_space.projection())

    def fn(n, elem):
        b1, u = elem
        return (b1, (f(n, b1), frozenset((z, e[1]) for z, e in u)))

    phi = SMap(left.space, right, fn, "base-change")
    ok = True
    for n in range(d + 1):
        src, tgt = left.space.level(n), set(right.level(n))
        image = {phi(n, x) for x in src}
        ok &= len(image) == len(src) and image == tgt
        for x in src if n else ():
            ok &= all(right.face(n, i, phi(n, x)) == phi(n - 1, left.space.face(n, i, x)) for i in range(n + 1))
    return phi, ok
