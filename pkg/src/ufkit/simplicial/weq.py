"""A tiered oracle for weak equivalences between Kan complexes.

Cheap tiers run first: a levelwise isomorphism, then the invariants
``π₀`` and homology, which can only refute.  Sufficient conditions
(trivial fibration, discrete or contractible components) follow, and a
bounded search for a homotopy inverse comes last.  What is left over is
reported as ``unknown``.
"""

from __future__ import annotations

from .core import Fiber, FinSSet, ProductSSet, SMap, SSet, compose_maps, fin_map, materialize
from .generators import delta
from .homology import components, homology, pi0
from .kan import Verdict, is_trivial_fibration
from .maps import enumerate_maps


class OracleInconclusive(RuntimeError):
    """The weak-equivalence oracle could not decide a case that a construction needed."""


def _top(X: SSet, d: int) -> int:
    return d if X.d_max is None else min(d, X.d_max)


def is_levelwise_iso(f: SMap, d: int) -> bool:
    for n in range(_top(f.src, d) + 1):
        X, Y = f.src.level(n), f.tgt.level(n)
        if len(X) != len(Y) or len({f(n, x) for x in X}) != len(Y):
            return False
    return True


def _pi0_bijective(f: SMap) -> bool:
    cx, cy = components(f.src), components(f.tgt)
    induced = {}
    for v, r in cx.items():
        t = cy[f(0, v)]
        if induced.setdefault(r, t) != t:
            return False
    return len(set(induced.values())) == len(set(cy.values())) == len(induced)


def component_map(X: SSet) -> SMap:
    """``X → π₀(X)`` with ``π₀(X)`` discrete."""
    comp = components(X)
    reps = sorted(set(comp.values()), key=repr)
    D = FinSSet({r: (0, ()) for r in reps}, name="pi0", validate=False)
    return SMap(X, D, lambda n, x: (comp[X.act(n, x, (0,))], (0,) * (n + 1)))


def _is_discrete(X: SSet, d: int) -> bool:
    return all(not X.nondegenerate(n) for n in range(1, _top(X, d) + 1))


def _homotopic_to_identity(h_map: SMap, X: FinSSet, budget: list) -> bool:
    """Is there ``H: X × Δ[1] → X`` joining ``h_map`` and the identity (either way round)?"""
    P = ProductSSet(X, delta(1))
    cyl = materialize(P)
    for ends in ((0, 1), (1, 0)):
        fixed = {}
        for x in X.ids():
            m = X.dim(x)
            fixed[(X.element(x), (ends[0],) * (m + 1))] = h_map(m, X.element(x))
            fixed[(X.element(x), (ends[1],) * (m + 1))] = X.element(x)
        fixed = {k: v for k, v in fixed.items() if k in cyl.simplices}
        for _ in enumerate_maps(cyl, X, fixed=fixed):
            return True
        budget[0] -= 1
        if budget[0] <= 0:
            return False
    return False


def _finite(X: SSet):
    """A finite presentation of ``X`` with conversions to and from it."""
    if isinstance(X, FinSSet):
        return X, (lambda n, x: x), (lambda n, x: x)
    M = materialize(X)

    def back(n, x):
        y, m, s = X.ez(n, x)
        return (y, s)

    return M, (lambda n, x: X.act(M.dim(x[0]), x[0], x[1])), back


def _search_inverse(f0: SMap, budget: int) -> bool:
    X, x_out, _ = _finite(f0.src)
    Y, _, y_in = _finite(f0.tgt)
    f = SMap(X, Y, lambda n, x: y_in(n, f0(n, x_out(n, x))))
    left = [budget]
    for table in enumerate_maps(Y, X):
        g = fin_map(Y, X, table)
        if _homotopic_to_identity(compose_maps(g, f), X, left) and _homotopic_to_identity(compose_maps(f, g), Y, left):
            return True
        left[0] -= 1
        if left[0] <= 0:
            break
    return False


def is_weak_equivalence(f: SMap, d: int = 2, search_budget: int = 200) -> Verdict:
    """Decide whether ``f`` is a weak equivalence, as far as bound ``d`` allows."""
    X, Y = f.src, f.tgt
    if is_levelwise_iso(f, d):
        return Verdict("yes", d, reason="levelwise isomorphism")
    if not _pi0_bijective(f):
        return Verdict("no", d, witness=(pi0(X), pi0(Y)), reason="different components")
    h = min(_top(X, d), _top(Y, d)) - 1
    if h >= 0:
        hx, hy = homology(X, h), homology(Y, h)
        if hx != hy:
            return Verdict("no", d, witness=(hx, hy), reason="different homology")
    if is_trivial_fibration(f, _top(X, d)):
        return Verdict("yes", d, reason="trivial fibration")
    if _is_discrete(X, d) and _is_discrete(Y, d):
        return Verdict("yes", d, reason="discrete with matching components")
    if is_trivial_fibration(component_map(X), _top(X, d)) and is_trivial_fibration(component_map(Y), _top(Y, d)):
        return Verdict("yes", d, reason="contractible components")
    if X.top_dim is not None and Y.top_dim is not None and _search_inverse(f, search_budget):
        return Verdict("yes", d, reason="homotopy inverse found")
    return Verdict("unknown", d, reason="search budget exhausted")


def fiber_map(u: SMap, p1: SMap, p2: SMap, b) -> SMap:
    """The map on fibers over the vertex ``b`` of a map ``u: E1 → E2`` over ``B``."""
    F1, F2 = Fiber(p1, b), Fiber(p2, b)
    return SMap(F1, F2, lambda n, x: u(n, x))


def is_fiberwise_equivalence(u: SMap, p1: SMap, p2: SMap, d: int = 2, search_budget: int = 200) -> Verdict:
    """Check ``u`` on the fiber over one vertex of each component of the base."""
    verdicts = []
    for b in sorted(set(components(p1.tgt).values()), key=repr):
        v = is_weak_equivalence(fiber_map(u, p1, p2, b), d, search_budget)
        if v.answer == "no":
            return v
        verdicts.append(v)
    if all(verdicts):
        return Verdict("yes", d, reason="on every fiber")
    return Verdict("unknown", d, reason="some fiber undecided")
