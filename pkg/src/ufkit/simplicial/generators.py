"""Standard finite simplicial sets and the products and pullbacks of finite ones."""

from __future__ import annotations

from itertools import combinations, product as iproduct

from .core import (
    BadIndex,
    Delta,
    FinSSet,
    PullbackSSet,
    ProductSSet,
    SMap,
    SSet,
    TruncatedSSet,
    compose,
    fin_map,
    identity_map,
    materialize,
)


def _subsets(n, keep):
    simplices = {}
    for m in range(n + 1):
        for face in combinations(range(n + 1), m + 1):
            if not keep(face):
                continue
            faces = tuple((face[:i] + face[i + 1:], identity_map(m - 1)) for i in range(m + 1)) if m else ()
            simplices[face] = (m, faces)
    return simplices


def delta(n: int) -> FinSSet:
    """``Δ[n]``; the nondegenerate simplices are the nonempty subsets of ``[n]``."""
    if n < 0:
        raise BadIndex(f"delta({n})")
    return FinSSet(_subsets(n, lambda s: True), name=f"delta({n})", validate=False)


def boundary(n: int) -> FinSSet:
    if n < 0:
        raise BadIndex(f"boundary({n})")
    return FinSSet(_subsets(n, lambda s: len(s) <= n), name=f"boundary({n})", validate=False)


def horn(n: int, k: int) -> FinSSet:
    """``Λ^k[n]``: the boundary without the face opposite vertex ``k``."""
    if n < 1 or not 0 <= k <= n:
        raise BadIndex(f"horn({n}, {k})")
    opposite = tuple(v for v in range(n + 1) if v != k)
    return FinSSet(_subsets(n, lambda s: len(s) <= n and s != opposite), name=f"horn({n},{k})", validate=False)


def discrete(m: int) -> FinSSet:
    if m < 0:
        raise BadIndex(f"discrete({m})")
    return FinSSet({(v,): (0, ()) for v in range(m)}, name=f"discrete({m})", validate=False)


def point() -> FinSSet:
    return delta(0)


def inclusion(sub: FinSSet, X: FinSSet) -> SMap:
    """The inclusion between presentations that share ids (e.g. ``horn(n, k) ⊂ delta(n)``)."""
    missing = [s for s in sub.ids() if s not in X.simplices]
    if missing:
        raise BadIndex(f"{missing[0]!r} is not a simplex of the target")
    return fin_map(sub, X, {s: X.element(s) for s in sub.ids()}, "incl")


def as_monotone(X: FinSSet, x):
    """A simplex of a subcomplex of ``Δ[n]`` as a monotone map into ``[n]``."""
    sid, s = x
    return compose(sid, s)


def chaotic(k: int, d_max: int) -> TruncatedSSet:
    """The nerve of the indiscrete groupoid on ``k`` objects, truncated at ``d_max``.

    Its ``n``-simplices are all ``(n+1)``-tuples of objects; it is a
    contractible Kan complex with nondegenerate simplices in every dimension.
    """
    return TruncatedSSet(
        lambda n: list(iproduct(range(k), repeat=n + 1)),
        lambda n, x, theta: compose(x, theta),
        d_max,
        name=f"chaotic({k})",
    )


def disjoint_union(*parts: FinSSet) -> FinSSet:
    simplices = {}
    for tag, X in enumerate(parts):
        for sid, (m, faces) in X.simplices.items():
            simplices[(tag, sid)] = (m, tuple(((tag, f), s) for f, s in faces))
    return FinSSet(simplices, name="+".join(X.name for X in parts), validate=False)


def product(X: SSet, Y: SSet):
    """``X × Y``; finite when both factors are, otherwise a levelwise product."""
    P = ProductSSet(X, Y)
    if isinstance(X, FinSSet) and isinstance(Y, FinSSet):
        return materialize(P, name=f"{X.name}x{Y.name}")
    return P


def pullback(f: SMap, g: SMap):
    """``X ×_B Y``; finite when both legs have finite sources."""
    P = PullbackSSet(f, g)
    if isinstance(f.src, FinSSet) and isinstance(g.src, FinSSet):
        return materialize(P, name="pullback")
    return P


__all__ = [
    "boundary",
    "chaotic",
    "delta",
    "discrete",
    "disjoint_union",
    "horn",
    "inclusion",
    "as_monotone",
    "point",
    "product",
    "pullback",
    "Delta",
]
