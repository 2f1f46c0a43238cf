"""Simplicial sets given by their levels and the action of monotone maps.

Every simplicial set implements ``level(n)`` and ``act(n, x, theta)`` where
``theta`` is a monotone map ``[k] → [n]`` written as a tuple, and ``x·theta``
is the induced ``k``-simplex.  Faces, degeneracies and Eilenberg–Zilber
decompositions are derived from these.

:class:`FinSSet` is the finitely presented kind: it stores only its
nondegenerate simplices, each with its faces in canonical form
``(id, surjection)``, and derives every level on demand.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product as iproduct
from typing import Callable, Optional


class BadIndex(ValueError):
    pass


class BeyondBound(ValueError):
    """A level above the validity bound of a truncated simplicial set was requested."""


class BadPresentation(ValueError):
    pass


# -- monotone maps -----------------------------------------------------------------


def identity_map(n):
    return tuple(range(n + 1))


@lru_cache(maxsize=None)
def coface(n, i):
    """``δ_i: [n-1] → [n]``, skipping ``i``."""
    return tuple(j if j < i else j + 1 for j in range(n))


@lru_cache(maxsize=None)
def codegeneracy(n, i):
    """``σ_i: [n+1] → [n]``, hitting ``i`` twice."""
    return tuple(j if j <= i else j - 1 for j in range(n + 2))


def compose(theta, phi):
    """``theta ∘ phi`` as tuples; ``x·(theta ∘ phi) = (x·theta)·phi``."""
    return tuple(theta[j] for j in phi)


def epi_mono(theta):
    """Factor ``theta = iota ∘ sigma`` with ``sigma`` onto and ``iota`` injective."""
    image = tuple(sorted(set(theta)))
    pos = {v: k for k, v in enumerate(image)}
    return image, tuple(pos[v] for v in theta)


@lru_cache(maxsize=None)
def surjections(n, m):
    """All monotone surjections ``[n] ↠ [m]``."""
    out = []
    for cut in combinations(range(n), m):
        # ``cut`` lists the positions j where the value steps up between j and j+1
        s, v, cuts = [], 0, set(cut)
        for j in range(n + 1):
            s.append(v)
            if j in cuts:
                v += 1
        out.append(tuple(s))
    return tuple(out)


def monotone_maps(k, n):
    return tuple(combinations_with_replacement(range(n + 1), k + 1))


def degeneracy_word(s):
    """Collapsed positions ``j`` (``s(j) = s(j+1)``) of a surjection, largest first."""
    return tuple(j for j in reversed(range(len(s) - 1)) if s[j] == s[j + 1])


def from_degeneracy_word(word, n):
    """The surjection on ``[n]`` collapsing exactly the positions in ``word``."""
    cuts = set(word)
    s, v = [0], 0
    for j in range(n):
        if j not in cuts:
            v += 1
        s.append(v)
    return tuple(s)


# -- the protocol ---------------------------------------------------------------------


class SSet:
    """Base class.  Subclasses provide ``_level(n)`` and ``act(n, x, theta)``."""

    #: dimension above which every simplex is degenerate, when known
    top_dim: Optional[int] = None
    #: validity bound of a truncated simplicial set
    d_max: Optional[int] = None

    def _level(self, n):
        raise NotImplementedError

    def act(self, n, x, theta):
        raise NotImplementedError

    def level(self, n):
        if self.d_max is not None and n > self.d_max:
            raise BeyondBound(f"level {n} is above the validity bound {self.d_max}")
        cache = self.__dict__.setdefault("_levels", {})
        if n not in cache:
            cache[n] = tuple(self._level(n))
        return cache[n]

    def face(self, n, i, x):
        if not 0 <= i <= n or n == 0:
            raise BadIndex(f"d_{i} on an {n}-simplex")
        return self.act(n, x, coface(n, i))

    def degen(self, n, i, x):
        if not 0 <= i <= n:
            raise BadIndex(f"s_{i} on an {n}-simplex")
        return self.act(n, x, codegeneracy(n, i))

    def vertices(self, n, x):
        return tuple(self.act(n, x, (k,)) for k in range(n + 1))

    def degenerate_from(self, n, x, m):
        """``x`` (an ``n``-simplex) as a totally degenerate ``m``-simplex, for ``n = 0``."""
        return self.act(n, x, (0,) * (m + 1))

    def is_degenerate(self, n, x):
        return any(self.degen(n - 1, j, self.face(n, j, x)) == x for j in range(n))

    def ez(self, n, x):
        """``(y, m, s)`` with ``y`` nondegenerate in level ``m`` and ``x = y·s``."""
        cache = self.__dict__.setdefault("_ez", {})
        key = (n, x)
        hit = cache.get(key)
        if hit is None:
            hit = (x, n, identity_map(n))
            for j in range(n):
                y = self.face(n, j, x)
                if self.degen(n - 1, j, y) == x:
                    z, m, t = self.ez(n - 1, y)
                    hit = (z, m, compose(t, codegeneracy(n - 1, j)))
                    break
            cache[key] = hit
        return hit

    def nondegenerate(self, n):
        cache = self.__dict__.setdefault("_nondeg", {})
        if n not in cache:
            cache[n] = tuple(x for x in self.level(n) if n == 0 or not self.is_degenerate(n, x))
        return cache[n]

    def sizes(self, d):
        return [len(self.level(n)) for n in range(d + 1)]


def check_identities(X: SSet, d: int, limit: int = 2000):
    """Violated simplicial identities among simplices of dimension at most ``d``."""
    bad = []
    for n in range(d + 1):
        for x in X.level(n)[:limit]:
            for i in range(n + 1):
                for j in range(n + 1):
                    if n >= 2 and i < j and X.face(n - 1, i, X.face(n, j, x)) != X.face(n - 1, j - 1, X.face(n, i, x)):
                        bad.append(("d_i d_j = d_{j-1} d_i", n, i, j, x))
                    if i <= j and X.degen(n + 1, i, X.degen(n, j, x)) != X.degen(n + 1, j + 1, X.degen(n, i, x)):
                        bad.append(("s_i s_j = s_{j+1} s_i", n, i, j, x))
                    sx = X.degen(n, j, x)
                    dsx = X.face(n + 1, i, sx)
                    if i < j:
                        want = X.degen(n - 1, j - 1, X.face(n, i, x))
                    elif i in (j, j + 1):
                        want = x
                    else:
                        want = X.degen(n - 1, j, X.face(n, i - 1, x))
                    if dsx != want:
                        bad.append(("d_i s_j", n, i, j, x))
    return bad


# -- finitely presented simplicial sets ----------------------------------------------------


class FinSSet(SSet):
    """Nondegenerate simplices with canonical faces; elements are ``(id, surjection)``.

    ``simplices`` maps an id to ``(dim, faces)`` where ``faces[i]`` is the
    ``i``-th face as ``(id, surjection)``.
    """

    def __init__(self, simplices: dict, name: str = "", validate: bool = True):
        self.simplices = dict(simplices)
        self.name = name
        self.top_dim = max((dim for dim, _ in self.simplices.values()), default=-1)
        self._memo = {}
        if validate:
            self._validate()

    def dim(self, sid):
        return self.simplices[sid][0]

    def ids(self, dim=None):
        return [s for s, (m, _) in self.simplices.items() if dim is None or m == dim]

    def element(self, sid):
        return (sid, identity_map(self.dim(sid)))

    def _validate(self):
        for sid, (m, faces) in self.simplices.items():
            if m == 0:
                if faces:
                    raise BadPresentation(f"vertex {sid!r} has faces")
                continue
            if len(faces) != m + 1:
                raise BadPresentation(f"{sid!r} has {len(faces)} faces, expected {m + 1}")
            for fid, s in faces:
                if fid not in self.simplices:
                    raise BadPresentation(f"{sid!r} has an unknown face {fid!r}")
                if len(s) != m or s[0] != 0 or s[-1] != self.dim(fid) or any(b - a not in (0, 1) for a, b in zip(s, s[1:])):
                    raise BadPresentation(f"{sid!r} has a face with a bad degeneracy {s!r}")
        for sid, (m, _) in self.simplices.items():
            if m < 2:
                continue
            x = self.element(sid)
            for i in range(m + 1):
                for j in range(i + 1, m + 1):
                    if self.face(m - 1, i, self.face(m, j, x)) != self.face(m - 1, j - 1, self.face(m, i, x)):
                        raise BadPresentation(f"simplicial identity d_{i} d_{j} fails on {sid!r}")

    def _act_nd(self, sid, phi):
        """``sid·phi`` for ``phi: [k] → [dim sid]``."""
        key = (sid, phi)
        hit = self._memo.get(key)
        if hit is None:
            m, faces = self.simplices[sid]
            image, sigma = epi_mono(phi)
            if len(image) == m + 1:
                hit = (sid, sigma)
            else:
                j = next(v for v in range(m + 1) if v not in image)
                fid, t = faces[j]
                # image avoids j, so it factors through δ_j
                inner = tuple(v if v < j else v - 1 for v in image)
                hit = self._act_nd(fid, compose(t, compose(inner, sigma)))
            self._memo[key] = hit
        return hit

    def act(self, n, x, theta):
        sid, s = x
        return self._act_nd(sid, compose(s, theta))

    def _level(self, n):
        out = []
        for sid, (m, _) in self.simplices.items():
            if m <= n:
                out.extend((sid, s) for s in surjections(n, m))
        return out

    def nondegenerate(self, n):
        return tuple(self.element(s) for s in self.ids(n))

    def is_degenerate(self, n, x):
        return len(x[1]) - 1 != self.dim(x[0])

    def ez(self, n, x):
        sid, s = x
        return self.element(sid), self.dim(sid), s

    def __repr__(self):
        counts = [len(self.ids(m)) for m in range(self.top_dim + 1)]
        return f"FinSSet({self.name or 'anonymous'}, nondegenerate={counts})"


def materialize(X: SSet, top: Optional[int] = None, name: str = "") -> FinSSet:
    """The nondegenerate presentation of ``X`` up to dimension ``top``.

    Ids are the nondegenerate simplices of ``X`` themselves, so an element of
    ``X`` converts with ``X.ez`` and back with ``X.act``.
    """
    if top is None:
        top = X.top_dim if X.top_dim is not None else X.d_max
    if top is None:
        raise BeyondBound("cannot materialize a simplicial set without a dimension bound")
    simplices = {}
    for n in range(top + 1):
        for x in X.nondegenerate(n):
            faces = []
            for i in range(n + 1) if n else ():
                y, m, s = X.ez(n - 1, X.face(n, i, x))
                faces.append((y, s))
            simplices[x] = (n, tuple(faces))
    return FinSSet(simplices, name=name, validate=False)


# -- generic constructions ----------------------------------------------------------------


class Delta(SSet):
    """``Δ[n]`` with simplices the monotone maps into ``[n]``."""

    def __init__(self, n: int):
        self.n = n
        self.top_dim = n

    def _level(self, k):
        return monotone_maps(k, self.n)

    def act(self, k, x, theta):
        return compose(x, theta)

    def ez(self, k, x):
        image, sigma = epi_mono(x)
        return image, len(image) - 1, sigma

    def is_degenerate(self, k, x):
        return len(set(x)) != len(x)


class ProductSSet(SSet):
    def __init__(self, X: SSet, Y: SSet):
        self.X, self.Y = X, Y
        if X.top_dim is not None and Y.top_dim is not None:
            self.top_dim = X.top_dim + Y.top_dim
        bounds = [b for b in (X.d_max, Y.d_max) if b is not None]
        self.d_max = min(bounds) if bounds else None

    def _level(self, n):
        return list(iproduct(self.X.level(n), self.Y.level(n)))

    def act(self, n, x, theta):
        return (self.X.act(n, x[0], theta), self.Y.act(n, x[1], theta))


class SMap:
    """A simplicial map given levelwise by ``fn(n, x)``."""

    def __init__(self, src: SSet, tgt: SSet, fn: Callable, name: str = ""):
        self.src, self.tgt, self.fn, self.name = src, tgt, fn, name
        self._memo = {}

    def __call__(self, n, x):
        key = (n, x)
        hit = self._memo.get(key)
        if hit is None:
            hit = self._memo[key] = self.fn(n, x)
        return hit

    def image_level(self, n):
        return [self(n, x) for x in self.src.level(n)]


def fin_map(src: FinSSet, tgt: SSet, table: dict, name: str = "") -> SMap:
    """The map out of a finite presentation determined by its nondegenerate simplices."""
    f = SMap(src, tgt, lambda n, x: tgt.act(src.dim(x[0]), table[x[0]], x[1]), name)
    f.table = dict(table)
    return f


def identity(X: SSet) -> SMap:
    return SMap(X, X, lambda n, x: x, "id")


def compose_maps(f: SMap, g: SMap) -> SMap:
    """``f ∘ g``."""
    return SMap(g.src, f.tgt, lambda n, x: f(n, g(n, x)))


def to_point(X: SSet) -> SMap:
    pt = Delta(0)
    return SMap(X, pt, lambda n, x: (0,) * (n + 1), "!")


class PullbackSSet(SSet):
    """``X ×_B Y`` for ``f: X → B`` and ``g: Y → B``."""

    def __init__(self, f: SMap, g: SMap):
        self.f, self.g = f, g
        X, Y = f.src, g.src
        if X.top_dim is not None and Y.top_dim is not None:
            self.top_dim = X.top_dim + Y.top_dim
        bounds = [b for b in (X.d_max, Y.d_max, f.tgt.d_max) if b is not None]
        self.d_max = min(bounds) if bounds else None

    def _level(self, n):
        by_base = {}
        for y in self.g.src.level(n):
            by_base.setdefault(self.g(n, y), []).append(y)
        return [(x, y) for x in self.f.src.level(n) for y in by_base.get(self.f(n, x), ())]

    def act(self, n, x, theta):
        return (self.f.src.act(n, x[0], theta), self.g.src.act(n, x[1], theta))

    def proj1(self):
        return SMap(self, self.f.src, lambda n, x: x[0], "pr1")

    def proj2(self):
        return SMap(self, self.g.src, lambda n, x: x[1], "pr2")


class Fiber(SSet):
    """The fiber of ``p: E → B`` over a vertex ``b`` of ``B``."""

    def __init__(self, p: SMap, b):
        self.p, self.b = p, b
        self.top_dim = p.src.top_dim
        self.d_max = p.src.d_max

    def _level(self, n):
        base = self.p.tgt.degenerate_from(0, self.b, n)
        return [e for e in self.p.src.level(n) if self.p(n, e) == base]

    def act(self, n, x, theta):
        return self.p.src.act(n, x, theta)

    def inclusion(self):
        return SMap(self, self.p.src, lambda n, x: x)


class TruncatedSSet(SSet):
    """Levels produced on demand by a generator, valid up to ``d_max``."""

    def __init__(self, level_fn: Callable, act_fn: Callable, d_max: int, name: str = ""):
        self.level_fn, self.act_fn, self.d_max, self.name = level_fn, act_fn, d_max, name

    def _level(self, n):
        return self.level_fn(n)

    def act(self, n, x, theta):
        return self.act_fn(n, x, theta)


def yoneda(B: SSet, n: int, b) -> SMap:
    """The map ``Δ[n] → B`` classifying the ``n``-simplex ``b``."""
    return SMap(Delta(n), B, lambda k, theta: B.act(n, b, theta))


def product_projection(X: SSet, Y: SSet, which: int = 1):
    P = ProductSSet(X, Y)
    return P, SMap(P, Y if which == 1 else X, lambda n, x: x[which])
