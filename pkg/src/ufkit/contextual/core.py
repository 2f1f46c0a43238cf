"""Contextual categories as operation records, and the contextualization C_U.

A contextual category is given by ``terminal``, ``level``, ``ft``, ``proj``,
``pullback`` (the chosen ``f*X``), ``q``, ``compose``, ``identity`` and
decidable equality of objects and morphisms.  :func:`verify_contextual_laws`
checks the defining equations on samples and reports each violated one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct
from typing import Optional

from ..setmodel.hf import EMPTY, pair, unpair


class ContextualCategory:
    """Interface; concrete categories override every method."""

    def terminal(self):
        raise NotImplementedError

    def level(self, X) -> int:
        raise NotImplementedError

    def ft(self, X):
        raise NotImplementedError

    def proj(self, X):
        raise NotImplementedError

    def pullback(self, f, X):
        raise NotImplementedError

    def q(self, f, X):
        raise NotImplementedError

    def compose(self, f, g):
        """``f ∘ g`` (first ``g``, then ``f``)."""
        raise NotImplementedError

    def identity(self, X):
        raise NotImplementedError

    def dom(self, f):
        raise NotImplementedError

    def cod(self, f):
        raise NotImplementedError

    def hom_eq(self, f, g) -> bool:
        raise NotImplementedError

    def ob_eq(self, X, Y) -> bool:
        raise NotImplementedError

    # optional, for concrete categories
    def homset(self, X, Y):
        return None

    def is_pullback(self, f, X) -> Optional[bool]:
        return None


# -- finite maps ---------------------------------------------------------------


class FinMap:
    """A function between finite sets, hashable by its graph."""

    __slots__ = ("table", "_key", "_hash")

    def __init__(self, table: dict):
        self.table = table
        self._key = None
        self._hash = None

    def key(self):
        if self._key is None:
            self._key = frozenset(self.table.items())
        return self._key

    def __getitem__(self, x):
        return self.table[x]

    def __eq__(self, other):
        return isinstance(other, FinMap) and self.key() == other.key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.key())
        return self._hash

    def __len__(self):
        return len(self.table)

    def __repr__(self):
        return f"FinMap({len(self.table)} points)"


# -- C_U -------------------------------------------------------------------------


@dataclass(frozen=True)
class CUObject:
    """An object of C_U: the literal sequence of names ``(f1, ..., fn)``."""

    names: tuple = ()

    @property
    def level(self):
        return len(self.names)

    def ft(self):
        return CUObject(self.names[:-1])

    def extend(self, name: FinMap):
        return CUObject(self.names + (name,))


@dataclass(frozen=True, eq=False)
class CUMor:
    src: CUObject
    tgt: CUObject
    fn: FinMap

    def __call__(self, x):
        return self.fn[x]

    def __eq__(self, other):
        return isinstance(other, CUMor) and (self.src, self.tgt, self.fn) == (other.src, other.tgt, other.fn)

    def __hash__(self):
        return hash((self.src, self.tgt, self.fn))


def default_chooser(name: FinMap, f: CUMor) -> FinMap:
    """Canonical pullback of the last name along ``f``: plain precomposition."""
    return FinMap({y: name[f(y)] for y in f.fn.table})


class CU(ContextualCategory):
    """The contextual category C_U of a universe with chosen pullbacks.

    ``universe`` must provide ``members(code)``, ``chosen_pullback(X, f)``,
    ``make_point(x, m)`` and ``split_point(e)``.
    """

    def __init__(self, universe, chooser=default_chooser, hom_limit: int = 50_000):
        self.U = universe
        self.chooser = chooser
        self.hom_limit = hom_limit
        self._real = {(): (frozenset({()}), {}, {})}

    # realizations in the base category
    def _square(self, X: CUObject):
        hit = self._real.get(X.names)
        if hit is None:
            base = self.real(X.ft())
            hit = self.U.chosen_pullback(base, X.names[-1].table)
            self._real[X.names] = hit
        return hit

    def real(self, X: CUObject) -> frozenset:
        return self._square(X)[0]

    def point(self, x, m):
        return self.U.make_point(x, m)

    def split(self, e):
        return self.U.split_point(e)

    def last(self, e):
        return self.U.split_point(e)[1]

    # contextual category operations
    def terminal(self):
        return CUObject(())

    def level(self, X):
        return X.level

    def ft(self, X):
        if X.level == 0:
            raise ValueError("the terminal object has no father")
        return X.ft()

    def proj(self, X):
        _, P, _ = self._square(X)
        return CUMor(X, X.ft(), FinMap(dict(P)))

    def pullback(self, f: CUMor, X: CUObject) -> CUObject:
        return f.src.extend(self.chooser(X.names[-1], f))

    def q(self, f: CUMor, X: CUObject) -> CUMor:
        fX = self.pullback(f, X)
        table = {}
        for e in self.real(fX):
            y, m = self.split(e)
            table[e] = self.point(f(y), m)
        return CUMor(fX, X, FinMap(table))

    def compose(self, f: CUMor, g: CUMor) -> CUMor:
        return CUMor(g.src, f.tgt, FinMap({x: f(g(x)) for x in g.fn.table}))

    def identity(self, X):
        return CUMor(X, X, FinMap({x: x for x in self.real(X)}))

    def dom(self, f):
        return f.src

    def cod(self, f):
        return f.tgt

    def hom_eq(self, f, g):
        return f == g

    def ob_eq(self, X, Y):
        return X == Y

    def morphism(self, src, tgt, table: dict) -> CUMor:
        return CUMor(src, tgt, FinMap(table))

    def homset(self, X, Y):
        xs = sorted(self.real(X), key=repr)
        ys = sorted(self.real(Y), key=repr)
        if len(ys) ** len(xs) > self.hom_limit:
            return None
        return [self.morphism(X, Y, dict(zip(xs, img))) for img in iproduct(ys, repeat=len(xs))]

    def is_pullback(self, f: CUMor, X: CUObject) -> bool:
        """Element-level universality: ``f*X`` maps bijectively onto ``Y ×_{ft X} X``."""
        fX = self.pullback(f, X)
        p_fX, qq, p_X = self.proj(fX), self.q(f, X), self.proj(X)
        fiber_product = {(y, x) for y in self.real(f.src) for x in self.real(X) if f(y) == p_X(x)}
        image = [(p_fX(e), qq(e)) for e in self.real(fX)]
        return len(set(image)) == len(image) and set(image) == fiber_product


def contextualize(universe, chooser=default_chooser) -> CU:
    return CU(universe, chooser)


class CorruptedCU(CU):
    """C_U with a faulty pullback choice, for testing the law checker.

    Pulling back along a non-identity map re-encodes every fiber as an
    isomorphic copy ``{(∅, m)}``.  Each square is still a pullback, but
    repeated pullback wraps twice, so ``(fg)* X`` and ``g*(f*X)`` differ.
    """

    def _wrapped(self, f):
        return not all(x == y for x, y in f.fn.table.items()) or f.src != f.tgt

    def pullback(self, f, X):
        if not self._wrapped(f):
            return super().pullback(f, X)
        base = default_chooser(X.names[-1], f)
        return f.src.extend(FinMap({y: frozenset(pair(EMPTY, m) for m in c) for y, c in base.table.items()}))

    def q(self, f, X):
        if not self._wrapped(f):
            return super().q(f, X)
        fX = self.pullback(f, X)
        table = {}
        for e in self.real(fX):
            y, m = self.split(e)
            table[e] = self.point(f(y), unpair(m)[1])
        return CUMor(fX, X, FinMap(table))


class Comparison:
    """The canonical grading-preserving isomorphism between two C_U's on one universe.

    ``cu1`` and ``cu2`` may choose their pullback squares differently; a
    level-n object of one is sent to the object with the same names read
    through the induced bijection of realizations.
    """

    def __init__(self, cu1: CU, cu2: CU):
        self.cu1, self.cu2 = cu1, cu2
        self._memo = {(): (CUObject(()), {(): ()})}

    def translate(self, X: CUObject):
        """``(F X, φ_X)`` with ``φ_X: real₁(X) → real₂(F X)`` a bijection."""
        hit = self._memo.get(X.names)
        if hit is None:
            Y, phi = self.translate(X.ft())
            name = X.names[-1]
            FX = Y.extend(FinMap({phi[g]: name[g] for g in name.table}))
            psi = {}
            for e in self.cu1.real(X):
                g, m = self.cu1.split(e)
                psi[e] = self.cu2.point(phi[g], m)
            hit = self._memo[X.names] = (FX, psi)
        return hit

    def ob(self, X):
        return self.translate(X)[0]

    def mor(self, f: CUMor) -> CUMor:
        FA, pa = self.translate(f.src)
        FB, pb = self.translate(f.tgt)
        return CUMor(FA, FB, FinMap({pa[x]: pb[f(x)] for x in f.fn.table}))

    def verify(self, samples, report: Optional["LawReport"] = None) -> "LawReport":
        rep = report or LawReport()
        c1, c2 = self.cu1, self.cu2
        for s in samples:
            rep.checked += 1
            X, f = s.X, s.f
            FX, phi = self.translate(X)
            if len(set(phi.values())) != len(phi) or set(phi.values()) != set(c2.real(FX)):
                rep.fail("F is bijective on points")
            if FX.level != X.level or self.ob(X.ft()) != FX.ft():
                rep.fail("F preserves level and ft")
            if self.mor(c1.proj(X)) != c2.proj(FX):
                rep.fail("F(p_X) = p_{F X}")
            Ff = self.mor(f)
            if self.ob(c1.pullback(f, X)) != c2.pullback(Ff, FX):
                rep.fail("F(f*X) = (F f)*(F X)")
            elif self.mor(c1.q(f, X)) != c2.q(Ff, FX):
                rep.fail("F q(f,X) = q(F f, F X)")
            if s.g is not None and self.mor(c1.compose(f, s.g)) != c2.compose(Ff, self.mor(s.g)):
                rep.fail("F(fg) = F(f) F(g)")
        return rep


# -- laws ------------------------------------------------------------------------


@dataclass
class Violation:
    equation: str
    detail: str = ""


@dataclass
class LawReport:
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def fail(self, equation, detail=""):
        self.violations.append(Violation(equation, detail))

    def names(self):
        return sorted({v.equation for v in self.violations})


@dataclass
class Configuration:
    """``X`` with ``f: Y → ft X`` and ``g: Z → Y``."""

    X: object
    f: object
    g: object


def verify_contextual_laws(cc: ContextualCategory, samples, report: Optional[LawReport] = None) -> LawReport:
    rep = report or LawReport()
    pt = cc.terminal()
    if cc.level(pt) != 0:
        rep.fail("level(pt) = 0")
    for s in samples:
        X, f, g = s.X, s.f, s.g
        rep.checked += 1
        Y = cc.dom(f)
        ftX = cc.ft(X)
        if cc.level(ftX) != cc.level(X) - 1:
            rep.fail("level(ft X) = level(X) - 1")
        if not cc.ob_eq(cc.cod(f), ftX):
            rep.fail("f: Y -> ft X", "sample is not composable")
            continue
        # terminal object: ft^n X = pt, and unique maps into pt
        top = X
        while cc.level(top) > 0:
            top = cc.ft(top)
        if not cc.ob_eq(top, pt):
            rep.fail("ft^n X = pt")
        hs = cc.homset(Y, pt)
        if hs is not None and len(hs) != 1:
            rep.fail("pt is terminal", f"{len(hs)} maps into pt")
        fX = cc.pullback(f, X)
        if not cc.ob_eq(cc.ft(fX), Y):
            rep.fail("ft(f*X) = Y")
        qf = cc.q(f, X)
        if not (cc.ob_eq(cc.dom(qf), fX) and cc.ob_eq(cc.cod(qf), X)):
            rep.fail("q(f,X): f*X -> X")
        if not cc.hom_eq(cc.compose(cc.proj(X), qf), cc.compose(f, cc.proj(fX))):
            rep.fail("p_X . q(f,X) = f . p_{f*X}")
        pb = cc.is_pullback(f, X)
        if pb is False:
            rep.fail("f*X is a pullback")
        one = cc.identity(ftX)
        if not cc.ob_eq(cc.pullback(one, X), X):
            rep.fail("1* X = X")
        elif not cc.hom_eq(cc.q(one, X), cc.identity(X)):
            rep.fail("q(1,X) = 1")
        if g is None:
            continue
        fg = cc.compose(f, g)
        lhs = cc.pullback(fg, X)
        rhs = cc.pullback(g, fX)
        if not cc.ob_eq(lhs, rhs):
            rep.fail("(fg)* X = g*(f*X)")
            continue
        if not cc.hom_eq(cc.q(fg, X), cc.compose(qf, cc.q(g, fX))):
            rep.fail("q(fg,X) = q(f,X) . q(g,f*X)")
    return rep


# -- reindexing along f: Δ → Γ of objects and sections over Γ ---------------------


def reindex(cc: ContextualCategory, f, X, k: int):
    """Pull back ``X`` (``k`` levels above ``cod f``) along ``f``.

    Returns ``(f*X, g)`` with ``g: f*X → X`` the composite of ``q`` maps.
    """
    if k == 0:
        return cc.dom(f), f
    Y, g = reindex(cc, f, cc.ft(X), k - 1)
    return cc.pullback(g, X), cc.q(g, X)
