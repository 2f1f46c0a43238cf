"""Logical structures on C_U induced by the structure maps of the universe.

Conventions: a *type over* ``Γ`` is an object ``X`` with ``ft X = Γ``; a
*section* of ``X`` is a morphism ``s: ft X → X`` with ``p_X ∘ s = 1``.  Every
operation composes names with a structure map of the universe, so the
substitution equations hold on the nose.  :func:`verify_structure` checks
each computation rule and each stability equation on sampled data.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from ..setmodel import hf
from ..setmodel.hf import EMPTY, BudgetExceeded
from ..setmodel.universe import U0, LiftingSquare
from .core import CU, Configuration, CUMor, CUObject, FinMap, LawReport

# -- helpers on C_U --------------------------------------------------------------


def name(X: CUObject) -> FinMap:
    return X.names[-1]


def section(cu: CU, X: CUObject, values: dict) -> CUMor:
    """The section of ``X`` picking ``values[γ]`` in the fiber over each ``γ``."""
    return cu.morphism(X.ft(), X, {g: cu.point(g, values[g]) for g in cu.real(X.ft())})


def values(cu: CU, s: CUMor) -> dict:
    return {g: cu.last(e) for g, e in s.fn.table.items()}


def is_section(cu: CU, s: CUMor) -> bool:
    return s.src == s.tgt.ft() and all(cu.split(e)[0] == g for g, e in s.fn.table.items())


def reindex_object(cu: CU, f: CUMor, X: CUObject, k: int) -> CUObject:
    """``f*X`` for ``X`` lying ``k`` levels above ``cod f``."""
    if k == 0:
        return f.src
    _, g = reindex_map(cu, f, X.ft(), k - 1)
    return cu.pullback(g, X)


def reindex_map(cu: CU, f: CUMor, X: CUObject, k: int):
    """``(f*X, q)`` with ``q: f*X → X`` the composite of canonical ``q`` maps."""
    if k == 0:
        return f.src, f
    _, g = reindex_map(cu, f, X.ft(), k - 1)
    return cu.pullback(g, X), cu.q(g, X)


def reindex_section(cu: CU, f: CUMor, s: CUMor, k: int) -> CUMor:
    """``f*s`` for a section ``s`` of an object ``k >= 1`` levels above ``cod f``."""
    X = s.tgt
    Xf = reindex_object(cu, f, X, k)
    Yf, g = reindex_map(cu, f, X.ft(), k - 1)
    return cu.morphism(Yf, Xf, {d: cu.point(d, cu.last(s(g(d)))) for d in cu.real(Yf)})


def along(cu: CU, X: CUObject, table_fn) -> CUObject:
    """Extend ``X`` by the name ``γ ↦ table_fn(γ)``."""
    return X.extend(FinMap({g: table_fn(g) for g in cu.real(X)}))


def weaken(cu: CU, X: CUObject, over: CUObject) -> CUObject:
    """Pull the type ``X`` (over ``Γ``) back to an object ``over`` lying above ``Γ``."""
    depth = over.level - X.ft().level
    proj = cu.identity(over)
    for _ in range(depth):
        proj = cu.compose(cu.proj(proj.tgt), proj)
    return cu.pullback(proj, X)


# -- structure records -------------------------------------------------------------


class PiStructure:
    def __init__(self, cu: CU):
        self.cu, self.U = cu, cu.U

    def form(self, X3: CUObject) -> CUObject:
        cu, A, B = self.cu, X3.names[-2], X3.names[-1]
        G = X3.ft().ft()
        return along(cu, G, lambda g: self.U.Pi_U(A[g], {x: B[cu.point(g, x)] for x in self.U.members(A[g])}))

    def lam(self, X3: CUObject, b: CUMor) -> CUMor:
        cu, A = self.cu, X3.names[-2]
        P = self.form(X3)
        return section(cu, P, {
            g: hf.function({x: cu.last(b(cu.point(g, x))) for x in self.U.members(A[g])})
            for g in cu.real(P.ft())
        })

    def app(self, X3: CUObject, k: CUMor, a: CUMor) -> CUMor:
        cu = self.cu
        T = cu.pullback(a, X3)
        return section(cu, T, {g: hf.apply(cu.last(k(g)), cu.last(a(g))) for g in cu.real(T.ft())})


class SigmaStructure:
    def __init__(self, cu: CU):
        self.cu, self.U = cu, cu.U

    def form(self, X3):
        cu, A, B = self.cu, X3.names[-2], X3.names[-1]
        G = X3.ft().ft()
        return along(cu, G, lambda g: self.U.Sigma_U(A[g], {x: B[cu.point(g, x)] for x in self.U.members(A[g])}))

    def pairing(self, X3) -> CUMor:
        """``(Γ, A, B) → (Γ, Σ(A, B))``."""
        cu = self.cu
        S = self.form(X3)
        table = {}
        for e in cu.real(X3):
            gx, y = cu.split(e)
            g, x = cu.split(gx)
            table[e] = cu.point(g, hf.pair(x, y))
        return cu.morphism(X3, S, table)

    def pair(self, X3, a: CUMor, b: CUMor) -> CUMor:
        cu = self.cu
        return section(cu, self.form(X3), {g: hf.pair(cu.last(a(g)), cu.last(b(g))) for g in cu.real(a.src)})

    def split(self, X3, C: CUObject, d: CUMor) -> CUMor:
        """``C`` over ``Σ(A, B)``; ``d`` a section of ``pairing*C``."""
        cu = self.cu
        S = C.ft()
        out = {}
        for e in cu.real(S):
            g, s = cu.split(e)
            x, y = hf.unpair(s)
            out[e] = cu.last(d(cu.point(cu.point(g, x), y)))
        return section(cu, C, out)


class IdStructure:
    def __init__(self, cu: CU):
        self.cu, self.U = cu, cu.U

    def form(self, X2) -> CUObject:
        """``(Γ, A, A', Id_A)`` with ``A'`` the weakening of ``A`` along itself."""
        cu, A = self.cu, name(X2)
        X3 = cu.pullback(cu.proj(X2), X2)

        def code(e):
            gx, y = cu.split(e)
            g, x = cu.split(gx)
            return self.U.Id_U(A[g], x, y)

        return along(cu, X3, code)

    def refl(self, X2) -> CUMor:
        cu = self.cu
        X4 = self.form(X2)
        return cu.morphism(X2, X4, {e: cu.point(cu.point(e, cu.last(e)), EMPTY) for e in cu.real(X2)})

    def J(self, X2, C: CUObject, d: CUMor) -> CUMor:
        """``C`` over ``Id_A``; ``d`` a section of ``refl*C``.

        The filler is the universal lifting of the universe, applied to the
        square whose points are tagged with their context coordinate.
        """
        cu, U, A, c = self.cu, self.U, name(X2), name(C)
        r = self.refl(X2)
        X4 = C.ft()
        points, bottom, where = set(), {}, {}
        for e in cu.real(X4):
            gxy, u = cu.split(e)
            gx, y = cu.split(gxy)
            g, x = cu.split(gx)
            pt = (g, A[g], x, y, u)
            points.add(pt)
            bottom[pt] = c[e]
            where[pt] = e
        top = {}
        for gx in cu.real(X2):
            g, x = cu.split(gx)
            top[(g, A[g], x)] = (c[r(gx)], cu.last(d(gx)))
        filler = U.id_lifting(LiftingSquare(frozenset(points), top, bottom))
        return section(cu, C, {where[pt]: m for pt, (_, m) in filler.items()})


class WStructure:
    def __init__(self, cu: CU, pi: PiStructure):
        self.cu, self.U, self.pi = cu, cu.U, pi

    def form(self, X3):
        cu, A, B = self.cu, X3.names[-2], X3.names[-1]
        G = X3.ft().ft()
        return along(cu, G, lambda g: self.U.W_U(A[g], {x: B[cu.point(g, x)] for x in self.U.members(A[g])}))

    def kids(self, X3) -> CUObject:
        """``(Γ, A, Π_{B} W)``: the object of child functions."""
        return self.pi.form(weaken(self.cu, self.form(X3), X3))

    def sup_map(self, X3) -> CUMor:
        cu = self.cu
        K = self.kids(X3)
        W = self.form(X3)
        table = {}
        for e in cu.real(K):
            gx, k = cu.split(e)
            g, x = cu.split(gx)
            table[e] = cu.point(g, self.U.sup(x, k))
        return cu.morphism(K, W, table)

    def sup(self, X3, a: CUMor, k: CUMor) -> CUMor:
        """``a`` a section of ``A``; ``k`` a section of ``a*(Π_B W)``."""
        cu = self.cu
        return section(cu, self.form(X3), {g: self.U.sup(cu.last(a(g)), cu.last(k(g))) for g in cu.real(a.src)})

    def hyps(self, X3, C: CUObject) -> CUObject:
        """``(Γ, A, K, Π_{u:B} C(k u))``: the induction hypotheses."""
        cu, B, c = self.cu, X3.names[-1], name(C)
        K = self.kids(X3)

        def code(e):
            gx, k = cu.split(e)
            g, _ = cu.split(gx)
            fam = {u: c[cu.point(g, hf.apply(k, u))] for u in self.U.members(B[gx])}
            return self.U.Pi_U(B[gx], fam)

        return along(cu, K, code)

    def premise(self, X3, C: CUObject) -> CUObject:
        """The object ``d`` is a section of: ``C`` pulled back along sup to ``(Γ, A, K, H)``."""
        cu = self.cu
        H = self.hyps(X3, C)
        return cu.pullback(cu.compose(self.sup_map(X3), cu.proj(H)), C)

    def wrec(self, X3, C: CUObject, d: CUMor) -> CUMor:
        cu, B = self.cu, X3.names[-1]
        W = C.ft()
        memo = {}

        def rec(g, w):
            hit = memo.get((g, w))
            if hit is None:
                x, k = hf.unpair(w)
                gx = cu.point(g, x)
                ih = hf.function({u: rec(g, hf.apply(k, u)) for u in self.U.members(B[gx])})
                hit = memo[(g, w)] = cu.last(d(cu.point(cu.point(gx, k), ih)))
            return hit

        out = {}
        for e in cu.real(W):
            g, w = cu.split(e)
            out[e] = rec(g, w)
        return section(cu, C, out)


class ZeroStructure:
    def __init__(self, cu: CU):
        self.cu, self.U = cu, cu.U

    def form(self, G):
        return along(self.cu, G, lambda g: self.U.zero)

    def case(self, C):
        return section(self.cu, C, {})


class OneStructure:
    def __init__(self, cu: CU):
        self.cu, self.U = cu, cu.U

    def form(self, G):
        return along(self.cu, G, lambda g: self.U.one)

    def star(self, G):
        return section(self.cu, self.form(G), {g: EMPTY for g in self.cu.real(G)})

    def rec(self, C, d: CUMor):
        """``C`` over ``1``; ``d`` a section of ``star*C``."""
        cu = self.cu
        return section(cu, C, {e: cu.last(d(cu.split(e)[0])) for e in cu.real(C.ft())})


class SumStructure:
    def __init__(self, cu: CU):
        self.cu, self.U = cu, cu.U

    def form(self, XA, XB):
        a, b = name(XA), name(XB)
        return along(self.cu, XA.ft(), lambda g: self.U.plus_U(a[g], b[g]))

    def _inj(self, XA, XB, side):
        cu = self.cu
        S = self.form(XA, XB)
        X = XA if side == 0 else XB
        tag = hf.inl if side == 0 else hf.inr
        return cu.morphism(X, S, {e: cu.point(cu.split(e)[0], tag(cu.last(e))) for e in cu.real(X)})

    def inl(self, XA, XB):
        return self._inj(XA, XB, 0)

    def inr(self, XA, XB):
        return self._inj(XA, XB, 1)

    def case(self, XA, XB, C, dl: CUMor, dr: CUMor):
        cu = self.cu
        out = {}
        for e in cu.real(C.ft()):
            g, s = cu.split(e)
            t, v = hf.unpair(s)
            d = dl if t == EMPTY else dr
            out[e] = cu.last(d(cu.point(g, v)))
        return section(cu, C, out)


class UniverseStructure:
    """The internal universe as a type ``U_Γ`` with decoding ``El``.

    Realizing ``(Γ, U)`` would enumerate every small code, so sections of it
    are handled through their tables and ``El`` of a section is its name.
    """

    def __init__(self, cu: CU, pi: PiStructure, sigma: SigmaStructure):
        self.cu, self.U = cu, cu.U
        self.pi, self.sigma = pi, sigma

    def form(self, G):
        return along(self.cu, G, lambda g: U0)

    def base(self) -> CUObject:
        """The level-2 object ``(U, El)``; realizing it enumerates the small codes."""
        cu = self.cu
        Uo = self.form(cu.terminal())
        return along(cu, Uo, lambda e: self.U.i(cu.last(e)))

    def code(self, G, codes: dict) -> CUMor:
        """A section of ``U_Γ`` with the given small codes."""
        cu = self.cu
        tgt = self.form(G)
        return cu.morphism(G, tgt, {g: cu.point(g, codes[g]) for g in cu.real(G)})

    def El(self, a: CUMor) -> CUObject:
        cu = self.cu
        return a.src.extend(FinMap({g: self.U.i(cu.last(a(g))) for g in cu.real(a.src)}))

    def _fam_close(self, op, a: CUMor, b: CUMor) -> CUMor:
        cu = self.cu
        G = a.src
        return self.code(G, {
            g: op(cu.last(a(g)), {x: cu.last(b(cu.point(g, x))) for x in self.U.members(cu.last(a(g)))})
            for g in cu.real(G)
        })

    def pi_code(self, a, b):
        """``a`` a section of ``U_Γ``, ``b`` a section of ``U`` over ``El a``."""
        return self._fam_close(self.U.pi0, a, b)

    def sigma_code(self, a, b):
        return self._fam_close(self.U.sigma0, a, b)

    def w_code(self, a, b):
        return self._fam_close(self.U.w0, a, b)

    def plus_code(self, a, b):
        cu = self.cu
        return self.code(a.src, {g: self.U.plus0(cu.last(a(g)), cu.last(b(g))) for g in cu.real(a.src)})

    def id_code(self, a, x, y):
        cu = self.cu
        return self.code(a.src, {g: self.U.id0(cu.last(a(g)), cu.last(x(g)), cu.last(y(g))) for g in cu.real(a.src)})

    def z_code(self, G):
        return self.code(G, {g: self.U.z0 for g in self.cu.real(G)})

    def o_code(self, G):
        return self.code(G, {g: self.U.o0 for g in self.cu.real(G)})


@dataclass
class LogicalStructure:
    cu: CU
    pi: PiStructure
    sigma: SigmaStructure
    id: IdStructure
    w: WStructure
    zero: ZeroStructure
    one: OneStructure
    sum: SumStructure
    universe: UniverseStructure


def induce_logical_structure(cu: CU) -> LogicalStructure:
    pi, sigma = PiStructure(cu), SigmaStructure(cu)
    return LogicalStructure(
        cu, pi, sigma, IdStructure(cu), WStructure(cu, pi), ZeroStructure(cu), OneStructure(cu),
        SumStructure(cu), UniverseStructure(cu, pi, sigma),
    )


# -- sampling ---------------------------------------------------------------------


def small_codes(max_members: int = 3):
    """Codes used to build sample families: the ordinals ``0..max_members`` and a few odd sets."""
    base = [hf.ordinal(n) for n in range(max_members + 1)]
    extra = [frozenset({hf.ordinal(1)}), frozenset({hf.ordinal(2)}), frozenset({hf.ordinal(0), hf.ordinal(2)})]
    return base + extra


class Sampler:
    """Random objects, morphisms and sections of C_U built from small codes."""

    def __init__(self, cu: CU, rng: random.Random, codes=None, max_points: int = 6):
        self.cu, self.rng = cu, rng
        self.codes = codes if codes is not None else small_codes()
        self.max_points = max_points

    def type_over(self, G: CUObject, inhabited: bool = False) -> CUObject:
        pool = [c for c in self.codes if c] if inhabited else self.codes
        for _ in range(50):
            X = G.extend(FinMap({g: self.rng.choice(pool) for g in self.cu.real(G)}))
            if len(self.cu.real(X)) <= self.max_points or not self.cu.real(G):
                return X
        return G.extend(FinMap({g: hf.ordinal(1) for g in self.cu.real(G)}))

    def context(self, level: int) -> CUObject:
        X = self.cu.terminal()
        for _ in range(level):
            X = self.type_over(X, inhabited=True)
        return X

    def morphism(self, Y: CUObject, X: CUObject) -> Optional[CUMor]:
        xs = sorted(self.cu.real(X), key=repr)
        if not xs and self.cu.real(Y):
            return None
        return self.cu.morphism(Y, X, {y: self.rng.choice(xs) for y in self.cu.real(Y)})

    def section(self, X: CUObject) -> Optional[CUMor]:
        cu = self.cu
        vals = {}
        for g in cu.real(X.ft()):
            ms = cu.U.members(name(X)[g])
            if not ms:
                return None
            vals[g] = self.rng.choice(ms)
        return section(cu, X, vals)

    def configuration(self, max_level: int = 3):
        """A triple ``(X, f: Y → ft X, g: Z → Y)`` of random data."""
        for _ in range(100):
            X = self.context(self.rng.randint(1, max_level))
            Y = self.context(self.rng.randint(0, max_level - 1))
            Z = self.context(self.rng.randint(0, max_level - 1))
            f = self.morphism(Y, X.ft())
            g = self.morphism(Z, Y)
            if f is not None and g is not None:
                return Configuration(X, f, g)
        raise RuntimeError("could not sample a composable configuration")


# -- verification -------------------------------------------------------------------


@dataclass
class StructureReport(LawReport):
    skipped: int = 0
    per_constructor: dict = field(default_factory=dict)

    def tick(self, ctor):
        self.checked += 1
        self.per_constructor[ctor] = self.per_constructor.get(ctor, 0) + 1


def _expect(rep, cond, equation, detail=""):
    if not cond:
        rep.fail(equation, detail)


def _check_pi(ls, sm, rep):
    cu, P = ls.cu, ls.pi
    G = sm.context(sm.rng.randint(0, 2))
    XA = sm.type_over(G, inhabited=True)
    X3 = sm.type_over(XA)
    D = sm.context(sm.rng.randint(0, 2))
    f = sm.morphism(D, G)
    b = sm.section(X3)
    a = sm.section(XA)
    if f is None:
        return False
    Pi = P.form(X3)
    _expect(rep, Pi.ft() == G, "ft(Pi(A,B)) = Gamma")
    X3f = reindex_object(cu, f, X3, 2)
    _expect(rep, reindex_object(cu, f, Pi, 1) == P.form(X3f), "f*Pi(A,B) = Pi(f*A, f*B)")
    if b is not None:
        lam = P.lam(X3, b)
        bf = reindex_section(cu, f, b, 2)
        _expect(rep, reindex_section(cu, f, lam, 1) == P.lam(X3f, bf), "f*lambda(b) = lambda(f*b)")
        if a is not None:
            _expect(rep, P.app(X3, lam, a) == reindex_section(cu, a, b, 1), "app(lambda(b), a) = a*b")
    k = sm.section(Pi)
    if k is not None and a is not None:
        lhs = reindex_section(cu, f, P.app(X3, k, a), 1)
        rhs = P.app(X3f, reindex_section(cu, f, k, 1), reindex_section(cu, f, a, 1))
        _expect(rep, lhs == rhs, "f*app(k,a) = app(f*k, f*a)")
        _expect(rep, is_section(cu, k), "k is a section of Pi(A,B)")
    return True


def _check_sigma(ls, sm, rep):
    cu, S = ls.cu, ls.sigma
    G = sm.context(sm.rng.randint(0, 2))
    XA = sm.type_over(G, inhabited=True)
    X3 = sm.type_over(XA, inhabited=True)
    D = sm.context(sm.rng.randint(0, 2))
    f = sm.morphism(D, G)
    if f is None:
        return False
    Sg = S.form(X3)
    X3f = reindex_object(cu, f, X3, 2)
    _expect(rep, reindex_object(cu, f, Sg, 1) == S.form(X3f), "f*Sigma(A,B) = Sigma(f*A, f*B)")
    a = sm.section(XA)
    b = sm.section(cu.pullback(a, X3)) if a is not None else None
    if b is not None:
        pr = S.pair(X3, a, b)
        _expect(rep, pr == cu.compose(S.pairing(X3), cu.compose(cu.q(a, X3), b)), "pair(a,b) = pair . (a,b)")
        rhs = S.pair(X3f, reindex_section(cu, f, a, 1), reindex_section(cu, f, b, 1))
        _expect(rep, reindex_section(cu, f, pr, 1) == rhs, "f*pair(a,b) = pair(f*a, f*b)")
    C = sm.type_over(Sg)
    pm = S.pairing(X3)
    d = sm.section(cu.pullback(pm, C))
    if d is None:
        return True
    sp = S.split(X3, C, d)
    _expect(rep, cu.compose(sp, pm) == cu.compose(cu.q(pm, C), d), "split_d . pair = d")
    Cf = reindex_object(cu, f, C, 2)
    df = reindex_section(cu, f, d, 3)
    _expect(rep, reindex_section(cu, f, sp, 2) == S.split(X3f, Cf, df), "f*split_d = split_{f*d}")
    return True


def _check_id(ls, sm, rep):
    cu, I = ls.cu, ls.id
    G = sm.context(sm.rng.randint(0, 2))
    X2 = sm.type_over(G, inhabited=True)
    D = sm.context(sm.rng.randint(0, 2))
    f = sm.morphism(D, G)
    if f is None:
        return False
    X4 = I.form(X2)
    X2f = reindex_object(cu, f, X2, 1)
    _expect(rep, reindex_object(cu, f, X4, 3) == I.form(X2f), "f*Id_A = Id_{f*A}")
    r = I.refl(X2)
    _, g4 = reindex_map(cu, f, X4, 3)
    _, g2 = reindex_map(cu, f, X2, 1)
    _expect(rep, cu.compose(g4, I.refl(X2f)) == cu.compose(r, g2), "f*refl_A = refl_{f*A}")
    C = sm.type_over(X4, inhabited=True)
    d = sm.section(cu.pullback(r, C))
    if d is None:
        return True
    j = I.J(X2, C, d)
    _expect(rep, cu.compose(j, r) == cu.compose(cu.q(r, C), d), "J_{C,d} . refl_A = d")
    Cf = reindex_object(cu, f, C, 4)
    df = reindex_section(cu, f, d, 2)
    _expect(rep, reindex_section(cu, f, j, 4) == I.J(X2f, Cf, df), "f*J_{C,d} = J_{f*C,f*d}")
    return True


def _check_w(ls, sm, rep):
    cu, Wst = ls.cu, ls.w
    G = sm.context(sm.rng.randint(0, 1))
    XA = sm.type_over(G, inhabited=True)
    # arities of at most one child keep the W-types small
    X3 = XA.extend(FinMap({e: sm.rng.choice([hf.ordinal(0), hf.ordinal(1)]) for e in cu.real(XA)}))
    D = sm.context(sm.rng.randint(0, 1))
    f = sm.morphism(D, G)
    if f is None:
        return False
    W = Wst.form(X3)
    X3f = reindex_object(cu, f, X3, 2)
    _expect(rep, reindex_object(cu, f, W, 1) == Wst.form(X3f), "f*W(A,B) = W(f*A, f*B)")
    C = W.extend(FinMap({e: sm.rng.choice([hf.ordinal(1), hf.ordinal(2)]) for e in cu.real(W)}))
    Dp = Wst.premise(X3, C)
    d = sm.section(Dp)
    if d is None:
        return True
    wr = Wst.wrec(X3, C, d)
    sm_map = Wst.sup_map(X3)
    H = Wst.hyps(X3, C)
    B = name(X3)
    for e in cu.real(sm_map.src):
        gx, k = cu.split(e)
        g, _ = cu.split(gx)
        ih = hf.function({u: cu.last(wr(cu.point(g, hf.apply(k, u)))) for u in cu.U.members(B[gx])})
        lhs = cu.last(wr(sm_map(e)))
        rhs = cu.last(d(cu.point(e, ih)))
        if lhs != rhs:
            rep.fail("wrec_{C,d}(sup(x,k)) = d(x, k, wrec . k)")
            break
    _expect(rep, H.ft() == Wst.kids(X3), "ft(H) = K")
    Cf = reindex_object(cu, f, C, 2)
    df = reindex_section(cu, f, d, 4)
    _expect(rep, reindex_section(cu, f, wr, 2) == Wst.wrec(X3f, Cf, df), "f*wrec_{C,d} = wrec_{f*C,f*d}")
    a = sm.section(XA)
    if a is not None:
        k = sm.section(cu.pullback(a, Wst.kids(X3)))
        if k is not None:
            s = Wst.sup(X3, a, k)
            rhs = Wst.sup(X3f, reindex_section(cu, f, a, 1), reindex_section(cu, f, k, 1))
            _expect(rep, reindex_section(cu, f, s, 1) == rhs, "f*sup(a,k) = sup(f*a, f*k)")
    return True


def _check_zero_one(ls, sm, rep):
    cu = ls.cu
    G = sm.context(sm.rng.randint(0, 2))
    D = sm.context(sm.rng.randint(0, 2))
    f = sm.morphism(D, G)
    if f is None:
        return False
    Z = ls.zero.form(G)
    _expect(rep, reindex_object(cu, f, Z, 1) == ls.zero.form(D), "f*0 = 0")
    _expect(rep, not cu.real(Z), "0 has no points")
    CZ = sm.type_over(Z)
    _expect(rep, reindex_section(cu, f, ls.zero.case(CZ), 2) == ls.zero.case(reindex_object(cu, f, CZ, 2)),
            "f*case0_C = case0_{f*C}")
    O = ls.one.form(G)
    _expect(rep, reindex_object(cu, f, O, 1) == ls.one.form(D), "f*1 = 1")
    st = ls.one.star(G)
    _expect(rep, reindex_section(cu, f, st, 1) == ls.one.star(D), "f*star = star")
    C = sm.type_over(O, inhabited=True)
    d = sm.section(cu.pullback(st, C))
    if d is not None:
        r = ls.one.rec(C, d)
        _expect(rep, cu.compose(r, st) == cu.compose(cu.q(st, C), d), "rec_{C,d} . star = d")
        rf = ls.one.rec(reindex_object(cu, f, C, 2), reindex_section(cu, f, d, 1))
        _expect(rep, reindex_section(cu, f, r, 2) == rf, "f*rec_{C,d} = rec_{f*C,f*d}")
    return True


def _check_sum(ls, sm, rep):
    cu, S = ls.cu, ls.sum
    G = sm.context(sm.rng.randint(0, 2))
    XA = sm.type_over(G)
    XB = sm.type_over(G)
    D = sm.context(sm.rng.randint(0, 2))
    f = sm.morphism(D, G)
    if f is None:
        return False
    P = S.form(XA, XB)
    XAf, XBf = reindex_object(cu, f, XA, 1), reindex_object(cu, f, XB, 1)
    _expect(rep, reindex_object(cu, f, P, 1) == S.form(XAf, XBf), "f*(A+B) = f*A + f*B")
    inl, inr = S.inl(XA, XB), S.inr(XA, XB)
    C = sm.type_over(P, inhabited=True)
    dl = sm.section(cu.pullback(inl, C))
    dr = sm.section(cu.pullback(inr, C))
    if dl is None or dr is None:
        return True
    c = S.case(XA, XB, C, dl, dr)
    _expect(rep, cu.compose(c, inl) == cu.compose(cu.q(inl, C), dl), "case . inl = d_l")
    _expect(rep, cu.compose(c, inr) == cu.compose(cu.q(inr, C), dr), "case . inr = d_r")
    Cf = reindex_object(cu, f, C, 2)
    cf = S.case(XAf, XBf, Cf, reindex_section(cu, f, dl, 2), reindex_section(cu, f, dr, 2))
    _expect(rep, reindex_section(cu, f, c, 2) == cf, "f*case = case(f*d_l, f*d_r)")
    _, gA = reindex_map(cu, f, XA, 1)
    _, gP = reindex_map(cu, f, P, 1)
    _expect(rep, cu.compose(gP, S.inl(XAf, XBf)) == cu.compose(inl, gA), "f*inl = inl")
    return True


def _check_universe(ls, sm, rep):
    cu, Us = ls.cu, ls.universe
    G = sm.context(sm.rng.randint(0, 2))
    D = sm.context(sm.rng.randint(0, 2))
    f = sm.morphism(D, G)
    if f is None:
        return False
    small = [hf.ordinal(0), hf.ordinal(1), hf.ordinal(2)]
    a = Us.code(G, {g: sm.rng.choice(small[1:]) for g in cu.real(G)})
    Ea = Us.El(a)
    b = Us.code(Ea, {e: sm.rng.choice(small) for e in cu.real(Ea)})
    Eb = Us.El(b)
    pi = Us.pi_code(a, b)
    _expect(rep, Us.El(pi) == ls.pi.form(Eb), "El(pi(a,b)) = Pi(El a, El b)")
    _expect(rep, Us.El(Us.sigma_code(a, b)) == ls.sigma.form(Eb), "El(sigma(a,b)) = Sigma(El a, El b)")
    _expect(rep, Us.El(Us.plus_code(a, a)) == ls.sum.form(Ea, Ea), "El(a + a) = El a + El a")
    _expect(rep, Us.El(Us.z_code(G)) == ls.zero.form(G), "El(z) = 0")
    _expect(rep, Us.El(Us.o_code(G)) == ls.one.form(G), "El(o) = 1")
    # stability: the closure maps commute with reindexing of their arguments
    af = cu.morphism(D, Us.form(D), {d: cu.point(d, cu.last(a(f(d)))) for d in cu.real(D)})
    Eaf = Us.El(af)
    _expect(rep, Eaf == reindex_object(cu, f, Ea, 1), "f*El(a) = El(f*a)")
    _, g1 = reindex_map(cu, f, Ea, 1)
    bf = Us.code(Eaf, {e: cu.last(b(g1(e))) for e in cu.real(Eaf)})
    pif = Us.pi_code(af, bf)
    _expect(rep, values(cu, pif) == {d: cu.last(pi(f(d))) for d in cu.real(D)}, "f*pi(a,b) = pi(f*a, f*b)")
    return True


CHECKS = {
    "Pi": _check_pi,
    "Sigma": _check_sigma,
    "Id": _check_id,
    "W": _check_w,
    "0/1": _check_zero_one,
    "+": _check_sum,
    "U": _check_universe,
}


def verify_structure(ls: LogicalStructure, rng: random.Random, samples: int = 50, constructors=None) -> StructureReport:
    """Check every computation rule and stability equation on ``samples`` random instances per constructor."""
    rep = StructureReport()
    sm = Sampler(ls.cu, rng)
    for ctor in constructors or CHECKS:
        done = attempts = 0
        while done < samples and attempts < samples * 10:
            attempts += 1
            try:
                ok = CHECKS[ctor](ls, sm, rep)
            except BudgetExceeded:
                rep.skipped += 1
                continue
            if ok:
                done += 1
                rep.tick(ctor)
    return rep
