"""Interpretation of checked syntax in the finite-set model.

Types denote :class:`SType` values (a lazily computed code plus enough
structure to check introduction forms), terms denote hereditarily finite
codes.  Contexts are realized as objects of C_U and terms as their sections,
so definitional equality can be compared element by element.

The evaluator is bidirectional like the kernel, which lets unannotated
``fun`` be interpreted against a known function type.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .. import syntax as S
from ..contextual import core as cc
from ..kernel.env import Environment
from . import hf
from .hf import EMPTY, SINGLETON
from .universe import U0, LiftingSquare, SetUniverse


class Unsupported(Exception):
    """The judgement mentions something the set model does not interpret."""


# the univalence axiom fails in sets: its type is empty
UNIVALENCE_AXIOM = "uvt"


@dataclass(eq=False)
class SType:
    """A semantic type over one point of the context."""

    kind: str
    U: SetUniverse
    dom: Optional["SType"] = None
    fam: Optional[Callable] = None
    left: Optional["SType"] = None
    right: Optional["SType"] = None
    lhs: object = None
    rhs: object = None
    raw: object = None
    _code: object = field(default=None, repr=False)

    def code(self):
        if self._code is None:
            self._code = self._compute()
        return self._code

    def _compute(self):
        U, k = self.U, self.kind
        if k == "el":
            return self.raw
        if k == "u":
            return U0
        if k == "zero":
            return U.zero
        if k == "one":
            return U.one
        if k == "sum":
            return U.plus_U(self.left.code(), self.right.code())
        if k == "id":
            return U.Id_U(self.dom.code(), self.lhs, self.rhs)
        table = {x: self.fam(x).code() for x in self.dom.elements()}
        op = {"pi": U.Pi_U, "sigma": U.Sigma_U, "w": U.W_U}[k]
        return op(self.dom.code(), table)

    def elements(self):
        return self.U.members(self.code())


class Interpreter:
    def __init__(self, env: Environment, universe: SetUniverse):
        self.env, self.U = env, universe
        self._globals = {}
        # codes built by code formers, remembered with their construction
        self._decode = {}

    # -- semantic types ------------------------------------------------------
    def el(self, c) -> SType:
        return SType("el", self.U, raw=c)

    def _const(self, kind) -> SType:
        return SType(kind, self.U)

    def _register(self, code, how):
        self._decode.setdefault(code, []).append(how)
        return code

    def as_kind(self, ty: SType, kind: str) -> SType:
        """View ``ty`` as a type former of ``kind``, decoding ``El`` of a code if needed."""
        if ty.kind == kind:
            return ty
        if ty.kind == "el":
            for how in self._decode.get(ty.raw, ()):
                if how[0] != kind:
                    continue
                if kind in ("pi", "sigma", "w"):
                    _, a, table = how
                    return SType(kind, self.U, dom=self.el(a), fam=lambda x, t=table: self.el(t[x]), _code=ty.raw)
                if kind == "sum":
                    return SType("sum", self.U, left=self.el(how[1]), right=self.el(how[2]), _code=ty.raw)
                if kind == "id":
                    return SType("id", self.U, dom=self.el(how[1]), lhs=how[2], rhs=how[3], _code=ty.raw)
                return SType(kind, self.U, _code=ty.raw)
            if kind in ("zero", "one") and ty.raw == (EMPTY if kind == "zero" else SINGLETON):
                return self._const(kind)
        raise TypeError(f"expected a {kind} type, got {ty.kind}")

    # -- environments ----------------------------------------------------------
    # ``rho`` is a tuple of (value, SType) for bound variables, innermost last;
    # ``names`` maps free variables and parameters to (value, SType) or ("type", SType).

    def _lookup(self, t, rho, names):
        if isinstance(t, S.Bound):
            return rho[len(rho) - 1 - t.index]
        if t.name in names:
            return names[t.name]
        return None

    def _global(self, name):
        d = self.env.get(name)
        if d is None:
            raise KeyError(f"unbound variable {name}")
        if d.name == UNIVALENCE_AXIOM:
            raise Unsupported("the univalence axiom does not hold in the finite-set model")
        return d

    def _axiom(self, d, local):
        """An axiom is a free constant; it denotes the least element of its type."""
        if d.is_family or d.arity:
            raise Unsupported(f"axiom {d.name} is not a closed constant")
        ty = self.eval_type(d.type, (), local)
        members = ty.elements()
        if not members:
            raise Unsupported(f"axiom {d.name} has an empty type in the finite-set model")
        return members[0], ty

    def _bind_params(self, d, args, rho, names):
        local = {}
        for (p, kind), a in zip(d.params, args):
            if isinstance(kind, S.TypeSort):
                local[p] = ("type", self.eval_type(a, rho, names))
            else:
                ty = self.eval_type(kind, (), local)
                local[p] = (self.check(a, rho, names, ty), ty)
        return local

    def _apply_global(self, d, args, rho, names):
        if d.is_axiom:
            if d.name not in self._globals:
                self._globals[d.name] = self._axiom(d, {})
            val, ty = self._globals[d.name]
            return self._beta_infer_value(val, ty, args, rho, names)
        if d.arity == 0 and not args:
            hit = self._globals.get(d.name)
            if hit is None:
                ty = self.eval_type(d.type, (), {})
                hit = self._globals[d.name] = (self.check(d.body, (), {}, ty), ty)
            return hit
        local = self._bind_params(d, args[: d.arity], rho, names)
        ty = self.eval_type(d.type, (), local)
        return self._beta(d.body, (), local, ty, args[d.arity :], rho, names)

    def _beta(self, body, brho, bnames, ty, args, rho, names):
        """Apply ``body`` (evaluated in ``brho, bnames``) to ``args`` (evaluated in ``rho, names``).

        Leading lambdas are entered directly, so a function is only ever
        evaluated at the arguments it receives.
        """
        while args and isinstance(body, S.Lam):
            P = self.as_kind(ty, "pi")
            av = self.check(args[0], rho, names, P.dom)
            brho, ty, body, args = brho + ((av, P.dom),), P.fam(av), body.body.body, args[1:]
        val = self.check(body, brho, bnames, ty)
        for a in args:
            P = self.as_kind(ty, "pi")
            av = self.check(a, rho, names, P.dom)
            val, ty = hf.apply(val, av), P.fam(av)
        return val, ty

    # -- types -----------------------------------------------------------------
    def eval_type(self, t, rho, names) -> SType:
        U = self.U
        if isinstance(t, (S.Pi, S.Sigma, S.W)):
            kind = {S.Pi: "pi", S.Sigma: "sigma", S.W: "w"}[type(t)]
            dom = self.eval_type(t.dom, rho, names)
            cache = {}

            def fam(x, t=t, dom=dom):
                if x not in cache:
                    cache[x] = self.eval_type(t.cod.body, rho + ((x, dom),), names)
                return cache[x]

            return SType(kind, U, dom=dom, fam=fam)
        if isinstance(t, S.Id):
            A = self.eval_type(t.ty, rho, names)
            return SType("id", U, dom=A, lhs=self.check(t.lhs, rho, names, A), rhs=self.check(t.rhs, rho, names, A))
        if isinstance(t, S.Zero):
            return self._const("zero")
        if isinstance(t, S.One):
            return self._const("one")
        if isinstance(t, S.Sum):
            return SType("sum", U, left=self.eval_type(t.left, rho, names), right=self.eval_type(t.right, rho, names))
        if isinstance(t, S.U):
            return self._const("u")
        if isinstance(t, S.El):
            return self.el(self.check(t.code, rho, names, self._const("u")))
        head, args = S.spine(t)
        if isinstance(head, (S.Var, S.Bound)):
            hit = self._lookup(head, rho, names)
            if hit is not None and hit[0] == "type" and not args:
                return hit[1]
            if hit is None and isinstance(head, S.Var):
                d = self._global(head.name)
                if d.is_family:
                    if d.is_axiom:
                        raise Unsupported(f"axiom {d.name} is an undetermined type family")
                    local = self._bind_params(d, args, rho, names)
                    return self.eval_type(d.body, (), local)
        raise TypeError(f"not a type: {t!r}")

    # -- terms -----------------------------------------------------------------
    def check(self, t, rho, names, ty: SType):
        if isinstance(t, S.Lam):
            P = self.as_kind(ty, "pi")
            return hf.function({x: self.check(t.body.body, rho + ((x, P.dom),), names, P.fam(x)) for x in P.dom.elements()})
        if isinstance(t, S.Pair):
            Sg = self.as_kind(ty, "sigma")
            a = self.check(t.fst, rho, names, Sg.dom)
            return hf.pair(a, self.check(t.snd, rho, names, Sg.fam(a)))
        if isinstance(t, S.Sup):
            Wt = self.as_kind(ty, "w")
            a = self.check(t.label, rho, names, Wt.dom)
            kids_ty = SType("pi", self.U, dom=Wt.fam(a), fam=lambda _: Wt)
            return self.U.sup(a, self.check(t.kids, rho, names, kids_ty))
        if isinstance(t, (S.Inl, S.Inr)):
            Sm = self.as_kind(ty, "sum")
            if isinstance(t, S.Inl):
                return hf.inl(self.check(t.val, rho, names, Sm.left))
            return hf.inr(self.check(t.val, rho, names, Sm.right))
        if isinstance(t, (S.ExtComp, S.Refl, S.Ext)):
            return EMPTY
        return self.infer(t, rho, names)[0]

    def infer(self, t, rho, names):
        U = self.U
        if isinstance(t, (S.Var, S.Bound)):
            hit = self._lookup(t, rho, names)
            if hit is not None:
                return hit
            return self._apply_global(self._global(t.name), [], rho, names)
        if isinstance(t, S.App):
            head, args = S.spine(t)
            if isinstance(head, S.Var) and self._lookup(head, rho, names) is None:
                return self._apply_global(self._global(head.name), args, rho, names)
            if isinstance(head, (S.CaseSum, S.Split, S.Rec1)):
                return self._elim_apply(head, rho, names, args)
            if isinstance(head, S.Lam) and head.dom is not None:
                dom = self.eval_type(head.dom, rho, names)
                av = self.check(args[0], rho, names, dom)
                return self._beta_infer(head.body.body, rho + ((av, dom),), names, args[1:])
            val, ty = self.infer(head, rho, names)
            for a in args:
                P = self.as_kind(ty, "pi")
                av = self.check(a, rho, names, P.dom)
                val, ty = hf.apply(val, av), P.fam(av)
            return val, ty
        if isinstance(t, S.Lam):
            dom = self.eval_type(t.dom, rho, names)
            vals, tys = {}, {}
            for x in dom.elements():
                vals[x], tys[x] = self.infer(t.body.body, rho + ((x, dom),), names)
            return hf.function(vals), SType("pi", U, dom=dom, fam=tys.__getitem__)
        if isinstance(t, S.Star):
            return EMPTY, self._const("one")
        if isinstance(t, S.Refl):
            A = self.eval_type(t.ty, rho, names)
            a = self.check(t.val, rho, names, A)
            return EMPTY, SType("id", U, dom=A, lhs=a, rhs=a)
        if isinstance(t, S.Split):
            sv, sty = self.infer(t.scrut, rho, names)
            Sg = self.as_kind(sty, "sigma")
            x, y = hf.unpair(sv)
            C = self.eval_type(t.motive.body, rho + ((sv, sty),), names)
            return self.check(t.branch.body, rho + ((x, Sg.dom), (y, Sg.fam(x))), names, C), C
        if isinstance(t, S.J):
            return self._j(t, rho, names)
        if isinstance(t, S.WRec):
            return self._wrec(t, rho, names)
        if isinstance(t, S.Case0):
            raise RuntimeError("the empty type has no elements to eliminate")
        if isinstance(t, S.Rec1):
            sv, sty = self.infer(t.scrut, rho, names)
            C = self.eval_type(t.motive.body, rho + ((sv, sty),), names)
            return self.check(t.branch, rho, names, C), C
        if isinstance(t, S.CaseSum):
            sv, sty = self.infer(t.scrut, rho, names)
            Sm = self.as_kind(sty, "sum")
            C = self.eval_type(t.motive.body, rho + ((sv, sty),), names)
            tag, v = hf.unpair(sv)
            if tag == EMPTY:
                return self.check(t.left.body, rho + ((v, Sm.left),), names, C), C
            return self.check(t.right.body, rho + ((v, Sm.right),), names, C), C
        if isinstance(t, S.Ext):
            fv, fty = self.infer(t.f, rho, names)
            gv = self.check(t.g, rho, names, fty)
            return EMPTY, SType("id", U, dom=fty, lhs=fv, rhs=gv)
        return self._code(t, rho, names), self._const("u")

    def _elim_apply(self, t, rho, names, args):
        """An applied eliminator: choose the branch first, then apply it to ``args``."""
        sv, sty = self.infer(t.scrut, rho, names)
        C = self.eval_type(t.motive.body, rho + ((sv, sty),), names)
        if isinstance(t, S.Rec1):
            return self._beta(t.branch, rho, names, C, args, rho, names)
        if isinstance(t, S.Split):
            Sg = self.as_kind(sty, "sigma")
            x, y = hf.unpair(sv)
            return self._beta(t.branch.body, rho + ((x, Sg.dom), (y, Sg.fam(x))), names, C, args, rho, names)
        Sm = self.as_kind(sty, "sum")
        tag, v = hf.unpair(sv)
        branch, side = (t.left, Sm.left) if tag == EMPTY else (t.right, Sm.right)
        return self._beta(branch.body, rho + ((v, side),), names, C, args, rho, names)

    def _beta_infer(self, body, rho, names, args):
        val, ty = self.infer(body, rho, names)
        return self._beta_infer_value(val, ty, args, rho, names)

    def _beta_infer_value(self, val, ty, args, rho, names):
        for a in args:
            P = self.as_kind(ty, "pi")
            av = self.check(a, rho, names, P.dom)
            val, ty = hf.apply(val, av), P.fam(av)
        return val, ty

    def _code(self, t, rho, names):
        U, u = self.U, self._const("u")
        if isinstance(t, (S.CPi, S.CSigma, S.CW)):
            kind = {S.CPi: "pi", S.CSigma: "sigma", S.CW: "w"}[type(t)]
            a = self.check(t.dom, rho, names, u)
            dom = self.el(a)
            table = {x: self.check(t.cod.body, rho + ((x, dom),), names, u) for x in U.members(a)}
            if kind == "w":
                code = U.W_U(a, table, inner=True, symbolic=True)
            else:
                code = {"pi": U.pi0, "sigma": U.sigma0}[kind](a, table)
            return self._register(code, (kind, a, table))
        if isinstance(t, S.CId):
            a = self.check(t.ty, rho, names, u)
            x = self.check(t.lhs, rho, names, self.el(a))
            y = self.check(t.rhs, rho, names, self.el(a))
            return self._register(U.id0(a, x, y), ("id", a, x, y))
        if isinstance(t, S.CZ):
            return self._register(U.z0, ("zero",))
        if isinstance(t, S.CO):
            return self._register(U.o0, ("one",))
        if isinstance(t, S.CPlus):
            a = self.check(t.left, rho, names, u)
            b = self.check(t.right, rho, names, u)
            return self._register(U.plus0(a, b), ("sum", a, b))
        raise TypeError(f"cannot interpret {type(t).__name__} as a term")

    def _j(self, t, rho, names):
        pv, pty = self.infer(t.path, rho, names)
        I = self.as_kind(pty, "id")
        A = I.dom
        a = self.check(t.lhs, rho, names, A)
        b = self.check(t.rhs, rho, names, A)

        def motive(x, y, u):
            return self.eval_type(t.motive.body, rho + ((x, A), (y, A), (u, SType("id", self.U, dom=A, lhs=x, rhs=y))), names)

        d = self.check(t.branch.body, rho + ((a, A),), names, motive(a, a, EMPTY))
        c = A.code()
        pt = (c, a, b, pv)
        C = motive(a, b, pv)
        square = LiftingSquare(frozenset({pt}), {(c, a): (motive(a, a, EMPTY).code(), d)}, {pt: C.code()})
        return self.U.id_lifting(square)[pt][1], C

    def _wrec(self, t, rho, names):
        tv, tty = self.infer(t.tree, rho, names)
        Wt = self.as_kind(tty, "w")
        memo = {}

        def C(w):
            return self.eval_type(t.motive.body, rho + ((w, Wt),), names)

        def rec(w):
            if w not in memo:
                x, k = hf.unpair(w)
                B = Wt.fam(x)
                kids_ty = SType("pi", self.U, dom=B, fam=lambda _: Wt)
                ih_vals = {u: rec(hf.apply(k, u)) for u in B.elements()}
                ih_ty = SType("pi", self.U, dom=B, fam=lambda u: C(hf.apply(k, u)))
                memo[w] = self.check(t.branch.body, rho + ((x, Wt.dom), (k, kids_ty), (hf.function(ih_vals), ih_ty)), names, C(w))
            return memo[w]

        return rec(tv), C(tv)

    # -- contexts as objects of C_U ------------------------------------------------
    def realize(self, ctx: S.Context, cu: cc.CU):
        """The object of ``ctx`` with, for each point, the assignment of its variables."""
        X = cu.terminal()
        points = {(): {}}
        for name, ty in ctx.entries:
            codes, types = {}, {}
            for g, names in points.items():
                st = self.eval_type(ty, (), names)
                codes[g], types[g] = st.code(), st
            X = X.extend(cc.FinMap(codes))
            nxt = {}
            for g, names in points.items():
                for m in self.U.members(codes[g]):
                    nxt[cu.point(g, m)] = {**names, name: (m, types[g])}
            points = nxt
        return X, points



def interpret(env: Environment, j, M: SetUniverse, cu: Optional[cc.CU] = None):
    """Denotation of a derivable judgement in the finite-set model.

    Contexts and types give objects of C_U, terms give sections, and the two
    equality judgements give ``True`` exactly when both sides denote the same
    object or section.
    """
    cu = cu or cc.contextualize(M)
    it = Interpreter(env, M)
    if isinstance(j, S.Context):
        return it.realize(j, cu)[0]
    G, points = it.realize(j.ctx, cu)

    def type_object(A):
        return G.extend(cc.FinMap({g: it.eval_type(A, (), names).code() for g, names in points.items()}))

    def section_of(t, A):
        X = type_object(A)
        table = {}
        for g, names in points.items():
            table[g] = cu.point(g, it.check(t, (), names, it.eval_type(A, (), names)))
        return cc.CUMor(G, X, cc.FinMap(table))

    if isinstance(j, S.TypeJ):
        return type_object(j.ty)
    if isinstance(j, S.TermJ):
        return section_of(j.term, j.ty)
    if isinstance(j, S.TypeEqJ):
        return type_object(j.lhs) == type_object(j.rhs)
    if isinstance(j, S.TermEqJ):
        # element-level comparison; the type itself need not be enumerable
        for names in points.values():
            A = it.eval_type(j.ty, (), names)
            if it.check(j.lhs, (), names, A) != it.check(j.rhs, (), names, A):
                return False
        return True
    raise TypeError(f"not a judgement: {j!r}")


def type_at(env: Environment, ty: S.Term, M: SetUniverse, assignment: Optional[dict] = None) -> SType:
    """The semantic type of ``ty`` at one point, given values (and types) for its free variables."""
    return Interpreter(env, M).eval_type(ty, (), assignment or {})


def term_at(env: Environment, t: S.Term, ty: S.Term, M: SetUniverse, assignment: Optional[dict] = None):
    it = Interpreter(env, M)
    names = assignment or {}
    return it.check(t, (), names, it.eval_type(ty, (), names))


def describe_definition(env: Environment, name: str, M: SetUniverse) -> dict:
    """A printable summary of the denotation of a global, for the ``interp`` command."""
    d = env.get(name)
    if d is None:
        raise KeyError(f"unbound variable {name}")
    it = Interpreter(env, M)
    if d.name == UNIVALENCE_AXIOM:
        raise Unsupported("the univalence axiom does not hold in the finite-set model")
    if any(isinstance(kind, S.TypeSort) for _, kind in d.params):
        raise Unsupported(f"{name} is schematic in a type parameter; interpret an instance instead")
    ctx = S.Context(tuple(d.params))
    G, points = it.realize(ctx, cc.contextualize(M))
    out = {"points": len(points)}
    if d.is_family:
        codes = {g: it.eval_type(d.body, (), names).code() for g, names in points.items()}
        out["denotation"] = "type"
        out["codes"] = [hf.show(c) for c in codes.values()][:8]
        out["sizes"] = [len(M.members(c)) if c is not U0 else None for c in codes.values()][:8]
        return out
    if d.is_axiom:
        val, ty = it._axiom(d, {})
        return {**out, "denotation": "axiom", "values": [hf.show(val)], "type_sizes": [len(ty.elements())]}
    vals = []
    for names in points.values():
        ty = it.eval_type(d.type, (), names)
        vals.append((it.check(d.body, (), names, ty), ty))
    out["denotation"] = "term"
    out["values"] = [hf.show(v) for v, _ in vals][:8]
    try:
        out["type_sizes"] = [len(ty.elements()) for _, ty in vals][:8]
    except hf.BudgetExceeded as e:
        out["type_sizes"] = f"too large: {e}"
    return out
