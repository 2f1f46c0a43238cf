"""Bidirectional typechecking.

Checking mode handles lambda, pair, sup, inl/inr, ext and extcomp against the
matching type former; everything else synthesizes and is compared with the
expected type by normal-form equality.
"""

from __future__ import annotations

import os
from typing import Optional

from .. import syntax as S
from .env import Definition, Environment
from .errors import (
    BadArity,
    CannotInfer,
    DuplicateVariable,
    IllFormedType,
    KernelError,
    MissingFlag,
    NotAType,
    NotATerm,
    StuckTerm,
    TypeMismatch,
    UnboundVariable,
)
from .nbe import (
    Clo,
    Evaluator,
    Fuel,
    NExt,
    VId,
    VInl,
    VInr,
    VLam,
    VNeutral,
    VPair,
    VPi,
    VRefl,
    VSigma,
    VSum,
    VSup,
    VW,
    V_ONE,
    V_STAR,
    V_U,
    V_ZERO,
    vvar,
)

DEFAULT_FUEL = 200_000


def default_fuel() -> int:
    try:
        return int(os.environ.get("UF_FUEL", DEFAULT_FUEL))
    except ValueError:
        return DEFAULT_FUEL


_TYPE_FORMERS = (S.Pi, S.Sigma, S.W, S.Id, S.Zero, S.One, S.Sum, S.U, S.El)


class Ctx:
    """Checker-side context: names mapped to type values (or ``TYPE``)."""

    __slots__ = ("entries", "index")

    def __init__(self, entries=()):
        self.entries = tuple(entries)
        self.index = {n: k for n, k in self.entries}

    def extend(self, name, kind):
        return Ctx(self.entries + ((name, kind),))


class Checker:
    def __init__(self, env: Environment, fuel: Optional[int] = None):
        self.env = env
        self.flags = env.flags
        self.fuel = Fuel(default_fuel() if fuel is None else fuel)
        self.ev = Evaluator(env.bodies(), self.fuel, eta=self.flags.eta_pi)
        self._fresh = 0

    # -- helpers ----------------------------------------------------------
    def fresh(self, ctx: Ctx, hint: str) -> str:
        hint = hint if hint and hint != "_" else "x"
        name = hint
        while name in ctx.index or name in self.env:
            self._fresh += 1
            name = f"{hint}{self._fresh}"
        return name

    def eval(self, t):
        return self.ev.eval(t)

    def quote(self, v):
        return self.ev.quote(v)

    def conv(self, a, b) -> bool:
        return self.quote(a) == self.quote(b)

    def expect_conv(self, expected, got, at):
        if not self.conv(expected, got):
            raise TypeMismatch(
                f"expected {_show(self.quote(expected))}, got {_show(self.quote(got))}",
                expected=_show(self.quote(expected)),
                got=_show(self.quote(got)),
                at=_show(at),
            )

    def _open(self, ctx, scope: S.Scope, kinds):
        """Open ``scope`` with fresh variables; ``kinds`` computes each type from the earlier vars."""
        names = []
        vals = []
        for hint, kind in zip(scope.names, kinds):
            n = self.fresh(ctx, hint)
            k = kind(*vals) if callable(kind) else kind
            ctx = ctx.extend(n, k)
            names.append(n)
            vals.append(vvar(n))
        return ctx, S.instantiate(scope, [S.Var(n) for n in names]), vals

    # -- contexts ---------------------------------------------------------
    def check_context(self, gamma: S.Context) -> Ctx:
        ctx = Ctx()
        for i, (name, ty) in enumerate(gamma.entries):
            if name in ctx.index or name in self.env:
                raise DuplicateVariable(f"variable {name!r} declared twice", index=i, name=name)
            if isinstance(ty, S.TypeSort):
                ctx = ctx.extend(name, S.TYPE)
                continue
            try:
                self.check_type(ctx, ty)
            except KernelError as e:
                raise IllFormedType(f"entry {i} ({name}): {e}", index=i, cause=e.kind) from e
            ctx = ctx.extend(name, self.eval(ty))
        return ctx

    # -- types ------------------------------------------------------------
    def check_type(self, ctx: Ctx, a: S.Term) -> None:
        c = type(a)
        if c in (S.Pi, S.Sigma, S.W):
            self.check_type(ctx, a.dom)
            dom = self.eval(a.dom)
            ctx2, body, _ = self._open(ctx, a.cod, [dom])
            self.check_type(ctx2, body)
        elif c is S.Id:
            self.check_type(ctx, a.ty)
            ty = self.eval(a.ty)
            self.check(ctx, a.lhs, ty)
            self.check(ctx, a.rhs, ty)
        elif c in (S.Zero, S.One, S.U):
            pass
        elif c is S.Sum:
            self.check_type(ctx, a.left)
            self.check_type(ctx, a.right)
        elif c is S.El:
            self.check(ctx, a.code, V_U)
        elif c is S.Var and ctx.index.get(a.name) is S.TYPE:
            pass
        else:
            head, args = S.spine(a)
            if type(head) is S.Var and head.name not in ctx.index:
                d = self.env.get(head.name)
                if d is not None and d.is_family:
                    if len(args) != d.arity:
                        raise BadArity(
                            f"type family {d.name} expects {d.arity} arguments, got {len(args)}",
                            name=d.name,
                        )
                    self._check_params(ctx, d, args)
                    return
            raise NotAType(f"{_show(a)} is not a type", subterm=_show(a), cause="term in type position")

    # -- synthesis --------------------------------------------------------
    def infer(self, ctx: Ctx, t: S.Term):
        c = type(t)
        if c is S.Var:
            return self._infer_global(ctx, t, [])
        if c is S.App:
            head, args = S.spine(t)
            if type(head) is S.Var and head.name not in ctx.index and head.name in self.env:
                return self._infer_global(ctx, head, args)
            fty = self.infer(ctx, t.fn)
            if type(fty) is not VPi:
                raise TypeMismatch(
                    f"applying a term of type {_show(self.quote(fty))}",
                    expected="a function type",
                    got=_show(self.quote(fty)),
                    at=_show(t),
                )
            self.check(ctx, t.arg, fty.dom)
            return fty.cod(self.eval(t.arg))
        if c is S.Lam:
            if t.dom is None:
                raise CannotInfer("cannot infer the type of an unannotated lambda", term=_show(t))
            self.check_type(ctx, t.dom)
            dom = self.eval(t.dom)
            ctx2, body, (x,) = self._open(ctx, t.body, [dom])
            cod = self.infer(ctx2, body)
            name = x.ne.name
            cod_term = S.abstract([name], self.quote(cod))
            return VPi(dom, Clo(t.body.names, lambda v, ct=cod_term: self.ev.eval(ct.body, (v,))))
        if c is S.Split:
            sty = self.infer(ctx, t.scrut)
            if type(sty) is not VSigma:
                raise TypeMismatch("split of a non-pair", expected="a Sigma type", got=_show(self.quote(sty)))
            ctx_m, mbody, _ = self._open(ctx, t.motive, [sty])
            self.check_type(ctx_m, mbody)
            motive = self.ev._clo(t.motive, ())
            ctx_b, bbody, (x, y) = self._open(ctx, t.branch, [sty.dom, lambda x: sty.cod(x)])
            self.check(ctx_b, bbody, motive(VPair(x, y)))
            return motive(self.eval(t.scrut))
        if c is S.J:
            pty = self.infer(ctx, t.path)
            if type(pty) is not VId:
                raise TypeMismatch("J on a non-path", expected="an identity type", got=_show(self.quote(pty)))
            a = pty.ty
            self.check(ctx, t.lhs, a)
            self.check(ctx, t.rhs, a)
            self.expect_conv(pty.lhs, self.eval(t.lhs), t.lhs)
            self.expect_conv(pty.rhs, self.eval(t.rhs), t.rhs)
            ctx_m, mbody, _ = self._open(ctx, t.motive, [a, a, lambda x, y: VId(a, x, y)])
            self.check_type(ctx_m, mbody)
            motive = self.ev._clo(t.motive, ())
            ctx_b, bbody, (z,) = self._open(ctx, t.branch, [a])
            self.check(ctx_b, bbody, motive(z, z, VRefl(a, z)))
            return motive(self.eval(t.lhs), self.eval(t.rhs), self.eval(t.path))
        if c is S.WRec:
            wty = self.infer(ctx, t.tree)
            if type(wty) is not VW:
                raise TypeMismatch("wrec on a non-tree", expected="a W-type", got=_show(self.quote(wty)))
            ctx_m, mbody, _ = self._open(ctx, t.motive, [wty])
            self.check_type(ctx_m, mbody)
            motive = self.ev._clo(t.motive, ())
            ev = self.ev

            def kids_ty(x):
                return VPi(wty.cod(x), Clo(("u",), lambda u: wty))

            def ih_ty(x, y):
                return VPi(wty.cod(x), Clo(("u",), lambda u: motive(ev.vapp(y, u))))

            ctx_b, bbody, (x, y, _z) = self._open(ctx, t.branch, [wty.dom, kids_ty, ih_ty])
            self.check(ctx_b, bbody, motive(VSup(x, y)))
            return motive(self.eval(t.tree))
        if c is S.Case0:
            sty = self.infer(ctx, t.scrut)
            if type(sty) is not type(V_ZERO):
                raise TypeMismatch("case0 on a non-empty type", expected="Zero", got=_show(self.quote(sty)))
            ctx_m, mbody, _ = self._open(ctx, t.motive, [V_ZERO])
            self.check_type(ctx_m, mbody)
            return self.ev._clo(t.motive, ())(self.eval(t.scrut))
        if c is S.Rec1:
            sty = self.infer(ctx, t.scrut)
            if type(sty) is not type(V_ONE):
                raise TypeMismatch("rec1 on a non-unit type", expected="One", got=_show(self.quote(sty)))
            ctx_m, mbody, _ = self._open(ctx, t.motive, [V_ONE])
            self.check_type(ctx_m, mbody)
            motive = self.ev._clo(t.motive, ())
            self.check(ctx, t.branch, motive(V_STAR))
            return motive(self.eval(t.scrut))
        if c is S.CaseSum:
            sty = self.infer(ctx, t.scrut)
            if type(sty) is not VSum:
                raise TypeMismatch("case on a non-sum", expected="a sum type", got=_show(self.quote(sty)))
            ctx_m, mbody, _ = self._open(ctx, t.motive, [sty])
            self.check_type(ctx_m, mbody)
            motive = self.ev._clo(t.motive, ())
            ctx_l, lbody, (x,) = self._open(ctx, t.left, [sty.left])
            self.check(ctx_l, lbody, motive(VInl(x)))
            ctx_r, rbody, (y,) = self._open(ctx, t.right, [sty.right])
            self.check(ctx_r, rbody, motive(VInr(y)))
            return motive(self.eval(t.scrut))
        if c is S.Star:
            return V_ONE
        if c is S.Refl:
            self.check_type(ctx, t.ty)
            ty = self.eval(t.ty)
            self.check(ctx, t.val, ty)
            v = self.eval(t.val)
            return VId(ty, v, v)
        if c in (S.CPi, S.CSigma, S.CW):
            self.check(ctx, t.dom, V_U)
            dom = self.ev.vel(self.eval(t.dom))
            ctx2, body, _ = self._open(ctx, t.cod, [dom])
            self.check(ctx2, body, V_U)
            return V_U
        if c is S.CId:
            self.check(ctx, t.ty, V_U)
            ty = self.ev.vel(self.eval(t.ty))
            self.check(ctx, t.lhs, ty)
            self.check(ctx, t.rhs, ty)
            return V_U
        if c in (S.CZ, S.CO):
            return V_U
        if c is S.CPlus:
            self.check(ctx, t.left, V_U)
            self.check(ctx, t.right, V_U)
            return V_U
        if c is S.Ext:
            self._need_funext(t)
            fty = self.infer(ctx, t.f)
            if type(fty) is not VPi:
                raise TypeMismatch("ext of a non-function", expected="a Pi type", got=_show(self.quote(fty)))
            return self._check_ext_parts(ctx, t, fty)
        if c is S.ExtComp:
            self._need_funext(t)
            raise CannotInfer("extcomp needs an expected type", term=_show(t))
        if c is S.Bound:
            raise UnboundVariable("dangling bound variable", term=_show(t))
        if c in (S.Pair, S.Sup, S.Inl, S.Inr):
            raise CannotInfer(f"cannot infer the type of {c.__name__.lower()}; annotate it", term=_show(t))
        if c in _TYPE_FORMERS:
            raise NotATerm(
                f"{_show(t)} is a type, not a term" + ("; U has no code" if c is S.U else ""),
                term=_show(t),
            )
        raise CannotInfer(f"cannot infer {c.__name__}", term=_show(t))

    def _infer_global(self, ctx, head: S.Var, args):
        name = head.name
        if name in ctx.index:
            kind = ctx.index[name]
            if kind is S.TYPE:
                raise NotATerm(f"type parameter {name} used as a term", term=name)
            ty = kind
            rest = args
        else:
            d = self.env.get(name)
            if d is None:
                raise UnboundVariable(f"unbound variable {name}", name=name)
            if len(args) < d.arity:
                raise BadArity(f"{name} expects {d.arity} arguments, got {len(args)}", name=name)
            if d.is_family:
                raise NotATerm(f"{name} is a type family, not a term", term=name)
            sub = self._check_params(ctx, d, args[: d.arity])
            ty = self.eval(S.substitute_many(d.type, sub))
            rest = args[d.arity :]
        for a in rest:
            if type(ty) is not VPi:
                raise TypeMismatch(
                    "too many arguments", expected="a function type", got=_show(self.quote(ty)), at=name
                )
            self.check(ctx, a, ty.dom)
            ty = ty.cod(self.eval(a))
        return ty

    def _check_params(self, ctx, d: Definition, args):
        sub = {}
        for (pname, kind), a in zip(d.params, args):
            if isinstance(kind, S.TypeSort):
                self.check_type(ctx, a)
            else:
                self.check(ctx, a, self.eval(S.substitute_many(kind, sub)))
            sub[pname] = a
        return sub

    # -- checking ---------------------------------------------------------
    def check(self, ctx: Ctx, t: S.Term, ty) -> None:
        c = type(t)
        tc = type(ty)
        if c is S.Lam and tc is VPi:
            if t.dom is not None:
                self.check_type(ctx, t.dom)
                self.expect_conv(ty.dom, self.eval(t.dom), t)
            ctx2, body, (x,) = self._open(ctx, t.body, [ty.dom])
            self.check(ctx2, body, ty.cod(x))
            return
        if c is S.Pair and tc is VSigma:
            self.check(ctx, t.fst, ty.dom)
            self.check(ctx, t.snd, ty.cod(self.eval(t.fst)))
            return
        if c is S.Sup and tc is VW:
            self.check(ctx, t.label, ty.dom)
            kids_ty = VPi(ty.cod(self.eval(t.label)), Clo(("u",), lambda u: ty))
            self.check(ctx, t.kids, kids_ty)
            return
        if c in (S.Inl, S.Inr) and tc is VSum:
            self.check(ctx, t.val, ty.left if c is S.Inl else ty.right)
            return
        if c is S.Ext:
            self._need_funext(t)
            if tc is VId and type(ty.ty) is VPi:
                got = self._check_ext_parts(ctx, t, ty.ty)
                self.expect_conv(ty, got, t)
                return
        if c is S.ExtComp:
            self._need_funext(t)
            self._check_extcomp(ctx, t, ty)
            return
        if c in (S.Lam, S.Pair, S.Sup, S.Inl, S.Inr):
            raise TypeMismatch(
                f"{c.__name__.lower()} checked against {_show(self.quote(ty))}",
                expected=_show(self.quote(ty)),
                got=c.__name__,
                at=_show(t),
            )
        got = self.infer(ctx, t)
        self.expect_conv(ty, got, t)

    def _need_funext(self, t):
        if not self.flags.funext:
            raise MissingFlag(
                f"{type(t).__name__.lower()} requires the funext flag", flag="funext", term=_show(t)
            )

    def _check_ext_parts(self, ctx, t: S.Ext, fty):
        self.check(ctx, t.f, fty)
        self.check(ctx, t.g, fty)
        fv, gv = self.eval(t.f), self.eval(t.g)
        ev = self.ev
        hty = VPi(fty.dom, Clo(("x",), lambda x: VId(fty.cod(x), ev.vapp(fv, x), ev.vapp(gv, x))))
        self.check(ctx, t.h, hty)
        return VId(fty, fv, gv)

    def _check_extcomp(self, ctx, t: S.ExtComp, ty):
        bad = TypeMismatch(
            "extcomp must be checked against Id (Id (Pi A B) f f) (ext f f h) (refl f)",
            expected="an equation between ext and refl",
            got=_show(self.quote(ty)),
        )
        if type(ty) is not VId or type(ty.ty) is not VId or type(ty.ty.ty) is not VPi:
            raise bad
        pty = ty.ty.ty
        ctx2, body, (x,) = self._open(ctx, t.body, [pty.dom])
        self.check(ctx2, body, pty.cod(x))
        ev = self.ev
        clo = ev._clo(t.body, ())
        lam = VLam(clo)
        hv = VLam(Clo(t.body.names, lambda v: VRefl(pty.cod(v), clo(v))))
        self.expect_conv(ty.ty.lhs, lam, t)
        self.expect_conv(ty.ty.rhs, lam, t)
        self.expect_conv(ty.lhs, VNeutral(NExt(lam, lam, hv)), t)
        self.expect_conv(ty.rhs, VRefl(pty, lam), t)


def _show(t) -> str:
    if isinstance(t, S.Term):
        from ..frontend.printer import pretty

        try:
            return pretty(t)
        except Exception:
            return type(t).__name__
    return str(t)


def _guard(fn):
    try:
        return fn()
    except StuckTerm as e:
        raise TypeMismatch(f"ill-typed computation: {e}") from e
    except RecursionError:
        from .errors import FuelExhausted

        raise FuelExhausted("recursion too deep") from None
