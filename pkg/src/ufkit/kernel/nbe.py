"""Normalization by evaluation.

Terms evaluate to weak values whose binders are Python closures; readback
turns values into beta/iota-normal terms.  De Bruijn levels name the fresh
variables introduced under binders during readback.
"""

from __future__ import annotations

import sys

from .. import syntax as S
from .errors import FuelExhausted, StuckTerm


class Value:
    __slots__ = ()


class Clo:
    """A binder body: ``fn`` takes one value per bound name."""

    __slots__ = ("names", "fn")

    def __init__(self, names, fn):
        self.names = tuple(names)
        self.fn = fn

    def __call__(self, *args):
        return self.fn(*args)


def _value(name, attrs):
    def __init__(self, *args):
        for a, v in zip(attrs, args):
            object.__setattr__(self, a, v)

    def __repr__(self):
        return f"{name}({', '.join(repr(getattr(self, a)) for a in attrs)})"

    return type(name, (Value,), {"__slots__": attrs, "__init__": __init__, "__repr__": __repr__})


VPi = _value("VPi", ("dom", "cod"))
VSigma = _value("VSigma", ("dom", "cod"))
VW = _value("VW", ("dom", "cod"))
VId = _value("VId", ("ty", "lhs", "rhs"))
VSum = _value("VSum", ("left", "right"))
VZero = _value("VZero", ())
VOne = _value("VOne", ())
VU = _value("VU", ())
VLam = _value("VLam", ("body",))
VPair = _value("VPair", ("fst", "snd"))
VRefl = _value("VRefl", ("ty", "val"))
VSup = _value("VSup", ("label", "kids"))
VStar = _value("VStar", ())
VInl = _value("VInl", ("val",))
VInr = _value("VInr", ("val",))
VCPi = _value("VCPi", ("dom", "cod"))
VCSigma = _value("VCSigma", ("dom", "cod"))
VCW = _value("VCW", ("dom", "cod"))
VCId = _value("VCId", ("ty", "lhs", "rhs"))
VCZ = _value("VCZ", ())
VCO = _value("VCO", ())
VCPlus = _value("VCPlus", ("left", "right"))
VNeutral = _value("VNeutral", ("ne",))

# neutral spines
NVar = _value("NVar", ("name",))
NLevel = _value("NLevel", ("level",))
NApp = _value("NApp", ("fn", "arg"))
NSplit = _value("NSplit", ("motive", "branch", "scrut"))
NJ = _value("NJ", ("motive", "branch", "lhs", "rhs", "path"))
NWRec = _value("NWRec", ("motive", "branch", "tree"))
NCase0 = _value("NCase0", ("motive", "scrut"))
NRec1 = _value("NRec1", ("motive", "branch", "scrut"))
NCaseSum = _value("NCaseSum", ("motive", "left", "right", "scrut"))
NEl = _value("NEl", ("code",))
NExt = _value("NExt", ("f", "g", "h"))
NExtComp = _value("NExtComp", ("body",))

V_ZERO, V_ONE, V_U, V_STAR, V_CZ, V_CO = VZero(), VOne(), VU(), VStar(), VCZ(), VCO()


def vvar(name):
    return VNeutral(NVar(name))


class Fuel:
    def __init__(self, budget: int):
        self.budget = budget
        self.left = budget

    def tick(self, n: int = 1):
        self.left -= n
        if self.left < 0:
            raise FuelExhausted(f"normalization exceeded {self.budget} steps", budget=self.budget)


class Evaluator:
    """Evaluation and readback relative to a set of global definitions.

    ``defs`` maps a global name to a zero-argument callable producing its
    (closed) body term, already abstracted over its parameters; names without
    a body are treated as neutral constants.
    """

    def __init__(self, defs=None, fuel: Fuel | None = None, eta: bool = False):
        self.defs = defs or {}
        self.fuel = fuel or Fuel(10**6)
        self.eta = eta
        self._cache = {}

    # -- evaluation -------------------------------------------------------
    def eval(self, t: S.Term, rho: tuple = ()) -> Value:
        try:
            return self._eval(t, rho)
        except RecursionError:
            raise FuelExhausted("evaluation recursion too deep", budget=self.fuel.budget) from None

    def _global(self, name):
        v = self._cache.get(name)
        if v is None:
            body = self.defs.get(name)
            if body is None:
                v = vvar(name)
            else:
                self.fuel.tick()
                v = self._eval(body, ())
            self._cache[name] = v
        return v

    def _clo(self, scope: S.Scope, rho):
        body = scope.body
        ev = self._eval
        k = scope.arity
        if k == 1:
            return Clo(scope.names, lambda a: ev(body, rho + (a,)))
        return Clo(scope.names, lambda *a: ev(body, rho + a[:k]))

    def _eval(self, t, rho):
        ev = self._eval
        c = type(t)
        if c is S.Bound:
            return rho[-1 - t.index]
        if c is S.Var:
            return self._global(t.name)
        if c is S.App:
            return self.vapp(ev(t.fn, rho), ev(t.arg, rho))
        if c is S.Lam:
            return VLam(self._clo(t.body, rho))
        if c is S.Pi:
            return VPi(ev(t.dom, rho), self._clo(t.cod, rho))
        if c is S.Sigma:
            return VSigma(ev(t.dom, rho), self._clo(t.cod, rho))
        if c is S.W:
            return VW(ev(t.dom, rho), self._clo(t.cod, rho))
        if c is S.Pair:
            return VPair(ev(t.fst, rho), ev(t.snd, rho))
        if c is S.Split:
            return self.vsplit(self._clo(t.motive, rho), self._clo(t.branch, rho), ev(t.scrut, rho))
        if c is S.Id:
            return VId(ev(t.ty, rho), ev(t.lhs, rho), ev(t.rhs, rho))
        if c is S.Refl:
            return VRefl(ev(t.ty, rho), ev(t.val, rho))
        if c is S.J:
            return self.vj(
                self._clo(t.motive, rho),
                self._clo(t.branch, rho),
                ev(t.lhs, rho),
                ev(t.rhs, rho),
                ev(t.path, rho),
            )
        if c is S.Sup:
            return VSup(ev(t.label, rho), ev(t.kids, rho))
        if c is S.WRec:
            return self.vwrec(self._clo(t.motive, rho), self._clo(t.branch, rho), ev(t.tree, rho))
        if c is S.Zero:
            return V_ZERO
        if c is S.One:
            return V_ONE
        if c is S.Star:
            return V_STAR
        if c is S.U:
            return V_U
        if c is S.Case0:
            s = ev(t.scrut, rho)
            if isinstance(s, VNeutral):
                return VNeutral(NCase0(self._clo(t.motive, rho), s.ne))
            raise StuckTerm("case0 applied to a canonical value")
        if c is S.Rec1:
            return self.vrec1(self._clo(t.motive, rho), ev(t.branch, rho), ev(t.scrut, rho))
        if c is S.Sum:
            return VSum(ev(t.left, rho), ev(t.right, rho))
        if c is S.Inl:
            return VInl(ev(t.val, rho))
        if c is S.Inr:
            return VInr(ev(t.val, rho))
        if c is S.CaseSum:
            return self.vcase(
                self._clo(t.motive, rho),
                self._clo(t.left, rho),
                self._clo(t.right, rho),
                ev(t.scrut, rho),
            )
        if c is S.El:
            return self.vel(ev(t.code, rho))
        if c is S.CPi:
            return VCPi(ev(t.dom, rho), self._clo(t.cod, rho))
        if c is S.CSigma:
            return VCSigma(ev(t.dom, rho), self._clo(t.cod, rho))
        if c is S.CW:
            return VCW(ev(t.dom, rho), self._clo(t.cod, rho))
        if c is S.CId:
            return VCId(ev(t.ty, rho), ev(t.lhs, rho), ev(t.rhs, rho))
        if c is S.CZ:
            return V_CZ
        if c is S.CO:
            return V_CO
        if c is S.CPlus:
            return VCPlus(ev(t.left, rho), ev(t.right, rho))
        if c is S.Ext:
            return VNeutral(NExt(ev(t.f, rho), ev(t.g, rho), ev(t.h, rho)))
        if c is S.ExtComp:
            return VNeutral(NExtComp(self._clo(t.body, rho)))
        raise StuckTerm(f"cannot evaluate {c.__name__}")

    # -- eliminators on values -----------------------------------------------
    def vapp(self, f, a):
        if type(f) is VLam:
            self.fuel.tick()
            return f.body(a)
        if type(f) is VNeutral:
            return VNeutral(NApp(f.ne, a))
        raise StuckTerm("application of a non-function")

    def vsplit(self, motive, branch, s):
        if type(s) is VPair:
            self.fuel.tick()
            return branch(s.fst, s.snd)
        if type(s) is VNeutral:
            return VNeutral(NSplit(motive, branch, s.ne))
        raise StuckTerm("split applied to a non-pair")

    def vj(self, motive, branch, a, b, p):
        if type(p) is VRefl:
            self.fuel.tick()
            return branch(p.val)
        if type(p) is VNeutral:
            return VNeutral(NJ(motive, branch, a, b, p.ne))
        raise StuckTerm("J applied to a non-path")

    def vwrec(self, motive, branch, t):
        if type(t) is VSup:
            self.fuel.tick()
            kids = t.kids
            rec = VLam(Clo(("u",), lambda u: self.vwrec(motive, branch, self.vapp(kids, u))))
            return branch(t.label, kids, rec)
        if type(t) is VNeutral:
            return VNeutral(NWRec(motive, branch, t.ne))
        raise StuckTerm("wrec applied to a non-tree")

    def vrec1(self, motive, d, e):
        if type(e) is VStar:
            self.fuel.tick()
            return d
        if type(e) is VNeutral:
            return VNeutral(NRec1(motive, d, e.ne))
        raise StuckTerm("rec1 applied to a non-unit value")

    def vcase(self, motive, left, right, s):
        if type(s) is VInl:
            self.fuel.tick()
            return left(s.val)
        if type(s) is VInr:
            self.fuel.tick()
            return right(s.val)
        if type(s) is VNeutral:
            return VNeutral(NCaseSum(motive, left, right, s.ne))
        raise StuckTerm("case applied to a non-injection")

    def vel(self, a):
        c = type(a)
        if c is VCPi:
            self.fuel.tick()
            cod = a.cod
            return VPi(self.vel(a.dom), Clo(cod.names, lambda x: self.vel(cod(x))))
        if c is VCSigma:
            self.fuel.tick()
            cod = a.cod
            return VSigma(self.vel(a.dom), Clo(cod.names, lambda x: self.vel(cod(x))))
        if c is VCW:
            self.fuel.tick()
            cod = a.cod
            return VW(self.vel(a.dom), Clo(cod.names, lambda x: self.vel(cod(x))))
        if c is VCId:
            self.fuel.tick()
            return VId(self.vel(a.ty), a.lhs, a.rhs)
        if c is VCZ:
            self.fuel.tick()
            return V_ZERO
        if c is VCO:
            self.fuel.tick()
            return V_ONE
        if c is VCPlus:
            self.fuel.tick()
            return VSum(self.vel(a.left), self.vel(a.right))
        if c is VNeutral:
            return VNeutral(NEl(a.ne))
        raise StuckTerm("El applied to a non-code")

    # -- readback ---------------------------------------------------------------
    def quote(self, v: Value, level: int = 0) -> S.Term:
        try:
            return self._quote(v, level)
        except RecursionError:
            raise FuelExhausted("readback recursion too deep", budget=self.fuel.budget) from None

    def _scope(self, clo: Clo, level: int) -> S.Scope:
        k = len(clo.names)
        args = [VNeutral(NLevel(level + i)) for i in range(k)]
        return S.Scope(clo.names, self._quote(clo(*args), level + k))

    def _quote(self, v, level):
        q = self._quote
        c = type(v)
        if c is VNeutral:
            return self._quote_ne(v.ne, level)
        if c is VLam:
            body = self._scope(v.body, level)
            if self.eta:
                b = body.body
                if type(b) is S.App and b.arg == S.Bound(0) and not S.occurs_bound(b.fn, 0):
                    return S.shift(b.fn, -1)
            return S.Lam(None, body)
        if c is VPi:
            return S.Pi(q(v.dom, level), self._scope(v.cod, level))
        if c is VSigma:
            return S.Sigma(q(v.dom, level), self._scope(v.cod, level))
        if c is VW:
            return S.W(q(v.dom, level), self._scope(v.cod, level))
        if c is VId:
            return S.Id(q(v.ty, level), q(v.lhs, level), q(v.rhs, level))
        if c is VSum:
            return S.Sum(q(v.left, level), q(v.right, level))
        if c is VZero:
            return S.ZERO
        if c is VOne:
            return S.ONE
        if c is VU:
            return S.UNIV
        if c is VPair:
            return S.Pair(q(v.fst, level), q(v.snd, level))
        if c is VRefl:
            return S.Refl(q(v.ty, level), q(v.val, level))
        if c is VSup:
            return S.Sup(q(v.label, level), q(v.kids, level))
        if c is VStar:
            return S.STAR
        if c is VInl:
            return S.Inl(q(v.val, level))
        if c is VInr:
            return S.Inr(q(v.val, level))
        if c is VCPi:
            return S.CPi(q(v.dom, level), self._scope(v.cod, level))
        if c is VCSigma:
            return S.CSigma(q(v.dom, level), self._scope(v.cod, level))
        if c is VCW:
            return S.CW(q(v.dom, level), self._scope(v.cod, level))
        if c is VCId:
            return S.CId(q(v.ty, level), q(v.lhs, level), q(v.rhs, level))
        if c is VCZ:
            return S.CZERO
        if c is VCO:
            return S.CONE
        if c is VCPlus:
            return S.CPlus(q(v.left, level), q(v.right, level))
        raise StuckTerm(f"cannot read back {c.__name__}")

    def _quote_ne(self, n, level):
        q = self._quote
        c = type(n)
        if c is NVar:
            return S.Var(n.name)
        if c is NLevel:
            return S.Bound(level - 1 - n.level)
        if c is NApp:
            return S.App(self._quote_ne(n.fn, level), q(n.arg, level))
        if c is NSplit:
            return S.Split(
                self._scope(n.motive, level), self._scope(n.branch, level), self._quote_ne(n.scrut, level)
            )
        if c is NJ:
            return S.J(
                self._scope(n.motive, level),
                self._scope(n.branch, level),
                q(n.lhs, level),
                q(n.rhs, level),
                self._quote_ne(n.path, level),
            )
        if c is NWRec:
            return S.WRec(
                self._scope(n.motive, level), self._scope(n.branch, level), self._quote_ne(n.tree, level)
            )
        if c is NCase0:
            return S.Case0(self._scope(n.motive, level), self._quote_ne(n.scrut, level))
        if c is NRec1:
            return S.Rec1(self._scope(n.motive, level), q(n.branch, level), self._quote_ne(n.scrut, level))
        if c is NCaseSum:
            return S.CaseSum(
                self._scope(n.motive, level),
                self._scope(n.left, level),
                self._scope(n.right, level),
                self._quote_ne(n.scrut, level),
            )
        if c is NEl:
            return S.El(self._quote_ne(n.code, level))
        if c is NExt:
            return S.Ext(q(n.f, level), q(n.g, level), q(n.h, level))
        if c is NExtComp:
            return S.ExtComp(self._scope(n.body, level))
        raise StuckTerm(f"cannot read back neutral {c.__name__}")

    def normal_form(self, t: S.Term) -> S.Term:
        return self.quote(self.eval(t))


if sys.getrecursionlimit() < 20000:
    sys.setrecursionlimit(20000)
