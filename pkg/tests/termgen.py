"""Random well-typed terms and computation-rule instances for property tests.

Terms are built type-directed, so every output is well typed by
construction; tests still re-check them with the kernel.  Right-hand sides
of computation rules are computed by plain substitution, independently of
the evaluator.
"""

from __future__ import annotations

import itertools
import random

from ufkit import kernel as K
from ufkit import syntax as S

BOOL = S.Sum(S.ONE, S.ONE)


class Gen:
    def __init__(self, rng: random.Random):
        self.rng = rng
        self._ids = itertools.count()
        self.defs: list[K.Definition] = []

    def environment(self, flags: K.TheoryFlags = K.TheoryFlags()) -> K.Environment:
        """An environment holding every global the generator has introduced."""
        env = K.Environment((), flags)
        for d in self.defs:
            env = K.add_definition(env, d)
        return env

    def hoist(self, t, ty, ctx):
        """Name ``t`` as a global over ``ctx`` so that it can sit in inference position."""
        name = self.fresh("g")
        self.defs.append(K.Definition(name, tuple(ctx), ty, t))
        ref = S.Var(name)
        for x, _ in ctx:
            ref = S.App(ref, S.Var(x))
        return ref

    def fresh(self, hint="x"):
        return f"{hint}{next(self._ids)}"

    # -- codes and types --------------------------------------------------------
    def code(self, depth=2):
        r = self.rng
        if depth <= 0:
            return r.choice([S.CONE, S.CPlus(S.CONE, S.CONE)])
        pick = r.randrange(6)
        if pick == 0:
            return S.CONE
        if pick == 1:
            return S.CPlus(self.code(depth - 1), self.code(depth - 1))
        if pick == 2:
            x = self.fresh()
            dom = r.choice([S.CZERO, self.code(depth - 1)])
            return S.CPi(dom, S.abstract([x], self.code(depth - 1)))
        if pick == 3:
            x = self.fresh()
            return S.CSigma(self.code(depth - 1), S.abstract([x], self.code(depth - 1)))
        if pick == 4:
            a = self.code(depth - 1)
            t = self.term(S.El(a), [], depth - 1)
            return S.CId(a, t, t)
        return S.CW(S.CONE, S.abstract([self.fresh()], S.CZERO))

    def type(self, depth=2):
        """An inhabited closed type."""
        r = self.rng
        if depth <= 0:
            return r.choice([S.ONE, BOOL])
        pick = r.randrange(8)
        if pick == 0:
            return S.ONE
        if pick == 1:
            return S.Sum(self.type(depth - 1), self.type(depth - 1))
        if pick == 2:
            dom = r.choice([S.ZERO, self.type(depth - 1)])
            return S.arrow(dom, self.type(depth - 1))
        if pick == 3:
            return S.product(self.type(depth - 1), self.type(depth - 1))
        if pick == 4:
            a = self.type(depth - 1)
            t = self.term(a, [], depth - 1)
            return S.Id(a, t, t)
        if pick == 5:
            a = self.type(depth - 1)
            x = self.fresh()
            return S.pi(x, a, S.Id(a, S.Var(x), S.Var(x)))
        if pick == 6:
            return S.El(self.code(depth - 1))
        return BOOL

    # -- terms --------------------------------------------------------------------
    def term(self, ty, ctx, depth=2):
        r = self.rng
        here = [S.Var(n) for n, a in ctx if a == ty]
        if here and r.random() < 0.4:
            return r.choice(here)
        zeros = [n for n, a in ctx if a == S.ZERO]
        if zeros and r.random() < 0.3:
            return S.Case0(S.abstract([self.fresh("q")], ty), S.Var(r.choice(zeros)))
        if depth > 0 and r.random() < 0.25:
            return self.redex(ty, ctx, depth - 1)
        return self.canonical(ty, ctx, depth)

    def canonical(self, ty, ctx, depth):
        r = self.rng
        if isinstance(ty, S.El):
            return self.canonical_code(ty.code, ctx, depth)
        if isinstance(ty, S.One):
            return S.STAR
        if isinstance(ty, S.Sum):
            side = r.randrange(2)
            return S.Inl(self.term(ty.left, ctx, depth - 1)) if side == 0 else S.Inr(self.term(ty.right, ctx, depth - 1))
        if isinstance(ty, S.Pi):
            x = self.fresh()
            body = self.term(S.instantiate(ty.cod, [S.Var(x)]), ctx + [(x, ty.dom)], depth - 1)
            return S.lam(x, ty.dom, body)
        if isinstance(ty, S.Sigma):
            a = self.term(ty.dom, ctx, depth - 1)
            return S.Pair(a, self.term(S.instantiate(ty.cod, [a]), ctx, depth - 1))
        if isinstance(ty, S.Id):
            return S.Refl(ty.ty, ty.lhs)
        raise ValueError(f"no canonical inhabitant for {ty!r}")

    def canonical_code(self, c, ctx, depth):
        if isinstance(c, S.CO):
            return S.STAR
        if isinstance(c, S.CPlus):
            if self.rng.randrange(2):
                return S.Inl(self.term(S.El(c.left), ctx, depth - 1))
            return S.Inr(self.term(S.El(c.right), ctx, depth - 1))
        if isinstance(c, S.CPi):
            x = self.fresh()
            dom = S.El(c.dom)
            return S.lam(x, dom, self.term(S.El(S.instantiate(c.cod, [S.Var(x)])), ctx + [(x, dom)], depth - 1))
        if isinstance(c, S.CSigma):
            a = self.term(S.El(c.dom), ctx, depth - 1)
            return S.Pair(a, self.term(S.El(S.instantiate(c.cod, [a])), ctx, depth - 1))
        if isinstance(c, S.CId):
            return S.Refl(S.El(c.ty), c.lhs)
        if isinstance(c, S.CW):
            e = self.fresh("e")
            kid = S.lam(e, S.El(S.CZERO), S.Case0(S.abstract([self.fresh("q")], S.El(c)), S.Var(e)))
            return S.Sup(S.STAR, kid)
        raise ValueError(f"no canonical inhabitant for El {c!r}")

    def redex(self, ty, ctx, depth):
        """A term of type ``ty`` whose head is a computation-rule redex."""
        lhs, _ = self.rule_instance(ty, ctx, depth)
        return lhs

    # -- computation rules --------------------------------------------------------------
    RULES = ("pi", "sigma", "id", "w", "one", "inl", "inr")

    def rule_instance(self, ty, ctx, depth, rule=None):
        """``(lhs, rhs)`` of type ``ty`` with ``lhs`` a redex of ``rule`` and ``rhs`` its contractum."""
        r = self.rng
        rule = rule or r.choice(self.RULES)
        motive = S.abstract([self.fresh("m")], ty)
        if rule == "pi":
            a_ty = self.type(1)
            x = self.fresh()
            fn = S.lam(x, a_ty, self.term(ty, ctx + [(x, a_ty)], depth))
            a = self.term(a_ty, ctx, depth)
            return S.App(self.hoist(fn, S.arrow(a_ty, ty), ctx), a), S.instantiate(fn.body, [a])
        if rule == "sigma":
            A, B = self.type(1), self.type(1)
            x, y = self.fresh(), self.fresh()
            branch = S.abstract([x, y], self.term(ty, ctx + [(x, A), (y, B)], depth))
            a, b = self.term(A, ctx, depth), self.term(B, ctx, depth)
            pair = self.hoist(S.Pair(a, b), S.product(A, B), ctx)
            return S.Split(motive, branch, pair), S.instantiate(branch, [a, b])
        if rule == "id":
            A = self.type(1)
            z = self.fresh()
            branch = S.abstract([z], self.term(ty, ctx + [(z, A)], depth))
            a = self.term(A, ctx, depth)
            mot = S.abstract([self.fresh("m"), self.fresh("m"), self.fresh("m")], ty)
            return S.J(mot, branch, a, a, S.Refl(A, a)), S.instantiate(branch, [a])
        if rule == "w":
            # W over One with empty arity: every tree is sup(star, empty function)
            Wty = S.W(S.ONE, S.abstract([self.fresh()], S.ZERO))
            x, y, h = self.fresh(), self.fresh(), self.fresh()
            kids_ty = S.arrow(S.ZERO, Wty)
            rec_ty = S.arrow(S.ZERO, ty)
            branch = S.abstract([x, y, h], self.term(ty, ctx + [(x, S.ONE), (y, kids_ty), (h, rec_ty)], depth))
            e = self.fresh("e")
            kids = S.lam(e, S.ZERO, S.Case0(S.abstract([self.fresh("q")], Wty), S.Var(e)))
            mot = S.abstract([self.fresh("m")], ty)
            v = self.fresh("v")
            rec = S.lam(v, S.ZERO, S.WRec(mot, branch, S.App(kids, S.Var(v))))
            tree = self.hoist(S.Sup(S.STAR, kids), Wty, ctx)
            return S.WRec(mot, branch, tree), S.instantiate(branch, [S.STAR, kids, rec])
        if rule == "one":
            c = self.term(ty, ctx, depth)
            return S.Rec1(motive, c, S.STAR), c
        A, B = self.type(1), self.type(1)
        x, y = self.fresh(), self.fresh()
        left = S.abstract([x], self.term(ty, ctx + [(x, A)], depth))
        right = S.abstract([y], self.term(ty, ctx + [(y, B)], depth))
        if rule == "inl":
            a = self.term(A, ctx, depth)
            scrut = self.hoist(S.Inl(a), S.Sum(A, B), ctx)
            return S.CaseSum(motive, left, right, scrut), S.instantiate(left, [a])
        b = self.term(B, ctx, depth)
        scrut = self.hoist(S.Inr(b), S.Sum(A, B), ctx)
        return S.CaseSum(motive, left, right, scrut), S.instantiate(right, [b])

    CODE_RULES = ("pi", "sg", "id", "z", "o", "plus", "w")

    def code_equation(self, rule):
        """``(El c, decoded)`` for one of the seven code formers."""
        a, b = self.code(1), self.code(1)
        x = self.fresh()
        if rule == "pi":
            return S.El(S.CPi(a, S.abstract([x], b))), S.pi(x, S.El(a), S.El(b))
        if rule == "sg":
            return S.El(S.CSigma(a, S.abstract([x], b))), S.sigma(x, S.El(a), S.El(b))
        if rule == "id":
            t = self.term(S.El(a), [], 1)
            return S.El(S.CId(a, t, t)), S.Id(S.El(a), t, t)
        if rule == "z":
            return S.El(S.CZERO), S.ZERO
        if rule == "o":
            return S.El(S.CONE), S.ONE
        if rule == "plus":
            return S.El(S.CPlus(a, b)), S.Sum(S.El(a), S.El(b))
        return S.El(S.CW(a, S.abstract([x], b))), S.wtype(x, S.El(a), S.El(b))


def typed_terms(seed: int, depth: int = 2):
    """``(gen, type, term)``; ``gen.environment()`` holds the globals the term uses."""
    g = Gen(random.Random(seed))
    ty = g.type(depth)
    return g, ty, g.term(ty, [], depth)
