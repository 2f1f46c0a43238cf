"""Pretty printer for terms in the surface syntax understood by the parser."""

from __future__ import annotations

from .. import syntax as S
from .lexer import KEYWORDS

# precedence levels
EXPR, ARROW, SUM, PROD, CPLUS, APP, ATOM = range(7)

_CONSTANTS = {
    S.Zero: "Zero",
    S.One: "One",
    S.Star: "star",
    S.U: "U",
    S.CZ: "z",
    S.CO: "o",
    S.TypeSort: "Type",
}


def pretty(t: S.Term) -> str:
    return _Printer(S.free_vars(t)).show(t, [], EXPR)


class _Printer:
    def __init__(self, free):
        self.free = set(free)

    def fresh(self, hint, stack):
        base = hint if hint and hint != "_" else "x"
        if base in KEYWORDS:
            base = base + "'"
        name = base
        taken = self.free.union(stack)
        while name in taken or name in KEYWORDS:
            name += "'"
        return name

    def bind(self, scope: S.Scope, stack, used_check=True):
        names = []
        st = list(stack)
        k = scope.arity
        for i, hint in enumerate(scope.names):
            # '_' survives only for binders that are never referenced
            if hint == "_" and used_check and not S.occurs_bound(scope.body, k - 1 - i):
                n = "_"
            else:
                n = self.fresh(hint, st)
            names.append(n)
            st.append(n)
        return names, st

    def scope(self, scope: S.Scope, stack):
        names, st = self.bind(scope, stack)
        head = " ".join(names)
        body = self.show(scope.body, st, EXPR)
        return f"({head}. {body})" if head else f"(. {body})"

    def show(self, t, stack, prec):
        s, p = self.render(t, stack)
        return f"({s})" if p < prec else s

    def render(self, t, stack):
        c = type(t)
        sh = self.show
        if c is S.Var:
            return t.name, ATOM
        if c is S.Bound:
            if t.index < len(stack):
                return stack[-1 - t.index], ATOM
            return f"#{t.index}", ATOM
        if c in _CONSTANTS:
            return _CONSTANTS[c], ATOM
        if c is S.Lam:
            names, st = self.bind(t.body, stack)
            body = sh(t.body.body, st, EXPR)
            if t.dom is None:
                return f"fun {names[0]} => {body}", EXPR
            return f"fun ({names[0]} : {sh(t.dom, stack, EXPR)}) => {body}", EXPR
        if c in (S.Pi, S.Sigma, S.W):
            unused = not S.occurs_bound(t.cod.body, 0)
            if unused and c is S.Pi:
                return f"{sh(t.dom, stack, SUM)} -> {sh(S.shift(t.cod.body, -1), stack, ARROW)}", ARROW
            if unused and c is S.Sigma:
                return f"{sh(t.dom, stack, CPLUS)} * {sh(S.shift(t.cod.body, -1), stack, PROD)}", PROD
            names, st = self.bind(t.cod, stack, used_check=False)
            kw = {S.Pi: "Pi", S.Sigma: "Sg", S.W: "W"}[c]
            return f"{kw} ({names[0]} : {sh(t.dom, stack, EXPR)}), {sh(t.cod.body, st, EXPR)}", EXPR
        if c is S.Sum:
            return f"{sh(t.left, stack, PROD)} + {sh(t.right, stack, SUM)}", SUM
        if c is S.CPlus:
            return f"{sh(t.left, stack, APP)} ++ {sh(t.right, stack, CPLUS)}", CPLUS
        if c is S.App:
            return f"{sh(t.fn, stack, APP)} {sh(t.arg, stack, ATOM)}", APP
        if c is S.Pair:
            return f"({sh(t.fst, stack, EXPR)}, {sh(t.snd, stack, EXPR)})", ATOM
        kw = _FORMS.get(c)
        if kw is None:
            raise TypeError(f"cannot print {c.__name__}")
        parts = [kw[0]]
        for fname in kw[1:]:
            v = getattr(t, fname)
            if isinstance(v, S.Scope):
                parts.append(self.scope(v, stack))
            else:
                parts.append(sh(v, stack, ATOM))
        return " ".join(parts), APP


_FORMS = {
    S.El: ("El", "code"),
    S.Id: ("Id", "ty", "lhs", "rhs"),
    S.Refl: ("refl", "ty", "val"),
    S.Inl: ("inl", "val"),
    S.Inr: ("inr", "val"),
    S.Sup: ("sup", "label", "kids"),
    S.J: ("J", "motive", "branch", "lhs", "rhs", "path"),
    S.Split: ("split", "motive", "branch", "scrut"),
    S.WRec: ("wrec", "motive", "branch", "tree"),
    S.Case0: ("case0", "motive", "scrut"),
    S.Rec1: ("rec1", "motive", "branch", "scrut"),
    S.CaseSum: ("case", "motive", "left", "right", "scrut"),
    S.CPi: ("pi", "dom", "cod"),
    S.CSigma: ("sg", "dom", "cod"),
    S.CW: ("w", "dom", "cod"),
    S.CId: ("id", "ty", "lhs", "rhs"),
    S.Ext: ("ext", "f", "g", "h"),
    S.ExtComp: ("extcomp", "body"),
}
