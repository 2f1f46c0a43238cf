"""The syntactic contextual category: contexts and substitutions modulo defeq."""

from __future__ import annotations

from dataclasses import dataclass

from .. import kernel as K
from .. import syntax as S
from .core import ContextualCategory


@dataclass(frozen=True)
class SynMor:
    """A context morphism ``src → tgt``: one term (over ``src``) per entry of ``tgt``."""

    src: S.Context
    tgt: S.Context
    terms: tuple


def _sub(ctx: S.Context, terms) -> dict:
    return {name: t for (name, _), t in zip(ctx.entries, terms)}


class SyntacticCC(ContextualCategory):
    def __init__(self, env: K.Environment):
        self.env = env

    def terminal(self):
        return S.Context()

    def level(self, X):
        return len(X)

    def ft(self, X):
        return S.Context(X.entries[:-1])

    def proj(self, X):
        return SynMor(X, self.ft(X), tuple(S.Var(n) for n, _ in X.entries[:-1]))

    def identity(self, X):
        return SynMor(X, X, tuple(S.Var(n) for n, _ in X.entries))

    def _fresh(self, ctx: S.Context, hint: str) -> str:
        taken = set(ctx.names()) | set(self.env.names())
        name = hint
        while name in taken:
            name += "'"
        return name

    def pullback(self, f: SynMor, X):
        name, ty = X.entries[-1]
        y = self._fresh(f.src, name)
        return f.src.extend(y, S.substitute_many(ty, _sub(f.tgt, f.terms)))

    def q(self, f: SynMor, X):
        fX = self.pullback(f, X)
        return SynMor(fX, X, f.terms + (S.Var(fX.entries[-1][0]),))

    def compose(self, f: SynMor, g: SynMor):
        sub = _sub(g.tgt, g.terms)
        return SynMor(g.src, f.tgt, tuple(S.substitute_many(t, sub) for t in f.terms))

    def dom(self, f):
        return f.src

    def cod(self, f):
        return f.tgt

    def check_morphism(self, f: SynMor) -> None:
        """Each ``f_i`` has type ``A_i[f_1, ..., f_{i-1}]`` in ``src``."""
        sub = {}
        for (name, ty), t in zip(f.tgt.entries, f.terms):
            K.check(self.env, f.src, t, S.substitute_many(ty, sub))
            sub[name] = t

    def hom_eq(self, f: SynMor, g: SynMor) -> bool:
        """Componentwise definitional equality.

        Morphisms built by composition are well typed by substitution but may
        contain redexes the bidirectional checker cannot synthesize, so the
        comparison is by normal forms; use :meth:`check_morphism` to validate
        the inputs.
        """
        if not (self.ob_eq(f.src, g.src) and self.ob_eq(f.tgt, g.tgt)):
            return False
        # compare over f's source, renaming g's source variables onto it
        ren = {m: S.Var(n) for (n, _), (m, _) in zip(f.src.entries, g.src.entries)}
        return all(
            K.convertible(self.env, f.src, a, S.substitute_many(b, ren)) for a, b in zip(f.terms, g.terms)
        )

    def ob_eq(self, X, Y) -> bool:
        if len(X) != len(Y):
            return False
        ren = {}
        prefix = S.Context()
        for (n, a), (m, b) in zip(X.entries, Y.entries):
            b = S.substitute_many(b, ren)
            if not K.convertible(self.env, prefix, a, b):
                return False
            ren[m] = S.Var(n)
            prefix = prefix.extend(n, a)
        return True


def syntactic_cc(env: K.Environment) -> SyntacticCC:
    return SyntacticCC(env)
