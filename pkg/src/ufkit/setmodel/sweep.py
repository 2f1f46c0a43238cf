"""Checking a source file's equalities in the finite-set model.

Every declaration that checks also yields equalities: a term equals its
normal form, and an inhabited identity type relates equal elements.  The
sweep interprets both sides of each and compares them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .. import kernel as K
from .. import syntax as S
from ..frontend.parser import CheckDecl, DefDecl, NormalizeDecl, parse
from ..frontend.session import Session, Settings
from .hf import BudgetExceeded
from .interpret import Unsupported, interpret
from .universe import SetUniverse


@dataclass
class SweepReport:
    agree: int = 0
    disagree: list = field(default_factory=list)
    skipped: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.disagree


def _equalities(env, decl):
    """``(ctx, lhs, rhs, type)`` judgements implied by a successful declaration."""
    if isinstance(decl, DefDecl):
        if decl.body is None or isinstance(decl.type, S.TypeSort):
            return []
        if any(isinstance(kind, S.TypeSort) for _, kind in decl.params):
            return []
        ctx, t, ty = S.Context(tuple(decl.params)), decl.body, decl.type
    elif isinstance(decl, CheckDecl):
        ctx, t, ty = S.Context(), decl.term, decl.type
    elif isinstance(decl, NormalizeDecl):
        ctx, t = S.Context(), decl.term
        ty = K.infer(env, ctx, t)
    else:
        return []
    out = [S.TermEqJ(ctx, t, K.normalize(env, ctx, t), ty)]
    if isinstance(ty, S.Id):
        out.append(S.TermEqJ(ctx, ty.lhs, ty.rhs, ty.ty))
    return out


def soundness_sweep(source: str, M: SetUniverse, settings: Settings = Settings()) -> SweepReport:
    """Run ``source`` and interpret both sides of every equality it derives.

    Judgements the model cannot evaluate within ``M``'s budgets (a context
    quantifying over the universe, say) are listed in ``skipped``.
    """
    rep = SweepReport()
    session = Session(settings)
    for decl in parse(source).decls:
        if session.run_decl(decl).status != "ok":
            continue
        for j in _equalities(session.env, decl):
            try:
                same = interpret(session.env, j, M)
            except (BudgetExceeded, Unsupported) as e:
                rep.skipped.append((decl.label, f"{type(e).__name__}: {e}"))
                continue
            if same:
                rep.agree += 1
            else:
                rep.disagree.append(decl.label)
    return rep
