"""Typechecking kernel: judgements of the type theory decided by normalization."""

from __future__ import annotations

from typing import Optional

from .. import syntax as S
from .check import Checker, Ctx, default_fuel
from .env import Definition, Environment, TheoryFlags
from .errors import (
    BadArity,
    CannotInfer,
    DuplicateVariable,
    FuelExhausted,
    IllFormedType,
    KernelError,
    MissingFlag,
    NotAType,
    NotATerm,
    StuckTerm,
    TypeMismatch,
    UnboundVariable,
)

__all__ = [
    "Checker", "Definition", "Environment", "TheoryFlags", "KernelError", "BadArity",
    "CannotInfer", "DuplicateVariable", "FuelExhausted", "IllFormedType", "MissingFlag",
    "NotAType", "NotATerm", "StuckTerm", "TypeMismatch", "UnboundVariable",
    "check_context", "check_type", "infer", "check", "normalize", "normalize_type", "defeq", "convertible",
    "defeq_types", "add_definition", "load_prelude", "default_fuel",
]

_EMPTY = S.Context()


def _ctx(ck: Checker, gamma) -> Ctx:
    return ck.check_context(gamma if gamma is not None else _EMPTY)


def check_context(env: Environment, gamma: S.Context, fuel: Optional[int] = None) -> None:
    Checker(env, fuel).check_context(gamma)


def check_type(env: Environment, gamma: S.Context, a: S.Term, fuel: Optional[int] = None) -> None:
    ck = Checker(env, fuel)
    ck.check_type(_ctx(ck, gamma), a)


def infer(env: Environment, gamma: S.Context, t: S.Term, fuel: Optional[int] = None) -> S.Term:
    ck = Checker(env, fuel)
    return ck.quote(ck.infer(_ctx(ck, gamma), t))


def check(env: Environment, gamma: S.Context, t: S.Term, a: S.Term, fuel: Optional[int] = None) -> None:
    ck = Checker(env, fuel)
    ctx = _ctx(ck, gamma)
    ck.check_type(ctx, a)
    ck.check(ctx, t, ck.eval(a))


def normalize(env: Environment, gamma: S.Context, t: S.Term, fuel: Optional[int] = None) -> S.Term:
    """Beta/iota/delta normal form; with ``eta_pi`` the result is also eta-short."""
    ck = Checker(env, fuel)
    _ctx(ck, gamma)
    return ck.ev.normal_form(t)


normalize_type = normalize


def defeq(env: Environment, gamma: S.Context, t: S.Term, u: S.Term, a: S.Term, fuel: Optional[int] = None) -> bool:
    ck = Checker(env, fuel)
    ctx = _ctx(ck, gamma)
    ck.check_type(ctx, a)
    ty = ck.eval(a)
    ck.check(ctx, t, ty)
    ck.check(ctx, u, ty)
    return ck.conv(ck.eval(t), ck.eval(u))


def convertible(env: Environment, gamma: S.Context, t: S.Term, u: S.Term, fuel: Optional[int] = None) -> bool:
    """Normal-form comparison without typechecking either side.

    For terms already known to be well typed (e.g. produced by substituting
    well-typed terms into well-typed terms) this agrees with :func:`defeq`,
    and it also accepts redexes whose scrutinee is a bare constructor.
    ``gamma`` is not checked: free variables evaluate to neutral terms.
    """
    ck = Checker(env, fuel)
    return ck.conv(ck.eval(t), ck.eval(u))


def defeq_types(env: Environment, gamma: S.Context, a: S.Term, b: S.Term, fuel: Optional[int] = None) -> bool:
    ck = Checker(env, fuel)
    ctx = _ctx(ck, gamma)
    ck.check_type(ctx, a)
    ck.check_type(ctx, b)
    return ck.conv(ck.eval(a), ck.eval(b))


def add_definition(env: Environment, d: Definition, fuel: Optional[int] = None) -> Environment:
    """Check ``d`` against ``env`` and return the extended environment."""
    if d.name in env:
        raise DuplicateVariable(f"{d.name} is already defined", name=d.name)
    ck = Checker(env, fuel)
    ctx = ck.check_context(S.Context(d.params))
    if d.is_family:
        if d.body is not None:
            ck.check_type(ctx, d.body)
    else:
        ck.check_type(ctx, d.type)
        if d.body is not None:
            ck.check(ctx, d.body, ck.eval(d.type))
    return env.extended(d)


def load_prelude(flags: TheoryFlags = TheoryFlags(eta_pi=True, funext=True, univalence_axiom=True)) -> Environment:
    from .prelude import build_prelude

    return build_prelude(flags)
