"""The shipped prelude: h-isomorphisms, transport and univalence."""

from __future__ import annotations

from importlib import resources

from .. import syntax as S
from .env import Definition, Environment, TheoryFlags

UVT_SOURCE = "axiom uvt : isUnivalent U (fun a => a)\n"


def prelude_source() -> str:
    return resources.files("ufkit.data").joinpath("prelude.uf").read_text(encoding="utf-8")


def build_prelude(flags: TheoryFlags) -> Environment:
    from ..frontend.parser import CheckDecl, DefDecl, parse
    from . import add_definition, check

    env = Environment((), flags)
    src = prelude_source()
    if flags.univalence_axiom:
        src += "\n" + UVT_SOURCE
    for decl in parse(src).decls:
        if isinstance(decl, DefDecl):
            env = add_definition(env, Definition(decl.name, decl.params, decl.type, decl.body))
        elif isinstance(decl, CheckDecl):
            check(env, S.Context(), decl.term, decl.type)
    return env
