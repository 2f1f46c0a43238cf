"""Theory flags, definitions and environments."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional

from .. import syntax as S


@dataclass(frozen=True)
class TheoryFlags:
    eta_pi: bool = True
    funext: bool = False
    univalence_axiom: bool = False

    def with_(self, **kw) -> "TheoryFlags":
        return replace(self, **kw)


@dataclass(frozen=True)
class Definition:
    """A global constant.

    ``params`` is a telescope of ``(name, kind)`` where ``kind`` is either a type
    term or ``syntax.TYPE`` for a schematic type parameter.  ``type`` is the
    result type, or ``syntax.TYPE`` when the definition is a type family.  An
    axiom has ``body=None``.
    """

    name: str
    params: tuple = ()
    type: S.Term = S.TYPE
    body: Optional[S.Term] = None

    @property
    def arity(self) -> int:
        return len(self.params)

    @property
    def is_family(self) -> bool:
        return isinstance(self.type, S.TypeSort)

    @property
    def is_axiom(self) -> bool:
        return self.body is None

    def closed_body(self) -> Optional[S.Term]:
        if self.body is None:
            return None
        t = self.body
        for name, _ in reversed(self.params):
            t = S.Lam(None, S.abstract([name], t))
        return t


@dataclass(frozen=True)
class Environment:
    defs: tuple = ()
    flags: TheoryFlags = field(default_factory=TheoryFlags)

    def __post_init__(self):
        object.__setattr__(self, "_index", {d.name: d for d in self.defs})

    def get(self, name: str) -> Optional[Definition]:
        return self._index.get(name)

    def __contains__(self, name):
        return name in self._index

    def names(self):
        return [d.name for d in self.defs]

    def extended(self, d: Definition) -> "Environment":
        return Environment(self.defs + (d,), self.flags)

    def with_flags(self, flags: TheoryFlags) -> "Environment":
        return Environment(self.defs, flags)

    def bodies(self) -> dict:
        return {d.name: d.closed_body() for d in self.defs if d.body is not None}
