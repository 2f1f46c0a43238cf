"""Raw syntax: terms, contexts, judgements, alpha-equivalence and substitution.

Bound variables are de Bruijn indices (``Bound``); free variables and global
constants are named (``Var``).  Every binder is a :class:`Scope` that binds one
or more variables at once.  The names stored in a scope are display hints only
and do not take part in equality, so ``==`` on terms *is* alpha-equivalence.

Inside a scope binding ``(x, y, u)`` the innermost name ``u`` is ``Bound(0)``,
``y`` is ``Bound(1)`` and ``x`` is ``Bound(2)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields
from typing import Callable, Iterable, Optional, Union


class Term:
    """Base class for all term formers."""

    __slots__ = ()

    def __repr__(self):
        from .frontend.printer import pretty

        try:
            return f"<{pretty(self)}>"
        except Exception:
            return object.__repr__(self)


@dataclass(frozen=True, repr=False)
class Scope:
    names: tuple = field(compare=False)
    body: Term

    @property
    def arity(self):
        return len(self.names)


def _term(cls):
    return dataclass(frozen=True, repr=False)(cls)


# variables
@_term
class Var(Term):
    name: str


@_term
class Bound(Term):
    index: int


# Pi
@_term
class Pi(Term):
    dom: Term
    cod: Scope


@_term
class Lam(Term):
    dom: Optional[Term]
    body: Scope


@_term
class App(Term):
    fn: Term
    arg: Term


# Sigma
@_term
class Sigma(Term):
    dom: Term
    cod: Scope


@_term
class Pair(Term):
    fst: Term
    snd: Term


@_term
class Split(Term):
    motive: Scope  # z. C
    branch: Scope  # x y. d
    scrut: Term


# identity types
@_term
class Id(Term):
    ty: Term
    lhs: Term
    rhs: Term


@_term
class Refl(Term):
    ty: Term
    val: Term


@_term
class J(Term):
    motive: Scope  # x y u. C
    branch: Scope  # z. d
    lhs: Term
    rhs: Term
    path: Term


# W-types
@_term
class W(Term):
    dom: Term
    cod: Scope


@_term
class Sup(Term):
    label: Term
    kids: Term


@_term
class WRec(Term):
    motive: Scope  # w. C
    branch: Scope  # x y z. d
    tree: Term


# finite types
@_term
class Zero(Term):
    pass


@_term
class Case0(Term):
    motive: Scope
    scrut: Term


@_term
class One(Term):
    pass


@_term
class Star(Term):
    pass


@_term
class Rec1(Term):
    motive: Scope
    branch: Term
    scrut: Term


@_term
class Sum(Term):
    left: Term
    right: Term


@_term
class Inl(Term):
    val: Term


@_term
class Inr(Term):
    val: Term


@_term
class CaseSum(Term):
    motive: Scope  # z. C
    left: Scope  # x. l
    right: Scope  # y. r
    scrut: Term


# the universe and its codes
@_term
class U(Term):
    pass


@_term
class El(Term):
    code: Term


@_term
class CPi(Term):
    dom: Term
    cod: Scope


@_term
class CSigma(Term):
    dom: Term
    cod: Scope


@_term
class CId(Term):
    ty: Term
    lhs: Term
    rhs: Term


@_term
class CZ(Term):
    pass


@_term
class CO(Term):
    pass


@_term
class CPlus(Term):
    left: Term
    right: Term


@_term
class CW(Term):
    dom: Term
    cod: Scope


# function extensionality
@_term
class Ext(Term):
    f: Term
    g: Term
    h: Term


@_term
class ExtComp(Term):
    body: Scope


@_term
class TypeSort(Term):
    """Marker kind for schematic type parameters (``A : Type``) of definitions."""


ZERO, ONE, STAR, UNIV, CZERO, CONE, TYPE = Zero(), One(), Star(), U(), CZ(), CO(), TypeSort()

Child = Union[Term, Scope, None]


def children(t: Term):
    return [getattr(t, f.name) for f in fields(t)]


def rebuild(t: Term, parts):
    return type(t)(*parts)


def map_children(t: Term, fn: Callable[[Term, int], Term], depth: int = 0) -> Term:
    """Apply ``fn(child, depth)`` to each immediate subterm, tracking binder depth."""
    parts = []
    changed = False
    for c in children(t):
        if isinstance(c, Scope):
            nb = fn(c.body, depth + c.arity)
            if nb is not c.body:
                changed = True
                c = Scope(c.names, nb)
        elif isinstance(c, Term):
            nc = fn(c, depth)
            if nc is not c:
                changed = True
                c = nc
        parts.append(c)
    return rebuild(t, parts) if changed else t


def _walk(t: Term, depth: int, leaf: Callable[[Term, int], Optional[Term]]) -> Term:
    r = leaf(t, depth)
    if r is not None:
        return r
    return map_children(t, lambda c, d: _walk(c, d, leaf), depth)


def instantiate(scope: Scope, args: Iterable[Term]) -> Term:
    """Open ``scope`` with locally closed ``args`` (first arg = first binder)."""
    args = list(args)
    k = scope.arity
    if len(args) != k:
        raise ValueError(f"scope binds {k} variables, got {len(args)} arguments")

    def leaf(t, depth):
        if isinstance(t, Bound):
            i = t.index - depth
            if 0 <= i < k:
                return args[k - 1 - i]
            return t
        return None

    return _walk(scope.body, 0, leaf)


def abstract(names: Iterable[str], body: Term) -> Scope:
    """Close ``body`` over the free variables ``names`` (first name = outermost)."""
    names = tuple(names)
    k = len(names)
    pos = {n: k - 1 - i for i, n in enumerate(names)}

    def leaf(t, depth):
        if isinstance(t, Var) and t.name in pos:
            return Bound(depth + pos[t.name])
        return None

    return Scope(names, _walk(body, 0, leaf))


def free_vars(t: Term) -> frozenset:
    out = set()
    _fv(t, out)
    return frozenset(out)


def _fv(t, out):
    if isinstance(t, Var):
        out.add(t.name)
        return
    for c in children(t):
        if isinstance(c, Scope):
            _fv(c.body, out)
        elif isinstance(c, Term):
            _fv(c, out)


def has_loose_bound(t: Term, depth: int = 0) -> bool:
    if isinstance(t, Bound):
        return t.index >= depth
    for c in children(t):
        if isinstance(c, Scope):
            if has_loose_bound(c.body, depth + c.arity):
                return True
        elif isinstance(c, Term) and has_loose_bound(c, depth):
            return True
    return False


def occurs_bound(t: Term, index: int) -> bool:
    """Does ``Bound(index)`` (relative to the top of ``t``) occur in ``t``?"""
    if isinstance(t, Bound):
        return t.index == index
    for c in children(t):
        if isinstance(c, Scope):
            if occurs_bound(c.body, index + c.arity):
                return True
        elif isinstance(c, Term) and occurs_bound(c, index):
            return True
    return False


def shift(t: Term, amount: int, cutoff: int = 0) -> Term:
    def leaf(u, depth):
        if isinstance(u, Bound):
            if u.index >= cutoff + depth:
                return Bound(u.index + amount)
            return u
        return None

    return _walk(t, 0, leaf)


def substitute(t: Term, x: str, a: Term) -> Term:
    """Replace free occurrences of ``x`` in ``t`` by ``a``.

    Binders are nameless, so capture cannot happen; the printer picks fresh
    display names where a binder hint would clash with a free variable.
    """

    def leaf(u, depth):
        if isinstance(u, Var) and u.name == x:
            return a
        return None

    return _walk(t, 0, leaf)


def substitute_many(t: Term, sub: dict) -> Term:
    if not sub:
        return t

    def leaf(u, depth):
        if isinstance(u, Var) and u.name in sub:
            return sub[u.name]
        return None

    return _walk(t, 0, leaf)


def alpha_eq(t: Term, u: Term) -> bool:
    return t == u


def size(t: Term) -> int:
    n = 1
    for c in children(t):
        if isinstance(c, Scope):
            n += size(c.body)
        elif isinstance(c, Term):
            n += size(c)
    return n


# -- smart constructors over named variables --------------------------------


def lam(x: str, dom: Optional[Term], body: Term) -> Lam:
    return Lam(dom, abstract([x], body))


def pi(x: str, dom: Term, cod: Term) -> Pi:
    return Pi(dom, abstract([x], cod))


def sigma(x: str, dom: Term, cod: Term) -> Sigma:
    return Sigma(dom, abstract([x], cod))


def wtype(x: str, dom: Term, cod: Term) -> W:
    return W(dom, abstract([x], cod))


def arrow(a: Term, b: Term) -> Pi:
    return Pi(a, Scope(("_",), shift(b, 1)))


def product(a: Term, b: Term) -> Sigma:
    return Sigma(a, Scope(("_",), shift(b, 1)))


def app(f: Term, *args: Term) -> Term:
    for a in args:
        f = App(f, a)
    return f


def spine(t: Term):
    """Split ``f a1 ... an`` into ``(f, [a1, ..., an])``."""
    args = []
    while isinstance(t, App):
        args.append(t.arg)
        t = t.fn
    args.reverse()
    return t, args


def var(name: str) -> Var:
    return Var(name)


# -- contexts and judgements --------------------------------------------------


@dataclass(frozen=True)
class Context:
    entries: tuple = ()

    @classmethod
    def of(cls, *entries):
        return cls(tuple((n, t) for n, t in entries))

    def extend(self, name: str, ty: Term) -> "Context":
        return Context(self.entries + ((name, ty),))

    def names(self):
        return [n for n, _ in self.entries]

    def lookup(self, name: str):
        for n, t in reversed(self.entries):
            if n == name:
                return t
        return None

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


@dataclass(frozen=True)
class TypeJ:
    ctx: Context
    ty: Term


@dataclass(frozen=True)
class TypeEqJ:
    ctx: Context
    lhs: Term
    rhs: Term


@dataclass(frozen=True)
class TermJ:
    ctx: Context
    term: Term
    ty: Term


@dataclass(frozen=True)
class TermEqJ:
    ctx: Context
    lhs: Term
    rhs: Term
    ty: Term


Judgement = Union[TypeJ, TypeEqJ, TermJ, TermEqJ]
