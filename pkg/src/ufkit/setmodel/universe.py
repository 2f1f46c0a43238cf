"""The universe of finite sets: codes under a node budget with all structure maps.

Elements of ``U`` are hereditarily finite codes of at most ``N`` DAG nodes,
plus one reserved code :data:`U0` naming the internal universe.  ``Ũ``
consists of pairs ``(code, member)`` and ``p`` is the first projection.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from math import prod

from . import hf
from .hf import EMPTY, SINGLETON, BudgetExceeded


class _InternalUniverse:
    """The reserved code of the internal universe; El of it is the set of small codes."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "u0"

    def __reduce__(self):
        return (_InternalUniverse, ())


U0 = _InternalUniverse()


class NotCommuting(Exception):
    pass


@dataclass(frozen=True)
class LargeW:
    """Code of a W-type too large for the budget, kept by its signature.

    Membership stays decidable, so elements (which are finite trees) can
    still be computed and compared; enumerating the members is refused.
    """

    labels: frozenset
    arities: frozenset  # graph of x ↦ code of B(x)

    def arity(self, x):
        return hf.apply(self.arities, x)

    def __repr__(self):
        return f"W({hf.show(self.labels)}, ...)"


@dataclass(frozen=True)
class LiftingSquare:
    """A commuting square from ``r: Ũ → Id*Ũ`` to ``p × U`` over a finite set of points.

    ``top`` sends reflexive points ``(a, x)`` of the domain to elements
    ``(c, m)`` of Ũ; ``bottom`` sends every point ``(a, x, y, u)`` of the
    identity object to the code ``c`` of the motive there.  Points may carry
    leading context coordinates ``(g, ..., a, x, y, u)``; ``top`` is then keyed
    by ``(g, ..., a, x)``.
    """

    points: frozenset
    top: dict
    bottom: dict


class SetUniverse:
    """The finite-set universe with budgets ``N`` (outer) and ``N0`` (internal)."""

    def __init__(self, N: int = 64, N0: int = 16, enum_limit: int = 4096, swap_pullbacks: bool = False):
        if not 0 < N0 < N:
            raise ValueError("need 0 < N0 < N")
        self.N, self.N0 = N, N0
        self.enum_limit = enum_limit
        self.swap = swap_pullbacks
        self._u0_members = None

    # -- U, Ũ and p -------------------------------------------------------------
    def in_U(self, c) -> bool:
        return c is U0 or (isinstance(c, frozenset) and hf.node_count(c) <= self.N)

    def in_U0(self, c) -> bool:
        return isinstance(c, frozenset) and hf.node_count(c) <= self.N0

    def admit(self, c, op: str, inner: bool = False):
        limit = self.N0 if inner else self.N
        n = hf.node_count(c)
        if n > limit:
            raise BudgetExceeded(op, n, limit)
        return c

    def members(self, c):
        """The fiber of ``p`` over ``c``, i.e. the decoding ``El(c)``."""
        if c is U0:
            return self.u0_members()
        if isinstance(c, LargeW):
            raise BudgetExceeded("W", float("inf"), self.N)
        return hf.sorted_members(c)

    def u0_members(self):
        if self._u0_members is None:
            self._u0_members = hf.enumerate_codes(self.N0, self.enum_limit)
        return self._u0_members

    def contains(self, c, m) -> bool:
        if c is U0:
            return self.in_U0(m)
        if isinstance(c, LargeW):
            try:
                x, k = hf.unpair(m)
                kids = hf.table(k)
            except (ValueError, TypeError):
                return False
            b = c.arity(x) if x in c.labels else None
            return b is not None and set(kids) == set(b) and all(self.contains(c, v) for v in kids.values())
        return m in c

    def p(self, e):
        return e[0]

    def chosen_pullback(self, X, f):
        """The chosen square for a name ``f: X → U`` over a finite set ``X``.

        Returns ``((X; f), P, Q)`` with ``P`` the projection to ``X`` and
        ``Q`` the map into Ũ, both as dicts.
        """
        obj, P, Q = [], {}, {}
        for x in X:
            c = f[x]
            for m in self.members(c):
                e = (m, x) if self.swap else (x, m)
                obj.append(e)
                P[e] = x
                Q[e] = (c, m)
        return frozenset(obj), P, Q

    def split_point(self, e):
        """Inverse of the pairing used by :meth:`chosen_pullback`."""
        return (e[1], e[0]) if self.swap else e

    def make_point(self, x, m):
        return (m, x) if self.swap else (x, m)

    # -- structure maps on U ----------------------------------------------------
    def _fibers(self, a, fam):
        return [(x, self.members(fam[x])) for x in self.members(a)]

    def Pi_U(self, a, fam, inner=False):
        """Code of the set of dependent functions over ``a`` with fibers ``fam``."""
        fibers = self._fibers(a, fam)
        limit = self.N0 if inner else self.N
        count = prod(len(ms) for _, ms in fibers)
        if count + 1 > limit:
            raise BudgetExceeded("Pi", count + 1, limit)
        xs = [x for x, _ in fibers]
        out = frozenset(
            hf.function(dict(zip(xs, choice))) for choice in iproduct(*[ms for _, ms in fibers])
        )
        return self.admit(out, "Pi", inner)

    def Sigma_U(self, a, fam, inner=False):
        fibers = self._fibers(a, fam)
        limit = self.N0 if inner else self.N
        count = sum(len(ms) for _, ms in fibers)
        if count + 1 > limit:
            raise BudgetExceeded("Sigma", count + 1, limit)
        out = frozenset(hf.pair(x, y) for x, ms in fibers for y in ms)
        return self.admit(out, "Sigma", inner)

    def Id_U(self, a, x, y, inner=False):
        if not (self.contains(a, x) and self.contains(a, y)):
            raise ValueError("Id_U: endpoints must be members of the type")
        return SINGLETON if x == y else EMPTY

    zero = EMPTY
    one = SINGLETON

    def plus_U(self, a, b, inner=False):
        out = frozenset(hf.inl(x) for x in self.members(a)) | frozenset(hf.inr(y) for y in self.members(b))
        return self.admit(out, "plus", inner)

    def W_U(self, a, fam, inner=False, symbolic=False):
        """Least fixed point of ``X ↦ Σ_{x∈a} X^{fam(x)}`` by iteration from ∅.

        Stages only grow; once a stage exceeds the budget the W-type is
        reported as too large rather than truncated.  With ``symbolic`` a
        too-large W-type is returned as a :class:`LargeW` instead.
        """
        if symbolic:
            try:
                return self.W_U(a, fam, inner)
            except BudgetExceeded:
                return LargeW(a, hf.function(dict(fam)))
        limit = self.N0 if inner else self.N
        fibers = self._fibers(a, fam)
        stage = frozenset()
        while True:
            nxt = set()
            for x, arity in fibers:
                for kids in iproduct(sorted(stage, key=hf.key), repeat=len(arity)):
                    nxt.add(self.sup(x, hf.function(dict(zip(arity, kids)))))
                    if len(nxt) + 1 > limit:
                        raise BudgetExceeded("W", len(nxt) + 1, limit)
            nxt = frozenset(nxt)
            self.admit(nxt, "W", inner)
            if nxt == stage:
                return stage
            stage = nxt

    @staticmethod
    def sup(x, kids):
        return hf.pair(x, kids)

    # -- identity structure: refl and the universal lifting ----------------------
    def refl(self, e):
        """``r: Ũ → Id*Ũ``, ``(a, x) ↦ ((a, x, x), refl)``."""
        a, x = e
        return (a, x, x, EMPTY)

    def id_lifting(self, square: LiftingSquare) -> dict:
        """The chosen filler of a square from ``r`` to ``p × U``.

        In sets the identity fibers are empty or singletons, so the only
        points are reflexive and the filler is forced: it copies ``top``.
        The same rule serves every square, so fillers commute with
        reindexing.
        """
        filler = {}
        for pt in square.points:
            *ctx, a, x, y, u = pt
            if x != y or u != EMPTY:
                raise NotCommuting(f"point {pt!r} is not in the identity object")
            c, m = square.top[(*ctx, a, x)]
            if square.bottom[pt] != c:
                raise NotCommuting(f"top and bottom disagree at {pt!r}")
            if not self.contains(c, m):
                raise NotCommuting(f"top value {m!r} is not in the fiber over {c!r}")
            filler[pt] = (c, m)
        return filler

    # -- internal universe ------------------------------------------------------
    u0 = U0

    def i(self, c):
        """The inclusion ``El(u0) → U``."""
        if not self.in_U0(c):
            raise ValueError("not a code of the internal universe")
        return c

    def pi0(self, a, fam):
        return self.Pi_U(a, fam, inner=True)

    def sigma0(self, a, fam):
        return self.Sigma_U(a, fam, inner=True)

    def id0(self, a, x, y):
        return self.Id_U(a, x, y, inner=True)

    def plus0(self, a, b):
        return self.plus_U(a, b, inner=True)

    def w0(self, a, fam):
        return self.W_U(a, fam, inner=True)

    z0 = EMPTY
    o0 = SINGLETON


def build_set_universe(N: int = 64, N0: int = 16, **kw) -> SetUniverse:
    return SetUniverse(N, N0, **kw)
