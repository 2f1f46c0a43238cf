"""Hereditarily finite sets as canonical codes.

A code is a ``frozenset`` of codes, so Python equality is extensional set
equality and codes can be hashed and shared.  Sizes are measured as the
number of distinct nodes of the membership DAG, i.e. ``|TC({x})|``.
"""

from __future__ import annotations

from functools import lru_cache

EMPTY = frozenset()
SINGLETON = frozenset({EMPTY})


class BudgetExceeded(Exception):
    def __init__(self, op: str, needed: int, limit: int):
        super().__init__(f"{op}: needs {needed} nodes, budget is {limit}")
        self.op, self.needed, self.limit = op, needed, limit


@lru_cache(maxsize=None)
def closure(x: frozenset) -> frozenset:
    """Transitive closure of ``{x}``."""
    out = {x}
    for m in x:
        out |= closure(m)
    return frozenset(out)


def node_count(x: frozenset) -> int:
    return len(closure(x))


@lru_cache(maxsize=None)
def rank(x: frozenset) -> int:
    return 1 + max((rank(m) for m in x), default=-1)


@lru_cache(maxsize=None)
def key(x: frozenset) -> tuple:
    """A total order on codes, used for canonical printing and enumeration."""
    return (rank(x), len(x), tuple(sorted(key(m) for m in x)))


def sorted_members(x: frozenset) -> list:
    return sorted(x, key=key)


def show(x) -> str:
    if not isinstance(x, frozenset):
        return str(x)
    n = natural(x)
    if n is not None:
        return str(n)
    return "{" + ", ".join(show(m) for m in sorted_members(x)) + "}"


@lru_cache(maxsize=None)
def ordinal(n: int) -> frozenset:
    if n == 0:
        return EMPTY
    prev = ordinal(n - 1)
    return prev | frozenset({prev})


@lru_cache(maxsize=None)
def natural(x: frozenset):
    """The ``n`` with ``x == ordinal(n)``, or ``None``."""
    n = len(x)
    return n if n < 64 and ordinal(n) == x else None


def make_set(items) -> frozenset:
    return frozenset(items)


@lru_cache(maxsize=None)
def pair(a: frozenset, b: frozenset) -> frozenset:
    p = frozenset({frozenset({a}), frozenset({a, b})})
    _UNPAIR[p] = (a, b)
    return p


_UNPAIR: dict = {}


def unpair(p: frozenset):
    hit = _UNPAIR.get(p)
    if hit is not None:
        return hit
    parts = list(p)
    if len(parts) == 1:
        (s,) = parts
        if len(s) != 1:
            raise ValueError("not a Kuratowski pair")
        (a,) = s
        return a, a
    if len(parts) != 2:
        raise ValueError("not a Kuratowski pair")
    small, big = sorted(parts, key=len)
    if len(small) != 1 or len(big) != 2 or not small <= big:
        raise ValueError("not a Kuratowski pair")
    (a,) = small
    (b,) = big - small
    return a, b


def inl(x):
    return pair(EMPTY, x)


def inr(y):
    return pair(SINGLETON, y)


def function(table: dict) -> frozenset:
    """Graph of a function, as the set of its Kuratowski pairs."""
    return frozenset(pair(k, v) for k, v in table.items())


_TABLES: dict = {}


def table(f: frozenset) -> dict:
    t = _TABLES.get(f)
    if t is None:
        t = dict(unpair(p) for p in f)
        _TABLES[f] = t
    return t


def apply(f: frozenset, x: frozenset) -> frozenset:
    return table(f)[x]


def enumerate_codes(max_nodes: int, limit: int = 100_000):
    """All codes with at most ``max_nodes`` DAG nodes, smallest first.

    Every such code arises from a smaller one by adjoining a single member,
    so saturating under that step reaches all of them.  Raises
    :class:`BudgetExceeded` once more than ``limit`` codes would be produced.
    """
    found = {EMPTY}
    changed = True
    while changed:
        changed = False
        pool = sorted(found, key=key)
        for x in pool:
            for m in pool:
                if m in x:
                    continue
                y = x | frozenset({m})
                if y not in found and node_count(y) <= max_nodes:
                    found.add(y)
                    changed = True
                    if len(found) > limit:
                        raise BudgetExceeded("enumerate_codes", len(found), limit)
    return sorted(found, key=key)
