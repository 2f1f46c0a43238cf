"""Closure of the internal universe under every code former, checked by enumeration.

For each input drawn from the small codes, the internal operation must
either land in ``U0`` and agree with the outer operation along ``i`` (the
commuting square), or refuse with ``BudgetExceeded`` exactly when the outer
result has more than ``N0`` nodes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import islice, product as iproduct

from . import hf
from .hf import BudgetExceeded
from .universe import SetUniverse


@dataclass
class ClosureReport:
    checked: dict = field(default_factory=dict)
    refused: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def total(self):
        return sum(self.checked.values())


def _square(U: SetUniverse, rep: ClosureReport, op: str, inner, outer):
    rep.checked[op] = rep.checked.get(op, 0) + 1
    try:
        big = outer()
    except BudgetExceeded:
        big = None
    try:
        small = inner()
    except BudgetExceeded:
        rep.refused[op] = rep.refused.get(op, 0) + 1
        if big is not None and U.in_U0(big):
            rep.failures.append((op, "refused although the result is small"))
        return
    if not U.in_U0(small):
        rep.failures.append((op, "result is not a small code"))
    elif U.i(small) != big:
        rep.failures.append((op, "square does not commute"))


def families(U: SetUniverse, a, pool, limit: int):
    xs = U.members(a)
    return [dict(zip(xs, choice)) for choice in islice(iproduct(pool, repeat=len(xs)), limit)]


def verify_internal_closure(U: SetUniverse, max_nodes: int = 5, fam_nodes: int = 3, fam_limit: int = 64) -> ClosureReport:
    """Enumerate codes of at most ``max_nodes`` nodes and check every former on them."""
    rep = ClosureReport()
    codes = hf.enumerate_codes(max_nodes)
    pool = hf.enumerate_codes(fam_nodes)
    _square(U, rep, "z", lambda: U.z0, lambda: U.zero)
    _square(U, rep, "o", lambda: U.o0, lambda: U.one)
    for a in codes:
        for fam in families(U, a, pool, fam_limit):
            _square(U, rep, "pi", lambda: U.pi0(a, fam), lambda: U.Pi_U(a, fam))
            _square(U, rep, "sigma", lambda: U.sigma0(a, fam), lambda: U.Sigma_U(a, fam))
            _square(U, rep, "w", lambda: U.w0(a, fam), lambda: U.W_U(a, fam))
        for b in codes:
            _square(U, rep, "plus", lambda: U.plus0(a, b), lambda: U.plus_U(a, b))
        for x in U.members(a):
            for y in U.members(a):
                _square(U, rep, "id", lambda: U.id0(a, x, y), lambda: U.Id_U(a, x, y))
    return rep
