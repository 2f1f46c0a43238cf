"""Enumerating simplicial maps out of a finite presentation."""

from __future__ import annotations

from typing import Callable, Iterator, Optional

from .core import FinSSet, SMap, SSet


class _Index:
    """Simplices of a target level grouped by (faces, image in a base)."""

    def __init__(self, T: SSet, q: Optional[SMap]):
        self.T, self.q = T, q
        self._by_dim = {}

    def get(self, m, faces, base):
        table = self._by_dim.get(m)
        if table is None:
            table = self._by_dim[m] = {}
            for e in self.T.level(m):
                key = (tuple(self.T.face(m, i, e) for i in range(m + 1)) if m else (),
                       self.q(m, e) if self.q else None)
                table.setdefault(key, []).append(e)
        return table.get((faces, base), ())


def enumerate_maps(
    S: FinSSet,
    T: SSet,
    q: Optional[SMap] = None,
    over: Optional[Callable] = None,
    fixed: Optional[dict] = None,
    index: Optional[_Index] = None,
) -> Iterator[dict]:
    """All maps ``S → T`` as tables on nondegenerate ids.

    With ``q: T → C`` and ``over(id)`` giving an element of ``C``, only maps
    with ``q(u(id)) = over(id)`` are produced.  ``fixed`` pins some ids.
    """
    order = sorted(S.simplices, key=S.dim)
    fixed = fixed or {}
    index = index or _Index(T, q)
    table = {}

    def faces_of(sid):
        m, faces = S.simplices[sid]
        return tuple(T.act(S.dim(f), table[f], s) for f, s in faces)

    def go(k):
        if k == len(order):
            yield dict(table)
            return
        sid = order[k]
        m = S.dim(sid)
        faces = faces_of(sid)
        base = over(sid) if q else None
        if sid in fixed:
            e = fixed[sid]
            ok = (not m or tuple(T.face(m, i, e) for i in range(m + 1)) == faces) and (not q or q(m, e) == base)
            candidates = (e,) if ok else ()
        else:
            candidates = index.get(m, faces, base)
        for e in candidates:
            table[sid] = e
            yield from go(k + 1)
        table.pop(sid, None)

    yield from go(0)


def count_maps(S: FinSSet, T: SSet, **kw) -> int:
    return sum(1 for _ in enumerate_maps(S, T, **kw))
