"""Kan fibrations and trivial fibrations, checked up to a dimension bound.

The direct check enumerates compatible tuples of faces; the oracle instead
enumerates maps out of ``horn(n, k)`` or ``boundary(n)`` and searches for an
extension to ``delta(n)``.  They share nothing beyond the simplicial set
protocol, so agreement between them is a meaningful test.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from .core import SMap, to_point
from .generators import as_monotone, boundary, delta, horn
from .maps import _Index, enumerate_maps


@dataclass
class Verdict:
    """``answer`` is ``"yes"``, ``"no"`` or ``"unknown"``; ``yes`` holds up to ``cert_dim``."""

    answer: str
    cert_dim: int
    witness: Any = None
    reason: str = ""
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.answer == "yes"

    def __str__(self):
        text = f"{self.answer} (certified up to dimension {self.cert_dim})"
        if self.reason:
            text += f": {self.reason}"
        return text


@dataclass(frozen=True)
class LiftingProblem:
    """An unfillable square: faces ``faces`` (``None`` at the missing slot) over ``base``."""

    n: int
    k: Optional[int]
    base: Any
    faces: tuple

    def __str__(self):
        shape = f"horn({self.n},{self.k})" if self.k is not None else f"boundary({self.n})"
        return f"{shape} over {self.base!r} with faces {self.faces!r}"


def _fillers_index(p: SMap, n: int, skip):
    E = p.src
    idx = {}
    for e in E.level(n):
        key = (p(n, e), tuple(E.face(n, i, e) for i in range(n + 1) if i != skip))
        idx[key] = idx.get(key, 0) + 1
    return idx


def _compatible_tuples(p: SMap, n: int, b, slots):
    """Tuples ``(e_i)_{i in slots}`` in ``E_{n-1}`` with ``p e_i = d_i b`` and matching faces."""
    E, B = p.src, p.tgt
    by_base = {}
    for e in E.level(n - 1):
        by_base.setdefault(p(n - 1, e), []).append(e)
    chosen = {}

    def go(k):
        if k == len(slots):
            yield dict(chosen)
            return
        j = slots[k]
        for e in by_base.get(B.face(n, j, b), ()):
            if n == 1 or all(E.face(n - 1, i, e) == E.face(n - 1, j - 1, chosen[i]) for i in slots[:k]):
                chosen[j] = e
                yield from go(k + 1)
        chosen.pop(j, None)

    yield from go(0)


def _lifting(p: SMap, d: int, horns: bool) -> Verdict:
    B = p.tgt
    start = 1 if horns else 0
    if not horns:
        images = {p(0, e) for e in p.src.level(0)}
        for b in B.level(0):
            if b not in images:
                return Verdict("no", d, LiftingProblem(0, None, b, ()), "a vertex of the base has no preimage")
    for n in range(max(start, 1), d + 1):
        for k in range(n + 1) if horns else (None,):
            idx = _fillers_index(p, n, k)
            slots = [i for i in range(n + 1) if i != k]
            for b in B.level(n):
                for tup in _compatible_tuples(p, n, b, slots):
                    faces = tuple(tup[i] for i in slots)
                    if (b, faces) not in idx:
                        shown = tuple(tup.get(i) for i in range(n + 1))
                        return Verdict("no", d, LiftingProblem(n, k, b, shown), "unfillable lifting problem")
    return Verdict("yes", d)


def is_kan_fibration(p: SMap, d: int) -> Verdict:
    """Right lifting against ``horn(n, k) ⊂ delta(n)`` for ``1 ≤ n ≤ d``."""
    return _lifting(p, d, horns=True)


def is_trivial_fibration(p: SMap, d: int) -> Verdict:
    """Right lifting against ``boundary(n) ⊂ delta(n)`` for ``0 ≤ n ≤ d``."""
    return _lifting(p, d, horns=False)


def is_kan_complex(X, d: int) -> Verdict:
    return is_kan_fibration(to_point(X), d)


def is_contractible_kan(X, d: int) -> Verdict:
    """``X → Δ[0]`` is a trivial fibration up to ``d``."""
    return is_trivial_fibration(to_point(X), d)


def _oracle(p: SMap, d: int, horns: bool) -> Verdict:
    E, B = p.src, p.tgt
    for n in range(0 if not horns else 1, d + 1):
        D = delta(n)
        fill_index = _Index(E, p)
        for k in range(n + 1) if horns else (None,):
            H = horn(n, k) if horns else boundary(n)
            idx = _Index(E, p)
            for b in B.level(n):
                def over(sid, b=b, H=H):
                    return B.act(n, b, as_monotone(H, H.element(sid)))

                for h in enumerate_maps(H, E, q=p, over=over, index=idx):
                    fill = enumerate_maps(D, E, q=p, over=lambda sid, b=b: B.act(n, b, sid), fixed=h, index=fill_index)
                    if next(fill, None) is None:
                        return Verdict("no", d, LiftingProblem(n, k, b, tuple(sorted(h.items()))), "oracle")
    return Verdict("yes", d)


def kan_oracle(p: SMap, d: int) -> Verdict:
    """Brute-force Kan check by enumerating horn maps and their extensions."""
    return _oracle(p, d, horns=True)


def trivial_fibration_oracle(p: SMap, d: int) -> Verdict:
    return _oracle(p, d, horns=False)
