"""Random small finite simplicial sets and maps between them."""

from __future__ import annotations

import random

from ufkit.simplicial import FinSSet, enumerate_maps, fin_map
from ufkit.simplicial.core import BadPresentation, identity_map


def _candidates(simplices, m, rng, tries):
    """Random face tuples for a new ``m``-simplex, drawn from existing simplices and their degeneracies."""
    X = FinSSet(dict(simplices), validate=False)
    pool = [x for x in X.level(m - 1)]
    for _ in range(tries):
        faces = tuple(rng.choice(pool) for _ in range(m + 1))
        if all(s == identity_map(m - 1) for _, s in faces) or rng.random() < 0.5:
            yield faces


def random_sset(rng: random.Random, max_simplices: int = 8, top: int = 3, name: str = "") -> FinSSet:
    """A random finite simplicial set with at most ``max_simplices`` nondegenerate simplices."""
    simplices = {}
    total = rng.randint(1, max_simplices)
    nv = rng.randint(1, min(3, total))
    for v in range(nv):
        simplices[f"v{v}"] = (0, ())
    count = 0
    for m in range(1, top + 1):
        want = rng.randint(0, max(0, total - len(simplices)))
        if m > 1:
            want = min(want, 2)
        for _ in range(want):
            for faces in _candidates(simplices, m, rng, 40):
                trial = dict(simplices)
                sid = f"x{m}_{count}"
                trial[sid] = (m, faces)
                try:
                    FinSSet(trial)
                except BadPresentation:
                    continue
                simplices, count = trial, count + 1
                break
    return FinSSet(simplices, name=name or "random")


def random_map(rng: random.Random, E: FinSSet, B: FinSSet, limit: int = 200):
    """A uniformly chosen map among the first ``limit`` maps ``E → B`` (``None`` if there are none)."""
    tables = []
    for table in enumerate_maps(E, B):
        tables.append(table)
        if len(tables) >= limit:
            break
    if not tables:
        return None
    return fin_map(E, B, rng.choice(tables))


# source and target fixture of every shipped map
SMAP_ENDS = {
    "collapse_edge": ("delta1", "circle"),
    "horn21_in_delta2": ("horn21", "delta2"),
    "wrap_edge": ("delta1", "circle"),
}
