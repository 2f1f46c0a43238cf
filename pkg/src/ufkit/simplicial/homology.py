"""Connected components and integral homology of normalized chains."""

from __future__ import annotations

from dataclasses import dataclass

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from .core import SSet


def components(X: SSet) -> dict:
    """A representative vertex for every vertex, via the edges."""
    parent = {v: v for v in X.level(0)}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in X.level(1):
        a, b = find(X.face(1, 1, e)), find(X.face(1, 0, e))
        if a != b:
            parent[max(a, b, key=repr)] = min(a, b, key=repr)
    return {v: find(v) for v in parent}


def pi0(X: SSet) -> int:
    return len(set(components(X).values()))


@dataclass(frozen=True)
class Group:
    """A finitely generated abelian group ``Z^rank ⊕ ⊕ Z/t``."""

    rank: int
    torsion: tuple = ()

    def __str__(self):
        parts = ([f"Z^{self.rank}"] if self.rank else []) + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"


def boundary_matrix(X: SSet, n: int) -> Matrix:
    """``∂_n: C_n → C_{n-1}`` on nondegenerate simplices (degenerate faces are zero)."""
    rows = {y: r for r, y in enumerate(X.nondegenerate(n - 1))}
    cols = X.nondegenerate(n)
    M = [[0] * len(cols) for _ in rows]
    for c, x in enumerate(cols):
        for i in range(n + 1):
            r = rows.get(X.face(n, i, x))
            if r is not None:
                M[r][c] += (-1) ** i
    return Matrix(len(rows), len(cols), lambda r, c: M[r][c])


def _diagonal(M: Matrix):
    if 0 in M.shape:
        return []
    D = smith_normal_form(M, domain=ZZ)
    return [abs(int(D[i, i])) for i in range(min(D.shape)) if D[i, i] != 0]


def homology(X: SSet, d: int) -> list:
    """``H_0 .. H_d`` of ``X``; needs level ``d + 1``."""
    diag = {n: _diagonal(boundary_matrix(X, n)) for n in range(1, d + 2)}
    out = []
    for n in range(d + 1):
        rank_out = len(diag.get(n, ()))
        incoming = diag[n + 1]
        free = len(X.nondegenerate(n)) - rank_out - len(incoming)
        out.append(Group(free, tuple(t for t in incoming if t > 1)))
    return out
