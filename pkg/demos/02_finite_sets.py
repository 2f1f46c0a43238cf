"""
A universe of hereditarily finite sets
======================================

Codes are hereditarily finite sets under a node budget.  Types denote sets
of codes and terms denote elements.
"""

from ufkit import kernel as K
from ufkit import syntax as S
from ufkit.data import corpus_source
from ufkit.frontend import parse_term
from ufkit.setmodel import build_set_universe, hf, interpret, soundness_sweep, term_at, type_at

M = build_set_universe(64, 16)
two, three = hf.ordinal(2), hf.ordinal(3)

# functions 2 -> 3 as a Pi code: 3^2 of them
pi = M.Pi_U(two, {x: three for x in M.members(two)})
print("Pi 2 3 has", len(M.members(pi)), "members")

###############################################################################
# Interpreting syntax.  A type in context a : U is a family over the codes.

env = K.Environment()
U = type_at(env, S.U(), M)
fam = type_at(env, parse_term("El (pi a (x. a))"), M, {"a": (two, U)})
print("El (pi a (x. a)) at a = 2:", len(fam.elements()), "elements")

flip = parse_term("fun b : One + One => case (q. One + One) (l. inr l) (r. inl r) b")
table = hf.table(term_at(env, flip, parse_term("One + One -> One + One"), M))
print("flip swaps the two points:", set(table.values()) == set(table) and all(k != v for k, v in table.items()))

###############################################################################
# Every equality the rule corpus derives holds between elements.

rep = soundness_sweep(corpus_source(), M)
print(f"{rep.agree} equalities agree, {len(rep.disagree)} disagree, {len(rep.skipped)} skipped")
