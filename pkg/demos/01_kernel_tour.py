"""
Checking and normalizing terms
==============================

Parse a few terms, typecheck them, and watch the eta flag change what
counts as definitionally equal.
"""

from ufkit import kernel as K
from ufkit import syntax as S
from ufkit.frontend import parse_term, pretty

env = K.Environment()

# the identity on One applied to star synthesizes One and normalizes to star
t = parse_term("(fun x : One => x) star")
print(pretty(K.infer(env, S.Context(), t)), "|", pretty(K.normalize(env, S.Context(), t)))

# El of a Pi code unfolds to a real Pi type
ctx = S.Context.of(("a", S.U()), ("b", S.U()))
print(pretty(K.normalize(env, ctx, parse_term("El (pi a (x. b))"))))

###############################################################################
# Eta for functions is a flag.  With it off, a variable f and its expansion
# are different normal forms.

F = parse_term("One + One -> One + One")
g = S.Context.of(("f", F))
expanded = parse_term("fun x : One + One => f x")
for eta in (True, False):
    flags = K.TheoryFlags(eta_pi=eta)
    print("eta", eta, "->", K.defeq(env.with_flags(flags), g, expanded, S.Var("f"), F))

###############################################################################
# Errors are exceptions with a name.

try:
    K.check(env, S.Context(), S.STAR, S.ZERO)
except K.TypeMismatch as e:
    print(type(e).__name__, e)

###############################################################################
# The prelude builds h-isomorphisms and states univalence as an axiom.

full = K.load_prelude()
print([d.name for d in full.defs])
