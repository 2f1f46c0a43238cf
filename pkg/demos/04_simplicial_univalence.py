"""
Kan fibrations and univalence at small scale
============================================

Every verdict is certified up to a dimension bound.
"""

from ufkit.simplicial import (
    delta,
    discrete,
    eq_self,
    homology,
    horn,
    identity,
    inclusion,
    is_kan_fibration,
    is_univalent,
    load_sset,
    point,
    rep_space,
    to_point,
)

print("H_*(RP^2) =", [str(g) for g in homology(load_sset("rp2"), 2)])

# a horn inside its simplex is not a fibration
print(is_kan_fibration(inclusion(horn(2, 1), delta(2)), 2))

###############################################################################
# Two fibers that are equivalent but distinct: the identity of a two point
# set is not univalent.  Its Eq object has four vertices and the diagonal
# only reaches two.

p = identity(discrete(2))
eq = eq_self(p, 2)
print("Eq vertices:", len(eq.space.level(0)))
for name, f in [("id pt", identity(point())), ("id 2", p), ("2 -> pt", to_point(discrete(2)))]:
    print(f"{name:8s}", is_univalent(f, 2))

###############################################################################
# Spaces of ways to represent q as a pullback of p.

q = identity(point())
print("over id pt:", rep_space(q, identity(point()), 2))
print("over id 2:", rep_space(q, p, 2))
