"""
Contextual categories from a universe
=====================================

Objects are finite sequences of families; pullback is reindexing, so the
laws hold on the nose.  A chooser that reindexes twice differently does not.
"""

import random

from ufkit.contextual import (
    Comparison,
    CorruptedCU,
    Sampler,
    contextualize,
    induce_logical_structure,
    verify_contextual_laws,
    verify_structure,
)
from ufkit.setmodel import build_set_universe

M = build_set_universe(64, 16)
cu = contextualize(M)
sample = Sampler(cu, random.Random(0))
rep = verify_contextual_laws(cu, [sample.configuration() for _ in range(200)])
print("strict:", rep.checked, "configurations,", len(rep.violations), "violations")

bad = CorruptedCU(M)
bad_sample = Sampler(bad, random.Random(0))
print("corrupted:", verify_contextual_laws(bad, [bad_sample.configuration() for _ in range(60)]).names())

###############################################################################
# Two choices of pullbacks give isomorphic categories.

other = contextualize(build_set_universe(64, 16, swap_pullbacks=True))
print("comparison ok:", Comparison(cu, other).verify([sample.configuration() for _ in range(50)]).ok)

###############################################################################
# The logical structure on every constructor, checked on samples.

srep = verify_structure(induce_logical_structure(cu), random.Random(1), samples=10)
print(srep.per_constructor, "ok" if srep.ok else srep.violations[:2])
