"""
Reidemeister moves leave the invariant alone
============================================

Apply random R1 and R2 moves to the figure-eight knot and a split link and
watch sign(tau(x)) - writhe stay put, including at |x| > 1 where no
signature interpretation is known.

    python demos/invariance.py
"""

import random
from fractions import Fraction

from kashaev import kashaev_invariant, load_catalog, random_mutation, writhe

xs = [Fraction(0), Fraction(1, 2), Fraction(-3, 4), Fraction(2)]
rng = random.Random(1)

for name in ("4_1", "3_1_split_4_1"):
    d = load_catalog()[name].diagram
    print(name, [kashaev_invariant(d, x) for x in xs])
    for _ in range(5):
        d, move = random_mutation(d, rng)
        print(f"  {move:<40} crossings={len(d.crossings):2d} writhe={writhe(d):+d}",
              [kashaev_invariant(d, x) for x in xs])
