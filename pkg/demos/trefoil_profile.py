"""
The signature profile of the trefoil
====================================

Sample the Kashaev invariant of the right-handed trefoil around the unit
circle and compare it with twice the Levine-Tristram signature computed
from a Seifert matrix.

    python demos/trefoil_profile.py
"""

from fractions import Fraction

from kashaev import circle_param, kashaev_invariant, load_catalog, lt_signature

entry = load_catalog()["3_1"]
d = entry.diagram
print("diagram:", d.to_pd())

# rational points on the circle: v -> sqrt(omega) = ((1 - v^2) + 2iv) / (1 + v^2)
vs = [Fraction(k, 8) for k in range(1, 9)]

print(f"{'v':>5} {'theta':>7} {'2 sigma':>8} {'invariant':>9}")
for v in vs:
    cp = circle_param(v)
    two_sigma = 2 * lt_signature(entry.seifert_matrix, cp.omega)
    inv = kashaev_invariant(d, cp.x)
    print(f"{str(v):>5} {cp.theta:7.3f} {two_sigma:8d} {inv:9d}")

# The jump sits at omega = exp(i pi / 3), a root of t - 1 + t^-1.
