"""
Line bundles on P^{n-1} and on the blow-up
==========================================

Closed-form cohomology of O(k), an independent Cech computation, and the
fiber-graded cohomology of t^*O(j) on X = Tot(O(-d)).
"""

from crepant_kit import (TotalSpaceBundle, bott_cohomology, cech_cohomology_oracle,
                         pushforward_vanishing, total_space_cohomology)

# P^2, a range of twists: h^0 for k >= 0, h^2 for k <= -3, nothing in between.
for k in range(-5, 3):
    print(k, bott_cohomology(3, k), cech_cohomology_oracle(3, k))

###############################################################################
# The total space
# ---------------
# Row i, column m holds h^i(P^{n-1}, O(j + m d)).

table = total_space_cohomology(TotalSpaceBundle(n=2, d=2, twist=0), 4)
for i, row in enumerate(table.rows()):
    print(f"H^{i}:", row)

# Higher direct images of t^*O(j) vanish exactly when j >= 1 - n.
for j in (-1, -2, -3):
    r = pushforward_vanishing(2, 2, j)
    print(j, r.vanishes, r.witness)
