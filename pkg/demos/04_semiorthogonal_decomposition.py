"""
The decomposition of D(X) for the blow-up of C^n/Z_d
====================================================

Blocks i_*(B (x) O_E(kE)) supported on the exceptional divisor precede the
crepant part T_0.  Ext groups between sheaves on E are computed in closed form
and, for small cases, by a brute-force Koszul/Cech computation.
"""

from crepant_kit import (ExceptionalCollection, euler_matrix, exceptional_collection_check,
                         koszul_ext_oracle, kuznetsov_sod_check, pushforward_ext)

# Beilinson's collection on P^3 and its Euler matrix.
C = ExceptionalCollection.beilinson(4)
print(bool(exceptional_collection_check(C)))
for row in euler_matrix(C).entries:
    print(row)

###############################################################################
# Ext between pushforwards from E
# -------------------------------
# A (-2)-curve in a surface: Ext^*(O_E, O_E) = (1, 0, 1).

print(pushforward_ext(2, 2, 0, 0), koszul_ext_oracle(2, 2, 0, 0))

for n, d in [(2, 2), (4, 2), (6, 2), (6, 3)]:
    r = kuznetsov_sod_check(n, d)
    twists = [b.twists for b in r.blocks]
    print(f"n={n} d={d}:", r.statement, twists, r.k0["identity"], "ok" if r else "FAILED")

# Which ordering inside a block is semi-orthogonal?
print(kuznetsov_sod_check(6, 2).block_order)
