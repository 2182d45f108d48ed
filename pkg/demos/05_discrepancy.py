"""
Canonical bundle and discrepancy of the blow-up
===============================================

omega_X = t^*O(d - n) and O_X(E) = t^*O(-d), so K_X = q^*K + (n/d - 1) E.  The
blow-up is crepant exactly when d = n.
"""

from crepant_kit import canonical_report, discrepancy
from crepant_kit.crepancy import NonGorensteinError

for n, d in [(2, 2), (4, 2), (6, 3), (6, 2), (5, 5)]:
    rep = canonical_report(n, d)
    print(f"n={n} d={d}: omega = t*O({rep.omega_total_space_twist}), "
          f"a = {rep.discrepancy}, crepant: {rep.crepant_blowup}")

print("\n".join(discrepancy(4, 2).trace))

# Outside d | n the discrepancy is fractional.
try:
    discrepancy(3, 2)
except NonGorensteinError as exc:
    print(exc, "->", exc.result.value)
