"""
Invariants and covariants of a cyclic group
===========================================

Z/d acts diagonally on C^n.  The coordinate ring splits into d isotypic
pieces; we count their graded dimensions twice, once by tallying monomials and
once by averaging over the group with exact roots of unity.
"""

from crepant_kit import CyclicAction, covariant_hilbert, is_gorenstein, molien_series

# The scalar action of Z/3 on C^3: the generator is zeta * Id.
action = CyclicAction.scalar(3, 3)
for chi in action.characters():
    counted = covariant_hilbert(action, chi, 9)
    averaged = molien_series(action, chi, 9)
    print(chi, counted.coefficients, "agree" if counted == averaged else "DIFFER")

# Degree-3 invariants: all 10 cubic monomials in three variables.
print(covariant_hilbert(action, 0, 3)[3])

###############################################################################
# Gorenstein or not
# -----------------
# For the scalar action the test is d | n.  The certificate also reports the
# weight sum, i.e. the character by which the group acts on the volume form.

for n, d in [(4, 2), (3, 2), (3, 3)]:
    cert = is_gorenstein(CyclicAction.scalar(n, d))
    print(f"C^{n}/Z_{d}:", "Gorenstein" if cert else "not Gorenstein", cert.branch)

# Other diagonal weights fall back on the determinant character; the answer is
# flagged as an extrapolation, and pseudo-reflections are listed.
cert = is_gorenstein(CyclicAction(4, (1, 3)))
print(cert.gorenstein, "|", cert.note)
print(is_gorenstein(CyclicAction(2, (1, 0))).pseudo_reflections)
