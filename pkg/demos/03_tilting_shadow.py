"""
The skew group algebra versus End of the tilting bundle
=======================================================

On X = Tot(O_{P^{n-1}}(-d)) the bundle t^*O(0) + t^*O(-1) + ... + t^*O(1-d)
has no higher self-Ext.  Its endomorphisms, graded by fiber degree, should
have the same dimensions as the pieces e_b (Sym V # Z/d) e_a of the skew group
algebra.  We compare the two graded dimension sequences directly.
"""

from crepant_kit import descent_line_bundles, hom_hilbert, skew_hom_hilbert, tilting_check

n, d = 4, 2
print([(str(x.character), x.image_twist) for x in descent_line_bundles(n, d)])

for a in range(d):
    for b in range(d):
        geo = hom_hilbert(n, d, a, b, 5).coefficients
        alg = skew_hom_hilbert(n, d, a, b, 5).coefficients
        print(f"Hom(t*O(-{a}), t*O(-{b})):", geo, "==" if geo == alg else "!=", alg)

report = tilting_check(n, d, 20)
print("passed:", report.passed)
print(report.note)
