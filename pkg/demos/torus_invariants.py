"""Torus knot invariants from closed forms.

Walks through the two independent routes to the two-variable polynomial,
the triply graded refinements of the (2,m) and (3,m) families, and the
specializations connecting them.
"""

from superpoly.laurent import Poly3, at_t_minus_one, format_poly, mirror
from superpoly.torus import homfly_torus, super_t2, super_t3

print("The trefoil T(2,3), both polynomial routes:")
print("  quantum sum :", format_poly(homfly_torus(2, 3, "jones")))
print("  product form:", format_poly(homfly_torus(2, 3, "product")))

print()
print("Its superpolynomial refines the same data with a homological grading:")
cp = super_t2(1)
print("  ", format_poly(cp))
print("  back at t = -1:", format_poly(at_t_minus_one(cp)))

print()
print("The (3,4) torus knot has eleven generators on three a-levels:")
cp34 = super_t3(4)
for level in sorted({ea for (ea, _, _) in cp34.terms}):
    row = {k: c for k, c in cp34.terms.items() if k[0] == level}
    print("  a^%-2d:" % level, format_poly(Poly3(row)))

print()
print("Mirroring swaps a positive torus knot for our negative convention;")
print("the mirror of the (3,5) member is the 10-crossing knot 10_124:")
print("  ", format_poly(mirror(super_t3(5))))

print()
print("Every (3,m) family member specializes back to its polynomial:")
for m in (4, 5, 7, 8):
    ok = at_t_minus_one(super_t3(m)) == homfly_torus(3, m)
    print("  T(3,%d): %s" % (m, "agrees" if ok else "MISMATCH"))
