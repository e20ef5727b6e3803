"""The differential family on a dot diagram, and what each level computes.

Builds the (3,4) complex, draws it, checks the axioms, and reduces it to
the doubly graded theories: level 2 gives the sl(2) answer, level 0 the
Alexander-side one, level 1 collapses to a single survivor whose position
is the S-invariant.
"""

from superpoly.complexes import build_torus_complex, homology, s_invariant, verify
from superpoly.laurent import format_poly
from superpoly.render import render_text

c = build_torus_complex(3, 4)
print(render_text(c))

report = verify(c)
print("axioms:", "all hold" if report.ok else report.violations)
print("delta spectrum:", report.delta_histogram, "->", "thin" if report.thin else "thick")
print()

for level in (1, 2, 0):
    h = homology(c, level)
    print("homology at level %d (%d classes): %s" % (level, h.total_dim, format_poly(h.poincare)))

print()
print("S-invariant read off the level-1 survivor:", s_invariant(c))

print()
print("The five differentials, one arrow set each:")
for n, entries in sorted(c.diffs.items()):
    print("  d_%-2d: %2d arrows" % (n, len(entries)))
