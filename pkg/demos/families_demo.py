"""The three extremal families and the classical bound theorems.

Cyclic polytopes maximize face counts for a given number of vertices,
stacked polytopes minimize them, and centrally-symmetric stacked
polytopes play the stacked role once central symmetry is imposed.
"""

from fvectors import FamilySpec, CYCLIC, STACKED, CS_STACKED
from fvectors import f_of_family, g_of_family

d = 4
print("simplicial 4-polytopes on n vertices: stacked floor vs cyclic ceiling")
print("%3s  %-28s %-28s" % ("n", "f(S(n,4))", "f(C(n,4))"))
for n in range(5, 11):
    low = f_of_family(FamilySpec(STACKED, n, d)).entries
    high = f_of_family(FamilySpec(CYCLIC, n, d)).entries
    print("%3d  %-28s %-28s" % (n, low, high))

print("\ng-vectors behind the n=10 row:")
print("  stacked:", g_of_family(FamilySpec(STACKED, 10, d)).entries,
      " (nothing beyond g_1)")
print("  cyclic: ", g_of_family(FamilySpec(CYCLIC, 10, d)).entries,
      " (as large as the vertex count allows)")

# the centrally-symmetric family starts at the cross-polytope
print("\ncentrally-symmetric stacked family, d=4 (2n vertices each):")
for n in range(4, 8):
    spec = FamilySpec(CS_STACKED, n, d)
    print("  2n=%2d  g=%s  f=%s" % (
        2 * n, g_of_family(spec).entries, f_of_family(spec).entries))

octa = f_of_family(FamilySpec(CS_STACKED, 3, 3))
print("\nsanity check, the octahedron:", octa.entries)
