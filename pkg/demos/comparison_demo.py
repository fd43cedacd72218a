"""Propagating a single face-count inequality to all higher dimensions.

If the g-vector differences of two spheres are nonnegative up to some
index t and nonpositive after it, then one inequality f_r <= f_r
propagates upward to every f_s with s > r, provided t <= r + 1.  The
demo shows the certified regime, the sandwich application, and the
degenerate corner where nothing is certified.
"""

from fvectors import GVector, compare, find_crossing
from fvectors import sandwich_simplicial, lower_bound_cs

# certified: crossing at t=0, premise at r=0 strict
gd = GVector(4, (1, 2, 1))
gg = GVector(4, (1, 3, 2))
w = find_crossing(gd, gg)
print("diffs:", w.diffs, " crossing index t =", w.t)
report = compare(gd, gg, 0)
print("premise holds:", report.premise_holds,
      " certified:", report.guaranteed)
for s, c in report.conclusions.items():
    print("  f_%d: %d <= %d  -> %s" % (s, c.lhs, c.rhs, c.bound_holds))

# sandwich: knowing only "some simplicial 4-polytope has 21 edges",
# pin every other face count between family values
report = sandwich_simplicial(4, 1, 21)
n1, n2 = report.family_params
print("\nf_1 = 21 in d=4 wedges between S(%d,4) and C(%d,4):" % (n1, n2))
for s, c in report.conclusions.items():
    print("  f_%d in [%d, %d]" % (s, c.lhs, c.rhs))

# centrally-symmetric lower bounds from one vertex count
report = lower_bound_cs(4, 0, 10)
print("\ncentrally-symmetric with f_0 = 10: f_s at least",
      [c.lhs for c in report.conclusions.values()])

# the degenerate corner: equal vertex counts, crossing index t = 2 > r+1.
# The premise can then only hold with equality and nothing propagates --
# here every higher face count actually goes the other way.
report = compare(GVector(4, (1, 1, 1)), GVector(4, (1, 1, 0)), 0)
print("\ndegenerate pair (1,1,1) vs (1,1,0): premise", report.premise_holds,
      " certified:", report.guaranteed)
for s, c in report.conclusions.items():
    print("  f_%d: %d <= %d ? %s" % (s, c.lhs, c.rhs, c.bound_holds))
