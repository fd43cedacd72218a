"""Macaulay expansions, the boundary operator, and the two sequence tests.

Every positive integer n has a unique expansion as a staircase of
binomial coefficients with descending lower index k, k-1, ...; shifting
the staircase down by one gives the boundary operator that governs which
integer vectors can be face-count data.
"""

from fvectors import macaulay_expand, del_k, is_m_sequence_upper, is_M_sequence

for n, k in ((45, 3), (45, 4), (1000, 5)):
    exp = macaulay_expand(n, k)
    pretty = " + ".join("C(%d,%d)" % t for t in exp.terms)
    print("%4d = %s   del^%d -> %d" % (n, pretty, k, del_k(n, k)))

print()
witness = (1, 2, 3, 5)
print("vector", witness)
print("  m-sequence (weaker test):", is_m_sequence_upper(witness))
print("  M-sequence (Macaulay test):", is_M_sequence(witness))
print("  so the two notions genuinely differ: del^3(5) = %d > 3" % del_k(5, 3))

print()
good = (1, 4, 10, 20)
print("vector", good, "-> M-sequence?", is_M_sequence(good),
      " (it is the start of C(3+j, j))")

# every M-sequence passes the weaker test too
import itertools
both = weaker_only = 0
for v in itertools.product(range(7), repeat=3):
    vec = (1,) + v
    if is_M_sequence(vec):
        both += 1
        assert is_m_sequence_upper(vec)
    elif is_m_sequence_upper(vec):
        weaker_only += 1
print("\nexhaustive over (1,a,b,c) with a,b,c < 7: %d pass both tests, "
      "%d pass only the weaker one" % (both, weaker_only))
