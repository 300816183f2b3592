"""
Sorting length-4 marked patterns into equivalence classes
=========================================================

"""

# There are 96 marked patterns of length 4.  The eight symmetries of the
# square preserve the distribution, which leaves 16 orbits.

from pmpatterns.distributions import classify
from pmpatterns.patterns import all_marked_patterns, orbit_representatives

print(len(all_marked_patterns(4)), "patterns,", len(orbit_representatives(4)), "orbits")

# Comparing P_1 .. P_8 for one representative per orbit splits them further.
# Equal sequences up to n = 8 are evidence, not proof; the status string says so.

res = classify(4, 8)
print(len(res.classes), "classes,", res.status)
for cls in res.classes:
    print("  ", ", ".join(map(str, cls)), "->", res.witness[cls[0]][-1])

# Two of the merges have exact recursions behind them.  The refined tables
# split P_n by the last ascent (or descent) and the position of 1, and never
# touch S_n.

from pmpatterns.recursions import recursion_len4_t1, recursion_len4_t2

t1, t2 = recursion_len4_t1(9), recursion_len4_t2(9)
print("P_9 from the 1[2]34 recursion:", t1.finals[9])
print("agrees with the 1[2]43 recursion:", t1.finals[9] == t2.finals[9])
