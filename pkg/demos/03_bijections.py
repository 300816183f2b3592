"""
Bijections behind the length-3 equivalences
===========================================

"""

# theta_a rebuilds a permutation by inserting 1 at every step and replays the
# insertion positions with a shifted rule.  It carries pmp_[1]23 to
# pmp_[1]32 and the last ascent to the last descent.

from pmpatterns import parse_pattern, pmp, theta_a, theta_b
from pmpatterns.perms import enumerate_perms, last_ascent, last_descent

for s in [(2, 3, 1), (1, 3, 4, 2), (2, 1)]:
    print(s, "->", theta_a(s))

un123, un132 = parse_pattern("[1]23"), parse_pattern("[1]32")
ok = all(pmp(s, un123) == pmp(theta_a(s), un132) and last_ascent(s) == last_descent(theta_a(s))
         for s in enumerate_perms(7))
print("theta_a transports both statistics on S_7:", ok)

# theta_b plays the same game with 1 or 2 as the inserted value and fixes the
# position of 1.

for s in [(1, 3, 2), (2, 1, 4, 3), (3, 1, 2, 4, 5)]:
    print(s, "->", theta_b(s))

# Permutations with exactly one [1]32-match correspond to 132-avoiders with
# one inversion starred.  phi inserts the value under the second star at the
# first star.

from pmpatterns.bijections import ims_enumerate, parse_marked_avoider, phi, phi_inverse

m = parse_marked_avoider("6745*82*13")
print(m, "->", phi(m), "->", phi_inverse(phi(m)))
print("marked 132-avoiders of size 3:", [str(x) for x in ims_enumerate(3)])
