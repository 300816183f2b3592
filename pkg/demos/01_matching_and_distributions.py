"""
Matching marked patterns and their distributions
================================================

"""

# A marked pattern is a permutation with one entry underlined.  We write the
# underlined entry in brackets.  sigma has a tau-match at position l when some
# occurrence of the pattern uses sigma_l in the underlined role.

from pmpatterns import dist_brute, match_positions, parse_pattern, pmp

sigma = (2, 6, 4, 8, 1, 5, 7, 3)
tau = parse_pattern("1[4]32")
print("sigma =", sigma, " tau =", tau)
print("matched positions:", sorted(match_positions(sigma, tau)), " pmp =", pmp(sigma, tau))

# Summing x^pmp over S_n gives the distribution polynomial.  The constant term
# counts permutations avoiding the underlying pattern, so for [1]23 it is
# a Catalan number.

for n in range(1, 9):
    print(f"P_{n},[1]23(x) =", dist_brute(n, parse_pattern("[1]23")))

# Two patterns with the same polynomials for every n are pmp-Wilf equivalent.
# The underlying patterns 123 and 132 are not related by a symmetry of the
# square, yet their marked versions agree:

for n in (6, 7, 8):
    a, b = dist_brute(n, parse_pattern("[1]23")), dist_brute(n, parse_pattern("[1]32"))
    print(n, a == b)

# Quadrant marked mesh patterns are the set version.  Position l matches
# mmp(2,0,2,0) when at least two points lie up-right of it and two down-left.

from pmpatterns import MmpSpec, gamma_pmp, mmp_count, mmp_to_gamma

s = (6, 4, 7, 9, 1, 3, 2, 5, 8)
spec = MmpSpec(2, 0, 2, 0)
print(spec, "of", s, "=", mmp_count(s, spec))
print("same count through its pattern set:", gamma_pmp(s, mmp_to_gamma(spec)))
