"""
Ferrers boards and patterns of any length
=========================================

"""

# For tau = 12 a cell of the diagram is dominant when a 12 sits strictly above
# and to its right.  The points in non-dominant cells form Q.  Q alone fixes
# the dominant region, and deleting its rows and columns leaves a board.

from pmpatterns.ferrers import (
    PATTERN_12, PATTERN_21, decompose, enumerate_fillings, filling_distribution,
    filling_pmp, phi_board, product_poly,
)

sigma = (7, 8, 4, 5, 6, 1, 2, 3, 9)
q, board, f = decompose(sigma, (1, 2))
print("Q =", sorted(q.cells, reverse=True))
print("board:", board, " filling by column:", f.as_permutation())
print("rebuilt:", phi_board(f, q, (1, 2)) == sigma)

# 1[2]-matches on a board must fit entirely inside it.  Counting them over
# all fillings gives a product with one factor per row, and [2]1 gives the
# same product.

print("1[2]-matches of this filling:", filling_pmp(f, PATTERN_12))
print("fillings:", sum(1 for _ in enumerate_fillings(board)))
print("product formula:", product_poly(board))
print("over fillings:  ", filling_distribution(board, PATTERN_12), "/", filling_distribution(board, PATTERN_21))

# Summing over Q shows 1[2]·tail, [2]1·tail and 2[1]·tail share their
# distribution for any tail over 3..l.

from pmpatterns.ferrers import verify_lengthn

print(verify_lengthn((4, 3, 5), 7).render())
