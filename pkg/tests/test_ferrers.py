import math
from collections import Counter

import pytest

from pmpatterns.ferrers import (
    PATTERN_12, PATTERN_21, BoardFilling, FerrersBoard, NdSet, all_fillable_boards, decompose,
    dominant_cells, dominant_from_nd, enumerate_fillings, filling_distribution, filling_pmp,
    lambda_of, lengthn_patterns, nd_set, parse_board, phi_board, product_poly, verify_lengthn,
    verify_multipattern,
)
from pmpatterns.patterns import parse_pattern, pmp
from pmpatterns.perms import enumerate_perms
from pmpatterns.poly import DistPoly

EXAMPLE = (7, 8, 4, 5, 6, 1, 2, 3, 9)


def square(k):
    return FerrersBoard((k,) * k)


def staircase(k):
    return FerrersBoard(tuple(range(k, 0, -1)))


def test_board_basics():
    b = parse_board("5,5,3,3,1")
    assert b.rows == (5, 5, 3, 3, 1) and str(b) == "5,5,3,3,1" and b.is_fillable
    assert b.contains(4, 3) and not b.contains(5, 2)
    assert not FerrersBoard((3, 1, 1)).is_fillable
    assert parse_board("").k == 0
    with pytest.raises(ValueError):
        FerrersBoard((1, 2))
    with pytest.raises(ValueError):
        FerrersBoard((2, 0))


def test_filling_validation():
    b = FerrersBoard((2, 1))
    assert BoardFilling(b, (2, 1)).as_permutation() == (2, 1)
    with pytest.raises(ValueError):
        BoardFilling(b, (1, 2))  # row 2 has length 1
    f = BoardFilling.from_permutation(parse_board("5,5,3,3,1"), (5, 3, 4, 1, 2))
    assert BoardFilling.from_json(f.to_json()) == f


def test_ndset_validation():
    with pytest.raises(ValueError):
        NdSet(frozenset({(1, 1), (1, 2)}), 3)
    with pytest.raises(ValueError):
        NdSet(frozenset({(4, 1)}), 3)


def test_worked_example():
    tau = (1, 2)
    q, board, f = decompose(EXAMPLE, tau)
    assert q.cells == {(9, 9), (8, 2), (6, 5), (3, 8)}
    assert board == FerrersBoard((5, 5, 3, 3, 1))
    assert f.as_permutation() == (5, 3, 4, 1, 2)
    assert phi_board(f, q, tau) == EXAMPLE
    cells = dominant_cells(EXAMPLE, tau)
    assert (7, 1) in cells and (7, 2) not in cells and (8, 1) not in cells
    assert (4, 4) in cells and (4, 5) not in cells
    assert (2, 7) in cells and (2, 8) not in cells
    # the cross in board column 3 is the 1[2]34-match of sigma at position 4
    assert filling_pmp(f, PATTERN_12) == pmp(EXAMPLE, parse_pattern("1[2]34")) == 2


def test_small_filling_example():
    f = BoardFilling.from_permutation(FerrersBoard((4, 4, 2, 1)), (4, 3, 1, 2))
    assert filling_pmp(f, parse_pattern("[1]2")) == 1  # the 1 of the 12 sits in column 3
    assert filling_pmp(f, PATTERN_12) == 1
    assert filling_pmp(f, PATTERN_21) == 0  # 21 never fits inside the board


def test_trivial_dominance():
    dec = (5, 4, 3, 2, 1)
    assert dominant_cells(dec, (1, 2)) == frozenset()
    assert dominant_cells((1, 2), (1, 2, 3)) == frozenset()
    q = nd_set(dec, (1, 2))
    assert len(q) == 5
    assert lambda_of(q, (1, 2)).k == 0
    assert phi_board(BoardFilling(FerrersBoard(()), ()), q, (1, 2)) == dec


def test_inconsistent_q():
    # (1,1) below and left of a 12 made of Q's own points would be dominant
    with pytest.raises(ValueError, match="inconsistent"):
        lambda_of(NdSet(frozenset({(1, 1), (2, 2), (3, 3)}), 3), (1, 2))


@pytest.mark.parametrize("tau", [(1, 2), (2, 1), (1, 2, 3)])
def test_decomposition_exhaustive(tau):
    for n in range(1, 7):
        for sigma in enumerate_perms(n):
            q, board, f = decompose(sigma, tau)
            cells = dominant_cells(sigma, tau)
            assert dominant_from_nd(q, tau) == cells
            assert all(j == 1 or (i, j - 1) in cells for i, j in cells)
            assert all(i == 1 or (i - 1, j) in cells for i, j in cells)
            assert board.is_fillable
            assert phi_board(f, q, tau) == sigma


def test_phi_board_is_a_bijection_onto_each_class():
    tau, n = (1, 2), 6
    classes = Counter(nd_set(s, tau) for s in enumerate_perms(n))
    for q, size in classes.items():
        board = lambda_of(q, tau)
        images = {phi_board(f, q, tau) for f in enumerate_fillings(board)}
        assert len(images) == size
        assert all(nd_set(s, tau) == q for s in images)


def test_statistic_transport():
    tau = (1, 2)
    p1, p2, _ = lengthn_patterns((3, 4))
    for sigma in enumerate_perms(6):
        _, _, f = decompose(sigma, tau)
        assert filling_pmp(f, PATTERN_12) == pmp(sigma, p1)
        assert filling_pmp(f, PATTERN_21) == pmp(sigma, p2)


def test_fillings_counts():
    assert sum(1 for _ in enumerate_fillings(parse_board("5,5,3,3,1"))) == 4
    for k in range(1, 6):
        assert sum(1 for _ in enumerate_fillings(square(k))) == math.factorial(k)
        assert [f.as_permutation() for f in enumerate_fillings(staircase(k))] == [tuple(range(k, 0, -1))]
    with pytest.raises(ValueError):
        list(enumerate_fillings(FerrersBoard((3, 1, 1))))


def test_filling_pmp_examples():
    for k in range(1, 6):
        (anti,) = enumerate_fillings(staircase(k))
        assert filling_pmp(anti, PATTERN_12) == filling_pmp(anti, PATTERN_21) == 0
        ident = BoardFilling(square(k), tuple(range(1, k + 1)))
        assert filling_pmp(ident, PATTERN_12) == k - 1


def test_product_formula():
    x = DistPoly([0, 1])
    assert product_poly(parse_board("5,5,3,3,1")) == (1 + x) * (1 + x)
    assert product_poly(staircase(4)) == DistPoly([1])
    expected = DistPoly([1])
    for i in range(1, 6):
        expected = expected * DistPoly([1, i - 1])
    assert product_poly(square(5)) == expected
    with pytest.raises(ValueError):
        product_poly(FerrersBoard((1, 1)))


@pytest.mark.parametrize("k", range(0, 7))
def test_product_formula_all_boards(k):
    boards = all_fillable_boards(k)
    assert len(boards) == math.comb(2 * k, k) // (k + 1)
    for b in boards:
        expected = product_poly(b)
        assert filling_distribution(b, PATTERN_12) == expected == filling_distribution(b, PATTERN_21)
        assert expected(1) == sum(1 for _ in enumerate_fillings(b))


def test_lengthn_reports():
    rep = verify_lengthn((3,), 6)
    assert rep.passed and len(rep.checks) == 5
    assert verify_lengthn((4, 3), 8).passed
    with pytest.raises(ValueError):
        verify_lengthn((3, 5), 5)
    assert lengthn_patterns((3, 4)) == (parse_pattern("1[2]34"), parse_pattern("[2]134"),
                                        parse_pattern("2[1]34"))


def test_multipattern_reports():
    assert verify_multipattern([(3, 4), (4, 3)], 7).passed
    single = verify_multipattern([(3, 4)], 6)
    assert single.passed and single.checks[0].detail == str(
        verify_lengthn((3, 4), 6, decomposition_max=0).checks[0].detail)
    with pytest.raises(ValueError):
        verify_multipattern([(3,), (3, 4)], 5)
