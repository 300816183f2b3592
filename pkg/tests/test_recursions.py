import pytest

from pmpatterns.distributions import dist_brute, dist_refined_brute
from pmpatterns.patterns import parse_pattern
from pmpatterns.poly import DistPoly
from pmpatterns.recursions import (
    ENGINES, recursion_last_ascent_un123, recursion_last_descent_un132, recursion_len4_t1,
    recursion_len4_t2, recursion_pos1_13un2, recursion_pos1_1un23,
)


@pytest.mark.parametrize("name", sorted(ENGINES))
def test_engine_matches_brute_force(name):
    builder, text, kind = ENGINES[name]
    tau = parse_pattern(text)
    table = builder(7)
    for n in range(1, 8):
        for key, poly in dist_refined_brute(n, tau, kind).items():
            if len(key) == 1 and kind != "pos_of_1" and key[0] == 0:
                continue  # monotone permutation, counted by the "1 +" term
            assert table.get(n, *key) == poly, (n, key)
        assert table.finals[n] == dist_brute(n, tau)


def test_last_run_examples():
    t = recursion_last_ascent_un123(3)
    assert t.get(2, 1) == DistPoly([1])
    assert t.get(3, 1) == DistPoly([2])
    assert t.get(3, 3) == DistPoly()
    assert recursion_last_ascent_un123(10).entries == recursion_last_descent_un132(10).entries


def test_pos_of_one_examples():
    t = recursion_pos1_1un23(5)
    assert t.get(1, 1) == DistPoly([1])
    assert t.finals[5] == DistPoly.parse("42 + 46x + 26x^2 + 6x^3")
    assert recursion_pos1_13un2(5).entries == t.entries


def test_len4_finals():
    t1, t2 = recursion_len4_t1(9), recursion_len4_t2(9)
    assert t1.finals[6] == DistPoly.parse("513 + 157x + 44x^2 + 6x^3")
    assert t1.finals[8] == DistPoly.parse("15767 + 12420x + 7764x^2 + 3341x^3 + 908x^4 + 120x^5")
    assert t2.finals[7] == DistPoly.parse("2761 + 1439x + 638x^2 + 178x^3 + 24x^4")
    for n in range(1, 10):
        assert t1.finals[n] == t2.finals[n]


def test_len4_identity_cell():
    # the increasing permutation sits in cell (n, 0, 1); leaving it empty breaks P_4
    t2 = recursion_len4_t2(4)
    assert t2.get(4, 0, 1) == DistPoly([1])
    assert t2.finals[4] == DistPoly.parse("23 + x")
