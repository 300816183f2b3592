import itertools
import math

import pytest

from pmpatterns.perms import (
    Symmetry, apply_symmetry, avoids, check_permutation, complement, contains_classical,
    enumerate_partition, enumerate_perms, format_perm, inverse, inversions, last_ascent,
    last_descent, max_n, parse_perm, reduce, reverse,
)


@pytest.mark.parametrize("word, expected", [
    ((2, 6, 5, 3), (1, 4, 3, 2)),
    ((1, 2, 3), (1, 2, 3)),
    ((9, 5, 1), (3, 2, 1)),
])
def test_reduce(word, expected):
    assert reduce(word) == expected


def test_reduce_rejects_repeats():
    with pytest.raises(ValueError):
        reduce((1, 1, 2))


def test_check_permutation():
    assert check_permutation([2, 1]) == (2, 1)
    assert check_permutation(()) == ()
    with pytest.raises(ValueError):
        check_permutation((1, 3))


def test_containment():
    assert contains_classical((1, 5, 3, 2, 4), (1, 2, 3))
    assert not contains_classical((3, 2, 1), (1, 2))
    assert contains_classical((6, 4, 7, 9, 1, 3, 2, 5, 8), (1, 2, 3, 4))
    assert avoids((2, 3, 1), (1, 3, 2))


def test_containment_matches_subsets():
    for sigma in enumerate_perms(6):
        expected = any(reduce(sub) == (1, 3, 2) for sub in itertools.combinations(sigma, 3))
        assert contains_classical(sigma, (1, 3, 2)) == expected


def test_inversions():
    assert inversions((1, 2, 3, 4)) == 0
    assert inversions((3, 2, 1)) == 3
    assert inversions((2, 1, 4, 3)) == 2


def test_last_ascent_and_descent():
    assert last_ascent((3, 2, 1)) is None
    assert last_ascent((1, 3, 4, 2)) == 2
    assert last_ascent((1, 2)) == 1
    assert last_descent((1, 2, 3)) is None
    assert last_descent((3, 1, 2)) == 1
    assert last_descent((2, 1)) == 1


def test_basic_maps():
    s = (2, 4, 1, 3)
    assert reverse(s) == (3, 1, 4, 2)
    assert complement(s) == (3, 1, 4, 2)
    assert inverse(s) == (3, 1, 4, 2)
    assert inverse(inverse(s)) == s


def test_symmetry_examples():
    sigma = (3, 1, 4, 2)
    assert apply_symmetry(sigma, Symmetry.IDENTITY) == sigma
    assert apply_symmetry((1, 2), Symmetry.ROTATE_180) == (1, 2)
    assert apply_symmetry((1, 3, 2), Symmetry.REFLECT_MAIN) == (1, 3, 2)


def test_symmetry_moves_points():
    for sigma in enumerate_perms(5):
        for t in Symmetry:
            image = apply_symmetry(sigma, t)
            for x, y in enumerate(sigma, start=1):
                nx, ny = t.map_point(x, y, 5)
                assert image[nx - 1] == ny


def test_symmetry_group_laws():
    sigma = (2, 5, 1, 4, 3)
    for a in Symmetry:
        assert apply_symmetry(apply_symmetry(sigma, a), a.inverse) == sigma
        for b in Symmetry:
            assert apply_symmetry(sigma, a.compose(b)) == apply_symmetry(apply_symmetry(sigma, b), a)


def test_enumeration():
    assert list(enumerate_perms(0)) == [()]
    perms3 = list(enumerate_perms(3))
    assert len(perms3) == 6 and perms3[0] == (1, 2, 3) and perms3[-1] == (3, 2, 1)
    assert sum(1 for _ in enumerate_perms(8)) == 40320
    assert perms3 == sorted(perms3)


def test_partitions_cover_sn():
    n = 5
    parts = [list(enumerate_partition(n, f)) for f in range(1, n + 1)]
    assert sum(parts, []) == list(enumerate_perms(n))
    assert all(len(p) == math.factorial(n - 1) for p in parts)


def test_size_limits(monkeypatch):
    with pytest.raises(ValueError, match="limit"):
        next(enumerate_perms(12))
    monkeypatch.setenv("PMP_MAX_N", "12")
    assert max_n() == 12


def test_format_and_parse():
    assert format_perm((3, 1, 2)) == "312"
    wide = tuple(range(10, 0, -1))
    assert format_perm(wide) == "10,9,8,7,6,5,4,3,2,1"
    assert parse_perm(format_perm(wide)) == wide
    assert parse_perm("785269314") == (7, 8, 5, 2, 6, 9, 3, 1, 4)
    with pytest.raises(ValueError):
        parse_perm("1224")
