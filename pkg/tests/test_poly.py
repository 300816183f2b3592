import json

from hypothesis import given
from hypothesis import strategies as st

from pmpatterns.poly import ONE, X, ZERO, DistPoly

coeffs = st.lists(st.integers(-10**30, 10**30), max_size=8)


def test_arithmetic():
    p = DistPoly([5, 1]) * DistPoly([1, 1])
    assert p == DistPoly([5, 6, 1])
    assert str(p) == "5 + 6x + x^2"
    assert (X + 1) * (X + 1) == DistPoly([1, 2, 1])
    assert 3 * X + ONE == DistPoly([1, 3])
    assert ZERO.degree == -1 and ONE.degree == 0
    assert DistPoly([1, 0, 0]) == ONE
    assert DistPoly([2, 3])(2) == 8
    assert DistPoly([1, 1, 2]).total() == 4


def test_big_integers_are_exact():
    big = DistPoly([10**40, 1])
    assert (big * big)[0] == 10**80


@given(coeffs)
def test_json_roundtrip(cs):
    p = DistPoly(cs)
    assert DistPoly.from_json(json.dumps(p.to_json())) == p
    assert all(isinstance(c, str) for c in p.to_json())


@given(st.lists(st.integers(0, 10**6), max_size=8))
def test_text_roundtrip(cs):
    p = DistPoly(cs)
    assert DistPoly.parse(str(p)) == p


def test_hash_consistent_with_eq():
    assert hash(DistPoly([1, 2])) == hash(DistPoly([1, 2, 0]))
    assert {DistPoly([1]): "a"}[ONE] == "a"
