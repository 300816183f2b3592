import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pmpatterns import batch
from pmpatterns.patterns import (
    MarkedPattern, MmpSpec, PatternSet, all_marked_patterns, canonical, gamma_pmp, has_match_at,
    match_positions, mmp_count, mmp_match_at, mmp_to_gamma, orbit_representatives,
    parse_mmp, parse_pattern, parse_pattern_set, pmp, pmp_naive, quadrant_counts, symmetry_class,
)
from pmpatterns.perms import Symmetry, apply_symmetry, enumerate_perms

SIGMA = (2, 6, 4, 8, 1, 5, 7, 3)
MMP_SIGMA = (6, 4, 7, 9, 1, 3, 2, 5, 8)


def perms_of(max_size):
    return st.integers(1, max_size).flatmap(lambda n: st.permutations(range(1, n + 1))).map(tuple)


marked = st.integers(1, 4).flatmap(lambda k: st.sampled_from(all_marked_patterns(k)))


def test_parse_and_format():
    tau = parse_pattern("1[4]32")
    assert tau == MarkedPattern((1, 4, 3, 2), 2)
    assert str(tau) == "1[4]32" and tau.marked_value == 4 and tau.k == 4
    for bad in ("1432", "1[4]3[2]", "1[4]33", "[0]1"):
        with pytest.raises(ValueError):
            parse_pattern(bad)


def test_pattern_set_parsing():
    gamma = parse_pattern_set("{1[2]34, 1[2]43}")
    assert len(gamma) == 2 and str(gamma) == "{1[2]34,1[2]43}"
    with pytest.raises(ValueError):
        PatternSet([parse_pattern("[1]2"), parse_pattern("[1]23")])
    with pytest.raises(ValueError):
        PatternSet([])


def test_mmp_parsing():
    assert parse_mmp("mmp(2,0,2,0)") == MmpSpec(2, 0, 2, 0) == parse_mmp("2,0,2,0")
    assert str(MmpSpec(1, 0, 1, 0)) == "mmp(1,0,1,0)"
    with pytest.raises(ValueError):
        parse_mmp("1,2,3")


def test_match_at_positions():
    tau = parse_pattern("1[4]32")
    assert has_match_at(SIGMA, tau, 2)
    assert not has_match_at(SIGMA, tau, 1)
    assert match_positions(SIGMA, tau) == {2, 4}
    assert pmp(SIGMA, tau) == 2
    with pytest.raises(ValueError):
        has_match_at(SIGMA, tau, 9)


def test_match_edge_cases():
    un123 = parse_pattern("[1]23")
    assert not has_match_at((1, 2, 3, 4), un123, 4)
    assert pmp((3, 2, 1), un123) == 0
    assert pmp((1, 2, 3, 4, 5, 6), parse_pattern("1[2]3")) == 4
    assert pmp((1,), parse_pattern("[1]2")) == 0


@settings(max_examples=200, deadline=None)
@given(perms_of(8), marked)
def test_split_search_matches_naive(sigma, tau):
    assert pmp(sigma, tau) == pmp_naive(sigma, tau)


@pytest.mark.parametrize("n", range(1, 8))
def test_batch_masks_match_scalar(n):
    perms = batch.perm_array(n)
    rows = list(enumerate_perms(n))
    for tau in [parse_pattern(t) for t in ("[1]23", "1[3]2", "13[4]2", "[2]413", "[1]2")]:
        counts = batch.popcount(batch.position_masks(perms, tau))
        step = max(1, len(rows) // 300)
        for r in range(0, len(rows), step):
            assert counts[r] == pmp(rows[r], tau)


@settings(max_examples=200, deadline=None)
@given(perms_of(7), marked, st.sampled_from(list(Symmetry)))
def test_symmetry_transport(sigma, tau, t):
    assert pmp(sigma, tau) == pmp(apply_symmetry(sigma, t), tau.transform(t))


def test_gamma_pmp():
    tau = parse_pattern("1[4]32")
    assert gamma_pmp(SIGMA, [tau]) == pmp(SIGMA, tau)
    small = [parse_pattern("[1]23")]
    big = small + [parse_pattern("[1]32")]
    for sigma in enumerate_perms(6):
        assert gamma_pmp(sigma, small) <= gamma_pmp(sigma, big)
        assert gamma_pmp(sigma, big) == mmp_count(sigma, MmpSpec(2, 0, 0, 0))


def test_quadrants_and_mmp():
    spec = MmpSpec(2, 0, 2, 0)
    assert mmp_match_at(MMP_SIGMA, spec, 3)
    assert not mmp_match_at(MMP_SIGMA, spec, 6)
    assert mmp_count(MMP_SIGMA, spec) == 1
    assert all(mmp_match_at(MMP_SIGMA, MmpSpec(0, 0, 0, 0), i) for i in range(1, 10))
    assert quadrant_counts((2, 1, 3), 1) == (1, 0, 0, 1)
    for n in range(1, 7):
        ident = tuple(range(1, n + 1))
        assert mmp_count(ident, MmpSpec(0, 0, n - 1, 0)) == 1
        assert mmp_count(ident, MmpSpec(n, 0, 0, 0)) == 0


def test_mmp_to_gamma_examples():
    assert set(mmp_to_gamma(MmpSpec(2, 0, 0, 0))) == {parse_pattern("[1]23"), parse_pattern("[1]32")}
    assert set(mmp_to_gamma(MmpSpec(1, 0, 0, 0))) == {parse_pattern("[1]2")}
    assert set(mmp_to_gamma(MmpSpec(1, 0, 1, 0))) == {parse_pattern("1[2]3")}
    with pytest.raises(ValueError):
        mmp_to_gamma(MmpSpec(0, 0, 0, 0))


@settings(max_examples=100, deadline=None)
@given(perms_of(7), st.tuples(*[st.integers(0, 2)] * 4).filter(lambda s: 0 < sum(s) <= 4))
def test_mmp_via_gamma(sigma, spec):
    spec = MmpSpec(*spec)
    assert gamma_pmp(sigma, mmp_to_gamma(spec)) == mmp_count(sigma, spec)


def test_orbits():
    tau = parse_pattern("[1]23")
    assert tau in symmetry_class(tau)
    assert len(orbit_representatives(3)) == 4
    assert len(orbit_representatives(4)) == 16
    for k in (2, 3, 4):
        pats = all_marked_patterns(k)
        assert len(pats) == k * len(list(itertools.permutations(range(k))))
        assert {canonical(p) for p in pats} == set(orbit_representatives(k))


def test_batch_mmp_matches_scalar():
    perms = batch.perm_array(5)
    spec = MmpSpec(1, 0, 1, 0)
    values = batch.mmp_values(perms, spec)
    assert np.array_equal(values, [mmp_count(s, spec) for s in enumerate_perms(5)])
