import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lambda_pfaffian.errors import OddGroundSet
from lambda_pfaffian.matchings import (
    PerfectMatching,
    enumerate_matchings,
    enumerate_with_stats,
    gap_sum,
    stats,
    weight,
)
from lambda_pfaffian.pfaffian import generic
from lambda_pfaffian.ring import parse_polynomial

from conftest import brute_cross_nest, dfact, naive_matchings


def pm(*pairs):
    return PerfectMatching.of(pairs)


def test_enumerate_small():
    assert enumerate_matchings([1, 2]) == [pm((1, 2))]
    assert [m.pairs for m in enumerate_matchings([1, 2, 3, 4])] == [
        ((1, 2), (3, 4)),
        ((1, 3), (2, 4)),
        ((1, 4), (2, 3)),
    ]
    assert len(enumerate_matchings(range(1, 9))) == 105
    assert enumerate_matchings([]) == [PerfectMatching(())]


def test_enumerate_odd():
    with pytest.raises(OddGroundSet):
        enumerate_matchings([1, 2, 3])


@pytest.mark.parametrize("size", [2, 4, 6, 8, 10, 12])
def test_counts_are_double_factorials(size):
    assert len(enumerate_matchings(range(1, size + 1))) == dfact(size - 1)


@pytest.mark.parametrize("ground", [(1, 2, 3, 4, 5, 6), (2, 3, 5, 8, 9, 11)])
def test_enumeration_order_matches_naive_recursion(ground):
    got = [m.pairs for m in enumerate_matchings(ground)]
    assert got == [tuple(p) for p in naive_matchings(ground)]


def test_canonical_form_enforced():
    with pytest.raises(ValueError):
        PerfectMatching(((2, 1),))
    with pytest.raises(ValueError):
        PerfectMatching(((3, 4), (1, 2)))
    with pytest.raises(ValueError):
        PerfectMatching(((1, 2), (2, 3)))
    assert pm((4, 3), (2, 1)).pairs == ((1, 2), (3, 4))
    assert str(pm((1, 5), (2, 12))) == "((1,5),(2,12))"


def test_stats_examples(running_example):
    assert stats(pm((1, 3), (2, 4))) == (1, 0)
    assert stats(pm((1, 4), (2, 3))) == (0, 1)
    _, m = running_example
    assert brute_cross_nest(m) == (8, 7)
    assert stats(pm(*m)) == (8, 7)


def test_gap_sum_examples(running_example):
    assert gap_sum(pm((1, 2), (3, 4))) == 0
    assert gap_sum(pm((1, 4), (2, 3))) == 2
    _, m = running_example
    assert sum(hi - lo - 1 for lo, hi in m) == 30
    assert gap_sum(pm(*m)) == 30


def test_gap_sum_is_positional():
    # Deleted labels do not count as interior points.
    assert gap_sum(pm((3, 7), (4, 10))) == 2
    assert gap_sum(pm((3, 7), (4, 10)), ground=range(3, 11)) == 3 + 5


@pytest.mark.parametrize("size", [0, 2, 4, 6, 8, 10])
def test_gap_sum_counts_crossings_and_nestings(size):
    count = 0
    for m in enumerate_matchings(range(1, size + 1)):
        s = stats(m)
        assert 2 * (s.cross + s.nest) == gap_sum(m)
        count += 1
    assert count == dfact(size - 1)


def test_kernel_stats_agree_with_brute_force():
    for m, s in enumerate_with_stats(range(1, 11)):
        assert s == stats(m) == brute_cross_nest(m.pairs)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5).flatmap(lambda k: st.tuples(st.just(k), st.randoms(use_true_random=False))))
def test_stats_invariant_under_order_isomorphism(arg):
    k, rnd = arg
    labels = sorted(rnd.sample(range(1, 60), 2 * k))
    rank = {v: r + 1 for r, v in enumerate(labels)}
    for m in enumerate_matchings(labels):
        relabelled = PerfectMatching.of((rank[a], rank[b]) for a, b in m.pairs)
        assert stats(m) == stats(relabelled)
        assert gap_sum(m) == gap_sum(relabelled)


def test_stats_bounded_by_pair_count():
    for m in enumerate_matchings(range(1, 11)):
        s = stats(m)
        assert s.cross + s.nest <= len(m) * (len(m) - 1) // 2


def test_weight_examples():
    A = generic(2)
    assert weight(pm((1, 2), (3, 4)), A) == (1, parse_polynomial("a[1,2]*a[3,4]"))
    assert weight(pm((1, 3), (2, 4)), A) == (-1, parse_polynomial("l*a[1,3]*a[2,4]"))
    assert weight(pm((1, 4), (2, 3)), A) == (1, parse_polynomial("l*a[1,4]*a[2,3]"))
