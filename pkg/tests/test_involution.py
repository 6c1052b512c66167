import pytest

from lambda_pfaffian.involution import (
    Coeff,
    Dummy,
    MatchingPair,
    Part,
    added_pattern,
    audit_cancellation,
    classify,
    doubled_stats,
    enumerate_index_set,
    entry_product,
    flip_cycle,
    phi,
    superpose,
    term_polynomial,
    term_weight,
)
from lambda_pfaffian.matchings import PerfectMatching
from lambda_pfaffian.pfaffian import generic, recurrence_residual
from lambda_pfaffian.ring import Polynomial

from conftest import dfact


def pair(pi, m, n):
    return MatchingPair.of(pi, m, n)


def index_set_size(n):
    return dfact(2 * n - 5) * dfact(2 * n - 1) + 3 * dfact(2 * n - 3) ** 2


def test_part_inferred_and_validated():
    assert pair([], [(1, 3), (2, 4)], 2).part is Part.P0
    assert pair([(3, 4)], [(1, 2)], 2).part is Part.P1
    assert pair([(2, 4)], [(1, 3)], 2).part is Part.P2
    assert pair([(2, 3)], [(1, 4)], 2).part is Part.P3
    with pytest.raises(ValueError):
        MatchingPair(Part.P1, PerfectMatching.of([(2, 4)]), PerfectMatching.of([(1, 3)]), 2)


def test_term_weight_examples():
    assert term_weight(pair([], [(1, 3), (2, 4)], 2)) == (-1, 2, Coeff.ONE)
    assert term_weight(pair([(3, 4)], [(1, 2)], 2)) == (-1, 0, Coeff.ONE)
    assert term_weight(pair([(2, 4)], [(1, 3)], 2)) == (1, 2, Coeff.LAMBDA)


def test_running_example_superposition(running_example):
    pi, m = running_example
    g = superpose(pair(pi, m, 7))
    assert g.paths == ((1, 5, 8, 9, 6, 11, 12, 2), (13, 10, 4, 14))
    assert g.added == ((1, 2), (13, 14))
    assert not g.even
    added = {(e.u, e.v): e.tag for e in g.edges if e.added}
    assert added == {(1, 2): "added_pi", (13, 14): "added_pi"}
    assert (1, 5, 8, 9, 6, 11, 12, 2) in g.cycles


def test_running_example_phi(running_example):
    pi, m = running_example
    y = phi(pair(pi, m, 7))
    assert str(y.pi) == "((3,7),(4,14),(5,8),(6,9),(10,13),(11,12))"
    assert str(y.m) == "((1,5),(2,12),(3,7),(4,10),(6,11),(8,9))"
    assert y.part is Part.P1


def test_small_odd_superposition():
    g = superpose(pair([(3, 4)], [(1, 2)], 2))
    assert not g.even
    assert {(e.u, e.v, e.tag) for e in g.edges if e.added} == {(1, 2, "added_pi"), (3, 4, "added_m")}
    pi_aug = PerfectMatching.of((e.u, e.v) for e in g.side_edges("pi"))
    m_aug = PerfectMatching.of((e.u, e.v) for e in g.side_edges("m"))
    assert pi_aug.ground == m_aug.ground == (1, 2, 3, 4)


def test_even_superposition_uses_dummies():
    x = pair([(3, 5), (4, 6)], [(1, 3), (2, 4)], 3)
    g = superpose(x)
    assert g.even
    assert g.paths == ((1, 3, 5), (2, 4, 6))
    assert set(g.dummies) == {Dummy(5), Dummy(6)}
    degree = {}
    for e in g.edges:
        for v in (e.u, e.v):
            degree[v] = degree.get(v, 0) + 1
    assert set(degree.values()) == {2}
    assert added_pattern(g) == "crossed"
    # The two closing edges land in different cycles.
    assert g.cycle_edges(1).isdisjoint(g.cycle_edges(2))

    y = phi(x)
    assert y == pair([(2, 4), (3, 5)], [(1, 3), (4, 6)], 3)
    assert y.part is Part.P3
    assert classify(x, y) == 6
    assert term_polynomial(x) + term_polynomial(y) == 0


@pytest.mark.parametrize("n", [2, 3, 4])
def test_phi_is_fixed_point_free_involution(n):
    elements = list(enumerate_index_set(n))
    assert len(elements) == index_set_size(n)
    for x in elements:
        y = phi(x)
        assert y != x
        assert phi(y) == x


@pytest.mark.parametrize("n", [2, 3])
def test_orbits_cancel_and_preserve_entries(n):
    for x in enumerate_index_set(n):
        y = phi(x)
        wx, wy = term_weight(x), term_weight(y)
        assert wx.sign == -wy.sign
        assert wx.lambda_exp2 == wy.lambda_exp2
        assert entry_product(x) == entry_product(y)
        assert term_polynomial(x) + term_polynomial(y) == 0


@pytest.mark.parametrize("n", [2, 3, 4])
def test_closing_edges_in_distinct_cycles(n):
    N = 2 * n
    for x in enumerate_index_set(n):
        g = superpose(x)
        other = next(a for a, _ in g.added if a != 1)
        assert g.cycle_edges(1).isdisjoint(g.cycle_edges(other))
        assert other == 2 or other == N - 1 or (N - 1, N) in g.added


@pytest.mark.parametrize("n", [2, 3, 4])
def test_reflection_keeps_crossing_parity_and_total(n):
    from lambda_pfaffian.involution import _pair_stats

    for x in enumerate_index_set(n):
        g = superpose(x)
        before = _pair_stats(g.side_edges("pi"), g.side_edges("m"))
        after = _pair_stats(*flip_cycle(g, 1))
        assert (before.cross2 - after.cross2) % 4 == 0
        assert before.cross2 + before.nest2 == after.cross2 + after.nest2


def test_sum_over_index_set_is_residual():
    # Summing term polynomials over M reproduces the four-term identity's left side.
    for n in (2, 3):
        total = sum((term_polynomial(x) for x in enumerate_index_set(n)), Polynomial())
        assert total == recurrence_residual(generic(n)) == 0


def test_doubled_stats_conventions():
    assert doubled_stats([(1, 3), (2, 4)]) == (2, 0)
    assert doubled_stats([(1, 4), (2, 3)]) == (0, 2)
    assert doubled_stats([(1, 2), (3, 4)]) == (0, 0)
    assert doubled_stats([(1, 4), (1, 3)]) == (0, 1)
    assert doubled_stats([(1, 4), (2, 4)]) == (0, 1)
    assert doubled_stats([(1, 3), (3, 5)]) == (1, 0)


@pytest.mark.parametrize(
    "n, orbits, cases",
    [
        (2, 3, {1: 1, 2: 1, 3: 1}),
        (3, 21, {1: 5, 2: 5, 3: 5, 4: 2, 5: 2, 6: 2}),
    ],
)
def test_audit_small(n, orbits, cases):
    r = audit_cancellation(n)
    assert r.all_cancelled
    assert r.total == index_set_size(n) == 2 * orbits
    assert len(r.orbits) == orbits
    assert r.case_counts == cases
    # Case 1 pairs P0 with P1 through (1,2),(2n-1,2n): the closing edges touch nothing.
    assert set(r.deltas[1]) == {((0, 0), (0, 0))}


def test_audit_case_counts_by_formula():
    # Case k orbits equal the size of the smaller part pair they connect.
    for n in (2, 3, 4):
        r = audit_cancellation(n)
        p0 = dfact(2 * n - 5) * dfact(2 * n - 1)
        other = dfact(2 * n - 3) ** 2
        assert r.part_sizes[Part.P0] == p0
        assert all(r.part_sizes[p] == other for p in (Part.P1, Part.P2, Part.P3))
        assert sum(r.case_counts.values()) == r.total // 2


def test_audit_rejects_small_n():
    with pytest.raises(ValueError):
        audit_cancellation(1)
