"""Independent oracles shared by the test modules.

None of these call into the package's enumeration or Pfaffian code.
"""

import itertools

import pytest


def dfact(k):
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def brute_cross_nest(pairs):
    """Pairs-of-pairs count straight from the definitions."""
    cross = nest = 0
    for (a, b), (c, d) in itertools.combinations(pairs, 2):
        a, b = sorted((a, b))
        c, d = sorted((c, d))
        if (a, b) > (c, d):
            (a, b), (c, d) = (c, d), (a, b)
        if a < c < b < d:
            cross += 1
        if a < c < d < b:
            nest += 1
    return cross, nest


def naive_matchings(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for k, other in enumerate(rest):
        for tail in naive_matchings(rest[:k] + rest[k + 1:]):
            yield [(first, other)] + tail


def bareiss_det(rows):
    """Fraction-free integer determinant."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@pytest.fixture
def running_example():
    """The 14-point pair of matchings used to illustrate the involution."""
    pi = [(3, 7), (4, 10), (5, 8), (6, 9), (11, 12)]
    m = [(1, 5), (2, 12), (3, 7), (4, 14), (6, 11), (8, 9), (10, 13)]
    return pi, m
