"""Perfect matchings of finite integer sets and their crossing/nesting statistics."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import OddGroundSet
from .kernels import matching_table
from .ring import LAMBDA, Polynomial


@dataclass(frozen=True, order=True)
class PerfectMatching:
    """A perfect matching in canonical form.

    Each pair is ``(low, high)`` with ``low < high`` and the pairs are sorted
    by ``low``.  Use :meth:`of` to canonicalize arbitrary input.
    """

    pairs: tuple

    def __post_init__(self):
        seen = set()
        prev = 0
        for lo, hi in self.pairs:
            if not 0 < lo < hi:
                raise ValueError("pair (%r,%r) is not increasing positive" % (lo, hi))
            if lo <= prev:
                raise ValueError("pairs are not sorted by their low endpoint")
            if lo in seen or hi in seen:
                raise ValueError("endpoint repeated in %r" % (self.pairs,))
            seen.add(lo)
            seen.add(hi)
            prev = lo

    @classmethod
    def of(cls, pairs: Iterable[Iterable[int]]) -> "PerfectMatching":
        norm = sorted(tuple(sorted(p)) for p in pairs)
        return cls(tuple(norm))

    @property
    def ground(self) -> tuple:
        return tuple(sorted(v for p in self.pairs for v in p))

    @property
    def n_pairs(self) -> int:
        return len(self.pairs)

    def partner(self, v: int) -> int:
        for lo, hi in self.pairs:
            if v == lo:
                return hi
            if v == hi:
                return lo
        raise KeyError(v)

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def __str__(self):
        return "(" + ",".join("(%d,%d)" % p for p in self.pairs) + ")"


class MatchingStats(NamedTuple):
    cross: int
    nest: int


def enumerate_matchings(ground: Iterable[int]) -> list[PerfectMatching]:
    """All matchings of ``ground``: the smallest element is paired with each
    larger element in increasing order, recursively."""
    labels = sorted(ground)
    if len(labels) % 2:
        raise OddGroundSet("ground set of odd size %d" % len(labels))
    out = []
    for flat, _, _ in matching_table(len(labels) // 2):
        it = iter(labels[i] for i in flat)
        out.append(PerfectMatching(tuple(zip(it, it))))
    return out


def enumerate_with_stats(ground: Iterable[int]):
    """Like :func:`enumerate_matchings` but yields ``(matching, MatchingStats)``
    using the kernel's incremental counts."""
    labels = sorted(ground)
    if len(labels) % 2:
        raise OddGroundSet("ground set of odd size %d" % len(labels))
    for flat, c, nst in matching_table(len(labels) // 2):
        it = iter(labels[i] for i in flat)
        yield PerfectMatching(tuple(zip(it, it))), MatchingStats(c, nst)


def stats(m: PerfectMatching) -> MatchingStats:
    """Brute-force crossing and nesting counts over all pairs of pairs."""
    cross = nest = 0
    pairs = m.pairs
    for s in range(len(pairs)):
        a, b = pairs[s]
        for t in range(s + 1, len(pairs)):
            c, d = pairs[t]
            # a < c by canonical order
            if c < b < d:
                cross += 1
            elif d < b:
                nest += 1
    return MatchingStats(cross, nest)


def gap_sum(m: PerfectMatching, ground: Iterable[int] | None = None) -> int:
    """Sum over pairs of the number of ground-set points strictly inside the pair.

    Positions are ranks within ``ground`` (default: the matching's own ground
    set), so deleted indices do not count.
    """
    rank = {v: r for r, v in enumerate(sorted(ground) if ground is not None else m.ground)}
    return sum(rank[hi] - rank[lo] - 1 for lo, hi in m.pairs)


def weight(m: PerfectMatching, entries) -> tuple[int, Polynomial]:
    """``(sign, polynomial)`` of the matching's term: sign ``(-1)^cross`` and
    ``l^(cross+nest)`` times the product of the matched entries."""
    st = stats(m)
    poly = Polynomial.var(LAMBDA, st.cross + st.nest)
    for lo, hi in m.pairs:
        poly = poly * entries.entry(lo, hi)
    return (-1 if st.cross % 2 else 1), poly
