"""The sign-reversing involution that proves the condensation recurrence.

An element of the index set ``M`` is a pair of matchings ``(pi, m)`` drawn
from one of four products, one per term of::

    Pf(A^{12,2n-1,2n}) Pf(A) - Pf(A^{12}) Pf(A^{2n-1,2n})
        + l Pf(A^{1,2n-1}) Pf(A^{2,2n}) - l Pf(A^{1,2n}) Pf(A^{2,2n-1}) = 0

``phi`` superposes the two matchings, closes the two open paths with added
edges (through a dummy vertex when the paths have even length), swaps the
roles of the edges on the cycle through vertex 1, removes the added edges
and exchanges the matchings.  ``audit_cancellation`` checks exhaustively
that ``phi`` pairs every term with its negative.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import ParityViolation
from .matchings import PerfectMatching, enumerate_matchings, stats
from .ring import LAMBDA, Polynomial, entry


class Part(enum.IntEnum):
    P0 = 0  # M([2n] - {1,2,2n-1,2n}) x M([2n])
    P1 = 1  # M([2n] - {1,2})        x M([2n] - {2n-1,2n})
    P2 = 2  # M([2n] - {1,2n-1})     x M([2n] - {2,2n})
    P3 = 3  # M([2n] - {1,2n})       x M([2n] - {2,2n-1})


class Coeff(enum.Enum):
    ONE = "1"
    LAMBDA = "l"


PART_SIGN = {Part.P0: 1, Part.P1: -1, Part.P2: 1, Part.P3: -1}
PART_COEFF = {Part.P0: Coeff.ONE, Part.P1: Coeff.ONE, Part.P2: Coeff.LAMBDA, Part.P3: Coeff.LAMBDA}


def part_missing(part: Part, n: int) -> tuple[frozenset, frozenset]:
    """Indices missing from the ground sets of ``pi`` and ``m``."""
    N = 2 * n
    return {
        Part.P0: (frozenset({1, 2, N - 1, N}), frozenset()),
        Part.P1: (frozenset({1, 2}), frozenset({N - 1, N})),
        Part.P2: (frozenset({1, N - 1}), frozenset({2, N})),
        Part.P3: (frozenset({1, N}), frozenset({2, N - 1})),
    }[part]


def part_grounds(part: Part, n: int) -> tuple[tuple, tuple]:
    miss_pi, miss_m = part_missing(part, n)
    full = range(1, 2 * n + 1)
    return tuple(v for v in full if v not in miss_pi), tuple(v for v in full if v not in miss_m)


def _part_from_grounds(pi_ground, m_ground, n) -> Part:
    for part in Part:
        if part_grounds(part, n) == (tuple(pi_ground), tuple(m_ground)):
            return part
    raise ValueError("ground sets %s / %s match no part" % (pi_ground, m_ground))


@dataclass(frozen=True)
class MatchingPair:
    part: Part
    pi: PerfectMatching
    m: PerfectMatching
    n_pairs: int

    def __post_init__(self):
        if self.n_pairs < 2:
            raise ValueError("the index set needs n_pairs >= 2")
        want_pi, want_m = part_grounds(self.part, self.n_pairs)
        if self.pi.ground != want_pi or self.m.ground != want_m:
            raise ValueError("matchings do not fit part %s at n=%d" % (self.part.name, self.n_pairs))

    @classmethod
    def of(cls, pi, m, n_pairs: int) -> "MatchingPair":
        """Build from pair lists, inferring the part from the ground sets."""
        pi = pi if isinstance(pi, PerfectMatching) else PerfectMatching.of(pi)
        m = m if isinstance(m, PerfectMatching) else PerfectMatching.of(m)
        return cls(_part_from_grounds(pi.ground, m.ground, n_pairs), pi, m, n_pairs)

    def __str__(self):
        return "pi: %s / m: %s" % (_compact(self.pi), _compact(self.m))


def _compact(mt: PerfectMatching) -> str:
    return "".join("(%d,%d)" % p for p in mt.pairs) or "()"


def enumerate_index_set(n: int):
    """All elements of ``M``, part by part."""
    for part in Part:
        g_pi, g_m = part_grounds(part, n)
        ms = enumerate_matchings(g_m)
        for pi in enumerate_matchings(g_pi):
            for m in ms:
                yield MatchingPair(part, pi, m, n)


# -- weights ----------------------------------------------------------------


class SignedWeight(NamedTuple):
    sign: int
    lambda_exp2: int  # twice the exponent of l
    coeff: Coeff


def term_weight(x: MatchingPair) -> SignedWeight:
    s_pi, s_m = stats(x.pi), stats(x.m)
    sign = PART_SIGN[x.part] * (-1) ** ((s_pi.cross + s_m.cross) % 2)
    exp2 = 2 * (s_pi.cross + s_pi.nest + s_m.cross + s_m.nest)
    coeff = PART_COEFF[x.part]
    if coeff is Coeff.LAMBDA:
        exp2 += 2
    return SignedWeight(sign, exp2, coeff)


def entry_product(x: MatchingPair) -> Polynomial:
    return Polynomial.monomial(1, [(entry(lo, hi), 1) for mt in (x.pi, x.m) for lo, hi in mt.pairs])


def term_polynomial(x: MatchingPair) -> Polynomial:
    """The signed term of the four-term identity indexed by ``x``, on generic entries."""
    w = term_weight(x)
    if w.lambda_exp2 % 2:
        raise AssertionError("odd doubled exponent on a completed pair")
    return entry_product(x) * Polynomial.monomial(w.sign, [(LAMBDA, w.lambda_exp2 // 2)])


# -- superposition ------------------------------------------------------------


class Dummy(NamedTuple):
    """Extra vertex split off from ``of`` when closing an even path."""

    of: int

    def __str__(self):
        return "%d'" % self.of


class Edge(NamedTuple):
    u: object
    v: object
    tag: str  # "pi", "m", "added_pi", "added_m"

    @property
    def side(self) -> str:
        return "pi" if self.tag in ("pi", "added_pi") else "m"

    @property
    def added(self) -> bool:
        return self.tag.startswith("added")


def position(v) -> int:
    """Doubled position on the line; a dummy sits just left of its source.

    Dummies are only created for ``(a, b)`` with ``a < b`` and are split off
    ``b``, so "just left" is the side facing ``a``.
    """
    if isinstance(v, Dummy):
        return 2 * v.of - 1
    return 2 * v


@dataclass(frozen=True)
class SuperpositionGraph:
    n_pairs: int
    part: Part
    vertices: tuple
    edges: tuple  # of Edge
    paths: tuple  # vertex sequences of the two open paths before augmentation
    added: tuple  # endpoint pairs (a, b), a < b, one per path
    even: bool  # paths had even length, dummies were used
    cycles: tuple = field(default=())  # vertex sequences after augmentation

    def side_edges(self, side: str) -> list[Edge]:
        return [e for e in self.edges if e.side == side]

    def cycle_edges(self, vertex) -> set[int]:
        """Indices into ``edges`` of the cycle through ``vertex``."""
        adj = _adjacency(self.edges)
        seen: set[int] = set()
        stack = [vertex]
        visited = {vertex}
        while stack:
            v = stack.pop()
            for k in adj[v]:
                if k in seen:
                    continue
                seen.add(k)
                e = self.edges[k]
                w = e.v if e.u == v else e.u
                if w not in visited:
                    visited.add(w)
                    stack.append(w)
        return seen

    @property
    def dummies(self) -> tuple:
        return tuple(v for v in self.vertices if isinstance(v, Dummy))


def _adjacency(edges) -> dict:
    adj: dict = {}
    for k, e in enumerate(edges):
        adj.setdefault(e.u, []).append(k)
        adj.setdefault(e.v, []).append(k)
    return adj


def _walk(edges, adj, start, first_edge, stop) -> tuple[list, set]:
    """Follow edges from ``start`` beginning with ``first_edge`` until ``stop(v)``."""
    verts = [start]
    used = set()
    k = first_edge
    v = start
    while True:
        used.add(k)
        e = edges[k]
        v = e.v if e.u == v else e.u
        verts.append(v)
        if stop(v):
            return verts, used
        nxt = [j for j in adj[v] if j not in used]
        if not nxt:
            return verts, used
        k = nxt[0]


def superpose(x: MatchingPair) -> SuperpositionGraph:
    """Superpose ``pi`` and ``m`` and close the two open paths with added edges."""
    n = x.n_pairs
    edges = [Edge(lo, hi, "pi") for lo, hi in x.pi.pairs] + [Edge(lo, hi, "m") for lo, hi in x.m.pairs]
    adj = _adjacency(edges)
    vertices = list(range(1, 2 * n + 1))
    ends = sorted(v for v in vertices if len(adj.get(v, ())) == 1)
    if ends != sorted({1, 2, 2 * n - 1, 2 * n}):
        raise ParityViolation("open path endpoints %s are not {1, 2, 2n-1, 2n}" % ends)

    paths = []
    remaining = list(ends)
    while remaining:
        a = remaining[0]
        verts, _ = _walk(edges, adj, a, adj[a][0], lambda v: len(adj[v]) == 1)
        paths.append(tuple(verts))
        remaining = [v for v in remaining if v not in (verts[0], verts[-1])]
    lengths = [len(p) - 1 for p in paths]
    if len(paths) != 2 or lengths[0] % 2 != lengths[1] % 2:
        raise ParityViolation("path lengths %s have different parity" % lengths)
    even = lengths[0] % 2 == 0

    def side_of(v):
        return edges[adj[v][0]].side

    def other(side):
        return "m" if side == "pi" else "pi"

    added = []
    for p in paths:
        a, b = sorted((p[0], p[-1]))
        added.append((a, b))
        if not even:
            # Both path ends lie on the same side; the closing edge goes on the other.
            edges.append(Edge(a, b, "added_" + other(side_of(a))))
        else:
            d = Dummy(b)
            vertices.append(d)
            edges.append(Edge(a, d, "added_" + other(side_of(a))))
            edges.append(Edge(d, b, "added_" + other(side_of(b))))

    graph = SuperpositionGraph(n, x.part, tuple(vertices), tuple(edges), tuple(paths), tuple(added), even)
    return _with_cycles(graph)


def _with_cycles(g: SuperpositionGraph) -> SuperpositionGraph:
    adj = _adjacency(g.edges)
    for v in g.vertices:
        if len(adj.get(v, ())) != 2:
            raise ParityViolation("vertex %s has degree %d after augmentation" % (v, len(adj.get(v, ()))))
    cycles = []
    done: set = set()
    for v in sorted(g.vertices, key=position):
        if v in done:
            continue
        # Leave each cycle's smallest vertex along its m-side edge.
        first = next(k for k in adj[v] if g.edges[k].side == "m")
        verts, _ = _walk(g.edges, adj, v, first, lambda w: w == v)
        cycle = tuple(verts[:-1])
        done.update(cycle)
        cycles.append(cycle)
    return SuperpositionGraph(g.n_pairs, g.part, g.vertices, g.edges, g.paths, g.added, g.even, tuple(cycles))


def flip_cycle(g: SuperpositionGraph, vertex=1) -> tuple[list[Edge], list[Edge]]:
    """Augmented ``(pi', m')`` edge lists after swapping sides on the cycle through ``vertex``."""
    on = g.cycle_edges(vertex)
    pi_side, m_side = [], []
    for k, e in enumerate(g.edges):
        side = e.side
        if k in on:
            side = "m" if side == "pi" else "pi"
        (pi_side if side == "pi" else m_side).append(e)
    return pi_side, m_side


def phi(x: MatchingPair) -> MatchingPair:
    g = superpose(x)
    pi_side, m_side = flip_cycle(g, 1)
    new_pi = PerfectMatching.of((e.u, e.v) for e in m_side if not e.added)
    new_m = PerfectMatching.of((e.u, e.v) for e in pi_side if not e.added)
    return MatchingPair.of(new_pi, new_m, x.n_pairs)


# -- diagram statistics on augmented states -----------------------------------


class DoubledStats(NamedTuple):
    cross2: int
    nest2: int


def doubled_stats(arcs) -> DoubledStats:
    """Twice the crossing and nesting counts of arcs given as position pairs.

    Arcs that share one endpoint count as half a nesting when one lies
    inside the other and as half a crossing when one starts where the other
    ends.
    """
    iv = sorted(tuple(sorted(a)) for a in arcs)
    cross2 = nest2 = 0
    for s in range(len(iv)):
        a, b = iv[s]
        for t in range(s + 1, len(iv)):
            c, d = iv[t]
            if a == c or b == d:
                nest2 += 1
            elif b == c:
                cross2 += 1
            elif c < b < d:
                cross2 += 2
            elif d < b:
                nest2 += 2
    return DoubledStats(cross2, nest2)


def _side_stats(edges) -> DoubledStats:
    return doubled_stats([(position(e.u), position(e.v)) for e in edges])


def _pair_stats(pi_edges, m_edges) -> DoubledStats:
    a, b = _side_stats(pi_edges), _side_stats(m_edges)
    return DoubledStats(a.cross2 + b.cross2, a.nest2 + b.nest2)


def _plain_stats(x: MatchingPair) -> DoubledStats:
    s_pi, s_m = stats(x.pi), stats(x.m)
    return DoubledStats(2 * (s_pi.cross + s_m.cross), 2 * (s_pi.nest + s_m.nest))


# -- cases and audit ------------------------------------------------------------


def added_pattern(g: SuperpositionGraph) -> str:
    """``"adjacent"`` for {(1,2),(2n-1,2n)}, ``"nested"`` for {(1,2n),(2,2n-1)},
    ``"crossed"`` for {(1,2n-1),(2,2n)}."""
    N = 2 * g.n_pairs
    key = frozenset(g.added)
    table = {
        frozenset({(1, 2), (N - 1, N)}): "adjacent",
        frozenset({(1, N), (2, N - 1)}): "nested",
        frozenset({(1, N - 1), (2, N)}): "crossed",
    }
    return table[key]


CASES = {
    ("adjacent", frozenset({Part.P0, Part.P1})): 1,
    ("nested", frozenset({Part.P0, Part.P3})): 2,
    ("crossed", frozenset({Part.P0, Part.P2})): 3,
    ("adjacent", frozenset({Part.P2, Part.P3})): 4,
    ("nested", frozenset({Part.P1, Part.P2})): 5,
    ("crossed", frozenset({Part.P1, Part.P3})): 6,
}


def classify(x: MatchingPair, y: MatchingPair) -> int:
    """Case number 1..6 of the orbit ``{x, y}``; raises ValueError otherwise."""
    key = (added_pattern(superpose(x)), frozenset({x.part, y.part}))
    if key not in CASES:
        raise ValueError("orbit %s <-> %s fits no case" % (x, y))
    return CASES[key]


@dataclass
class Orbit:
    x: MatchingPair
    y: MatchingPair
    case: int
    cancels: bool

    def render(self) -> str:
        return "%s <-> %s / case: %d / cancels: %s" % (self.x, self.y, self.case, "yes" if self.cancels else "no")


@dataclass
class AuditReport:
    n_pairs: int
    total: int
    part_sizes: dict
    orbits: list
    case_counts: dict
    fixed_points: int
    non_involutive: int
    uncancelled: int
    reflection_violations: int
    sum_is_zero: bool
    # case -> Counter of ((add dcross2, add dnest2), (remove dcross2, remove dnest2))
    deltas: dict
    unclassified: list = field(default_factory=list)

    @property
    def all_cancelled(self) -> bool:
        return (
            self.fixed_points == 0
            and self.non_involutive == 0
            and self.uncancelled == 0
            and self.reflection_violations == 0
            and not self.unclassified
            and self.sum_is_zero
            and 2 * len(self.orbits) == self.total
        )

    def lines(self) -> list[str]:
        out = ["n: %d" % self.n_pairs, "index set size: %d" % self.total]
        out.append("parts: " + ", ".join("%s=%d" % (p.name, c) for p, c in sorted(self.part_sizes.items())))
        out.append("orbits: %d" % len(self.orbits))
        for case in range(1, 7):
            out.append("case %d: %d orbits" % (case, self.case_counts.get(case, 0)))
            for (add, rem), cnt in sorted(self.deltas.get(case, Counter()).items()):
                out.append(
                    "  add d(cross,nest)x2=(%d,%d) remove d(cross,nest)x2=(%d,%d): %d"
                    % (add[0], add[1], rem[0], rem[1], cnt)
                )
        out.append("fixed points: %d" % self.fixed_points)
        out.append("non-involutive: %d" % self.non_involutive)
        out.append("uncancelled orbits: %d" % self.uncancelled)
        out.append("reflection weight violations: %d" % self.reflection_violations)
        out.append("signed sum over M is zero: %s" % ("true" if self.sum_is_zero else "false"))
        out.append("all_cancelled: %s" % ("true" if self.all_cancelled else "false"))
        return out


def audit_cancellation(n_pairs: int) -> AuditReport:
    if n_pairs < 2:
        raise ValueError("audit needs n_pairs >= 2")
    elements = list(enumerate_index_set(n_pairs))
    index = {x: k for k, x in enumerate(elements)}
    part_sizes = Counter(x.part for x in elements)
    seen: set[int] = set()
    orbits = []
    case_counts: Counter = Counter()
    deltas: dict = {}
    fixed = non_inv = uncancelled = reflection_bad = 0
    unclassified = []
    total = Polynomial()

    for k, x in enumerate(elements):
        total = total + term_polynomial(x)
        if k in seen:
            continue
        g = superpose(x)
        pi_aug, m_aug = g.side_edges("pi"), g.side_edges("m")
        before = _pair_stats(pi_aug, m_aug)
        pi_flip, m_flip = flip_cycle(g, 1)
        after = _pair_stats(pi_flip, m_flip)
        # Reflection keeps crossing parity and the total of crossings plus nestings.
        if (before.cross2 - after.cross2) % 4 or before.cross2 + before.nest2 != after.cross2 + after.nest2:
            reflection_bad += 1

        y = phi(x)
        if y == x:
            fixed += 1
            seen.add(k)
            continue
        if phi(y) != x:
            non_inv += 1
        j = index[y]
        seen.update((k, j))
        try:
            case = classify(x, y)
        except ValueError:
            unclassified.append((x, y))
            continue
        if added_pattern(superpose(y)) != added_pattern(g):
            unclassified.append((x, y))
            continue
        cancels = (term_polynomial(x) + term_polynomial(y)).is_zero()
        if not cancels:
            uncancelled += 1
        case_counts[case] += 1
        plain_x, plain_y = _plain_stats(x), _plain_stats(y)
        # After the flip the sides are exchanged in the final step.
        add = (before.cross2 - plain_x.cross2, before.nest2 - plain_x.nest2)
        rem = (after.cross2 - plain_y.cross2, after.nest2 - plain_y.nest2)
        deltas.setdefault(case, Counter())[(add, rem)] += 1
        orbits.append(Orbit(x, y, case, cancels))

    return AuditReport(
        n_pairs=n_pairs,
        total=len(elements),
        part_sizes=dict(part_sizes),
        orbits=orbits,
        case_counts=dict(case_counts),
        fixed_points=fixed,
        non_involutive=non_inv,
        uncancelled=uncancelled,
        reflection_violations=reflection_bad,
        sum_is_zero=total.is_zero(),
        deltas=deltas,
        unclassified=unclassified,
    )
