"""Skew-symmetric matrices over the polynomial ring and two lambda-Pfaffian algorithms.

``pf_expansion`` sums over perfect matchings with weight
``(-1)^cross * l^(cross+nest)``; it is total and is the reference value.
``pf_condensation`` runs the deformed Dodgson condensation recurrence and
divides by the central minor at every step.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping

from .errors import CondensationPivotZero, NonConstantEntry, OddResult, UnknownIndex
from .kernels import lambda_sign_histogram, matching_table
from .ring import LAMBDA, Polynomial, entry, exact_div

Coercible = Polynomial | int


class SkewMatrix:
    """Even-size skew-symmetric matrix stored as its strict upper triangle.

    Rows and columns carry positive integer labels; minors keep the labels
    of the surviving rows.
    """

    __slots__ = ("index_set", "_upper")

    def __init__(self, index_set: Iterable[int], upper: Mapping[tuple[int, int], Coercible]):
        labels = tuple(index_set)
        if list(labels) != sorted(set(labels)):
            raise ValueError("index set must be strictly increasing")
        if labels and labels[0] < 1:
            raise ValueError("indices must be positive")
        if len(labels) % 2:
            raise OddResult("skew matrix of odd size %d" % len(labels))
        expected = {(i, j) for s, i in enumerate(labels) for j in labels[s + 1:]}
        keys = set(upper)
        bad = keys - expected
        if bad:
            raise ValueError("entries outside the strict upper triangle: %s" % sorted(bad))
        missing = expected - keys
        if missing:
            raise ValueError("missing upper-triangle entries: %s" % sorted(missing))
        self.index_set = labels
        self._upper = {k: Polynomial.coerce(v) for k, v in upper.items()}

    @classmethod
    def from_function(cls, index_set: Iterable[int], f: Callable[[int, int], Coercible]) -> "SkewMatrix":
        labels = tuple(index_set)
        return cls(labels, {(i, j): f(i, j) for s, i in enumerate(labels) for j in labels[s + 1:]})

    @property
    def size(self) -> int:
        return len(self.index_set)

    @property
    def n_pairs(self) -> int:
        return len(self.index_set) // 2

    def entry(self, i: int, j: int) -> Polynomial:
        if i < j:
            return self._upper[(i, j)]
        if i > j:
            return -self._upper[(j, i)]
        if i not in self.index_set:
            raise UnknownIndex(i)
        return Polynomial()

    def upper_items(self):
        return sorted(self._upper.items())

    def map(self, f: Callable[[Polynomial], Coercible]) -> "SkewMatrix":
        return SkewMatrix(self.index_set, {k: f(v) for k, v in self._upper.items()})

    def minor(self, removed: Iterable[int]) -> "SkewMatrix":
        return minor(self, removed)

    def __eq__(self, other):
        if not isinstance(other, SkewMatrix):
            return NotImplemented
        return self.index_set == other.index_set and self._upper == other._upper

    def __repr__(self):
        return "SkewMatrix(%r, %d entries)" % (self.index_set, len(self._upper))


def generic(n_pairs: int) -> SkewMatrix:
    """The ``2n x 2n`` matrix whose upper entries are the variables ``a[i,j]``."""
    if n_pairs < 0:
        raise ValueError("n_pairs must be nonnegative")
    return SkewMatrix.from_function(range(1, 2 * n_pairs + 1), lambda i, j: Polynomial.var(entry(i, j)))


def minor(A: SkewMatrix, removed: Iterable[int]) -> SkewMatrix:
    removed = set(removed)
    unknown = removed - set(A.index_set)
    if unknown:
        raise UnknownIndex(sorted(unknown))
    keep = tuple(i for i in A.index_set if i not in removed)
    if len(keep) % 2:
        raise OddResult("minor would have odd size %d" % len(keep))
    return SkewMatrix(keep, {(i, j): v for (i, j), v in A._upper.items() if i not in removed and j not in removed})


def pf_expansion(A: SkewMatrix) -> Polynomial:
    """Signed, lambda-weighted sum over all perfect matchings of the index set."""
    labels = A.index_set
    k = len(labels) // 2
    if k == 0:
        return Polynomial.const(1)
    # Entries keyed by rank position, matching the kernel table.
    cells = {}
    for (i, j), v in A._upper.items():
        cells[(labels.index(i), labels.index(j))] = v
    if all(v.is_constant() for v in cells.values()):
        ints = {key: v.constant_value() for key, v in cells.items()}
        values = set(ints.values())
        if len(values) == 1:
            scale = values.pop() ** k
            hist = lambda_sign_histogram(k)
            return Polynomial({((LAMBDA, e),) if e else (): scale * v for e, v in hist.items()})
        by_power: dict[int, int] = {}
        for flat, c, nst in matching_table(k):
            prod = -1 if c & 1 else 1
            for t in range(0, len(flat), 2):
                prod *= ints[(flat[t], flat[t + 1])]
                if not prod:
                    break
            if prod:
                by_power[c + nst] = by_power.get(c + nst, 0) + prod
        return Polynomial({((LAMBDA, e),) if e else (): v for e, v in by_power.items()})

    sums: dict[int, Polynomial] = {}
    for flat, c, nst in matching_table(k):
        prod = cells[(flat[0], flat[1])]
        for t in range(2, len(flat), 2):
            if prod.is_zero():
                break
            prod = prod * cells[(flat[t], flat[t + 1])]
        if prod.is_zero():
            continue
        key = c + nst
        acc = sums.get(key, Polynomial())
        sums[key] = acc - prod if c & 1 else acc + prod
    total = Polynomial()
    for e in sorted(sums):
        total = total + sums[e] * Polynomial.var(LAMBDA, e)
    return total


def pf_condensation(A: SkewMatrix) -> Polynomial:
    """Lambda-Pfaffian via the deformed condensation recurrence.

    Raises CondensationPivotZero when a central minor vanishes.
    """
    lam = Polynomial.var(LAMBDA)
    memo: dict[tuple, Polynomial] = {}

    def pf(labels: tuple) -> Polynomial:
        if labels in memo:
            return memo[labels]
        size = len(labels)
        if size == 0:
            val = Polynomial.const(1)
        elif size == 2:
            val = A.entry(labels[0], labels[1])
        else:
            f1, f2, l2, l1 = labels[0], labels[1], labels[-2], labels[-1]

            def drop(*gone):
                return tuple(v for v in labels if v not in gone)

            pivot = pf(labels[2:-2])
            if pivot.is_zero():
                raise CondensationPivotZero(labels)
            num = (
                pf(drop(f1, f2)) * pf(drop(l2, l1))
                - lam * pf(drop(f1, l2)) * pf(drop(f2, l1))
                + lam * pf(drop(f1, l1)) * pf(drop(f2, l2))
            )
            val = exact_div(num, pivot)
        memo[labels] = val
        return val

    return pf(A.index_set)


def recurrence_residual(A: SkewMatrix, pfaffian=pf_expansion) -> Polynomial:
    """Left side minus right side of the four-term condensation identity."""
    s = A.index_set
    if len(s) < 4:
        raise ValueError("need at least a 4x4 matrix")
    a1, a2, b2, b1 = s[0], s[1], s[-2], s[-1]
    lam = Polynomial.var(LAMBDA)

    def pm(*gone):
        return pfaffian(minor(A, gone))

    return (
        pm(a1, a2, b2, b1) * pfaffian(A)
        - pm(a1, a2) * pm(b2, b1)
        + lam * pm(a1, b2) * pm(a2, b1)
        - lam * pm(a1, b1) * pm(a2, b2)
    )


def verify_recurrence(A: SkewMatrix) -> bool:
    return recurrence_residual(A).is_zero()


def pf_classical(A: SkewMatrix) -> int:
    """Ordinary Pfaffian (lambda = 1) of a matrix with integer entries."""
    for (i, j), v in A.upper_items():
        if not v.is_constant():
            raise NonConstantEntry("entry (%d,%d) is %s" % (i, j, v))
    labels = A.index_set
    k = len(labels) // 2
    if k == 0:
        return 1
    ints = {(labels.index(i), labels.index(j)): v.constant_value() for (i, j), v in A.upper_items()}
    total = 0
    for flat, c, _ in matching_table(k):
        prod = -1 if c & 1 else 1
        for t in range(0, len(flat), 2):
            prod *= ints[(flat[t], flat[t + 1])]
            if not prod:
                break
        total += prod
    return total
