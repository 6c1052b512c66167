"""Closed-form evaluations of lambda-Pfaffians, each checked by direct computation.

Every ``check_*`` function verifies one size and returns an
:class:`IdentityReport`; :func:`run_suite` sweeps sizes for the CLI.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional

from .kernels import matching_table
from .matchings import PerfectMatching, enumerate_matchings, stats
from .pfaffian import SkewMatrix, pf_condensation, pf_expansion
from .ring import LAMBDA, P, Q, Polynomial, entry, exact_div, substitute, x, y


@dataclass
class IdentityReport:
    name: str
    sizes_checked: list
    passed: bool
    witness: Optional[str] = None
    detail: str = ""
    notes: list = field(default_factory=list)

    def line(self) -> str:
        sizes = ",".join(str(s) for s in self.sizes_checked)
        status = "ok" if self.passed else "FAIL"
        text = "%s n=%s: %s ... %s" % (self.name, sizes, self.detail, status)
        if self.witness:
            text += " [difference: %s]" % self.witness
        return text


def _report(name, n, lhs, rhs, detail, extra_ok=True, notes=()) -> IdentityReport:
    diff = lhs - rhs
    ok = diff.is_zero() and extra_ok
    witness = None
    if not diff.is_zero():
        witness = str(diff)
    elif not extra_ok:
        witness = "; ".join(notes) or "auxiliary check failed"
    return IdentityReport(name, [n], ok, witness, detail, list(notes))


_lam = Polynomial.var(LAMBDA)


def _X(i):
    return Polynomial.var(x(i))


def _Y(i):
    return Polynomial.var(y(i))


# -- matrix families -----------------------------------------------------------


def ones_matrix(n: int) -> SkewMatrix:
    return SkewMatrix.from_function(range(1, 2 * n + 1), lambda i, j: 1)


def xiyj_matrix(n: int) -> SkewMatrix:
    return SkewMatrix.from_function(range(1, 2 * n + 1), lambda i, j: _X(i) * _Y(j))


def xdiff_matrix(n: int) -> SkewMatrix:
    return SkewMatrix.from_function(range(1, 2 * n + 1), lambda i, j: _X(i) - _X(j))


def xydiff_matrix(n: int) -> SkewMatrix:
    return SkewMatrix.from_function(range(1, 2 * n + 1), lambda i, j: _X(i) - _Y(j))


def block_matrix(n: int) -> SkewMatrix:
    """``[[0, B], [-B^T, 0]]`` with ``B[i][j] = a[i, n+j]``."""

    def f(i, j):
        if i <= n < j:
            return Polynomial.var(entry(i, j))
        return 0

    return SkewMatrix.from_function(range(1, 2 * n + 1), f)


def vandermonde_matrix(n: int) -> SkewMatrix:
    def f(i, j):
        return exact_div((_X(i) ** n - _X(j) ** n) ** 2, _X(i) - _X(j))

    return SkewMatrix.from_function(range(1, 2 * n + 1), f)


# -- block determinant ---------------------------------------------------------


def cofactor_det(rows: list[list[Polynomial]]) -> Polynomial:
    """Determinant by Laplace expansion along the first row."""
    size = len(rows)

    @lru_cache(maxsize=None)
    def det(r: int, cols: tuple) -> Polynomial:
        if r == size:
            return Polynomial.const(1)
        acc = Polynomial()
        for k, c in enumerate(cols):
            a = rows[r][c]
            if a.is_zero():
                continue
            sub = det(r + 1, cols[:k] + cols[k + 1:])
            acc = acc - a * sub if k % 2 else acc + a * sub
        return acc

    return det(0, tuple(range(size)))


def check_block_det(n: int) -> IdentityReport:
    A = block_matrix(n)
    block = [[Polynomial.var(entry(i, n + j)) for j in range(1, n + 1)] for i in range(1, n + 1)]
    rhs = (-_lam) ** (n * (n - 1) // 2) * cofactor_det(block)
    detail = "Pf_l([[0,B],[-B^T,0]]) = (-l)^%d * det(B)" % (n * (n - 1) // 2)
    return _report("block-det", n, pf_expansion(A), rhs, detail)


# -- all ones ------------------------------------------------------------------


def check_all_ones(n: int) -> IdentityReport:
    A = ones_matrix(n)
    by_expansion = pf_expansion(A)
    by_condensation = pf_condensation(A)
    ok = by_condensation == 1
    notes = [] if ok else ["condensation gave %s" % by_condensation]
    return _report("all-ones", n, by_expansion, Polynomial.const(1), "Pf_l(1) = 1 (%d matchings)" % _dfact(2 * n - 1), ok, notes)


# -- x_i y_j -------------------------------------------------------------------


def xiyj_partner(m: PerfectMatching) -> Optional[PerfectMatching]:
    """The pairing used to cancel non-trivial matchings in ``Pf_l(x_i y_j)``.

    With ``(2i-1, a)`` the first pair other than ``(2i-1, 2i)``, the next pair
    is ``(2i, b)``; exchanging ``a`` and ``b`` gives the partner.  Returns
    None for the trivial matching ``(1,2),(3,4),...``.
    """
    pairs = list(m.pairs)
    for k, (lo, hi) in enumerate(pairs):
        if hi != lo + 1:
            lo2, hi2 = pairs[k + 1]
            if lo2 != lo + 1:
                raise AssertionError("unexpected shape %s" % m)
            pairs[k] = (lo, hi2)
            pairs[k + 1] = (lo2, hi)
            return PerfectMatching.of(pairs)
    return None


def xiyj_orbits(n: int) -> tuple[int, int, list[str]]:
    """``(orbits, nontrivial, problems)`` for the cancelling pairing at size n."""
    problems = []
    nontrivial = 0
    orbits = set()
    for m in enumerate_matchings(range(1, 2 * n + 1)):
        partner = xiyj_partner(m)
        if partner is None:
            continue
        nontrivial += 1
        if partner == m or xiyj_partner(partner) != m:
            problems.append("not an involution at %s" % m)
            continue
        s1, s2 = stats(m), stats(partner)
        if s1.cross + s1.nest != s2.cross + s2.nest or abs(s1.cross - s2.cross) != 1:
            problems.append("weight not preserved at %s" % m)
        lows1 = sorted(lo for lo, _ in m.pairs)
        lows2 = sorted(lo for lo, _ in partner.pairs)
        highs1 = sorted(hi for _, hi in m.pairs)
        highs2 = sorted(hi for _, hi in partner.pairs)
        if lows1 != lows2 or highs1 != highs2:
            problems.append("x/y monomial changed at %s" % m)
        orbits.add(frozenset({m, partner}))
    return len(orbits), nontrivial, problems


def check_xiyj(n: int, orbit_check_max: int = 4) -> IdentityReport:
    lhs = pf_expansion(xiyj_matrix(n))
    rhs = Polynomial.const(1)
    for i in range(1, n + 1):
        rhs = rhs * _X(2 * i - 1) * _Y(2 * i)
    notes = []
    ok = True
    detail = "Pf_l(x[i]*y[j]) = " + "*".join("x[%d]*y[%d]" % (2 * i - 1, 2 * i) for i in range(1, n + 1))
    if n <= orbit_check_max:
        orbits, nontrivial, problems = xiyj_orbits(n)
        ok = not problems and 2 * orbits == nontrivial
        notes = problems[:3]
        detail += "; %d non-trivial matchings in %d cancelling pairs" % (nontrivial, orbits)
    return _report("xiyj", n, lhs, rhs, detail, ok, notes)


# -- x_i - y_j -----------------------------------------------------------------


def sigma(k: int) -> dict:
    """Substitution ``x[k+1] -> y[k+1]``, ``y[k] -> x[k]``."""
    return {x(k + 1): _Y(k + 1), y(k): _X(k)}


def apply_tau(k: int, poly: Polynomial) -> Polynomial:
    """``(1 - l * sigma_k)`` applied to ``poly``."""
    return poly - _lam * substitute(poly, sigma(k))


def xydiff_rhs(n: int, order: Optional[list] = None) -> Polynomial:
    """Apply ``tau_{2k}``, ``k = n-1..1`` (or the given order of k) to prod (x[2i-1] - y[2i])."""
    base = Polynomial.const(1)
    for i in range(1, n + 1):
        base = base * (_X(2 * i - 1) - _Y(2 * i))
    ks = order if order is not None else list(range(n - 1, 0, -1))
    for k in ks:
        base = apply_tau(2 * k, base)
    return base


def check_xydiff(n: int, commute_max: int = 4) -> IdentityReport:
    lhs = pf_expansion(xydiff_matrix(n))
    rhs = xydiff_rhs(n)
    ok = True
    notes = []
    if n <= commute_max:
        for order in itertools.permutations(range(1, n)):
            if xydiff_rhs(n, list(order)) != rhs:
                ok = False
                notes.append("operators do not commute in order %s" % (order,))
                break
    taus = "*".join("(1-l*s%d)" % (2 * k) for k in range(1, n))
    prod = "*".join("(x[%d]-y[%d])" % (2 * i - 1, 2 * i) for i in range(1, n + 1))
    detail = "Pf_l(x[i]-y[j]) = %s" % ((taus + " ") if taus else "") + prod
    return _report("xydiff", n, lhs, rhs, detail, ok, notes)


def check_xixj(n: int) -> IdentityReport:
    lhs = pf_expansion(xdiff_matrix(n))
    prod = Polynomial.const(1)
    for i in range(1, n + 1):
        prod = prod * (_X(2 * i - 1) - _X(2 * i))
    rhs = (1 - _lam) ** (n - 1) * prod
    collapse = {y(i): _X(i) for i in range(1, 2 * n + 1)}
    ok = substitute(xydiff_rhs(n), collapse) == rhs
    notes = [] if ok else ["y := x specialization of the x-y formula disagrees"]
    factors = "*".join("(x[%d]-x[%d])" % (2 * i - 1, 2 * i) for i in range(1, n + 1))
    power = {0: "", 1: "(1-l) * "}.get(n - 1, "(1-l)^%d * " % (n - 1))
    return _report("xixj", n, lhs, rhs, "Pf_l(x[i]-x[j]) = " + power + factors, ok, notes)


# -- continued fraction ----------------------------------------------------------


def pq_integer(k: int) -> Polynomial:
    """``[k]_{p,q} = sum_{i<k} p^i q^(k-1-i)``."""
    return Polynomial({((P, i),) * (i > 0) + ((Q, k - 1 - i),) * (k - 1 - i > 0): 1 for i in range(k)})


def _series_inverse_one_minus(u: list[Polynomial], depth: int) -> list[Polynomial]:
    """Coefficients of ``1/(1-u)`` up to ``t^depth``; requires ``u[0] == 0``."""
    g = [Polynomial.const(1)]
    for i in range(1, depth + 1):
        acc = Polynomial()
        for j in range(1, i + 1):
            if j < len(u) and not u[j].is_zero():
                acc = acc + u[j] * g[i - j]
        g.append(acc)
    return g


def cf_coefficients(depth: int) -> list[Polynomial]:
    """Coefficients of ``t^1 .. t^depth`` of ``1/(1-[1]t/(1-[2]t/(...)))``.

    The tail below level ``depth`` is dropped, which leaves those
    coefficients unchanged.
    """
    if depth < 1:
        raise ValueError("depth must be positive")
    tail = [Polynomial.const(1)]
    for k in range(depth, 0, -1):
        qk = pq_integer(k)
        u = [Polynomial()] + [qk * c for c in tail[:depth]]
        tail = _series_inverse_one_minus(u, depth)
    return tail[1:depth + 1]


def crossing_nesting_polynomial(n: int) -> Polynomial:
    """``sum over matchings of [2n] of p^cross q^nest`` by enumeration."""
    counts: dict = {}
    for _, c, nst in matching_table(n):
        counts[(c, nst)] = counts.get((c, nst), 0) + 1
    return Polynomial({((P, c),) * (c > 0) + ((Q, nst),) * (nst > 0): v for (c, nst), v in counts.items()})


def check_cf(depth: int) -> IdentityReport:
    coeffs = cf_coefficients(depth)
    specialize = {P: -_lam, Q: _lam}
    notes = []
    ok = True
    for n, coeff in enumerate(coeffs, start=1):
        enum_poly = crossing_nesting_polynomial(n)
        if coeff != enum_poly:
            return IdentityReport("cf", [depth], False, "degree %d: %s" % (n, coeff - enum_poly), "continued fraction vs enumeration")
        if substitute(coeff, specialize) != 1:
            ok = False
            notes.append("p=-l, q=l does not give 1 at degree %d" % n)
        if coeff.total_degree() > n * (n - 1) or coeff.coefficient_sum() != _dfact(2 * n - 1):
            ok = False
            notes.append("degree/count bound violated at degree %d" % n)
    detail = "sum_m p^cross q^nest t^n = 1/(1-[1]t/(1-[2]t/...)) through t^%d; at p=-l, q=l every coefficient is 1" % depth
    return IdentityReport("cf", [depth], ok, None if ok else "; ".join(notes), detail, notes)


# -- Vandermonde (lambda = 1 only) ------------------------------------------------


def check_vandermonde1(n: int) -> IdentityReport:
    pf1 = substitute(pf_expansion(vandermonde_matrix(n)), {LAMBDA: 1})
    rhs = Polynomial.const(1)
    for i in range(1, 2 * n + 1):
        for j in range(i + 1, 2 * n + 1):
            rhs = rhs * (_X(i) - _X(j))
    detail = "Pf((x[i]^%d-x[j]^%d)^2/(x[i]-x[j])) = prod_{i<j} (x[i]-x[j]) at l=1" % (n, n)
    return _report("vandermonde1", n, pf1, rhs, detail)


def _dfact(k: int) -> int:
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


# -- suite -------------------------------------------------------------------------

# name -> (checker, largest size run by the suite)
IDENTITIES: dict[str, tuple[Callable[[int], IdentityReport], int]] = {
    "block-det": (check_block_det, 4),
    "all-ones": (check_all_ones, 6),
    "xiyj": (check_xiyj, 5),
    "xydiff": (check_xydiff, 5),
    "xixj": (check_xixj, 5),
    "cf": (check_cf, 6),
    "vandermonde1": (check_vandermonde1, 3),
}

# vandermonde1 is lambda = 1 only and runs only when named.
DEFAULT_SUITE = ("block-det", "all-ones", "xiyj", "xydiff", "xixj", "cf")


def run_suite(name: str, max_n: int) -> list[IdentityReport]:
    names = DEFAULT_SUITE if name == "all" else (name,)
    if any(nm not in IDENTITIES for nm in names):
        raise KeyError(name)
    reports = []
    for nm in names:
        check, cap = IDENTITIES[nm]
        for n in range(1, min(max_n, cap) + 1):
            reports.append(check(n))
    return reports
