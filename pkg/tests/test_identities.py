import pytest

from lambda_pfaffian import identities as ids
from lambda_pfaffian.matchings import PerfectMatching
from lambda_pfaffian.pfaffian import pf_condensation, pf_expansion
from lambda_pfaffian.ring import LAMBDA, P, Q, Polynomial, parse_polynomial, substitute, x, y

from conftest import dfact

lam = Polynomial.var(LAMBDA)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_block_det(n):
    assert ids.check_block_det(n).passed


def test_block_det_n2_explicit():
    got = pf_expansion(ids.block_matrix(2))
    assert got == parse_polynomial("-l*a[1,3]*a[2,4] + l*a[1,4]*a[2,3]")


@pytest.mark.parametrize("n", range(1, 6))
def test_all_ones(n):
    A = ids.ones_matrix(n)
    assert pf_expansion(A) == 1
    assert pf_condensation(A) == 1
    assert ids.check_all_ones(n).passed


@pytest.mark.parametrize("n", range(1, 5))
def test_xiyj(n):
    assert ids.check_xiyj(n).passed


def test_xiyj_orbit_counts():
    assert ids.xiyj_orbits(3) == (7, 14, [])
    assert ids.xiyj_orbits(2) == (1, 2, [])


def test_xiyj_partner_trivial():
    assert ids.xiyj_partner(PerfectMatching.of([(1, 2), (3, 4), (5, 6)])) is None
    m = PerfectMatching.of([(1, 3), (2, 4)])
    assert ids.xiyj_partner(m) == PerfectMatching.of([(1, 4), (2, 3)])


@pytest.mark.parametrize("n", range(1, 5))
def test_xydiff(n):
    assert ids.check_xydiff(n).passed


def test_tau_operators_commute():
    base = ids.xydiff_rhs(4)
    for order in ([1, 2, 3], [2, 3, 1], [3, 1, 2]):
        assert ids.xydiff_rhs(4, order) == base


def test_sigma_substitution():
    p = Polynomial.var(x(3)) * Polynomial.var(y(2))
    assert substitute(p, ids.sigma(2)) == Polynomial.var(y(3)) * Polynomial.var(x(2))
    assert ids.apply_tau(2, Polynomial.const(1)) == 1 - lam


@pytest.mark.parametrize("n", range(1, 5))
def test_xixj(n):
    assert ids.check_xixj(n).passed


def test_cf_low_coefficients():
    c = ids.cf_coefficients(3)
    assert c[0] == 1
    assert c[1] == parse_polynomial("1 + p + q")
    assert c[2] == ids.crossing_nesting_polynomial(3)


@pytest.mark.parametrize("n", range(1, 6))
def test_cf_coefficient_properties(n):
    coeff = ids.cf_coefficients(n)[-1]
    assert coeff.coefficient_sum() == dfact(2 * n - 1)
    assert coeff.total_degree() <= n * (n - 1)
    assert substitute(coeff, {P: -lam, Q: lam}) == 1


def test_cf_check_passes():
    assert ids.check_cf(5).passed


def test_pq_integer():
    assert ids.pq_integer(1) == 1
    assert ids.pq_integer(3) == parse_polynomial("p^2 + p*q + q^2")


def test_cofactor_det():
    rows = [[Polynomial.const(v) for v in r] for r in ([2, 1, 0], [1, 3, 1], [0, 1, 4])]
    assert ids.cofactor_det(rows) == 18


def test_vandermonde_at_one():
    assert ids.check_vandermonde1(2).passed


def test_report_line_format():
    r = ids.check_all_ones(2)
    assert r.line() == "all-ones n=2: Pf_l(1) = 1 (3 matchings) ... ok"


def test_failing_report_carries_witness():
    r = ids._report("demo", 2, lam, Polynomial.const(1), "l = 1")
    assert not r.passed
    assert r.line() == "demo n=2: l = 1 ... FAIL [difference: l - 1]"


def test_run_suite_default_and_caps():
    reports = ids.run_suite("all", 2)
    assert [r.name for r in reports] == [n for n in ids.DEFAULT_SUITE for _ in (1, 2)]
    assert all(r.passed for r in reports)
    assert len(ids.run_suite("vandermonde1", 10)) == 3
    with pytest.raises(KeyError):
        ids.run_suite("nosuch", 2)
