import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chebotarev_lab.arith import divisor_count_power, kronecker_symbol
from chebotarev_lab.artin import (
    LocalRootMultiset,
    Partition,
    coeff_a_K,
    coeff_a_KxK,
    coeff_a_KxK_prime,
    euler_factor_series,
    lambda_vm,
    local_roots,
    log_deriv_taylor_term,
    mertens_partial_sum,
    partitions_of,
    schur,
    series_a_K,
)
from chebotarev_lab.errors import (
    NotCoprimeToDiscriminant,
    ParameterOutOfRange,
    PartitionTooLong,
    RamifiedPrime,
    TruncationInsufficient,
)
from chebotarev_lab.oracles import gaussian_ideal_count


def test_local_roots_examples(catalog):
    r = LocalRootMultiset(frobenius_order=1, group_order=4)
    assert r.multiplicities() == {0: 3}
    assert r.size == 3
    inert = LocalRootMultiset(frobenius_order=6, group_order=6)
    mults = inert.multiplicities()
    assert sum(mults.values()) == 5 and mults.get(0, 0) == 0
    # Q(i) at p=3: the single root -1
    roots = local_roots(catalog["gaussian"], 3)
    assert roots.roots_complex() == [pytest.approx(-1.0)]
    with pytest.raises(RamifiedPrime):
        local_roots(catalog["gaussian"], 2)


def test_euler_factor_series_examples(catalog):
    # split prime (d=1): a(p^k) = C(m+k-1, k)
    z7 = catalog["zeta7"]  # |G| = 6, m = 5
    series = euler_factor_series(z7, 29, 8)  # 29 = 1 mod 7 splits
    assert series == [math.comb(5 + k - 1, k) for k in range(9)]
    # Q(i) at p=3: (1-T)/(1-T^2) = 1/(1+T)
    assert euler_factor_series(catalog["gaussian"], 3, 6) == [(-1) ** k for k in range(7)]
    # cyclic C3 inert: (1-T)(1+T^3+T^6+...) by long division
    series = euler_factor_series(catalog["cyclo7plus"], 2, 7)
    assert series == [1, -1, 0, 1, -1, 0, 1, -1]
    with pytest.raises(ParameterOutOfRange):
        euler_factor_series(catalog["gaussian"], 3, 25)


def test_coeff_a_K_examples(catalog):
    g = catalog["gaussian"]
    assert coeff_a_K(g, 1) == 1
    assert coeff_a_K(g, 15) == -1  # chi(3) chi(5) = (-1)(1)
    assert coeff_a_K(g, 9) == 1
    with pytest.raises(NotCoprimeToDiscriminant):
        coeff_a_K(g, 6)


def test_quadratic_character_equivalence(catalog):
    for name, disc in (("gaussian", -4), ("sqrt5", 5)):
        fd = catalog[name]
        for n in range(1, 2001):
            if math.gcd(n, abs(disc)) == 1:
                assert coeff_a_K(fd, n) == kronecker_symbol(disc, n), (name, n)


@settings(max_examples=120, deadline=None)
@given(st.integers(2, 400), st.integers(2, 400))
def test_a_K_multiplicative(n, m):
    fd_cache = test_a_K_multiplicative._fd
    if math.gcd(n, m) != 1 or math.gcd(n * m, fd_cache.abs_disc) != 1:
        return
    assert coeff_a_K(fd_cache, n * m) == coeff_a_K(fd_cache, n) * coeff_a_K(fd_cache, m)


def _attach_field():
    from chebotarev_lab.fields import builtin_field

    test_a_K_multiplicative._fd = builtin_field("zeta5")


_attach_field()


def test_zeta_consistency_ideal_counts(catalog):
    # coefficients of zeta * L(chi_K) match Z[i] ideal counts for n <= 1000
    g = catalog["gaussian"]
    series = series_a_K(g, 1000)
    for n in range(1, 1001):
        conv = sum(series.coeffs.get(d, 0) for d in range(1, n + 1) if n % d == 0)
        assert conv == gaussian_ideal_count(n), n


def test_partitions():
    parts = partitions_of(6, max_length=3)
    assert all(p.weight == 6 and p.length <= 3 for p in parts)
    assert len(partitions_of(6)) == 11
    assert partitions_of(0) == [Partition(())]
    with pytest.raises(ParameterOutOfRange):
        Partition((1, 2))


def test_schur_examples():
    ones = LocalRootMultiset(frobenius_order=1, group_order=3)  # {1, 1}
    assert schur(Partition(()), ones) == 1
    assert schur(Partition((1,)), ones) == 2
    # s_(2,1)(a, b) = ab(a + b) -> 2 at a = b = 1
    assert schur(Partition((2, 1)), ones) == 2
    with pytest.raises(PartitionTooLong):
        schur(Partition((1, 1, 1)), ones)


def test_schur_vanishing_beyond_variable_count():
    # Jacobi-Trudi gives 0 when the partition is longer than the multiset
    roots = LocalRootMultiset(frobenius_order=2, group_order=4)  # {1, -1, -1}
    ell4 = Partition((2, 1, 1, 1))
    mat = [[roots.h(ell4.parts[i] - (i + 1) + (j + 1)) for j in range(4)] for i in range(4)]
    from chebotarev_lab.arith import int_det

    assert int_det(mat) == 0


def test_cauchy_prime_power_values(catalog):
    g = catalog["gaussian"]
    assert coeff_a_KxK_prime(g, g, 3, 0) == 1
    assert coeff_a_KxK_prime(g, g, 3, 1) == coeff_a_K(g, 3) * coeff_a_K(g, 3) == 1
    # Euler-product oracle value: alpha = alpha' = -1 gives (1 - T)^{-1}
    assert coeff_a_KxK_prime(g, g, 3, 2) == 1
    with pytest.raises(RamifiedPrime):
        coeff_a_KxK_prime(g, g, 2, 1)


def test_a_KxK_multiplicative_and_bounded(catalog):
    g, z5 = catalog["gaussian"], catalog["zeta5"]
    v3 = coeff_a_KxK(g, z5, 3)
    v7 = coeff_a_KxK(g, z5, 7)
    assert coeff_a_KxK(g, z5, 21) == v3 * v7
    assert coeff_a_KxK(g, z5, 1) == 1
    # |a_{KxK'}(n)| <= d_{m^2}(n), the coefficient of zeta^{m^2}
    for n in (3, 7, 9, 21, 49, 63):
        assert abs(coeff_a_KxK(z5, z5, n)) <= divisor_count_power(n, z5.m**2)
    # m = 1: d_1(n) = 1 bounds everything
    for n in (3, 7, 11, 21, 33, 77):
        assert abs(coeff_a_KxK(g, g, n)) <= 1


def test_lambda_examples(catalog):
    g = catalog["gaussian"]
    assert lambda_vm(g, 6) == 0.0
    assert lambda_vm(g, 3) == pytest.approx(-math.log(3))
    assert lambda_vm(g, 9) == pytest.approx(math.log(3))
    with pytest.raises(RamifiedPrime):
        lambda_vm(g, 4)


def test_mertens_bound_all_fields(catalog):
    for name in ("rational", "gaussian", "sqrt5", "zeta5", "cyclo7plus", "zeta7", "s3cubic"):
        fd = catalog[name]
        for eta in (0.1, 0.5, 1.0, 2.0):
            val = mertens_partial_sum(fd, eta, 2000)
            assert val <= fd.m / eta + 1e-12, (name, eta, val)


def test_mertens_oracle_value(catalog):
    # direct-summation oracle (reverse evaluation order) for Q(i), eta=1, N=1e4
    fd = catalog["gaussian"]
    value = mertens_partial_sum(fd, 1.0, 10**4)
    terms = []
    for p in range(10**4, 2, -1):
        if any(p % d == 0 for d in range(2, int(math.isqrt(p)) + 1)):
            continue
        pk = p
        while pk <= 10**4:
            terms.append(math.log(p) / pk**2)
            pk *= p
    oracle = sum(terms)  # plain sum, reversed order
    assert value == pytest.approx(oracle, abs=1e-10)
    assert value == pytest.approx(0.3388120850385017, abs=1e-12)
    assert value < 1.0  # m / eta


def test_log_deriv_taylor_term(catalog):
    g = catalog["gaussian"]
    # k = 0, tau = 0, eta = 1: eta * |sum| <= m/eta by the absolute-value bound
    t0 = log_deriv_taylor_term(g, 0, 1.0, 0.0, 10**4)
    assert t0.magnitude <= 1.0
    # k = 1 matches the independent reversed-order oracle to 1e-8
    t1 = log_deriv_taylor_term(g, 1, 1.0, 0.0, 10**4)
    terms = []
    for p in range(10**4, 2, -1):
        if any(p % d == 0 for d in range(2, int(math.isqrt(p)) + 1)):
            continue
        lam = 1 if p % 4 == 1 else -1
        pk, k = p, 1
        while pk <= 10**4:
            lam_k = 1 if (lam == 1 or k % 2 == 0) else -1
            logn = k * math.log(p)
            terms.append(lam_k * math.log(p) * logn / pk**2)
            pk *= p
            k += 1
    oracle = abs(sum(terms))  # eta^(k+1)/k! = 1
    assert t1.magnitude == pytest.approx(oracle, abs=1e-8)
    # large k: the truncated value shrinks far below 1e-8, certificate passes at 1e-8
    t40 = log_deriv_taylor_term(g, 40, 0.5, 0.0, 10**4, tail_tol=1e-8)
    assert t40.magnitude < 1e-8
    assert t40.tail_bound < 1e-8
    with pytest.raises(TruncationInsufficient):
        log_deriv_taylor_term(g, 1, 1.0, 0.0, 10**4, tail_tol=1e-8)
    with pytest.raises(ParameterOutOfRange):
        log_deriv_taylor_term(g, 41, 0.5)


def test_series_multiplicative(catalog):
    series = series_a_K(catalog["sqrt5"], 300)
    assert series.check_multiplicative()
    from chebotarev_lab.artin import series_a_KxK

    pair = series_a_KxK(catalog["gaussian"], catalog["zeta5"], 150)
    assert pair.check_multiplicative()


def test_local_roots_conjugation_closed(nontrivial_fields, sieve_small):
    # A_K(p) closed under complex conjugation: the multiset of residues r is
    # closed under r -> d - r; power sums (hence all coefficients) are real
    for fd in nontrivial_fields:
        for p in sieve_small.upto(60).tolist():
            if fd.is_ramified(p):
                continue
            roots = local_roots(fd, p)
            mults = roots.multiplicities()
            d = roots.frobenius_order
            assert all(mults[r] == mults[(d - r) % d] for r in mults)
            total = sum(roots.roots_complex())
            assert abs(total.imag) < 1e-10
