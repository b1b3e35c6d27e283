"""Dirichlet coefficients of zeta_K/zeta and their symmetric-function layer.

At an unramified prime with Frobenius order d in a group of order |G|, the
local roots are the d-th roots of unity with multiplicity |G|/d, minus one
copy of 1.  The generating function of the complete homogeneous values h_k at
such a multiset is (1 - T) / (1 - T^d)^{|G|/d}, which has integer
coefficients, so every h_k, every Jacobi-Trudi Schur value, and every
coefficient a_K(n), a_{KxK'}(n) computed here is an exact integer.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

from .arith import factorize, int_det
from .errors import (
    NotCoprimeToDiscriminant,
    ParameterOutOfRange,
    PartitionTooLong,
    RamifiedPrime,
    TruncationInsufficient,
)
from .fields import FieldDescriptor, frobenius_data
from .sieve import PrimeSieve, sieve_primes

MAX_PRIME_POWER_TRUNCATION = 24
MAX_RANKIN_SELBERG_J = 8
TAIL_CERTIFICATE_BOUND = 1e-8


@dataclass(frozen=True)
class LocalRootMultiset:
    """The multiset A_K(p): d-th roots of unity with multiplicity |G|/d, one 1 removed."""

    frobenius_order: int
    group_order: int

    def __post_init__(self):
        if self.frobenius_order < 1 or self.group_order % self.frobenius_order != 0:
            raise ParameterOutOfRange(
                f"Frobenius order {self.frobenius_order} must divide |G| = {self.group_order}"
            )

    @property
    def size(self) -> int:
        """m = |G| - 1, the total multiplicity."""
        return self.group_order - 1

    def multiplicities(self) -> dict[int, int]:
        """Map r -> multiplicity of the root exp(2 pi i r / d)."""
        g = self.group_order // self.frobenius_order
        out = {r: g for r in range(self.frobenius_order)}
        out[0] -= 1
        if out[0] == 0:
            del out[0]
        return out

    def roots_complex(self) -> list[complex]:
        d = self.frobenius_order
        out: list[complex] = []
        for r, mult in sorted(self.multiplicities().items()):
            out.extend([cmath.exp(2j * cmath.pi * r / d)] * mult)
        return out

    def h(self, k: int) -> int:
        """Complete homogeneous symmetric value h_k at the multiset (exact)."""
        return _homogeneous(self.frobenius_order, self.group_order, k)

    def power_sum(self, k: int) -> int:
        """p_k at the multiset: |G| when d | k, minus the removed root's 1^k."""
        if k == 0:
            return self.size
        return (self.group_order if k % self.frobenius_order == 0 else 0) - 1


@lru_cache(maxsize=None)
def _homogeneous(d: int, group_order: int, k: int) -> int:
    # coefficient of T^k in (1 - T) (1 - T^d)^{-|G|/d}
    if k < 0:
        return 0
    g = group_order // d

    def full(j: int) -> int:
        return math.comb(g - 1 + j // d, j // d) if j % d == 0 and j >= 0 else 0

    return full(k) - full(k - 1)


def local_roots(fd: FieldDescriptor, p: int) -> LocalRootMultiset:
    """A_K(p) for an unramified prime p."""
    data = frobenius_data(fd, p)
    if data.ramified:
        raise RamifiedPrime(f"{fd.name}: p={p} is ramified")
    return LocalRootMultiset(frobenius_order=data.frobenius_order, group_order=fd.group.order)


def euler_factor_series(fd: FieldDescriptor, p: int, n_terms: int) -> list[int]:
    """a_K(p^k) for k = 0..n_terms, from the local Euler factor at p."""
    if n_terms > MAX_PRIME_POWER_TRUNCATION:
        raise ParameterOutOfRange(f"prime-power truncation capped at {MAX_PRIME_POWER_TRUNCATION}")
    roots = local_roots(fd, p)
    return [roots.h(k) for k in range(n_terms + 1)]


def coeff_a_K(fd: FieldDescriptor, n: int, sieve: PrimeSieve | None = None) -> int:
    """a_K(n) for n coprime to D_K (exact integer)."""
    if n < 1:
        raise ParameterOutOfRange("n must be >= 1")
    if math.gcd(n, fd.abs_disc) != 1:
        raise NotCoprimeToDiscriminant(f"n={n} shares a factor with D_K={fd.disc_field}")
    out = 1
    for p, e in factorize(n).items():
        out *= local_roots(fd, p).h(e)
    return out


# -- partitions and Schur values ---------------------------------------------


@dataclass(frozen=True)
class Partition:
    """A partition: nonincreasing positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(a < 1 for a in self.parts):
            raise ParameterOutOfRange("partition parts must be positive")
        if any(self.parts[i] < self.parts[i + 1] for i in range(len(self.parts) - 1)):
            raise ParameterOutOfRange("partition parts must be nonincreasing")

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)


def partitions_of(n: int, max_length: int | None = None) -> list[Partition]:
    """All partitions of n with at most max_length parts, descending-lex order."""
    cap = n if max_length is None else max_length

    def rec(remaining: int, largest: int, slots: int) -> list[tuple[int, ...]]:
        if remaining == 0:
            return [()]
        if slots == 0:
            return []
        out = []
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first, slots - 1):
                out.append((first,) + rest)
        return out

    return [Partition(t) for t in rec(n, n, cap)]


def schur(partition: Partition, roots: LocalRootMultiset) -> int:
    """s_lambda at the local-root multiset, by Jacobi-Trudi in the h_k (exact).

    The determinant in complete homogeneous values avoids the bialternant's
    0/0 at repeated roots; for these conjugation-closed multisets the result
    is a rational integer.
    """
    if roots.size == 0:
        return 1 if partition.weight == 0 else 0
    if partition.length > roots.size:
        raise PartitionTooLong(
            f"partition length {partition.length} exceeds the multiset size {roots.size}"
        )
    ell = partition.length
    if ell == 0:
        return 1
    mat = [[roots.h(partition.parts[i] - (i + 1) + (j + 1)) for j in range(ell)] for i in range(ell)]
    return int_det(mat)


def coeff_a_KxK_prime(fd1: FieldDescriptor, fd2: FieldDescriptor, p: int, j: int) -> int:
    """a_{K x K'}(p^j): Cauchy sum of paired Schur values over partitions of j."""
    if j < 0 or j > MAX_RANKIN_SELBERG_J:
        raise ParameterOutOfRange(f"Rankin-Selberg exponent capped at {MAX_RANKIN_SELBERG_J}")
    if fd1.is_ramified(p) or fd2.is_ramified(p):
        raise RamifiedPrime(f"p={p} ramifies in {fd1.name} or {fd2.name}")
    if j == 0:
        return 1
    a1 = local_roots(fd1, p)
    a2 = local_roots(fd2, p)
    ell_cap = min(a1.size, a2.size)
    total = 0
    for lam in partitions_of(j, max_length=ell_cap):
        total += schur(lam, a1) * schur(lam, a2)
    return total


def coeff_a_KxK(
    fd1: FieldDescriptor, fd2: FieldDescriptor, n: int, sieve: PrimeSieve | None = None
) -> int:
    """Multiplicative extension of the Rankin-Selberg prime-power coefficients."""
    if n < 1:
        raise ParameterOutOfRange("n must be >= 1")
    if math.gcd(n, fd1.abs_disc * fd2.abs_disc) != 1:
        raise NotCoprimeToDiscriminant(
            f"n={n} shares a factor with D_K D_K' = {fd1.abs_disc * fd2.abs_disc}"
        )
    out = 1
    for p, e in factorize(n).items():
        out *= coeff_a_KxK_prime(fd1, fd2, p, e)
    return out


# -- von Mangoldt data ---------------------------------------------------------


def lambda_exact(fd: FieldDescriptor, p: int, k: int) -> int:
    """lambda_K(p^k) = sum of k-th powers of the local roots (exact integer)."""
    return local_roots(fd, p).power_sum(k)


def lambda_vm(fd: FieldDescriptor, n: int) -> float:
    """lambda_K(n) Lambda(n): zero unless n = p^k with p unramified."""
    if n < 2:
        raise ParameterOutOfRange("n must be >= 2")
    fac = factorize(n)
    if len(fac) != 1:
        return 0.0
    (p, k), = fac.items()
    if fd.is_ramified(p):
        raise RamifiedPrime(f"{fd.name}: p={p} is ramified")
    return lambda_exact(fd, p, k) * math.log(p)


def mertens_partial_sum(
    fd: FieldDescriptor, eta: float, n_max: int, sieve: PrimeSieve | None = None
) -> float:
    """Partial sum of |lambda_K(n) Lambda(n)| / n^(1+eta) over unramified prime
    powers n <= n_max; bounded by m/eta."""
    if eta <= 0:
        raise ParameterOutOfRange("eta must be positive")
    if n_max < 100:
        raise ParameterOutOfRange("truncation must be at least 100")
    if sieve is None or sieve.limit < n_max:
        sieve = sieve_primes(n_max)
    terms = []
    for p in sieve.upto(n_max).tolist():
        if fd.is_ramified(p):
            continue
        roots = local_roots(fd, p)
        logp = math.log(p)
        pk = p
        k = 1
        while pk <= n_max:
            terms.append(abs(roots.power_sum(k)) * logp / pk ** (1.0 + eta))
            pk *= p
            k += 1
    return math.fsum(terms)


@dataclass(frozen=True)
class TaylorTermValue:
    """One truncated Taylor-coefficient magnitude of -L'/L with its certificate."""

    value: complex
    magnitude: float
    tail_bound: float
    k: int
    eta: float
    tau: float
    truncation: int


def log_deriv_taylor_term(
    fd: FieldDescriptor,
    k: int,
    eta: float,
    tau: float = 0.0,
    n_max: int = 10**4,
    sieve: PrimeSieve | None = None,
    tail_tol: float | None = None,
) -> TaylorTermValue:
    """(eta^(k+1)/k!) sum over unramified prime powers of
    lambda_K(n) Lambda(n) (log n)^k n^(-s0) truncated at n_max, s0 = 1+eta+i tau.

    The geometric-tail certificate m * n_max^(-eta/2) * 2^(-k) is attached to
    the result; when ``tail_tol`` is given (typically 1e-8) the call raises
    TruncationInsufficient if the certificate does not meet it.
    """
    if not (0 < eta <= 1):
        raise ParameterOutOfRange("eta must lie in (0, 1]")
    if k < 0 or k > 40:
        raise ParameterOutOfRange("k must lie in [0, 40]")
    m = fd.m
    tail = m * n_max ** (-eta / 2.0) * 2.0 ** (-k)
    if tail_tol is not None and tail >= tail_tol:
        raise TruncationInsufficient(
            f"tail certificate {tail:.3e} at N={n_max} exceeds {tail_tol:.0e}"
        )
    if sieve is None or sieve.limit < n_max:
        sieve = sieve_primes(n_max)
    re_terms: list[float] = []
    im_terms: list[float] = []
    for p in sieve.upto(n_max).tolist():
        if fd.is_ramified(p):
            continue
        roots = local_roots(fd, p)
        logp = math.log(p)
        pk = p
        kk = 1
        while pk <= n_max:
            lam = roots.power_sum(kk)
            if lam != 0:
                logn = kk * logp
                amp = lam * logp * logn**k * pk ** (-(1.0 + eta))
                phase = cmath.exp(-1j * tau * logn)
                re_terms.append(amp * phase.real)
                im_terms.append(amp * phase.imag)
            pk *= p
            kk += 1
    factor = eta ** (k + 1) / math.factorial(k)
    value = factor * complex(math.fsum(re_terms), math.fsum(im_terms))
    return TaylorTermValue(
        value=value,
        magnitude=abs(value),
        tail_bound=tail,
        k=k,
        eta=eta,
        tau=tau,
        truncation=n_max,
    )


# -- truncated Dirichlet series -------------------------------------------------


@dataclass(frozen=True)
class CoefficientSeries:
    """Exact coefficients n -> a(n), n <= truncation, n coprime to the conductor."""

    coeffs: dict[int, int]
    truncation: int

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def check_multiplicative(self) -> bool:
        for n in self.coeffs:
            for q in self.coeffs:
                if n * q > self.truncation or math.gcd(n, q) != 1:
                    continue
                if self.coeffs[n * q] != self.coeffs[n] * self.coeffs[q]:
                    return False
        return True


def series_a_K(fd: FieldDescriptor, n_max: int) -> CoefficientSeries:
    """a_K(n) for every n <= n_max coprime to D_K."""
    coeffs: dict[int, int] = {}
    for n in range(1, n_max + 1):
        if math.gcd(n, fd.abs_disc) == 1:
            coeffs[n] = coeff_a_K(fd, n)
    return CoefficientSeries(coeffs=coeffs, truncation=n_max)


def series_a_KxK(fd1: FieldDescriptor, fd2: FieldDescriptor, n_max: int) -> CoefficientSeries:
    """a_{K x K'}(n) for every n <= n_max coprime to D_K D_K'."""
    coeffs: dict[int, int] = {}
    modulus = fd1.abs_disc * fd2.abs_disc
    for n in range(1, n_max + 1):
        if math.gcd(n, modulus) == 1:
            coeffs[n] = coeff_a_KxK(fd1, fd2, n)
    return CoefficientSeries(coeffs=coeffs, truncation=n_max)
