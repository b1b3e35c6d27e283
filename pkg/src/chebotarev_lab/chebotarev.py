"""Exact Chebotarev prime counting, weighted prime sums, admissibility
certificates, base change, and error reports.

Counting is exact: every unramified prime up to x is classified through its
Frobenius conjugacy class, and the class counts partition pi(x) minus the
ramified primes.  Sums run over fixed-size prime blocks with a deterministic
reduction order, so results are bit-stable regardless of worker count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import AmbiguousClass, DomainTooSmall, ParameterOutOfRange, UnsupportedSubgroupAction
from .fields import FieldDescriptor, frobenius_data
from .groups import ConjugacyClass, FiniteGroup
from .sieve import PrimeSieve
from .weights import WeightParams, f_eval
from .zfr import EtaProfile

PRIME_BLOCK = 4096


def pi_count(x: float, sieve: PrimeSieve) -> int:
    """pi(x), exactly."""
    return sieve.count_leq(x)


@dataclass(frozen=True)
class ChebotarevCount:
    """One exact class count against its Chebotarev expectation."""

    x: float
    class_label: str
    count: int
    expected: float
    error: float


@dataclass(frozen=True)
class SplittingTally:
    """Counts of every class (and the ramified primes) for p <= x."""

    x: float
    by_class: dict[str, int]
    ramified: int
    unresolved: int

    def total(self) -> int:
        return sum(self.by_class.values()) + self.ramified + self.unresolved


def _tally_block(fd: FieldDescriptor, block: list[int]) -> tuple[dict[str, int], int, int]:
    counts = {c.label: 0 for c in fd.group.classes}
    ramified = 0
    unresolved = 0
    for p in block:
        data = frobenius_data(fd, p)
        if data.ramified:
            ramified += 1
        elif data.conjugacy_class is not None:
            counts[data.conjugacy_class.label] += 1
        else:
            unresolved += 1
    return counts, ramified, unresolved


def splitting_tally(fd: FieldDescriptor, x: float, sieve: PrimeSieve, workers: int = 1) -> SplittingTally:
    """Classify every prime p <= x, in fixed blocks reduced in block order.

    The block partition is independent of ``workers``, so the tally is
    bit-identical for any worker count.
    """
    primes = sieve.upto(x).tolist()
    blocks = [primes[i : i + PRIME_BLOCK] for i in range(0, len(primes), PRIME_BLOCK)]
    if workers > 1 and len(blocks) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_tally_block, [fd] * len(blocks), blocks))
    else:
        results = [_tally_block(fd, block) for block in blocks]
    counts = {c.label: 0 for c in fd.group.classes}
    ramified = 0
    unresolved = 0
    for block_counts, block_ram, block_unres in results:
        for label, value in block_counts.items():
            counts[label] += value
        ramified += block_ram
        unresolved += block_unres
    return SplittingTally(x=x, by_class=counts, ramified=ramified, unresolved=unresolved)


def pi_C_count(
    fd: FieldDescriptor,
    selector: ConjugacyClass | int,
    x: float,
    sieve: PrimeSieve,
) -> ChebotarevCount:
    """pi_C(x, K/Q) for a conjugacy class, or a class union by Frobenius order.

    Passing an int d counts the union of all classes of element order d.
    Raises AmbiguousClass when an exact class is requested but the
    factorization data cannot separate it.
    """
    group = fd.group
    count = 0
    primes = sieve.upto(x).tolist()
    if isinstance(selector, ConjugacyClass):
        size = selector.size
        for p in primes:
            data = frobenius_data(fd, p)
            if data.ramified:
                continue
            if data.conjugacy_class is None:
                if data.frobenius_order == selector.order:
                    raise AmbiguousClass(
                        f"{fd.name}: order-{selector.order} classes are not separated at p={p};"
                        " request the class union instead"
                    )
                continue
            if data.conjugacy_class.index == selector.index:
                count += 1
        label = selector.label
    else:
        d = int(selector)
        size = sum(c.size for c in group.classes_of_order(d))
        if size == 0:
            raise ParameterOutOfRange(f"{group.name} has no elements of order {d}")
        for p in primes:
            data = frobenius_data(fd, p)
            if not data.ramified and data.frobenius_order == d:
                count += 1
        label = f"order={d}"
    expected = size / group.order * pi_count(x, sieve)
    return ChebotarevCount(x=x, class_label=label, count=count, expected=expected, error=count - expected)


# -- admissibility -------------------------------------------------------------


@dataclass(frozen=True)
class AdmissibilityCertificate:
    """Witness that a class admits the base-change subgroup of the error analysis."""

    class_label: str
    subgroup: frozenset[int]
    meets_class: bool
    entire_characters: str
    dedekind_quotient: str
    conditional: bool = False


def is_admissible(
    group: FiniteGroup, cls: ConjugacyClass, strong_artin: bool = False
) -> AdmissibilityCertificate | None:
    """Search for a subgroup H with H cap C nonempty, entire characters, and
    entire zeta_{K^H}/zeta.

    The entire-characters requirement is certified only through "H abelian";
    the entire-quotient requirement through "H normal" or H = G.  Central
    classes always succeed via the cyclic subgroup of a representative.
    Absence of a certificate is a value, not an error.
    """
    members = cls.members
    for h in group.abelian_subgroups():
        if not (h & members):
            continue
        if group.is_normal(h):
            return AdmissibilityCertificate(
                class_label=cls.label,
                subgroup=h,
                meets_class=True,
                entire_characters="H abelian (class field theory)",
                dedekind_quotient="H normal (Aramata-Brauer)",
            )
        if len(h) == group.order:
            return AdmissibilityCertificate(
                class_label=cls.label,
                subgroup=h,
                meets_class=True,
                entire_characters="H abelian (class field theory)",
                dedekind_quotient="H = G",
            )
    if strong_artin:
        full = frozenset(group.elements())
        return AdmissibilityCertificate(
            class_label=cls.label,
            subgroup=full,
            meets_class=True,
            entire_characters="strong Artin conjecture (user-asserted)",
            dedekind_quotient="H = G",
            conditional=True,
        )
    return None


# -- weighted prime sums ---------------------------------------------------------


def psi_weighted_items(
    fd: FieldDescriptor,
    cls: ConjugacyClass,
    params: WeightParams,
    sieve: PrimeSieve,
) -> list[tuple[int, float]]:
    """The (p^k, log p * f(log p^k / log x)) pairs of the weighted prime sum,
    over unramified p with the k-th Frobenius power in cls, ascending in p.

    The weight argument is evaluated as k*log(p)/log(x) so independent
    reimplementations of the same sum produce bit-identical terms.
    """
    x = params.x
    lx = params.log_x
    n_hi = x * math.exp(params.eps)  # supp f ends at 1 + eps/log x
    if n_hi > sieve.limit:
        from .errors import SieveRangeExceeded

        raise SieveRangeExceeded(f"need primes to {n_hi:.0f} but sieve limit is {sieve.limit}")
    group = fd.group
    out: list[tuple[int, float]] = []
    for p in sieve.upto(n_hi).tolist():
        data = frobenius_data(fd, p)
        if data.ramified:
            continue
        if data.conjugacy_class is None:
            raise AmbiguousClass(f"{fd.name}: class not resolvable at p={p}")
        rep = data.conjugacy_class.representative
        logp = math.log(p)
        k = 1
        n = p
        while k * logp <= lx + params.eps:
            if group.class_of(group.power(rep, k)).index == cls.index:
                weight = f_eval(params, k * logp / lx)
                if weight > 0.0:
                    out.append((n, logp * weight))
            k += 1
            n *= p
    return out


def psi_weighted_class(
    fd: FieldDescriptor,
    cls: ConjugacyClass,
    params: WeightParams,
    sieve: PrimeSieve,
) -> float:
    """The weighted sum over unramified prime powers p^k with the k-th power of
    the Frobenius class equal to cls: sum of log p * f(log p^k / log x).

    Realized as a direct sum (the contour definition agrees by Mellin
    inversion) and reduced with exact compensated summation, so the value is
    deterministic and independent of any work partition.
    """
    return math.fsum(v for _, v in psi_weighted_items(fd, cls, params, sieve))


def partial_summation_pi(data: list[tuple[int, float]]) -> float:
    """Convert psi-style weighted data to a pi-style count: the exact Stieltjes
    sum of 1/log n against the point masses.

    On sharp data {(p, log p)} this reproduces the prime count exactly.
    """
    return math.fsum(v / math.log(n) for n, v in data if v != 0.0)


# -- base change -----------------------------------------------------------------


@dataclass(frozen=True)
class BaseChangeCheck:
    """Two-sided exact comparison of pi_C(x, K/Q) with the H-side count."""

    lhs: float
    rhs_bound: float
    pi_c: int
    pi_ch: int
    scale: float
    x: float

    @property
    def passed(self) -> bool:
        return self.lhs <= self.rhs_bound


def _coset_orbit_table(
    group: FiniteGroup, h: frozenset[int], c_h: frozenset[int]
) -> dict[int, list[tuple[int, bool]]]:
    """For each conjugacy class of G: the <sigma>-orbits on G/H as
    (orbit length, Frobenius in C_H) pairs.

    A prime of the fixed field K^H above an unramified p corresponds to an
    orbit of sigma_p on the cosets; its residue degree is the orbit length f
    and its Frobenius class in H is the H-class of g^{-1} sigma^f g for the
    coset representative g.
    """
    h_sorted = sorted(h)
    reps: list[int] = []
    seen: set[int] = set()
    for g in group.elements():
        if g not in seen:
            reps.append(g)
            cos = {group.mul(g, hh) for hh in h_sorted}
            seen |= cos
    coset_index = {}
    for i, g in enumerate(reps):
        for hh in h_sorted:
            coset_index[group.mul(g, hh)] = i
    table: dict[int, list[tuple[int, bool]]] = {}
    for cls in group.classes:
        sigma = cls.representative
        visited = [False] * len(reps)
        orbits: list[tuple[int, bool]] = []
        for i, g in enumerate(reps):
            if visited[i]:
                continue
            length = 0
            j = i
            while not visited[j]:
                visited[j] = True
                j = coset_index[group.mul(sigma, reps[j])]
                length += 1
            frob = group.mul(group.mul(group.inv(g), group.power(sigma, length)), g)
            orbits.append((length, frob in c_h))
        table[cls.index] = orbits
    return table


def base_change_compare(
    fd: FieldDescriptor,
    cls: ConjugacyClass,
    h: frozenset[int],
    x: float,
    sieve: PrimeSieve,
) -> BaseChangeCheck:
    """Check the base-change inequality: pi_C(x, K/Q) compared against
    (|C|/|G|)(|H|/|C_H|) pi_{C_H}(x, K/K^H), within
    (|C|/|G|)([K:Q] sqrt(x) + (2/log 2) log D_K).

    Both sides are counted exactly; the K^H primes come from the coset-orbit
    description of splitting in the fixed field.
    """
    group = fd.group
    if group.subgroup_closure(h) != h:
        raise UnsupportedSubgroupAction("H is not a subgroup")
    meet = sorted(h & cls.members)
    if not meet:
        raise ParameterOutOfRange("H does not meet the conjugacy class")
    g0 = meet[0]
    c_h = frozenset(group.conj(g0, hh) for hh in h)
    try:
        table = _coset_orbit_table(group, h, c_h)
        pi_c = 0
        pi_ch = 0
        for p in sieve.upto(x).tolist():
            data = frobenius_data(fd, p)
            if data.ramified:
                continue
            if data.conjugacy_class is None:
                raise AmbiguousClass(f"{fd.name}: class not resolvable at p={p}")
            if data.conjugacy_class.index == cls.index:
                pi_c += 1
            for length, in_ch in table[data.conjugacy_class.index]:
                if in_ch and p**length <= x:
                    pi_ch += 1
    except AmbiguousClass as exc:
        raise UnsupportedSubgroupAction(str(exc)) from None
    scale = cls.size / group.order * len(h) / len(c_h)
    lhs = abs(pi_c - scale * pi_ch)
    rhs = cls.size / group.order * (
        group.order * math.sqrt(x) + 2.0 / math.log(2.0) * math.log(fd.abs_disc)
    )
    return BaseChangeCheck(lhs=lhs, rhs_bound=rhs, pi_c=pi_c, pi_ch=pi_ch, scale=scale, x=x)


# -- error reports ----------------------------------------------------------------


@dataclass(frozen=True)
class FlexiErrorReport:
    """Actual Chebotarev error next to the eta-driven bound shapes.

    Implicit constants are symbolic (set to 1 in the shape values); the ratio
    columns are diagnostics, never assertions.
    """

    field: str
    class_label: str
    x: float
    actual_error: float
    li_shape: float
    pi_shape: float | None
    li_ratio: float
    pi_ratio: float | None
    eta_field: float
    eta_rational: float
    certificate: AdmissibilityCertificate | None


def flexi_error_report(
    fd: FieldDescriptor,
    cls: ConjugacyClass,
    x: float,
    profile_field: EtaProfile,
    profile_rational: EtaProfile,
    sieve: PrimeSieve,
) -> FlexiErrorReport:
    """|pi_C - (|C|/|G|) pi(x)| with the unconditional two-eta bound shape and,
    when an admissibility certificate exists, the single-eta shape."""
    log_ed = math.log(math.e * fd.abs_disc)
    if x < log_ed**4:
        raise DomainTooSmall(f"x={x} is below (log(e D_K))^4 = {log_ed ** 4:.3f}")
    count = pi_C_count(fd, cls, x, sieve)
    ratio = cls.size / fd.group.order
    lx = math.log(x)
    eta_k = profile_field.eta(x)
    eta_q = profile_rational.eta(x)
    li_shape = ratio * x / lx * (
        math.exp(-eta_k / 8.0) * log_ed + math.exp(-eta_q / 8.0)
    ) + ratio * x**0.75 / lx
    cert = is_admissible(fd.group, cls, strong_artin=fd.strong_artin)
    pi_shape = None
    pi_ratio = None
    if cert is not None:
        pi_shape = ratio * x / lx * math.exp(-eta_k / 8.0) * log_ed + ratio * x**0.75 / lx
        pi_ratio = abs(count.error) / pi_shape if pi_shape > 0 else math.inf
    return FlexiErrorReport(
        field=fd.name,
        class_label=cls.label,
        x=x,
        actual_error=abs(count.error),
        li_shape=li_shape,
        pi_shape=pi_shape,
        li_ratio=abs(count.error) / li_shape if li_shape > 0 else math.inf,
        pi_ratio=pi_ratio,
        eta_field=eta_k,
        eta_rational=eta_q,
        certificate=cert,
    )
