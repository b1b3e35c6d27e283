"""Exact large-sieve quantities: mean-value integrals of Dirichlet
polynomials, the dual coefficient sums, and bound-shape reports.

The left-hand sides are computed exactly (closed form or nested sums); the
right-hand sides of the averaged inequalities carry implicit constants, so
reports emit their shapes and empirical ratios without asserting anything.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .artin import coeff_a_K
from .errors import ParameterOutOfRange, ValidationError
from .fields import FieldDescriptor
from .sieve import PrimeSieve


@dataclass(frozen=True)
class DirichletPolynomial:
    """Finite-support map n -> c(n) defining sum c(n) n^{-it}."""

    terms: dict[int, complex]

    def __post_init__(self):
        for n, c in self.terms.items():
            if n < 1:
                raise ValidationError(f"support must be positive integers, got {n}")
            if not (math.isfinite(c.real) and math.isfinite(c.imag)):
                raise ValidationError(f"coefficient at {n} is not finite")

    @property
    def support(self) -> list[int]:
        return sorted(n for n, c in self.terms.items() if c != 0)


def msq_integral(poly: DirichletPolynomial, t_height: float) -> float:
    """int_{-T}^{T} |sum c(n) n^{-it}|^2 dt, in closed form.

    Diagonal terms give 2T |c(n)|^2; off-diagonal pairs give
    2 Re[c(n) conj(c(q))] sin(T log(q/n)) / log(q/n).
    """
    if t_height <= 0:
        raise ParameterOutOfRange("T must be positive")
    ns = poly.support
    if not ns:
        return 0.0
    c = np.array([poly.terms[n] for n in ns], dtype=complex)
    logn = np.log(np.array(ns, dtype=float))
    diff = logn[None, :] - logn[:, None]  # log(q/n) at [n, q]
    kernel = np.where(diff == 0.0, 2.0 * t_height, 2.0 * np.sin(t_height * diff) / np.where(diff == 0.0, 1.0, diff))
    gram = np.outer(c, np.conjugate(c))
    return float(np.real(np.sum(gram * kernel)))


@dataclass(frozen=True)
class FamilyWindow:
    """A family of fields with the window parameters of the averaged sums."""

    fields: tuple[FieldDescriptor, ...]
    q_bound: float
    t_height: float = 1.0
    x: float | None = None
    y: float | None = None
    u: float | None = None

    def __post_init__(self):
        for fd in self.fields:
            if fd.abs_disc > self.q_bound:
                raise ValidationError(f"{fd.name}: |D_K| = {fd.abs_disc} exceeds Q = {self.q_bound}")
        if self.y is not None:
            if self.y < 1:
                raise ValidationError("y must be >= 1")
            if self.u is not None and self.u < self.y:
                raise ValidationError("u must be >= y")

    @property
    def m(self) -> int:
        if not self.fields:
            raise ValidationError("empty family")
        orders = {fd.group.order for fd in self.fields}
        if len(orders) != 1:
            raise ValidationError("family mixes group orders")
        return orders.pop() - 1


def pre_large_sieve_lhs(window: FamilyWindow, b, x: float, t_height: float) -> float:
    """sum over K of |sum over n in (x, x e^{1/T}], (n, D_K) = 1 of a_K(n) b(n)|^2.

    ``b`` maps integers to complex numbers (callable or mapping).
    """
    if t_height <= 0 or x < 1:
        raise ParameterOutOfRange("need T > 0 and x >= 1")
    get = b.get if hasattr(b, "get") else lambda n, _default=0: b(n)
    lo = x
    hi = x * math.exp(1.0 / t_height)
    ns = [n for n in range(int(math.floor(lo)) + 1, int(math.floor(hi)) + 1) if lo < n <= hi]
    total = 0.0
    for fd in window.fields:
        acc = 0j
        for n in ns:
            coeff = get(n, 0)
            if coeff == 0 or math.gcd(n, fd.abs_disc) != 1:
                continue
            acc += coeff_a_K(fd, n) * coeff
        total += abs(acc) ** 2
    return total


def prime_polynomial(fd: FieldDescriptor, y: float, u: float, sieve: PrimeSieve) -> DirichletPolynomial:
    """c(p) = a_K(p) log p / p over the window y < p <= u, unramified p."""
    terms: dict[int, complex] = {}
    for p in sieve.window(y, u).tolist():
        if fd.is_ramified(p):
            continue
        terms[p] = coeff_a_K(fd, p) * math.log(p) / p
    return DirichletPolynomial(terms)


def mvt_primes_lhs(window: FamilyWindow, sieve: PrimeSieve) -> float:
    """sum over K of the mean-value integral of the prime polynomial."""
    if window.y is None or window.u is None:
        raise ParameterOutOfRange("window needs y and u")
    total = 0.0
    for fd in window.fields:
        poly = prime_polynomial(fd, window.y, window.u, sieve)
        if poly.support:
            total += msq_integral(poly, window.t_height)
    return total


# -- bound-shape reports --------------------------------------------------------


@dataclass(frozen=True)
class BoundReport:
    """Exact LHS next to the averaged bound's RHS shape; constants stay symbolic.

    ``rhs_shape_log`` is the natural log of the shape with implicit constant
    1; ``ratio_log`` is log(lhs) - rhs_shape_log when the lhs is available.
    The inequality itself is never asserted.
    """

    kind: str
    params: dict
    lhs: float | None
    rhs_shape_log: float
    ratio_log: float | None
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def rhs_shape(self) -> float:
        try:
            return math.exp(self.rhs_shape_log)
        except OverflowError:
            return math.inf


def zero_density_report(
    window: FamilyWindow, sigma: float, multiplicity: int, lhs: float | None = None
) -> BoundReport:
    """Shape m_F(Q) (QT)^{1e7 m^3 (1 - sigma)} (log QT)^{2 m^2} of the
    zero-density estimate; reported in log scale."""
    if not (0.5 <= sigma <= 1.0):
        raise ParameterOutOfRange("sigma must lie in [1/2, 1]")
    m = window.m
    qt = window.q_bound * window.t_height
    if qt <= 1:
        raise ParameterOutOfRange("need QT > 1")
    rhs_log = (
        math.log(multiplicity)
        + 1e7 * m**3 * (1.0 - sigma) * math.log(qt)
        + 2.0 * m**2 * math.log(math.log(qt))
    )
    notes = (f"field-count display: #F(Q) << Q^{52 * (m + 1)}",)
    return BoundReport(
        kind="zero-density",
        params={"sigma": sigma, "Q": window.q_bound, "T": window.t_height, "m": m, "m_F": multiplicity},
        lhs=lhs,
        rhs_shape_log=rhs_log,
        ratio_log=(math.log(lhs) - rhs_log) if lhs not in (None, 0.0) else None,
        notes=notes,
    )


def mvt_report(window: FamilyWindow, multiplicity: int, sieve: PrimeSieve) -> BoundReport:
    """Mean-value report: exact LHS against (log y)^{2 m^2} m_F(Q) log u.

    Tags the result when the window start does not honor the admissible range
    y >= (QT)^{108 (m+1)} with implicit constant 1.
    """
    if window.y is None or window.u is None:
        raise ParameterOutOfRange("window needs y and u")
    m = window.m
    lhs = mvt_primes_lhs(window, sieve)
    rhs_log = (
        2.0 * m**2 * math.log(math.log(window.y))
        + math.log(multiplicity)
        + math.log(math.log(window.u))
    )
    notes = []
    floor_log = 108 * (m + 1) * math.log(window.q_bound * window.t_height)
    if math.log(window.y) < floor_log:
        notes.append(
            "window start y=%g is below the literal admissible floor (QT)^(108(m+1)) = exp(%.4g)"
            % (window.y, floor_log)
        )
    if math.log(window.u) > 12000 * math.log(window.y):
        notes.append("window end exceeds y^12000")
    return BoundReport(
        kind="mean-value",
        params={
            "Q": window.q_bound,
            "T": window.t_height,
            "y": window.y,
            "u": window.u,
            "m": m,
            "m_F": multiplicity,
        },
        lhs=lhs,
        rhs_shape_log=rhs_log,
        ratio_log=(math.log(lhs) - rhs_log) if lhs > 0 else None,
        notes=tuple(notes),
    )
