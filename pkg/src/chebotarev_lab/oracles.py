"""Independent oracles used by the test suite and the CLI selftests.

Each oracle recomputes a quantity along a different route from the production
code: brute-force expansion, quadrature, residue arithmetic, or grid search.
They are deliberately simple and never share the code path they check.
"""

from __future__ import annotations

import math

import numpy as np

from .artin import local_roots
from .fields import FieldDescriptor
from .large_sieve import DirichletPolynomial
from .weights import WeightParams

# -- quadrature ---------------------------------------------------------------


def adaptive_simpson(f, a: float, b: float, tol: float = 1e-10, max_depth: int = 60) -> float:
    """Recursive adaptive Simpson integration of a real integrand."""

    def simpson(lo: float, hi: float, flo: float, fmid: float, fhi: float) -> float:
        return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi)

    def rec(lo, hi, flo, fmid, fhi, whole, eps, depth):
        mid = 0.5 * (lo + hi)
        lm = 0.5 * (lo + mid)
        rm = 0.5 * (mid + hi)
        flm = f(lm)
        frm = f(rm)
        left = simpson(lo, mid, flo, flm, fmid)
        right = simpson(mid, hi, fmid, frm, fhi)
        if depth <= 0 or abs(left + right - whole) <= 15.0 * eps:
            return left + right + (left + right - whole) / 15.0
        return rec(lo, mid, flo, flm, fmid, left, eps / 2.0, depth - 1) + rec(
            mid, hi, fmid, frm, fhi, right, eps / 2.0, depth - 1
        )

    fa, fm, fb = f(a), f(0.5 * (a + b)), f(b)
    whole = simpson(a, b, fa, fm, fb)
    return rec(a, b, fa, fm, fb, whole, tol, max_depth)


def msq_integral_quadrature(poly: DirichletPolynomial, t_height: float, tol: float = 1e-10) -> float:
    """The mean-value integral by adaptive Simpson on |sum c(n) n^{-it}|^2."""
    ns = poly.support
    if not ns:
        return 0.0
    coeffs = np.array([poly.terms[n] for n in ns])
    logs = np.log(np.array(ns, dtype=float))

    def integrand(t: float) -> float:
        return abs(np.sum(coeffs * np.exp(-1j * t * logs))) ** 2

    return adaptive_simpson(integrand, -t_height, t_height, tol=tol)


# -- Rankin-Selberg Euler product ------------------------------------------------


def rs_product_coefficients(
    fd1: FieldDescriptor, fd2: FieldDescriptor, p: int, j_max: int
) -> list[complex]:
    """Coefficients of prod over root pairs (1 - alpha alpha' T)^{-1} up to T^{j_max},
    by direct series multiplication over the complex local roots."""
    roots1 = local_roots(fd1, p).roots_complex()
    roots2 = local_roots(fd2, p).roots_complex()
    series = [0j] * (j_max + 1)
    series[0] = 1.0 + 0j
    for a in roots1:
        for b in roots2:
            beta = a * b
            # multiply by the geometric series of beta: new[k] = old[k] + beta new[k-1]
            for k in range(1, j_max + 1):
                series[k] = series[k] + beta * series[k - 1]
    return series


# -- Gallagher window integral -----------------------------------------------------


def gallagher_window_integral(terms: dict[int, complex], t_height: float) -> float:
    """int_0^infty |sum over n in (x, x e^{1/T}] of c(n)|^2 dx/x, exactly.

    The window sum is piecewise constant in x; the breakpoints are n and
    n e^{-1/T} for n in the support.
    """
    ns = sorted(n for n, c in terms.items() if c != 0)
    if not ns:
        return 0.0
    shrink = math.exp(-1.0 / t_height)
    points = sorted({float(n) for n in ns} | {n * shrink for n in ns})
    total = 0.0
    for lo, hi in zip(points[:-1], points[1:]):
        if hi <= lo:
            continue
        mid = math.sqrt(lo * hi)
        window = sum(c for n, c in terms.items() if mid < n <= mid / shrink)
        if window != 0:
            total += abs(window) ** 2 * math.log(hi / lo)
    return total


# -- prime counting ------------------------------------------------------------------


def segmented_sieve_count(limit: int, segment: int = 1 << 16) -> int:
    """pi(limit) by a segmented sieve, independent of the numpy sieve."""
    if limit < 2:
        return 0
    root = int(math.isqrt(limit))
    base = []
    is_p = bytearray([1]) * (root + 1)
    for i in range(2, root + 1):
        if is_p[i]:
            base.append(i)
            for j in range(i * i, root + 1, i):
                is_p[j] = 0
    count = len(base)
    lo = root + 1
    while lo <= limit:
        hi = min(lo + segment - 1, limit)
        mark = bytearray([1]) * (hi - lo + 1)
        for p in base:
            start = max(p * p, (lo + p - 1) // p * p)
            for j in range(start, hi + 1, p):
                mark[j - lo] = 0
        count += sum(mark)
        lo = hi + 1
    return count


def trial_division_primes(limit: int) -> list[int]:
    out = []
    for n in range(2, limit + 1):
        if all(n % d for d in range(2, int(math.isqrt(n)) + 1)):
            out.append(n)
    return out


# -- weight function ------------------------------------------------------------------


def _laplace_F_vectorized(params: WeightParams, z: complex, omegas: np.ndarray) -> np.ndarray:
    """F(z + i omega) for an array of omegas (same closed form, vectorized)."""
    length = 0.5 + params.eps / params.log_x
    w = params.boxcar_width
    zz = z + 1j * omegas

    def phi(y):
        small = np.abs(y) < 1e-6
        safe = np.where(small, 1.0, y)
        main = (np.exp(safe) - 1.0) / safe
        taylor = 1.0 + y / 2.0 + y**2 / 6.0 + y**3 / 24.0
        return np.where(small, taylor, main)

    return np.exp(-(1.0 + params.eps / params.log_x) * zz) * length * phi(length * zz) * phi(w * zz) ** 2


def fourier_inversion_f(params: WeightParams, t: float, tol: float = 5e-9) -> float:
    """Recover f(t) from the closed-form transform by numeric Fourier inversion.

    f(t) = (1/pi) int_0^infty Re(F(i omega) e^{i omega t}) d omega, truncated
    where the |F| <= 8/(w^2 omega^3) tail integral drops below tol/2.
    """
    w = params.boxcar_width
    cutoff = math.sqrt(8.0 / (math.pi * w * w * tol))
    nodes, weights = np.polynomial.legendre.leggauss(16)
    panel = math.pi / max(1.0, abs(t))
    n_panels = int(cutoff / panel) + 1
    total = 0.0
    chunk = 20_000
    for start in range(0, n_panels, chunk):
        stop = min(start + chunk, n_panels)
        lows = (np.arange(start, stop) * panel)[:, None]
        om = lows + 0.5 * panel * (nodes[None, :] + 1.0)
        flat = om.ravel()
        vals = np.real(_laplace_F_vectorized(params, 0.0, flat) * np.exp(1j * flat * t))
        total += 0.5 * panel * float(np.sum(vals.reshape(om.shape) @ weights))
    return total / math.pi


def laplace_transform_quadrature(params: WeightParams, z: complex, nodes: int = 24) -> complex:
    """int f(t) e^{-zt} dt by composite Gauss-Legendre over the smooth pieces."""
    from .weights import f_eval

    xs, ws = np.polynomial.legendre.leggauss(nodes)
    kn = params.knots()
    total = 0j
    for lo, hi in zip(kn[:-1], kn[1:]):
        width = hi - lo
        panels = max(1, int(abs(z) * width / 2.0) + 1)
        for i in range(panels):
            a = lo + width * i / panels
            b = lo + width * (i + 1) / panels
            tm = 0.5 * (a + b) + 0.5 * (b - a) * xs
            vals = np.array([f_eval(params, t) for t in tm]) * np.exp(-z * tm)
            total += 0.5 * (b - a) * np.sum(ws * vals)
    return complex(total)


# -- eta grid searches ------------------------------------------------------------------


def grid_eta_classical(
    d_e: int, degree: int, c1: float, x: float, c_eps: float, points: int = 100_000
) -> float:
    """Grid-search oracle for the classical eta closed form."""
    lx = math.log(x)
    log_d = math.log(d_e)
    eps = 1.0 / degree
    stark = min(0.5, c_eps * d_e ** (-eps)) * lx
    u_hi = 2.0 * math.sqrt(c1 * lx / degree) + 10.0
    us = np.linspace(0.0, u_hi, points)
    denom = log_d + degree * us
    widths = np.minimum(0.5, np.where(denom > 0, c1 / np.where(denom > 0, denom, 1.0), 0.5))
    return min(stark, float(np.min(widths * lx + us)))


def grid_eta_large(
    q: float, eps: float, m: int, x: float, c1: float, points: int = 100_000
) -> float:
    """Grid-search oracle for the dyadic zero-density eta closed form."""
    n_deg = m + 1
    delta = eps / (1e9 * m**3)
    lq = math.log(q)
    lx = math.log(x)
    u_split = q ** (eps / 2.0)
    u1 = np.linspace(u_split, max(2.0 * u_split, u_split + 2.0 * math.sqrt(c1 * lx / n_deg) + 50.0), points)
    phi1 = np.minimum(0.5, c1 / (2 * lq + n_deg * u1)) * lx + u1
    u2 = np.linspace(0.0, u_split, points)
    phi2 = np.minimum(0.5, 20.0 * delta * lq / (lq + u2)) * lx + u2
    return float(min(phi1.min(), phi2.min()))


# -- naive Chebotarev loops ----------------------------------------------------------------


def is_prime_trial(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, int(math.isqrt(n)) + 1):
        if n % d == 0:
            return False
    return True


def naive_psi_gaussian_split(params: WeightParams, residue: int = 1) -> float:
    """Weighted prime-power sum for Q(i) with classes read off p^k mod 4.

    Pure modular arithmetic and trial division; shares nothing with the group
    or field machinery.  Terms use the same float formula k*log(p)/log(x) as
    the production sum, so with exact compensated summation the two values
    agree bit for bit.
    """
    from .weights import f_eval

    lx = params.log_x
    terms: list[float] = []
    for p in range(3, int(math.floor(params.x * math.exp(params.eps))) + 1, 2):
        if not is_prime_trial(p):
            continue
        logp = math.log(p)
        k = 1
        while k * logp <= lx + params.eps:
            if pow(p, k, 4) == residue:
                weight = f_eval(params, k * logp / lx)
                if weight > 0.0:
                    terms.append(logp * weight)
            k += 1
    return math.fsum(terms)


def gaussian_ideal_count(n: int) -> int:
    """Number of ideals of Z[i] with norm n: r_2(n) / 4 by lattice enumeration."""
    count = 0
    a = 0
    while a * a <= n:
        rest = n - a * a
        b = math.isqrt(rest)
        if b * b == rest:
            count += (2 if a > 0 else 1) * (2 if b > 0 else 1)
        a += 1
    assert count % 4 == 0
    return count // 4
