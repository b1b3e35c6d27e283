"""Dense univariate polynomial arithmetic over F_p and factorization.

Coefficient lists store the constant term first.  Factorization runs
squarefree decomposition, then distinct-degree splitting, then
Cantor-Zassenhaus equal-degree splitting.  The equal-degree stage draws its
random elements from a generator seeded by (p, f, CZ_SEED), so repeated runs
factor identically.
"""

from __future__ import annotations

import random

# Fixed configuration seed for the equal-degree splitting stage.
CZ_SEED = 0x5EEDED

Poly = list


def gf_trim(f: Poly, p: int) -> Poly:
    f = [c % p for c in f]
    while len(f) > 1 and f[-1] == 0:
        f.pop()
    return f


def gf_degree(f: Poly) -> int:
    return len(f) - 1


def gf_is_zero(f: Poly) -> bool:
    return all(c == 0 for c in f)


def gf_monic(f: Poly, p: int) -> Poly:
    lead = f[-1]
    if lead == 1:
        return f[:]
    inv = pow(lead, -1, p)
    return [(c * inv) % p for c in f]


def gf_add(f: Poly, g: Poly, p: int) -> Poly:
    n = max(len(f), len(g))
    out = [0] * n
    for i, c in enumerate(f):
        out[i] = c
    for i, c in enumerate(g):
        out[i] = (out[i] + c) % p
    return gf_trim(out, p)


def gf_sub(f: Poly, g: Poly, p: int) -> Poly:
    n = max(len(f), len(g))
    out = [0] * n
    for i, c in enumerate(f):
        out[i] = c
    for i, c in enumerate(g):
        out[i] = (out[i] - c) % p
    return gf_trim(out, p)


def gf_mul(f: Poly, g: Poly, p: int) -> Poly:
    if gf_is_zero(f) or gf_is_zero(g):
        return [0]
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return gf_trim(out, p)


def gf_divmod(f: Poly, g: Poly, p: int) -> tuple[Poly, Poly]:
    f = gf_trim(f, p)
    g = gf_trim(g, p)
    if gf_is_zero(g):
        raise ZeroDivisionError("polynomial division by zero")
    df, dg = gf_degree(f), gf_degree(g)
    if df < dg:
        return [0], f
    inv = pow(g[-1], -1, p)
    rem = f[:]
    quo = [0] * (df - dg + 1)
    for i in range(df - dg, -1, -1):
        c = (rem[i + dg] * inv) % p
        if c:
            quo[i] = c
            for j, b in enumerate(g):
                rem[i + j] = (rem[i + j] - c * b) % p
    return gf_trim(quo, p), gf_trim(rem, p)


def gf_mod(f: Poly, g: Poly, p: int) -> Poly:
    return gf_divmod(f, g, p)[1]


def gf_gcd(f: Poly, g: Poly, p: int) -> Poly:
    f = gf_trim(f, p)
    g = gf_trim(g, p)
    while not gf_is_zero(g):
        f, g = g, gf_mod(f, g, p)
    if gf_is_zero(f):
        return [0]
    return gf_monic(f, p)


def gf_pow_mod(f: Poly, e: int, mod: Poly, p: int) -> Poly:
    """f^e modulo (mod, p) by repeated squaring."""
    result = [1]
    base = gf_mod(f, mod, p)
    while e > 0:
        if e & 1:
            result = gf_mod(gf_mul(result, base, p), mod, p)
        base = gf_mod(gf_mul(base, base, p), mod, p)
        e >>= 1
    return result


def gf_derivative(f: Poly, p: int) -> Poly:
    return gf_trim([(i * c) % p for i, c in enumerate(f)][1:] or [0], p)


def _pth_root(f: Poly, p: int) -> Poly:
    # in F_p[x], f with f' = 0 is g(x^p); p-th roots of coefficients are
    # the coefficients themselves since c^p = c in F_p
    return gf_trim(f[::p], p)


def squarefree_decomposition(f: Poly, p: int) -> list[tuple[Poly, int]]:
    """Yun-style decomposition f = prod g_i^i with each g_i squarefree."""
    f = gf_monic(gf_trim(f, p), p)
    out: list[tuple[Poly, int]] = []

    def accumulate(g: Poly, mult: int) -> None:
        for h, e in _sqf_inner(g, p):
            out.append((h, e * mult))

    accumulate(f, 1)
    out.sort(key=lambda t: (t[1], gf_degree(t[0]), t[0]))
    return out


def _sqf_inner(f: Poly, p: int) -> list[tuple[Poly, int]]:
    if gf_degree(f) == 0:
        return []
    df = gf_derivative(f, p)
    if gf_is_zero(df):
        # f = g(x^p): every multiplicity gets a factor of p
        return [(g, e * p) for g, e in _sqf_inner(_pth_root(f, p), p)]
    out: list[tuple[Poly, int]] = []
    c = gf_gcd(f, df, p)
    w = gf_divmod(f, c, p)[0]
    i = 1
    while gf_degree(w) > 0:
        y = gf_gcd(w, c, p)
        z = gf_divmod(w, y, p)[0]
        if gf_degree(z) > 0:
            out.append((gf_monic(z, p), i))
        w = y
        c = gf_divmod(c, y, p)[0]
        i += 1
    if gf_degree(c) > 0:
        out.extend((g, e * p) for g, e in _sqf_inner(_pth_root(c, p), p))
    return out


def distinct_degree_factorization(f: Poly, p: int) -> list[tuple[Poly, int]]:
    """Split squarefree monic f into products of same-degree irreducibles.

    Returns [(product_of_degree_d_factors, d), ...] in ascending d.
    """
    out: list[tuple[Poly, int]] = []
    h = [0, 1]  # x
    rest = f[:]
    d = 0
    while gf_degree(rest) > 2 * d:
        d += 1
        h = gf_pow_mod(h, p, rest, p)  # x^(p^d) mod rest
        g = gf_gcd(gf_sub(h, [0, 1], p), rest, p)
        if gf_degree(g) > 0:
            out.append((g, d))
            rest = gf_divmod(rest, g, p)[0]
            h = gf_mod(h, rest, p)
    if gf_degree(rest) > 0:
        out.append((rest, gf_degree(rest)))
    return out


def _edf_rng(f: Poly, p: int) -> random.Random:
    state = CZ_SEED
    for c in f + [p]:
        state = (state * 1000003 + c) % (1 << 61)
    return random.Random(state)


def equal_degree_factorization(f: Poly, d: int, p: int) -> list[Poly]:
    """Cantor-Zassenhaus split of squarefree f into irreducibles of degree d."""
    n = gf_degree(f)
    if n == d:
        return [gf_monic(f, p)]
    rng = _edf_rng(f, p)
    while True:
        r = [rng.randrange(p) for _ in range(n)]
        r.append(1)
        r = gf_trim(r, p)
        if gf_degree(r) < 1:
            continue
        g = gf_gcd(r, f, p)
        if 0 < gf_degree(g) < n:
            break
        if p == 2:
            # trace map sum_{i<d} r^(2^i)
            t = [0]
            cur = gf_mod(r, f, p)
            for _ in range(d):
                t = gf_add(t, cur, p)
                cur = gf_mod(gf_mul(cur, cur, p), f, p)
            g = gf_gcd(t, f, p)
        else:
            e = (p**d - 1) // 2
            t = gf_pow_mod(r, e, f, p)
            g = gf_gcd(gf_sub(t, [1], p), f, p)
        if 0 < gf_degree(g) < n:
            break
    left = equal_degree_factorization(g, d, p)
    right = equal_degree_factorization(gf_divmod(f, g, p)[0], d, p)
    return left + right


def gf_factor(f: Poly, p: int) -> list[tuple[Poly, int]]:
    """Full factorization of f over F_p as [(irreducible, multiplicity), ...]."""
    f = gf_trim(f, p)
    if gf_degree(f) == 0:
        return []
    out: list[tuple[Poly, int]] = []
    for sqf, mult in squarefree_decomposition(f, p):
        for block, d in distinct_degree_factorization(sqf, p):
            for irr in equal_degree_factorization(block, d, p):
                out.append((irr, mult))
    out.sort(key=lambda t: (gf_degree(t[0]), t[0], t[1]))
    return out


def factor_degrees(f: Poly, p: int) -> list[tuple[int, int]]:
    """Degrees of the irreducible factors of f mod p, with multiplicities.

    Sorted ascending by degree; the degree sum with multiplicity equals
    deg(f mod p).
    """
    return sorted((gf_degree(g), e) for g, e in gf_factor(f, p))
