"""Galois field descriptors, Frobenius classes, and the field catalog.

A field is described by a monic integer defining polynomial for a subfield k,
the Galois group G of the closure K, and the (user-supplied) field
discriminant D_K.  Frobenius conjugacy classes at unramified primes come from
the factorization type of the polynomial mod p; for the abelian built-ins the
class is resolved exactly through the residue of p modulo the conductor
(Frobenius acts on roots of unity by zeta -> zeta^p).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from .arith import kronecker_symbol, poly_discriminant
from .errors import AmbiguousClass, CatalogError, ValidationError
from .gfpoly import factor_degrees
from .groups import ConjugacyClass, FiniteGroup, build_group


@dataclass(frozen=True)
class CyclotomicAction:
    """Exact Frobenius for subfields of Q(zeta_q): class determined by p mod q.

    ``residue_class`` maps each residue coprime to q to a group element id.
    """

    conductor: int
    residue_class: tuple[int, ...]  # indexed by residue mod conductor, -1 off-support

    def element_of(self, p: int) -> int | None:
        r = p % self.conductor
        e = self.residue_class[r]
        return None if e < 0 else e


@dataclass(frozen=True)
class KroneckerAction:
    """Quadratic fields: Frobenius is the Kronecker character chi_D(p)."""

    discriminant: int

    def element_of(self, p: int) -> int | None:
        chi = kronecker_symbol(self.discriminant, p)
        if chi == 0:
            return None
        return 0 if chi == 1 else 1


@dataclass(frozen=True)
class FieldDescriptor:
    """A Galois extension K/Q presented by a defining polynomial for k."""

    name: str
    defining_poly: tuple[int, ...]  # constant term first, monic
    group: FiniteGroup
    disc_field: int
    residue_action: CyclotomicAction | KroneckerAction | None = None
    strong_artin: bool = False
    poly_disc: int = field(init=False, compare=False)

    def __post_init__(self):
        coeffs = self.defining_poly
        if len(coeffs) < 2 or coeffs[-1] != 1:
            raise ValidationError(f"{self.name}: defining polynomial must be monic of degree >= 1")
        disc = poly_discriminant(list(coeffs))
        if disc == 0:
            raise ValidationError(f"{self.name}: defining polynomial is not squarefree over Q")
        if self.disc_field == 0:
            raise ValidationError(f"{self.name}: field discriminant must be nonzero")
        object.__setattr__(self, "poly_disc", disc)

    @property
    def degree(self) -> int:
        """Degree of the defining polynomial (the subfield k)."""
        return len(self.defining_poly) - 1

    @property
    def degree_closure(self) -> int:
        """[K:Q] = |G|."""
        return self.group.order

    @property
    def m(self) -> int:
        """|G| - 1, the dimension of the character reg - 1."""
        return self.group.order - 1

    @property
    def abs_disc(self) -> int:
        return abs(self.disc_field)

    def is_ramified(self, p: int) -> bool:
        return self.abs_disc % p == 0

    def __repr__(self) -> str:
        return f"FieldDescriptor({self.name}, G={self.group.name}, D={self.disc_field})"


@dataclass(frozen=True)
class FrobeniusData:
    """Splitting data of one rational prime."""

    p: int
    ramified: bool
    factorization_type: tuple[int, ...] | None = None  # ascending factor degrees
    frobenius_order: int | None = None
    conjugacy_class: ConjugacyClass | None = None  # None when ambiguous


@lru_cache(maxsize=200_000)
def _factor_type(poly: tuple[int, ...], p: int) -> tuple[tuple[int, int], ...]:
    return tuple(factor_degrees(list(poly), p))


def factor_poly_mod_p(poly: list[int] | tuple[int, ...], p: int) -> list[tuple[int, int]]:
    """(degree, multiplicity) pairs of the irreducible factors of poly mod p."""
    return list(_factor_type(tuple(poly), p))


def frobenius_data(fd: FieldDescriptor, p: int) -> FrobeniusData:
    """Frobenius data at p: ramified flag, type, order, class when unambiguous."""
    if fd.is_ramified(p):
        return FrobeniusData(p=p, ramified=True)
    if fd.residue_action is not None:
        elem = fd.residue_action.element_of(p)
        if elem is None:
            return FrobeniusData(p=p, ramified=True)
        cls = fd.group.class_of(elem)
        d = fd.group.element_orders[elem]
        n = fd.degree
        # the factorization type of a degree-n abelian subfield polynomial:
        # all factors share the residue degree of p in k
        dk = _orbit_degree_in_subfield(fd, d)
        return FrobeniusData(
            p=p,
            ramified=False,
            factorization_type=tuple([dk] * (n // dk)),
            frobenius_order=d,
            conjugacy_class=cls,
        )
    pairs = _factor_type(fd.defining_poly, p)
    if any(mult > 1 for _, mult in pairs):
        return FrobeniusData(p=p, ramified=True)
    ftype = tuple(sorted(d for d, _ in pairs))
    d = math.lcm(*ftype)
    cls = _class_from_type(fd, ftype, d)
    return FrobeniusData(p=p, ramified=False, factorization_type=ftype, frobenius_order=d, conjugacy_class=cls)


def _orbit_degree_in_subfield(fd: FieldDescriptor, d: int) -> int:
    # residue degree of p in k = orbit size of the Frobenius on the roots;
    # for the built-in abelian fields k = K, so this is just d
    if fd.degree == fd.group.order:
        return d
    return d if fd.degree % d == 0 else 1


def _class_from_type(fd: FieldDescriptor, ftype: tuple[int, ...], d: int) -> ConjugacyClass | None:
    g = fd.group
    if g.name.startswith("S") and g.perms is not None and fd.degree == len(g.perms[0]):
        # for S_n acting on the n roots, the factorization type is the cycle
        # type, a complete class invariant
        return g.class_by_cycle_type(ftype)
    candidates = g.classes_of_order(d)
    if len(candidates) == 1:
        return candidates[0]
    return None


def require_class(fd: FieldDescriptor, p: int) -> ConjugacyClass:
    data = frobenius_data(fd, p)
    if data.ramified:
        raise AmbiguousClass(f"{fd.name}: p={p} is ramified")
    if data.conjugacy_class is None:
        raise AmbiguousClass(f"{fd.name}: factorization type at p={p} does not resolve a class")
    return data.conjugacy_class


# -- built-in catalog ---------------------------------------------------------


def _cyclotomic_action(q: int, group: FiniteGroup, subgroup_residues: tuple[int, ...]) -> CyclotomicAction:
    """Map residues mod q to elements of (Z/q)^* / H for H = subgroup_residues.

    The quotient is identified with the cyclic ``group`` through the smallest
    primitive root mod q.
    """
    units = [r for r in range(1, q) if math.gcd(r, q) == 1]
    gen = next(g for g in units if _mult_order(g, q) == len(units))
    h = set()
    for r in subgroup_residues:
        h.add(r % q)
    # expand H to a subgroup
    closure = {1}
    frontier = set(h) | {1}
    while frontier:
        a = frontier.pop()
        for b in list(closure):
            c = (a * b) % q
            if c not in closure:
                closure.add(c)
                frontier.add(c)
    h = closure
    quotient_order = len(units) // len(h)
    if quotient_order != group.order:
        raise ValidationError("cyclotomic action does not match group order")
    table = [-1] * q
    for k in range(len(units)):
        r = pow(gen, k, q)
        if table[r] < 0:
            # element of the quotient generated by gen: index k mod quotient order,
            # folded through H-cosets
            pass
    # assign: coset of gen^k maps to group element (k mod quotient_order)
    coset_elem: dict[frozenset[int], int] = {}
    for k in range(len(units)):
        r = pow(gen, k, q)
        coset = frozenset((r * x) % q for x in h)
        if coset not in coset_elem:
            coset_elem[coset] = k % quotient_order
        for x in coset:
            if table[x] < 0:
                table[x] = coset_elem[coset]
    return CyclotomicAction(conductor=q, residue_class=tuple(table))


def _mult_order(a: int, q: int) -> int:
    k = 1
    x = a % q
    while x != 1:
        x = (x * a) % q
        k += 1
    return k


def _builtin_fields() -> dict[str, FieldDescriptor]:
    out: dict[str, FieldDescriptor] = {}

    out["rational"] = FieldDescriptor(
        name="rational",
        defining_poly=(0, 1),  # x, the field Q itself
        group=build_group("C1"),
        disc_field=1,
    )
    c2 = build_group("C2")
    out["gaussian"] = FieldDescriptor(
        name="gaussian",
        defining_poly=(1, 0, 1),  # x^2 + 1
        group=c2,
        disc_field=-4,
        residue_action=KroneckerAction(-4),
    )
    out["sqrt5"] = FieldDescriptor(
        name="sqrt5",
        defining_poly=(-1, -1, 1),  # x^2 - x - 1
        group=c2,
        disc_field=5,
        residue_action=KroneckerAction(5),
    )
    c4 = build_group("C4")
    out["zeta5"] = FieldDescriptor(
        name="zeta5",
        defining_poly=(1, 1, 1, 1, 1),  # Phi_5
        group=c4,
        disc_field=125,
        residue_action=_cyclotomic_action(5, c4, (1,)),
    )
    c3 = build_group("C3")
    out["cyclo7plus"] = FieldDescriptor(
        name="cyclo7plus",
        defining_poly=(-1, -2, 1, 1),  # x^3 + x^2 - 2x - 1, Q(zeta_7)^+
        group=c3,
        disc_field=49,
        residue_action=_cyclotomic_action(7, c3, (1, 6)),
    )
    c6 = build_group("C6")
    out["zeta7"] = FieldDescriptor(
        name="zeta7",
        defining_poly=(1, 1, 1, 1, 1, 1, 1),  # Phi_7
        group=c6,
        disc_field=-16807,
        residue_action=_cyclotomic_action(7, c6, (1,)),
    )
    s3 = build_group("S3")
    out["s3cubic"] = FieldDescriptor(
        name="s3cubic",
        defining_poly=(-1, -1, 0, 1),  # x^3 - x - 1, closure has D_K = 23^3
        group=s3,
        disc_field=-12167,
    )
    return out


BUILTIN_CATALOG = _builtin_fields()


def builtin_field(name: str) -> FieldDescriptor:
    try:
        return BUILTIN_CATALOG[name]
    except KeyError:
        raise CatalogError(f"no built-in field named {name!r}") from None


def quadratic_field(d: int) -> FieldDescriptor:
    """Canonical descriptor for Q(sqrt(d)), d squarefree and != 0, 1.

    Uses x^2 - d (disc 4d) or x^2 - x - (d-1)/4 (disc d) so that the
    polynomial discriminant equals the field discriminant.
    """
    from .arith import squarefree_part

    if d in (0, 1) or squarefree_part(d) != d:
        raise ValidationError(f"d={d} must be squarefree and different from 0, 1")
    if d % 4 == 1:
        poly = (-(d - 1) // 4, -1, 1)
        disc = d
    else:
        poly = (-d, 0, 1)
        disc = 4 * d
    return FieldDescriptor(
        name=f"quad({d})",
        defining_poly=poly,
        group=build_group("C2"),
        disc_field=disc,
        residue_action=KroneckerAction(disc),
    )


# -- catalog files ------------------------------------------------------------


def parse_catalog(text: str, source: str = "<catalog>") -> list[FieldDescriptor]:
    """Parse the line-oriented catalog format.

    Records are ``name | coefficients (constant first) | group label | field
    discriminant``; ``#`` starts a comment.  Malformed lines abort with their
    line number.
    """
    out: list[FieldDescriptor] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [part.strip() for part in line.split("|")]
        if len(parts) != 4:
            raise CatalogError(f"{source}:{lineno}: expected 4 '|'-separated fields, got {len(parts)}")
        name, coeff_text, group_label, disc_text = parts
        if not name:
            raise CatalogError(f"{source}:{lineno}: empty field name")
        try:
            coeffs = tuple(int(tok) for tok in coeff_text.split())
        except ValueError:
            raise CatalogError(f"{source}:{lineno}: non-integer coefficient in {coeff_text!r}") from None
        if not coeffs:
            raise CatalogError(f"{source}:{lineno}: no coefficients given")
        try:
            disc = int(disc_text)
        except ValueError:
            raise CatalogError(f"{source}:{lineno}: non-integer discriminant {disc_text!r}") from None
        try:
            group = build_group(group_label)
            fd = FieldDescriptor(name=name, defining_poly=coeffs, group=group, disc_field=disc)
        except (ValidationError, CatalogError) as exc:
            raise CatalogError(f"{source}:{lineno}: {exc}") from None
        out.append(fd)
    return out


def load_catalog(path: str | Path) -> list[FieldDescriptor]:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise CatalogError(f"cannot read catalog {p}: {exc}") from None
    return parse_catalog(text, source=str(p))
