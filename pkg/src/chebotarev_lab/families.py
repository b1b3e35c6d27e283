"""Families F(Q): intersection multiplicity, resolvent grouping, compositum
discriminant checks, and averaged Chebotarev error reports.

Nontrivial-intersection detection is rule-based per group tag: quadratic
fields intersect iff they have equal discriminant; S_n closures (n >= 5)
intersect iff they share the resolvent quadratic; simple groups only meet
themselves.  Other tags require explicit pair data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .arith import squarefree_part
from .chebotarev import pi_count, splitting_tally
from .errors import (
    EqualFields,
    NotQuadratic,
    UndecidableIntersectionRule,
    ValidationError,
)
from .fields import FieldDescriptor
from .sieve import PrimeSieve

RULE_QUADRATIC = "quadratic-equality"
RULE_RESOLVENT = "resolvent-discriminant"
RULE_SIMPLE = "simple-group"
RULE_EXPLICIT = "explicit-pairs"

_SIMPLE_TAGS = {"A5"}


def default_rule(group_name: str) -> str | None:
    if group_name == "C2":
        return RULE_QUADRATIC
    if group_name in _SIMPLE_TAGS:
        return RULE_SIMPLE
    if group_name.startswith("S") and group_name[1:].isdigit() and int(group_name[1:]) >= 5:
        return RULE_RESOLVENT
    return None


@dataclass(frozen=True)
class Family:
    """Fields sharing one group tag, bounded by |D_K| <= Q."""

    fields: tuple[FieldDescriptor, ...]
    q_bound: float
    intersection_rule: str | None = None
    explicit_pairs: frozenset[tuple[str, str]] = field(default_factory=frozenset)

    def __post_init__(self):
        if not self.fields:
            raise ValidationError("family must be non-empty")
        tags = {fd.group.name for fd in self.fields}
        if len(tags) != 1:
            raise ValidationError(f"family mixes group tags: {sorted(tags)}")
        for fd in self.fields:
            if fd.abs_disc > self.q_bound:
                raise ValidationError(f"{fd.name}: |D_K| = {fd.abs_disc} exceeds Q = {self.q_bound}")
        if self.intersection_rule is None:
            object.__setattr__(self, "intersection_rule", default_rule(self.fields[0].group.name))

    @property
    def group_name(self) -> str:
        return self.fields[0].group.name

    @property
    def size(self) -> int:
        return len(self.fields)


def resolvent_square_class(fd: FieldDescriptor) -> int:
    """Squarefree part (sign retained) of the defining-polynomial discriminant.

    For an S_n closure this identifies the quadratic resolvent subfield.
    """
    if not fd.group.name.startswith("S"):
        raise ValidationError(f"{fd.name}: resolvent square class needs an S_n group tag")
    return squarefree_part(fd.poly_disc)


def _intersects(family: Family, a: FieldDescriptor, b: FieldDescriptor) -> bool:
    rule = family.intersection_rule
    if rule == RULE_QUADRATIC:
        return a.disc_field == b.disc_field
    if rule == RULE_RESOLVENT:
        return resolvent_square_class(a) == resolvent_square_class(b)
    if rule == RULE_SIMPLE:
        return a.defining_poly == b.defining_poly
    if rule == RULE_EXPLICIT:
        if a.name == b.name:
            return True
        return (a.name, b.name) in family.explicit_pairs or (b.name, a.name) in family.explicit_pairs
    raise UndecidableIntersectionRule(
        f"no intersection rule for group tag {family.group_name}; provide explicit pairs"
    )


def intersection_multiplicity(family: Family) -> int:
    """m_F(Q): max over K of #{K' in the family with nontrivial intersection}.

    A field always meets itself, so non-empty families give at least 1.
    """
    best = 0
    for a in family.fields:
        count = sum(1 for b in family.fields if _intersects(family, a, b))
        best = max(best, count)
    return best


# -- compositum discriminants ---------------------------------------------------


def _fundamental_disc(d: int) -> int:
    s = squarefree_part(d)
    return s if s % 4 == 1 else 4 * s


@dataclass(frozen=True)
class CompositumCheck:
    """Discriminant of a biquadratic compositum with its divisibility checks."""

    disc_compositum: int
    subfield_discs: tuple[int, int, int]
    divides_bound: bool  # D_KK' | D_K^2 D_K'^2
    conductor_divides: bool  # D_KK'/(D_K D_K') | D_K D_K'


def compositum_disc_check(a: FieldDescriptor, b: FieldDescriptor) -> CompositumCheck:
    """Biquadratic compositum via the three-quadratic-subfield product formula.

    Requires two distinct quadratic fields (so the intersection is Q).
    """
    if a.group.order != 2 or b.group.order != 2:
        raise NotQuadratic("compositum check supports quadratic fields only")
    if a.disc_field == b.disc_field:
        raise EqualFields("fields coincide; the compositum formula needs distinct quadratics")
    d1, d2 = a.disc_field, b.disc_field
    d3 = _fundamental_disc(squarefree_part(d1 * d2))
    disc_comp = abs(d1 * d2 * d3)
    bound = (d1 * d2) ** 2
    divides = bound % disc_comp == 0
    cond = disc_comp // abs(d1 * d2)
    conductor_ok = disc_comp % abs(d1 * d2) == 0 and abs(d1 * d2) % cond == 0
    return CompositumCheck(
        disc_compositum=disc_comp,
        subfield_discs=(d1, d2, d3),
        divides_bound=divides,
        conductor_divides=conductor_ok,
    )


# -- averaged Chebotarev error ----------------------------------------------------


@dataclass(frozen=True)
class AvgErrorReport:
    """Average of the per-field worst-class errors, with shape diagnostics."""

    x: float
    q_bound: float
    size: int
    multiplicity: int
    avg_error: float
    per_field: dict[str, float]
    diagnostics: dict[str, float]


def avg_cheb_error(
    family: Family,
    x: float,
    sieve: PrimeSieve,
    eps: float = 0.5,
    log_power: float = 2.0,
) -> AvgErrorReport:
    """(1/#F) sum over K of max_C |pi_C(x) - (|C|/|G|) pi(x)|, exactly.

    Diagnostics carry the level-of-distribution shape x/(log x)^A and the
    exceptional-budget ratio m_F(Q) Q^eps / #F; constants stay symbolic.
    """
    pi_x = pi_count(x, sieve)
    per_field: dict[str, float] = {}
    for fd in family.fields:
        tally = splitting_tally(fd, x, sieve)
        if tally.unresolved:
            raise ValidationError(f"{fd.name}: {tally.unresolved} primes have unresolved classes")
        worst = 0.0
        for cls in fd.group.classes:
            expected = cls.size / fd.group.order * pi_x
            worst = max(worst, abs(tally.by_class[cls.label] - expected))
        per_field[fd.name] = worst
    avg = math.fsum(per_field.values()) / family.size
    m_f = intersection_multiplicity(family)
    shape = x / math.log(x) ** log_power
    diagnostics = {
        "eps": eps,
        "shape_x_over_logx_power": shape,
        "avg_over_shape": avg / shape,
        "mF_Qeps_over_size": m_f * family.q_bound**eps / family.size,
    }
    return AvgErrorReport(
        x=x,
        q_bound=family.q_bound,
        size=family.size,
        multiplicity=m_f,
        avg_error=avg,
        per_field=per_field,
        diagnostics=diagnostics,
    )
