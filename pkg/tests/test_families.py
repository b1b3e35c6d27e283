import pytest

from chebotarev_lab.arith import squarefree_part
from chebotarev_lab.errors import (
    EqualFields,
    NotQuadratic,
    UndecidableIntersectionRule,
    ValidationError,
)
from chebotarev_lab.families import (
    Family,
    avg_cheb_error,
    compositum_disc_check,
    intersection_multiplicity,
    resolvent_square_class,
)
from chebotarev_lab.fields import FieldDescriptor, quadratic_field
from chebotarev_lab.groups import build_group

SQUAREFREE_SMALL = [-1, 2, -2, 3, -3, 5, -5, 6, -6, 7, -7, 10, -10, 11, -11, 13, -13, 14, -14, 15]


def quads(ds):
    return tuple(quadratic_field(d) for d in ds)


def test_distinct_quadratics_multiplicity_one():
    fam = Family(fields=quads(SQUAREFREE_SMALL), q_bound=200.0)
    assert fam.intersection_rule == "quadratic-equality"
    assert intersection_multiplicity(fam) == 1


def test_duplicate_quadratics_counted():
    fields = quads([-1, 2]) + quads([2])
    fam = Family(fields=fields, q_bound=20.0)
    assert intersection_multiplicity(fam) == 2


def test_multiplicity_monotone_under_adding_fields():
    base = quads([-1, 2, 3])
    fam1 = Family(fields=base, q_bound=20.0)
    fam2 = Family(fields=base + quads([2]) , q_bound=20.0)
    assert intersection_multiplicity(fam2) >= intersection_multiplicity(fam1)


def _quintic(name, poly):
    return FieldDescriptor(name=name, defining_poly=poly, group=build_group("S5"), disc_field=2869)


def test_s5_resolvent_rule():
    # x^5 - x - 1 and its shift by 2 define the same field, hence share the
    # resolvent square class
    k1 = _quintic("q1", (-1, -1, 0, 0, 0, 1))
    k2 = _quintic("q2", (29, 79, 80, 40, 10, 1))  # (x+2)^5 - (x+2) - 1
    assert resolvent_square_class(k1) == resolvent_square_class(k2) == squarefree_part(2869)
    fam = Family(fields=(k1, k2), q_bound=3000.0)
    assert fam.intersection_rule == "resolvent-discriminant"
    assert intersection_multiplicity(fam) == 2


def test_simple_group_rule():
    a5 = build_group("A5")
    k1 = FieldDescriptor(name="a", defining_poly=(-2, -1, 0, 0, 0, 1), group=a5, disc_field=10**4 + 3)
    k2 = FieldDescriptor(name="b", defining_poly=(-4, -3, 0, 0, 0, 1), group=a5, disc_field=10**4 + 7)
    fam = Family(fields=(k1, k2), q_bound=10**5)
    assert fam.intersection_rule == "simple-group"
    assert intersection_multiplicity(fam) == 1
    dup = Family(fields=(k1, k1, k2), q_bound=10**5)
    assert intersection_multiplicity(dup) == 2


def test_undecidable_rule():
    fam = Family(fields=(quadratic_field(5),), q_bound=10.0, intersection_rule=None)
    # C2 resolves automatically; force an unknown tag through zeta5
    from chebotarev_lab.fields import builtin_field

    z5 = builtin_field("zeta5")
    fam_c4 = Family(fields=(z5,), q_bound=200.0)
    assert fam_c4.intersection_rule is None
    with pytest.raises(UndecidableIntersectionRule):
        intersection_multiplicity(fam_c4)
    explicit = Family(
        fields=(z5,), q_bound=200.0, intersection_rule="explicit-pairs"
    )
    assert intersection_multiplicity(explicit) == 1  # self-intersection only


def test_intersection_symmetry():
    fields = quads(SQUAREFREE_SMALL[:8])
    fam = Family(fields=fields, q_bound=100.0)
    from chebotarev_lab.families import _intersects

    for a in fields:
        for b in fields:
            assert _intersects(fam, a, b) == _intersects(fam, b, a)


def test_resolvent_square_class_examples():
    s3 = build_group("S3")
    assert resolvent_square_class(
        FieldDescriptor(name="c1", defining_poly=(-1, -1, 0, 1), group=s3, disc_field=-12167)
    ) == -23
    assert resolvent_square_class(
        FieldDescriptor(name="c2", defining_poly=(-1, 1, 0, 1), group=s3, disc_field=-29791)
    ) == -31
    s2 = build_group("S2")
    assert resolvent_square_class(
        FieldDescriptor(name="r2", defining_poly=(-2, 0, 1), group=s2, disc_field=8)
    ) == 2
    with pytest.raises(ValidationError):
        resolvent_square_class(quadratic_field(5))  # C2 tag, not S_n


def test_compositum_zeta12_case():
    check = compositum_disc_check(quadratic_field(-1), quadratic_field(-3))
    assert check.disc_compositum == 144  # Q(zeta_12)
    assert check.subfield_discs == (-4, -3, 12)
    assert check.divides_bound  # 144 | 4^2 3^2
    assert check.conductor_divides  # 144/12 = 12 | 12


def test_compositum_sqrt2_sqrt3():
    check = compositum_disc_check(quadratic_field(2), quadratic_field(3))
    assert check.subfield_discs == (8, 12, 24)
    assert check.disc_compositum == 2304
    assert check.divides_bound  # 2304 | 9216
    assert check.conductor_divides  # 24 | 96


def test_compositum_sweep_all_pairs():
    import itertools

    fields = quads(SQUAREFREE_SMALL)
    for a, b in itertools.combinations(fields, 2):
        check = compositum_disc_check(a, b)
        assert check.divides_bound, (a.name, b.name)
        assert check.conductor_divides, (a.name, b.name)


def test_compositum_errors(catalog):
    with pytest.raises(NotQuadratic):
        compositum_disc_check(quadratic_field(-1), catalog["zeta5"])
    with pytest.raises(EqualFields):
        compositum_disc_check(quadratic_field(5), quadratic_field(5))


def test_avg_error_single_field_reduces(sieve_small, catalog):
    fam = Family(fields=(quadratic_field(-1),), q_bound=10.0)
    report = avg_cheb_error(fam, 10**3, sieve_small)
    assert report.avg_error == report.per_field["quad(-1)"]
    assert report.size == 1 and report.multiplicity == 1


def test_avg_error_two_pass_consistency(sieve_small):
    fields = quads(SQUAREFREE_SMALL[:6])
    fam = Family(fields=fields, q_bound=100.0)
    report = avg_cheb_error(fam, 10**3, sieve_small)
    # second pass: recompute the mean from the per-field column
    again = sum(report.per_field.values()) / len(report.per_field)
    assert report.avg_error == pytest.approx(again, abs=1e-12)


def test_avg_error_q_invariance(sieve_small):
    fields = quads(SQUAREFREE_SMALL[:5])
    r1 = avg_cheb_error(Family(fields=fields, q_bound=100.0), 10**3, sieve_small)
    r2 = avg_cheb_error(Family(fields=fields, q_bound=10**4), 10**3, sieve_small)
    assert r1.avg_error == r2.avg_error


def test_family_validation():
    with pytest.raises(ValidationError):
        Family(fields=(), q_bound=10.0)
    with pytest.raises(ValidationError):
        Family(fields=(quadratic_field(-1), quadratic_field(101)), q_bound=100.0)
    mixed = (quadratic_field(-1), FieldDescriptor(
        name="cubic", defining_poly=(-1, -1, 0, 1), group=build_group("S3"), disc_field=-23
    ))
    with pytest.raises(ValidationError):
        Family(fields=mixed, q_bound=100.0)
