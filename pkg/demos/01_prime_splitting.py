"""How rational primes split: Frobenius classes from polynomial factorization.

Walks through the group catalog, builds a few fields, and tabulates the
Frobenius data of small primes, ending with the Chebotarev proportions.
"""

from chebotarev_lab import build_group, builtin_field, frobenius_data, pi_count, sieve_primes, splitting_tally

print("=" * 70)
print("Catalog groups and their conjugacy classes")
print("=" * 70)
for name in ("C4", "S3", "D8", "A5"):
    g = build_group(name)
    classes = ", ".join(f"{c.label} (size {c.size}, order {c.order})" for c in g.classes)
    print(f"{name:>4}  |G| = {g.order:3d}   classes: {classes}")

print()
print("=" * 70)
print("Frobenius data for the S3 cubic x^3 - x - 1 (closure disc 23^3)")
print("=" * 70)
fd = builtin_field("s3cubic")
print(f"{'p':>5}  {'type':>8}  {'order':>5}  class")
for p in (2, 3, 5, 7, 11, 13, 23, 59, 101):
    data = frobenius_data(fd, p)
    if data.ramified:
        print(f"{p:>5}  {'-':>8}  {'-':>5}  ramified")
    else:
        t = "+".join(map(str, data.factorization_type))
        print(f"{p:>5}  {t:>8}  {data.frobenius_order:>5}  {data.conjugacy_class.label}")

print()
print("=" * 70)
print("Chebotarev proportions at x = 10^5 (expected |C|/|G|)")
print("=" * 70)
sieve = sieve_primes(10**5)
pi_x = pi_count(10**5, sieve)
tally = splitting_tally(fd, 10**5, sieve)
for cls in fd.group.classes:
    got = tally.by_class[cls.label]
    expected = cls.size / fd.group.order
    print(
        f"class {cls.label}: count {got:5d}   fraction {got / pi_x:.5f}"
        f"   expected {expected:.5f}"
    )
print(f"ramified primes: {tally.ramified};  total accounted = pi(x) = {pi_x}")
