"""Exact Chebotarev counting: class counts against expectations, weighted
prime sums, admissibility certificates, base change, and error reports.
"""

from chebotarev_lab import (
    WeightParams,
    base_change_compare,
    builtin_field,
    classical_eta_profile,
    flexi_error_report,
    is_admissible,
    partial_summation_pi,
    pi_C_count,
    psi_weighted_class,
    psi_weighted_items,
    rational_eta_profile,
    sieve_primes,
)

sieve = sieve_primes(150_000)
gaussian = builtin_field("gaussian")
split = gaussian.group.class_by_label("1")

print("Exact counts for Q(i): primes split into p = 1 mod 4 vs p = 3 mod 4")
for x in (100, 10**3, 10**4, 10**5):
    count = pi_C_count(gaussian, split, x, sieve)
    print(f"  x = {x:>7}: pi_C = {count.count:5d}, expected {count.expected:9.1f}, "
          f"error {count.error:+7.1f}")
print()

print("Admissibility certificates (subgroup H with entire character data):")
for name in ("gaussian", "zeta5", "s3cubic"):
    fd = builtin_field(name)
    for cls in fd.group.classes:
        cert = is_admissible(fd.group, cls)
        if cert is None:
            print(f"  {name:9s} class {cls.label}: no automatic certificate")
        else:
            print(f"  {name:9s} class {cls.label}: H = {sorted(cert.subgroup)}"
                  f" ({cert.dedekind_quotient})")
print()

params = WeightParams(x=10**4, eps=0.05)
psi = psi_weighted_class(gaussian, split, params, sieve)
items = psi_weighted_items(gaussian, split, params, sieve)
converted = partial_summation_pi(items)
exact = pi_C_count(gaussian, split, 10**4, sieve).count
print(f"Weighted sum psi~(x; f) at x = 1e4: {psi:.4f} over {len(items)} prime powers")
print(f"Partial summation estimate of pi_C: {converted:.2f}  (exact count {exact})")
print()

s3 = builtin_field("s3cubic")
cls3 = s3.group.class_by_label("3")
h = s3.group.subgroup_closure({cls3.representative})
check = base_change_compare(s3, cls3, h, 10**4, sieve)
print("Base change for the S3 sextic closure, C = 3-cycles, H = <3-cycle>:")
print(f"  pi_C(x, K/Q) = {check.pi_c},  scaled fixed-field count = "
      f"{check.scale * check.pi_ch:.1f}")
print(f"  |difference| = {check.lhs:.1f} <= bound {check.rhs_bound:.1f}  [{check.passed}]")
print()

report = flexi_error_report(
    gaussian, split, 10**5, classical_eta_profile(4, 2), rational_eta_profile(), sieve
)
print("Error report at x = 1e5 (bound shapes carry implicit constant 1):")
print(f"  actual |pi_C - pi(x)/2| = {report.actual_error:.1f}")
print(f"  two-eta shape = {report.li_shape:.1f}   single-eta shape = {report.pi_shape:.1f}")
print(f"  ratios: {report.li_ratio:.4f} / {report.pi_ratio:.4f}")
