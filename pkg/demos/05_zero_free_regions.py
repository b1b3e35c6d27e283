"""Zero-free-region data Delta(t), the induced error-term data eta(x), and the
closed-form optimizations checked against grid search.
"""

import math

from chebotarev_lab import (
    classical_eta_profile,
    classical_zfr,
    constant_zfr,
    error_factor,
    eta_classical_closed,
    eta_from_delta,
    eta_large_zfr_closed,
)
from chebotarev_lab.oracles import grid_eta_classical, grid_eta_large

x = 10**8
print("eta(x) = inf_t [Delta(t) log x + log t] at x = 1e8")
print(f"  Delta == 1/2 (nonvanishing L): eta = {eta_from_delta(constant_zfr(0.5), x):.6f}"
      f"  [= (1/2) log x + log 3 = {0.5 * math.log(x) + math.log(3):.6f}]")
print(f"  Delta == 0: eta = {eta_from_delta(constant_zfr(0.0), x):.6f}  [= log 3]")
print()

print("Classical region for a quadratic field with |D| = 229:")
zfr = classical_zfr(229, 2)
for piece in zfr.pieces:
    print(f"  piece [{piece.u_lo}, {piece.u_hi}]  ({piece.provenance})")
closed = eta_classical_closed(229, 2, 0.05, x)
grid = grid_eta_classical(229, 2, 0.05, x, 0.1)
print(f"  closed form: {closed:.8f}   grid search: {grid:.8f}   |rel diff| = "
      f"{abs(closed - grid) / grid:.2e}")
print()

print("Family-scale region (dyadic zero-density construction):")
res = eta_large_zfr_closed(q=10**4, eps=0.5, m=2, x=10**10)
grid = grid_eta_large(10**4, 0.5, 2, 10**10, 0.05)
print(f"  eta lower bound = {res.eta:.6e}  (phi1 branch {res.inf_phi1:.4f}, "
      f"phi2 branch {res.inf_phi2:.6e})")
print(f"  grid search     = {grid:.6e}")
print(f"  displayed three-term bound on e^-eta: {res.three_term_bound:.6f}")
print()

print("Error multipliers e^(-eta/8) log(e D_K) feeding the counting reports:")
profile = classical_eta_profile(229, 2)
for xv in (10**6, 10**9, 10**12):
    print(f"  x = 1e{int(math.log10(xv)):2d}: {error_factor(profile, xv, 229):.6f}")
