"""
Lifting the trivial thin Kac class through ds
=============================================

ds^(k) maps J(P(n)) to J(P(n-2k)).  To see that nabla(0) of the smaller
rank is hit, take a parabolic with gamma = -(e_{2k+1} + ... + e_n) and the
weight a(e_1 + ... + e_2k), form the Euler characteristic and apply ds k
times.
"""

from perichar import (delta1_r, ds_iterate, euler_characteristic, euler_schur_coefficients,
                      prop43_parameters, sch_thin_kac)

n, k = 4, 1
for a in range(-2, 3):
    lam, gamma = prop43_parameters(n, k, a)
    e = euler_characteristic(lam, gamma)
    d = ds_iterate(e, k)
    print(f"a={a:>2}  lam={lam}  |E| has {len(e.poly.terms):>3} terms  ds^{k}(E) = {d}")

print()
print("odd radical roots:", ", ".join(str(r) for r in delta1_r(gamma)))
print("target nabla(0) of rank", n - 2 * k, "=", sch_thin_kac((0,) * (n - 2 * k)))

# The Euler characteristic itself in the Schur basis, for a small case.
print()
print("E((1,0), gamma=(0,-1)) =", euler_schur_coefficients((1, 0), (0, -1)))
