"""
Thin Kac supercharacters and the ds homomorphism
================================================

Supercharacters of P(n) are symmetric Laurent polynomials.  This walk-through
builds a few thin Kac classes, checks that they satisfy the supersymmetry
condition, and watches ds_n send them to zero.
"""

from perichar import (LaurentPolynomial, SupercharElement, ds_eval, jn_membership, kernel_decompose,
                      r_minus1, sch_thin_kac, schur_laurent)
from perichar.weights import parity

# The thin Kac class of a dominant weight is +-R_{-1} times a Schur function.
for lam in [(0, 0), (1, 0), (1, 1), (2, -1)]:
    f = sch_thin_kac(lam)
    sign = "-" if parity(lam) else "+"
    print(f"nabla{lam}: parity {parity(lam)}, {sign}R * s_lam, {len(f.poly.terms)} terms")
    assert f.poly == (r_minus1(2).poly * schur_laurent(lam)).scale(-1 if parity(lam) else 1)

# Membership in J_n: the evaluation x_{n-1} = t, x_n = 1/t must not depend on t.
x1, x2, x3 = LaurentPolynomial.variables(3)
inv = [LaurentPolynomial.monomial(e) for e in [(-1, 0, 0), (0, -1, 0), (0, 0, -1)]]
p1 = SupercharElement(3, x1 + x2 + x3)
v = SupercharElement(3, x1 + x2 + x3 - inv[0] - inv[1] - inv[2])
print()
print("x1 + x2 + x3 in J_3?", jn_membership(p1))
print("sum x_i - sum 1/x_i in J_3?", jn_membership(v))
print("ds of it:", ds_eval(v))

# ds kills every thin Kac class ...
f = sch_thin_kac((2, 1, -1))
print()
print("ds(nabla(2,1,-1)) =", ds_eval(f))

# ... and conversely a kernel element splits into thin Kac classes.
g = sch_thin_kac((1, 0, 0)) * 3 - sch_thin_kac((0, 0, -2)) * 5
print("decomposition:", kernel_decompose(g))
