"""
Translating thin Kac classes by the natural module
==================================================

Tensoring with V moves one ball of the weight diagram one step left or
right.  Here we print the diagram of a weight, the moves, and the signed
thin Kac summands that come out of the Pieri rule.
"""

from perichar import ball_moves, render_diagram, tensor_V_decompose, to_diagram
from perichar.superchar import sign_table, translation_case

lam = (1, 0, -2)
print("weight", lam, "bullets", to_diagram(lam))
print(render_diagram(lam, -4, 4))
print()

for m in ball_moves(lam):
    print(f"ball at {m.source:>2} moves {'right' if m.direction > 0 else 'left '} -> {m.target}")

print()
print("nabla(lam) (x) V =", tensor_V_decompose(lam))
print()

# Group the summands by the ball that moved.  The case number records the
# local picture at k-1, k, k+1: (b,b,o)=1, (o,b,b)=2, (o,b,o)=3.
for k, terms in sign_table(lam).items():
    case = translation_case(lam, k)
    pretty = ", ".join(f"{c:+d} nabla{mu}" for mu, c in terms.items())
    print(f"k={k:>2} case {case}: {pretty}")

# Every summand carries the same sign, (-1)^(|lam|+1).
signs = {c for terms in sign_table(lam).values() for c in terms.values()}
print("\nsigns seen:", signs, "predicted:", (-1) ** (sum(lam) + 1))
