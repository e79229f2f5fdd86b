"""Catching the composite 35 with the Miller-Rabin analogue.

35 + 1 = 2^2 * 9. For a prime N the sequence w^9, w^18 must hit -1 or
start at 1; here it passes through 29 and lands on 1 without visiting -1.

Run: python demos/worked_example_35.py
"""

from quadprime import GroupElement, QuadraticContext, mr2_test

ctx = QuadraticContext(-3, 35)
w = GroupElement(ctx, 3, 3)
print(f"(-3/35) = {ctx.jacobi_DN}, base w = {w} with norm {w.norm()}")

outcome = mr2_test(35, -3, w)
u, s = outcome.trace["u"], outcome.trace["s"]
for r, x in enumerate(outcome.trace["powers"]):
    print(f"w^(2^{r} * {u}) = {x}")
print(f"verdict: {outcome.verdict.value} ({outcome.reason})")
