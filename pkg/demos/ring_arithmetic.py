"""Arithmetic in Z[sqrt(D)]/N and its norm-one group.

Run: python demos/ring_arithmetic.py
"""

from quadprime import CompositeWitness, NonInvertible, QuadraticContext
from quadprime.group import generate_base, is_member

ctx = QuadraticContext(D=-3, N=35)
print(f"working modulo {ctx.N} with D = {ctx.D}, (D/N) = {ctx.jacobi_DN}")

z = ctx(1, 1)
print(f"z = {z}, conjugate {z.conjugate()}, norm {z.norm()}")
print(f"z^2 = {z * z}, z^-1 = {z.inverse()}, z * z^-1 = {z * z.inverse()}")

# z / conj(z) always has norm one, which is how test bases are produced.
w = generate_base(ctx, z)
print(f"w = z / conj(z) = {w}, norm {w.norm()}, member of the group: {is_member(w)}")
print(f"inverse of a group element is its conjugate: {w * w.conjugate()}")

# Modulo a composite some nonzero elements have a norm sharing a factor with N.
y = ctx(2, 1)
try:
    y.inverse()
except NonInvertible as exc:
    print(f"{y} has norm {y.norm()} and no inverse: gcd = {exc.g}")
try:
    generate_base(ctx, y)
except CompositeWitness as exc:
    print(f"drawing {y} as a base exposes the factor {exc.factor} of {ctx.N}")
