"""Order and cyclicity of the norm-one group modulo small primes.

The group has p - (D/p) elements and is cyclic. A composite modulus splits
into the product of the groups of its coprime factors.

Run: python demos/group_structure.py
"""

from quadprime.group import crt_split_check, group_order_bruteforce, is_cyclic_bruteforce
from quadprime.symbols import jacobi

D = -3
print(f"D = {D}")
for p in (5, 7, 11, 13, 17, 19, 23, 29, 31):
    order = group_order_bruteforce(p, D)
    print(f"  p = {p:>2}: (D/p) = {jacobi(D, p):>2}, |G| = {order:>2}, cyclic: {is_cyclic_bruteforce(p, D)}")

print(f"|G_35| = |G_5| * |G_7|: {crt_split_check(5, 7, D)}")
