"""The norm-one group G_N(D) = {x in Z[sqrt(D)]/N : norm(x) = 1}.

Besides membership and base generation this module carries small exhaustive
enumerators (numpy-vectorised) used as ground truth for the group order,
cyclicity and CRT-splitting facts the primality tests rely on.
"""

from __future__ import annotations

import random
from math import gcd

import numpy as np

from .ring import QuadraticContext, RingElement
from .symbols import kronecker

__all__ = [
    "GroupElement",
    "CompositeWitness",
    "is_member",
    "generate_base",
    "random_base",
    "draw_nonzero",
    "totient_analogue",
    "enumerate_group",
    "element_orders",
    "group_order_bruteforce",
    "is_cyclic_bruteforce",
    "crt_split_check",
]

ORDER_CAP = 10**4
CYCLIC_CAP = 500
CRT_CAP = 10**4


class CompositeWitness(Exception):
    """A base draw exposed gcd(norm(z), N) != 1, so N is composite."""

    def __init__(self, factor: int, z: RingElement):
        super().__init__(f"gcd(norm(z), N) = {factor} for z = {z}")
        self.factor = factor
        self.z = z


class GroupElement(RingElement):
    """A ring element whose norm is 1 mod N (checked on construction).

    Arithmetic on group elements returns plain :class:`RingElement` values.
    """

    __slots__ = ()

    def __init__(self, ctx: QuadraticContext, a: int, b: int = 0):
        super().__init__(ctx, a, b)
        if self.norm() != 1:
            raise ValueError(f"{self!r} has norm {self.norm()}, not 1")

    @classmethod
    def from_ring(cls, x: RingElement) -> "GroupElement":
        return cls(x.ctx, x.a, x.b)

    def inverse(self) -> RingElement:
        return self.conjugate()


def is_member(x: RingElement) -> bool:
    return x.norm() == 1


def generate_base(ctx: QuadraticContext, z: RingElement) -> GroupElement:
    """w = z / conj(z), which has norm 1 whenever it exists.

    Raises :class:`CompositeWitness` when gcd(norm(z), N) != 1: for prime N
    with (D/N) = -1 every nonzero z has a unit norm.
    """
    if z.is_zero():
        raise ValueError("base generation needs a nonzero z")
    nz = z.norm()
    g = gcd(nz, ctx.N)
    if g != 1:
        raise CompositeWitness(g, z)
    # conj(z)^-1 = z / norm(z), so z / conj(z) = z^2 / norm(z)
    inv = pow(nz, -1, ctx.N)
    w = z.square()
    return GroupElement(ctx, w.a * inv, w.b * inv)


def draw_nonzero(ctx: QuadraticContext, rng: random.Random) -> RingElement:
    """Uniform z = a + b*sqrt(D) with b != 0 (a rational z gives w = 1)."""
    return RingElement(ctx, rng.randrange(ctx.N), rng.randrange(1, ctx.N))


def random_base(ctx: QuadraticContext, rng: random.Random | int = 0) -> GroupElement:
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    return generate_base(ctx, draw_nonzero(ctx, rng))


def totient_analogue(n: int, D: int) -> int:
    """n - (D/n) with the Kronecker symbol; the order of G_n(D) at primes."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if gcd(n, D) != 1:
        raise ValueError(f"gcd({n}, {D}) > 1")
    return n - kronecker(D, n)


# -- exhaustive enumeration ------------------------------------------------

def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    q = 3
    while q * q <= p:
        if p % q == 0:
            return False
        q += 2
    return True


def enumerate_group(N: int, D: int, cap: int = ORDER_CAP) -> tuple[np.ndarray, np.ndarray]:
    """All (a, b) in [0, N)^2 with a^2 - D b^2 = 1 (mod N), sorted by (b, a).

    Equivalent to scanning all N^2 pairs, but done per b by looking up the
    square roots of 1 + D b^2 in a sorted table of squares.
    """
    if N > cap:
        raise ValueError(f"N = {N} exceeds enumeration cap {cap}")
    if N < 2:
        raise ValueError("N must be at least 2")
    r = np.arange(N, dtype=np.int64)
    sq = r * r % N
    order = np.argsort(sq, kind="stable")
    sorted_sq = sq[order]
    target = (1 + (D % N) * sq) % N
    left = np.searchsorted(sorted_sq, target, side="left")
    right = np.searchsorted(sorted_sq, target, side="right")
    counts = right - left
    total = int(counts.sum())
    b = np.repeat(r, counts)
    first = np.repeat(left, counts)
    offsets = np.arange(total) - np.repeat(np.cumsum(counts) - counts, counts)
    a = order[first + offsets]
    return a, b


def _mul_arrays(a1, b1, a2, b2, D, N):
    return (a1 * a2 + D * (b1 * b2 % N)) % N, (a1 * b2 + a2 * b1) % N


def pow_arrays(a: np.ndarray, b: np.ndarray, e: int, D: int, N: int) -> tuple[np.ndarray, np.ndarray]:
    """Elementwise (a + b sqrt(D))^e mod N over int64 arrays (N <= 10^4)."""
    D %= N
    ra = np.ones_like(a)
    rb = np.zeros_like(b)
    for bit in bin(e)[2:]:
        ra, rb = _mul_arrays(ra, rb, ra, rb, D, N)
        if bit == "1":
            ra, rb = _mul_arrays(ra, rb, a, b, D, N)
    return ra, rb


def _factor_small(n: int) -> list[tuple[int, int]]:
    out = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            e = 0
            while n % q == 0:
                n //= q
                e += 1
            out.append((q, e))
        q += 1
    if n > 1:
        out.append((n, 1))
    return out


def element_orders(N: int, D: int, cap: int = CYCLIC_CAP) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Enumerate G_N(D) and the multiplicative order of each element."""
    if N > cap:
        raise ValueError(f"N = {N} exceeds order cap {cap}")
    a, b = enumerate_group(N, D, cap=cap)
    size = len(a)
    orders = np.full(size, size, dtype=np.int64)
    for q, e in _factor_small(size):
        for _ in range(e):
            divisible = orders % q == 0
            cand = np.where(divisible, orders // q, 0)
            for u in np.unique(cand[divisible]):
                idx = np.nonzero(divisible & (cand == u))[0]
                pa, pb = pow_arrays(a[idx], b[idx], int(u), D, N)
                hit = (pa == 1) & (pb == 0)
                orders[idx[hit]] = u
    return a, b, orders


def group_order_bruteforce(p: int, D: int, cap: int = ORDER_CAP) -> int:
    """|G_p(D)| by exhaustive enumeration."""
    if p > cap:
        raise ValueError(f"p = {p} exceeds cap {cap}")
    if not _is_odd_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    if D % p == 0:
        raise ValueError(f"p = {p} divides D = {D}")
    return len(enumerate_group(p, D, cap=cap)[0])


def is_cyclic_bruteforce(p: int, D: int, cap: int = CYCLIC_CAP) -> bool:
    if p > cap:
        raise ValueError(f"p = {p} exceeds cap {cap}")
    if not _is_odd_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    a, _, orders = element_orders(p, D, cap=cap)
    return bool((orders == len(a)).any())


def crt_split_check(m: int, n: int, D: int, cap: int = CRT_CAP) -> bool:
    """Check G_mn(D) -> G_m(D) x G_n(D), x -> (x mod m, x mod n), is a bijection."""
    if gcd(m, n) != 1:
        raise ValueError(f"{m} and {n} are not coprime")
    if m * n > cap:
        raise ValueError(f"m*n = {m * n} exceeds cap {cap}")
    a, b = enumerate_group(m * n, D, cap=cap)
    am, bm = enumerate_group(m, D, cap=cap)
    an, bn = enumerate_group(n, D, cap=cap)
    if len(a) != len(am) * len(an):
        return False
    ra, rb, sa, sb = a % m, b % m, a % n, b % n
    # images land in the product group
    if ((ra * ra - D * rb * rb) % m != 1 % m).any():
        return False
    if ((sa * sa - D * sb * sb) % n != 1 % n).any():
        return False
    keys = ((ra * m + rb) * n + sa) * n + sb
    return len(np.unique(keys)) == len(a)
