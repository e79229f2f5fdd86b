"""Exact integer primitives: Jacobi and Kronecker symbols, and the
certificate threshold comparison.

Everything here is integer-only. The threshold in particular must never be
evaluated with logarithms, since it decides whether a primality certificate
is valid.
"""

from __future__ import annotations

from math import gcd

__all__ = ["jacobi", "kronecker", "exact_threshold_met", "modinv", "gcd"]


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n, by binary reciprocity.

    >>> jacobi(-3, 35)
    -1
    >>> jacobi(3, 2737)
    1
    """
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"jacobi symbol needs an odd positive modulus, got {n}")
    a %= n
    result = 1
    while a:
        # pull out factors of two: (2/n) = -1 iff n = 3, 5 (mod 8)
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n) for n >= 2.

    Odd n reduces to :func:`jacobi`. Each factor of two in n contributes
    (a/2), which is 0 for even a, +1 for a = +-1 (mod 8) and -1 for
    a = +-3 (mod 8).
    """
    if n < 2:
        raise ValueError(f"kronecker symbol implemented for n >= 2, got {n}")
    result = 1
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            result = -result
    if n == 1:
        return result
    return result * jacobi(a, n)


def modinv(a: int, n: int) -> int:
    """Inverse of a modulo n; raises ValueError when gcd(a, n) > 1."""
    return pow(a, -1, n)


def exact_threshold_met(p: int, j: int, m: int, l: int) -> bool:
    """True iff p**(2j) >= m * p**l.

    This is the integer form of ``2j >= log_p(m) + l``: both sides are
    powers of p scaled by integers, so no rounding is involved.
    """
    if j < 1 or l < 1 or m < 1:
        raise ValueError("j, m and l must be positive")
    if j > l:
        raise ValueError(f"certificate index j={j} exceeds l={l}")
    return p ** (2 * j) >= m * p**l
