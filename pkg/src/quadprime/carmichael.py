"""G(D)-pseudoprimes and G(D)-Carmichael numbers.

N is a G(D)-Carmichael number when alpha^(N - (D/N)) = 1 for every alpha in
G_N(D). For square-free composite N that happens exactly when
p - (D/p) divides N - (D/N) for every prime p | N; :func:`korselt_check`
evaluates that criterion from a factorisation, and
:func:`carmichael_bruteforce` checks the definition directly over the whole
group.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import partial
from math import gcd

import numpy as np

from .group import enumerate_group, is_member, pow_arrays, totient_analogue
from .ring import RingElement
from .symbols import jacobi

log = logging.getLogger(__name__)

__all__ = [
    "CarmichaelReport",
    "DivisibilityEntry",
    "factorize",
    "pseudoprime_base_check",
    "korselt_check",
    "carmichael_bruteforce",
    "search_carmichael",
]

FACTOR_BOUND = 10**7
BRUTEFORCE_CAP = 10**4

_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)  # gaps between integers coprime to 30, from 7


def factorize(n: int, bound: int = FACTOR_BOUND) -> list[tuple[int, int]]:
    """Prime factorisation by wheel-30 trial division.

    Raises ValueError if a cofactor remains whose primality cannot be settled
    with trial divisors up to ``bound``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    factors = []

    def strip(q):
        nonlocal n
        e = 0
        while n % q == 0:
            n //= q
            e += 1
        if e:
            factors.append((q, e))

    for q in (2, 3, 5):
        strip(q)
    q, i = 7, 0
    while q * q <= n:
        if q > bound:
            raise ValueError(f"trial division bound {bound} exceeded")
        strip(q)
        q += _WHEEL[i]
        i = (i + 1) % 8
    if n > 1:
        factors.append((n, 1))
    return factors


@dataclass(frozen=True)
class DivisibilityEntry:
    p: int
    order: int  # p - (D/p)
    divides: bool


@dataclass
class CarmichaelReport:
    N: int
    D: int
    factors: list[tuple[int, int]]
    square_free: bool
    order_N: int  # N - (D/N)
    divisibility: list[DivisibilityEntry] = field(default_factory=list)
    is_prime: bool = False
    is_carmichael: bool = False

    def to_dict(self) -> dict:
        return asdict(self)


def pseudoprime_base_check(N: int, D: int, alpha: RingElement) -> bool:
    """alpha^(N - (D/N)) = 1 (mod N). False proves N composite."""
    if gcd(N, D) != 1:
        raise ValueError(f"gcd({N}, {D}) > 1")
    if alpha.ctx.N != N or alpha.ctx.D != D:
        raise ValueError("base lives in a different ring")
    if not is_member(alpha):
        raise ValueError(f"{alpha!r} is not in the norm-one group")
    return (alpha ** totient_analogue(N, D)).is_one()


def korselt_check(N: int, D: int, bound: int = FACTOR_BOUND) -> CarmichaelReport:
    if N < 3 or N % 2 == 0:
        raise ValueError(f"N must be odd and >= 3, got {N}")
    if gcd(N, D) != 1:
        raise ValueError(f"gcd({N}, {D}) > 1")
    factors = factorize(N, bound)
    square_free = all(e == 1 for _, e in factors)
    order_N = totient_analogue(N, D)
    report = CarmichaelReport(N, D, factors, square_free, order_N)
    if factors == [(N, 1)]:
        report.is_prime = True
        return report
    for p, _ in factors:
        order_p = p - jacobi(D, p)
        report.divisibility.append(DivisibilityEntry(p, order_p, order_N % order_p == 0))
    report.is_carmichael = square_free and all(d.divides for d in report.divisibility)
    return report


def carmichael_bruteforce(N: int, D: int, cap: int = BRUTEFORCE_CAP) -> bool:
    """Check alpha^(N - (D/N)) = 1 for every alpha in G_N(D) by enumeration."""
    if N > cap:
        raise ValueError(f"N = {N} exceeds cap {cap}")
    if N < 3 or N % 2 == 0:
        raise ValueError(f"N must be odd and >= 3, got {N}")
    if gcd(N, D) != 1:
        raise ValueError(f"gcd({N}, {D}) > 1")
    a, b = enumerate_group(N, D, cap=cap)
    ra, rb = pow_arrays(a, b, totient_analogue(N, D), D, N)
    return bool(np.all((ra == 1) & (rb == 0)))


def _candidate(N: int, D: int, bound: int) -> int | None:
    report = korselt_check(N, D, bound)
    return N if report.is_carmichael else None


def search_carmichael(
    lo: int, hi: int, D: int, *, bound: int = FACTOR_BOUND, jobs: int = 1
) -> list[int]:
    """Sorted odd square-free composite N in [lo, hi] that are G(D)-Carmichael."""
    if hi > bound * bound:
        raise ValueError(f"hi = {hi} exceeds the factorisation range")
    candidates = []
    skipped = 0
    for n in range(max(lo, 3) | 1, hi + 1, 2):
        if gcd(n, D) != 1:
            log.debug("skipping N = %d: gcd with D = %d is %d", n, D, gcd(n, D))
            skipped += 1
            continue
        candidates.append(n)
    if skipped:
        log.info("skipped %d odd N in [%d, %d] sharing a factor with D = %d", skipped, lo, hi, D)
    check = partial(_candidate, D=D, bound=bound)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = pool.map(check, candidates, chunksize=256)
            found = [n for n in results if n is not None]
    else:
        found = [n for n in map(check, candidates) if n is not None]
    return sorted(found)

