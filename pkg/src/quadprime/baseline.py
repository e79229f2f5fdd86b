"""Ground-truth primality for cross-checking the quadratic tests.

Deliberately plain: trial division for small N, classical Miller-Rabin with
the first thirteen prime bases (deterministic below 3.3e24), and a seeded
64-round probabilistic test beyond that, flagged as such.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from math import isqrt

TRIAL_DIVISION_LIMIT = 10**12
SPRP_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
# A014233(13): smallest strong pseudoprime to all of SPRP_BASES
SPRP_BOUND = 3317044064679887385961981
PROBABILISTIC_ROUNDS = 64


class Method(str, Enum):
    TRIAL_DIVISION = "trial_division"
    CLASSICAL_SPRP_SET = "classical_sprp_set"


@dataclass(frozen=True)
class BaselineVerdict:
    is_prime: bool
    method: Method
    smallest_factor: int | None = None
    probabilistic: bool = False

    def __bool__(self) -> bool:
        return self.is_prime


def smallest_factor(n: int) -> int:
    """Least prime factor of n >= 2 by trial division."""
    if n % 2 == 0:
        return 2
    for q in range(3, isqrt(n) + 1, 2):
        if n % q == 0:
            return q
    return n


def is_sprp(n: int, base: int) -> bool:
    """Classical strong probable prime test of odd n > 2 to ``base``."""
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(base, d, n)
    if x in (1, n - 1):
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def baseline_is_prime(n: int, seed: int = 0) -> BaselineVerdict:
    if n < 2:
        raise ValueError(f"baseline defined for n >= 2, got {n}")
    if n <= TRIAL_DIVISION_LIMIT:
        f = smallest_factor(n)
        if f == n:
            return BaselineVerdict(True, Method.TRIAL_DIVISION)
        return BaselineVerdict(False, Method.TRIAL_DIVISION, smallest_factor=f)
    if n % 2 == 0:
        return BaselineVerdict(False, Method.CLASSICAL_SPRP_SET)
    if n < SPRP_BOUND:
        ok = all(is_sprp(n, a) for a in SPRP_BASES)
        return BaselineVerdict(ok, Method.CLASSICAL_SPRP_SET)
    if not all(is_sprp(n, a) for a in SPRP_BASES):
        return BaselineVerdict(False, Method.CLASSICAL_SPRP_SET)
    rng = random.Random(seed)
    ok = all(is_sprp(n, rng.randrange(2, n - 1)) for _ in range(PROBABILISTIC_ROUNDS))
    return BaselineVerdict(ok, Method.CLASSICAL_SPRP_SET, probabilistic=ok)
