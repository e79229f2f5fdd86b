"""Primality tests for N = m * p^l - 1 over the norm-one group G_N(D).

``m`` is the full cofactor (the fixed multiplier times k); only the product
ever enters the tests. The entry points are

* :func:`lucasian_test` - the single-exponentiation certificate search,
  ending in Prime, Composite or StrongProbablePrime;
* :func:`cyclotomic_test` - the if-and-only-if criterion on
  Phi_p(w^((N+1)/p)) when m < p^l;
* :func:`is_strong_probable_prime` - the reference generalized strong
  probable prime predicate, evaluated with explicit cyclotomic sums;
* :func:`mr2_test` - the Miller-Rabin analogue for N + 1 = 2^s * u;
* :func:`lucasian_test_2k` - the N = 2k p^l - 1 variant, choosing D as the
  least prime non-residue modulo N.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from math import gcd
from typing import Iterable

from .group import (
    CompositeWitness,
    _is_odd_prime,
    draw_nonzero,
    generate_base,
    is_member,
)
from .ring import QuadraticContext, RingElement, is_squarefree
from .symbols import exact_threshold_met, jacobi, kronecker

__all__ = [
    "Verdict",
    "Witness",
    "TestOutcome",
    "FormParams",
    "InvalidForm",
    "NonresidueNotFound",
    "default_multiplier",
    "build_params",
    "cyclotomic_eval",
    "lucasian_test",
    "cyclotomic_test",
    "is_strong_probable_prime",
    "split_two_power",
    "mr2_test",
    "mr2_search",
    "find_nonresidue_prime",
    "lucasian_test_2k",
    "DEFAULT_RETRIES",
]

DEFAULT_RETRIES = 20
DEFAULT_QN_CAP = 1000


class Verdict(str, Enum):
    PRIME = "Prime"
    COMPOSITE = "Composite"
    STRONG_PROBABLE_PRIME = "StrongProbablePrime"
    NOT_APPLICABLE = "NotApplicable"
    INCONCLUSIVE = "Inconclusive"


class Witness(str, Enum):
    """Why a Composite verdict is certain."""

    FACTOR = "factor"  # nontrivial gcd with N
    ZERO_DIVISOR = "zero_divisor"  # S_{i-1} - 1 has a norm sharing a factor with N
    NO_UNIT_POWER = "sprp_failure"  # w^(N+1) != 1, generalized strong probable prime fails
    CYCLOTOMIC = "cyclotomic_failure"  # Phi_p(w^((N+1)/p)) != 0
    MR2 = "mr2_failure"  # neither w^u = 1 nor w^(2^r u) = -1


@dataclass
class TestOutcome:
    """Verdict plus whatever evidence produced it.

    ``trace`` holds intermediate ring values keyed by name (for instance
    ``S0`` and ``S_prev`` for the certificate search, ``powers`` for
    :func:`mr2_test`).
    """

    __test__ = False  # not a pytest class

    verdict: Verdict
    reason: str = ""
    certificate_j: int | None = None
    factor: int | None = None
    witness: Witness | None = None
    bases_tried: int = 0
    base: RingElement | None = None
    trace: dict = field(default_factory=dict)

    @property
    def is_prime(self) -> bool:
        return self.verdict is Verdict.PRIME

    @property
    def is_composite(self) -> bool:
        return self.verdict is Verdict.COMPOSITE


class InvalidForm(ValueError):
    """The (D, m, p, l) tuple violates a structural precondition."""


class NonresidueNotFound(LookupError):
    pass


def default_multiplier(D: int) -> int:
    """2|D| for D = 1 (mod 4), 4|D| for D = 2, 3 (mod 4); negative D only.

    With this multiplier N = c k p^l - 1 is -1 mod |D|, which forces
    (D/N) = -1.
    """
    if D >= 0:
        raise ValueError("default multiplier is defined for negative D only")
    if not is_squarefree(D):
        raise ValueError(f"D = {D} is not square-free")
    return 2 * -D if D % 4 == 1 else 4 * -D


@dataclass(frozen=True)
class FormParams:
    D: int
    m: int
    p: int
    l: int
    N: int = field(init=False)
    jacobi: int = field(init=False)

    def __post_init__(self):
        N = self.m * self.p**self.l - 1
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "jacobi", jacobi(self.D, N))

    @cached_property
    def ctx(self) -> QuadraticContext:
        return QuadraticContext(self.D, self.N, assume_squarefree=True)

    @property
    def applicable(self) -> bool:
        return self.jacobi == -1


def build_params(D: int, m: int, p: int, l: int) -> FormParams:
    """Validate and assemble N = m p^l - 1.

    Raises :class:`InvalidForm` on structural problems. A Jacobi symbol other
    than -1 is not an error here; the tests turn it into a verdict.
    """
    if l < 1:
        raise InvalidForm(f"l must be positive, got {l}")
    if m < 1:
        raise InvalidForm(f"m must be positive, got {m}")
    if not _is_odd_prime(p):
        raise InvalidForm(f"p = {p} is not an odd prime")
    if gcd(m, p) != 1:
        raise InvalidForm(f"gcd(m, p) = gcd({m}, {p}) != 1")
    if m % 2:
        raise InvalidForm(f"m = {m} is odd, so N = m p^l - 1 is even")
    if m * p**l - 1 < 3:
        raise InvalidForm("N must be at least 3")
    if D == 0 or not is_squarefree(D):
        raise InvalidForm(f"D = {D} is not a nonzero square-free integer")
    return FormParams(D, m, p, l)


def _gate(params: FormParams) -> TestOutcome | None:
    """Verdict forced by the Jacobi symbol alone, if any."""
    if params.jacobi == -1:
        return None
    if params.jacobi == 0:
        g = gcd(params.D, params.N)
        if 1 < g < params.N:
            return TestOutcome(
                Verdict.COMPOSITE, f"gcd(D, N) = {g}", factor=g, witness=Witness.FACTOR
            )
        return TestOutcome(Verdict.NOT_APPLICABLE, f"N divides D = {params.D}")
    return TestOutcome(Verdict.NOT_APPLICABLE, f"(D/N) = +1 for D = {params.D}")


def cyclotomic_eval(x: RingElement, p: int) -> RingElement:
    """1 + x + ... + x^(p-1) by Horner's rule."""
    acc = x.ctx.one()
    for _ in range(p - 1):
        acc = acc * x + 1
    return acc


def _run_base(params: FormParams, z: RingElement) -> TestOutcome:
    ctx, N, p = params.ctx, params.N, params.p
    try:
        w = generate_base(ctx, z)
    except CompositeWitness as exc:
        g = exc.factor
        return TestOutcome(
            Verdict.COMPOSITE,
            f"gcd(norm(z), N) = {g}",
            factor=g if g < N else None,
            witness=Witness.FACTOR,
            trace={"z": z},
        )
    s = w ** params.m
    trace = {"z": z, "S0": s}
    if s.is_one():
        return TestOutcome(Verdict.STRONG_PROBABLE_PRIME, "S0 = w^m = 1", base=w, trace=trace)
    prev = s
    for i in range(1, params.l + 1):
        s = prev**p
        if s.is_one():
            g = gcd((prev - 1).norm(), N)
            if g != 1:
                trace["S_prev"] = prev
                return TestOutcome(
                    Verdict.COMPOSITE,
                    f"S_{i} = 1 but gcd(norm(S_{i - 1} - 1), N) = {g}",
                    factor=g if g < N else None,
                    witness=Witness.ZERO_DIVISOR,
                    base=w,
                    trace=trace,
                )
            j = i
            break
        prev = s
    else:
        return TestOutcome(
            Verdict.COMPOSITE,
            "w^(N+1) != 1",
            witness=Witness.NO_UNIT_POWER,
            base=w,
            trace=trace,
        )
    trace["S_prev"] = prev
    if exact_threshold_met(p, j, params.m, params.l):
        return TestOutcome(
            Verdict.PRIME, f"certificate at j = {j}", certificate_j=j, base=w, trace=trace
        )
    return TestOutcome(
        Verdict.STRONG_PROBABLE_PRIME,
        f"cyclotomic condition at j = {j} is below the threshold",
        certificate_j=j,
        base=w,
        trace=trace,
    )


def lucasian_test(
    params: FormParams,
    *,
    seed: int | random.Random = 0,
    retries: int = DEFAULT_RETRIES,
    bases: Iterable[RingElement | tuple[int, int]] | None = None,
) -> TestOutcome:
    """Certificate search for N = m p^l - 1.

    Each base z gives w = z / conj(z), S_0 = w^m and S_i = S_{i-1}^p. The
    first index j with S_j = 1 and S_{j-1} - 1 invertible certifies
    Phi_p(S_{j-1}) = 0, which proves primality once p^(2j) >= N + 1. Failure
    of the chain proves compositeness.

    When a base ends inconclusively (S_0 = 1, or j too small), another base
    is drawn, up to ``retries`` redraws. ``bases`` replaces the seeded draw
    with explicit z values.
    """
    gated = _gate(params)
    if gated is not None:
        return gated
    ctx = params.ctx
    if bases is None:
        rng = seed if isinstance(seed, random.Random) else random.Random(seed)
        source = (draw_nonzero(ctx, rng) for _ in range(retries + 1))
    else:
        source = (z if isinstance(z, RingElement) else ctx(*z) for z in bases)

    last = TestOutcome(Verdict.STRONG_PROBABLE_PRIME, "no base supplied")
    tried = 0
    for z in source:
        tried += 1
        outcome = _run_base(params, z)
        outcome.bases_tried = tried
        if outcome.verdict is not Verdict.STRONG_PROBABLE_PRIME:
            return outcome
        last = outcome
    last.reason = f"{last.reason}; no certificate after {tried} bases"
    return last


def cyclotomic_test(params: FormParams, w: RingElement) -> TestOutcome:
    """N prime iff Phi_p(w^((N+1)/p)) = 0, given m < p^l and w^((N+1)/p) != 1.

    Both verdicts are certified. Unmet hypotheses give NotApplicable.
    """
    gated = _gate(params)
    if gated is not None:
        return gated
    if not params.m < params.p**params.l:
        return TestOutcome(Verdict.NOT_APPLICABLE, "m >= p^l")
    if not is_member(w):
        raise ValueError(f"{w!r} is not in the norm-one group")
    x = w ** ((params.N + 1) // params.p)
    trace = {"X": x}
    if x.is_one():
        return TestOutcome(Verdict.NOT_APPLICABLE, "w^((N+1)/p) = 1", base=w, trace=trace)
    phi = cyclotomic_eval(x, params.p)
    trace["phi"] = phi
    if phi.is_zero():
        return TestOutcome(Verdict.PRIME, "Phi_p(X) = 0", base=w, bases_tried=1, trace=trace)
    return TestOutcome(
        Verdict.COMPOSITE,
        "Phi_p(X) != 0",
        witness=Witness.CYCLOTOMIC,
        base=w,
        bases_tried=1,
        trace=trace,
    )


def is_strong_probable_prime(params: FormParams, w: RingElement) -> bool:
    """w^m = 1, or Phi_p(w^(m p^j)) = 0 for some 0 <= j < l.

    Every prime N of the form satisfies this for every w in G_N(D).
    """
    x = w ** params.m
    if x.is_one():
        return True
    for _ in range(params.l):
        if cyclotomic_eval(x, params.p).is_zero():
            return True
        x = x**params.p
    return False


def split_two_power(n: int) -> tuple[int, int]:
    """(s, u) with n = 2^s * u, u odd."""
    if n <= 0:
        raise ValueError("n must be positive")
    s = (n & -n).bit_length() - 1
    return s, n >> s


def mr2_test(N: int, D: int, w: RingElement) -> TestOutcome:
    """Miller-Rabin analogue for N + 1 = 2^s u.

    Inconclusive if w^u = 1 or w^(2^r u) = -1 for some r < s; otherwise
    Composite. ``trace["powers"]`` lists w^(2^r u) for r = 0 .. s-1.
    """
    ctx = w.ctx
    if ctx.N != N or ctx.D != D:
        raise ValueError(f"base lives in Z[sqrt({ctx.D})]/{ctx.N}, not D={D}, N={N}")
    if ctx.jacobi_DN != -1:
        return TestOutcome(Verdict.NOT_APPLICABLE, f"(D/N) = {ctx.jacobi_DN}")
    if w.is_one() or w == -1:
        raise ValueError("base must not be 1 or -1")
    if not is_member(w):
        raise ValueError(f"{w!r} is not in the norm-one group")
    s, u = split_two_power(N + 1)
    x = w**u
    powers = [x]
    for _ in range(s - 1):
        x = x.square()
        powers.append(x)
    trace = {"u": u, "s": s, "powers": powers}
    if powers[0].is_one():
        return TestOutcome(Verdict.INCONCLUSIVE, "w^u = 1", base=w, bases_tried=1, trace=trace)
    for r, y in enumerate(powers):
        if y == -1:
            return TestOutcome(
                Verdict.INCONCLUSIVE, f"w^(2^{r} u) = -1", base=w, bases_tried=1, trace=trace
            )
    return TestOutcome(
        Verdict.COMPOSITE,
        "w^u != 1 and w^(2^r u) != -1 for all r < s",
        witness=Witness.MR2,
        base=w,
        bases_tried=1,
        trace=trace,
    )


def mr2_search(
    N: int, D: int, trials: int = 20, seed: int | random.Random = 0, max_draws: int | None = None
) -> TestOutcome:
    """Run :func:`mr2_test` over ``trials`` seeded bases, stopping at a witness."""
    ctx = QuadraticContext(D, N)
    if ctx.jacobi_DN != -1:
        if ctx.jacobi_DN == 0 and 1 < gcd(D, N) < N:
            g = gcd(D, N)
            return TestOutcome(Verdict.COMPOSITE, f"gcd(D, N) = {g}", factor=g, witness=Witness.FACTOR)
        return TestOutcome(Verdict.NOT_APPLICABLE, f"(D/N) = {ctx.jacobi_DN}")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    max_draws = max_draws if max_draws is not None else 10 * trials + 10
    tried = 0
    last = TestOutcome(Verdict.INCONCLUSIVE, "no usable base drawn")
    for _ in range(max_draws):
        if tried >= trials:
            break
        try:
            w = generate_base(ctx, draw_nonzero(ctx, rng))
        except CompositeWitness as exc:
            g = exc.factor
            return TestOutcome(
                Verdict.COMPOSITE,
                f"gcd(norm(z), N) = {g}",
                factor=g if g < N else None,
                witness=Witness.FACTOR,
                bases_tried=tried + 1,
            )
        if w.is_one() or w == -1:
            continue
        tried += 1
        last = mr2_test(N, D, w)
        last.bases_tried = tried
        if last.verdict is Verdict.COMPOSITE:
            return last
    return last


def _primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for q in range(2, int(n**0.5) + 1):
        if sieve[q]:
            sieve[q * q :: q] = bytearray(len(range(q * q, n + 1, q)))
    return [q for q in range(n + 1) if sieve[q]]


def find_nonresidue_prime(N: int, cap: int = DEFAULT_QN_CAP) -> int:
    """Least prime Q <= cap with (Q/N) = -1.

    Raises :class:`NonresidueNotFound` when the cap runs out; this always
    happens for perfect squares.
    """
    if N < 3 or N % 2 == 0:
        raise ValueError(f"N must be odd and >= 3, got {N}")
    for q in _primes_up_to(cap):
        if kronecker(q, N) == -1:
            return q
    raise NonresidueNotFound(f"no prime Q <= {cap} with (Q/{N}) = -1")


def lucasian_test_2k(
    k: int,
    p: int,
    l: int,
    *,
    cap: int = DEFAULT_QN_CAP,
    seed: int | random.Random = 0,
    retries: int = DEFAULT_RETRIES,
) -> TestOutcome:
    """:func:`lucasian_test` for N = 2k p^l - 1 with D the least prime non-residue."""
    if k < 1 or k % p == 0:
        return TestOutcome(Verdict.NOT_APPLICABLE, f"need p not dividing k >= 1, got k={k}")
    N = 2 * k * p**l - 1
    try:
        q = find_nonresidue_prime(N, cap)
    except NonresidueNotFound as exc:
        return TestOutcome(Verdict.NOT_APPLICABLE, str(exc))
    outcome = lucasian_test(build_params(q, 2 * k, p, l), seed=seed, retries=retries)
    outcome.trace["Q"] = q
    return outcome
