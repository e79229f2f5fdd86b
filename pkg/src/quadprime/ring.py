"""Arithmetic in the quotient ring Z[sqrt(D)] / N for odd N.

For odd N the rings built on the sqrt(D) basis and on the omega basis
(omega = (1 + sqrt(D)) / 2, D = 1 mod 4) are isomorphic, so every element is
stored as a pair (a, b) meaning a + b*sqrt(D). :func:`from_omega` converts
omega-basis coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .symbols import jacobi

__all__ = [
    "QuadraticContext",
    "RingElement",
    "NonInvertible",
    "try_invert",
    "ContextMismatch",
    "is_squarefree",
    "from_omega",
    "omega_norm",
]

SQUAREFREE_BOUND = 10**6


class NonInvertible(ArithmeticError):
    """Raised when an element has a norm sharing a factor with N.

    ``g`` is gcd(norm, N). When the element is nonzero and g < N, g is a
    proper factor of N.
    """

    def __init__(self, g: int, element: "RingElement | None" = None):
        super().__init__(f"element not invertible, gcd(norm, N) = {g}")
        self.g = g
        self.element = element


class ContextMismatch(ValueError):
    pass


def is_squarefree(d: int, bound: int = SQUAREFREE_BOUND) -> bool:
    """Trial-division square-freeness test for D.

    Raises ValueError if |D| has an unresolved cofactor whose square root
    exceeds ``bound``.
    """
    n = abs(d)
    if n == 0:
        return False
    q = 2
    while q * q <= n:
        if q > bound:
            raise ValueError(f"cannot certify square-freeness of {d} below bound {bound}")
        if n % q == 0:
            n //= q
            if n % q == 0:
                return False
        q += 1 if q == 2 else 2
    return True


@dataclass(frozen=True)
class QuadraticContext:
    """The pair (D, N) scoping all arithmetic in Z[sqrt(D)] / N.

    D is kept unreduced so that (D/q) stays available for divisors q of N.
    Pass ``assume_squarefree=True`` to skip the trial-division check for
    large D.
    """

    D: int
    N: int
    assume_squarefree: bool = field(default=False, compare=False, repr=False)
    jacobi_DN: int = field(init=False, compare=False)
    D_mod: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.N < 3 or self.N % 2 == 0:
            raise ValueError(f"N must be odd and >= 3, got {self.N}")
        if self.D == 0:
            raise ValueError("D must be nonzero")
        if not self.assume_squarefree and not is_squarefree(self.D):
            raise ValueError(f"D = {self.D} is not square-free")
        object.__setattr__(self, "D_mod", self.D % self.N)
        object.__setattr__(self, "jacobi_DN", jacobi(self.D_mod, self.N))

    def __call__(self, a: int, b: int = 0) -> "RingElement":
        return RingElement(self, a, b)

    make = __call__

    def one(self) -> "RingElement":
        return RingElement(self, 1, 0)

    def zero(self) -> "RingElement":
        return RingElement(self, 0, 0)

    def sqrt_d(self) -> "RingElement":
        return RingElement(self, 0, 1)


class RingElement:
    """Residue a + b*sqrt(D) modulo N, both coordinates reduced into [0, N)."""

    __slots__ = ("ctx", "a", "b")

    def __init__(self, ctx: QuadraticContext, a: int, b: int = 0):
        self.ctx = ctx
        self.a = a % ctx.N
        self.b = b % ctx.N

    def _check(self, other: "RingElement") -> None:
        if other.ctx is not self.ctx and other.ctx != self.ctx:
            raise ContextMismatch(f"cannot combine elements of {self.ctx} and {other.ctx}")

    def _coerce(self, other) -> "RingElement":
        if isinstance(other, RingElement):
            self._check(other)
            return other
        if isinstance(other, int):
            return RingElement(self.ctx, other, 0)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ctx, self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ctx, self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return RingElement(self.ctx, -self.a, -self.b)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        return RingElement(
            self.ctx, a1 * a2 + self.ctx.D_mod * b1 * b2, a1 * b2 + a2 * b1
        )

    __rmul__ = __mul__

    def square(self) -> "RingElement":
        a, b = self.a, self.b
        return RingElement(self.ctx, a * a + self.ctx.D_mod * b * b, 2 * a * b)

    def __pow__(self, e: int) -> "RingElement":
        """Left-to-right binary square-and-multiply."""
        if e < 0:
            return self.inverse() ** (-e)
        result = self.ctx.one()
        for bit in bin(e)[2:]:
            result = result.square()
            if bit == "1":
                result = result * self
        return result

    def conjugate(self) -> "RingElement":
        return RingElement(self.ctx, self.a, -self.b)

    def norm(self) -> int:
        """a^2 - D*b^2 mod N."""
        return (self.a * self.a - self.ctx.D_mod * self.b * self.b) % self.ctx.N

    def inverse(self) -> "RingElement":
        """conjugate * norm^-1; raises :class:`NonInvertible` otherwise."""
        n = self.norm()
        g = gcd(n, self.ctx.N)
        if g != 1:
            raise NonInvertible(g, self)
        inv = pow(n, -1, self.ctx.N)
        return RingElement(self.ctx, self.a * inv, -self.b * inv)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_one(self) -> bool:
        return self.a == 1 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.b == 0 and self.a == other % self.ctx.N
        if isinstance(other, RingElement):
            return self.ctx == other.ctx and self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ctx.D, self.ctx.N, self.a, self.b))

    def __iter__(self):
        yield self.a
        yield self.b

    def __repr__(self) -> str:
        return f"RingElement({self.a} + {self.b}*sqrt({self.ctx.D}) mod {self.ctx.N})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        return f"{self.a}+{self.b}√{self.ctx.D}"


def try_invert(x: RingElement) -> RingElement | NonInvertible:
    """Inverse of x, or the NonInvertible instance carrying gcd(norm(x), N)."""
    try:
        return x.inverse()
    except NonInvertible as exc:
        return exc


def from_omega(ctx: QuadraticContext, a: int, b: int) -> RingElement:
    """Convert a + b*omega, omega = (1 + sqrt(D))/2, to the sqrt(D) basis."""
    inv2 = (ctx.N + 1) // 2
    return RingElement(ctx, a + b * inv2, b * inv2)


def omega_norm(ctx: QuadraticContext, a: int, b: int) -> int:
    """Norm of a + b*omega: a^2 + ab + ((1 - D)/4) b^2 mod N (D = 1 mod 4)."""
    if ctx.D % 4 != 1:
        raise ValueError("omega basis is only defined for D = 1 (mod 4)")
    return (a * a + a * b + ((1 - ctx.D) // 4) * b * b) % ctx.N

