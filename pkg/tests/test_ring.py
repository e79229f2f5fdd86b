import random

import pytest
from hypothesis import given, strategies as st

from quadprime.ring import (
    ContextMismatch,
    NonInvertible,
    QuadraticContext,
    RingElement,
    from_omega,
    is_squarefree,
    omega_norm,
    try_invert,
)

from conftest import naive_is_prime

CTX35 = QuadraticContext(-3, 35)


def test_make_reduces_coordinates():
    x = CTX35(36, -1)
    assert (x.a, x.b) == (1, 34)
    assert CTX35(3, 3).a == 3 and CTX35(3, 3).b == 3
    assert CTX35(0, 0).is_zero()


def test_context_caches_jacobi():
    assert CTX35.jacobi_DN == -1
    assert QuadraticContext(3, 2737).jacobi_DN == 1


@pytest.mark.parametrize("D, N", [(-3, 34), (-3, 1), (0, 35), (12, 35), (-8, 35)])
def test_context_rejects_bad_input(D, N):
    with pytest.raises(ValueError):
        QuadraticContext(D, N)


def test_squarefree_override():
    assert QuadraticContext(12, 35, assume_squarefree=True).D == 12
    assert is_squarefree(-30) and not is_squarefree(18) and not is_squarefree(0)


def test_identity_and_sqrt_d():
    x = CTX35(7, 11)
    assert CTX35.one() * x == x
    assert CTX35.sqrt_d() ** 2 == CTX35(-3 % 35, 0)


def test_square_of_example_base():
    # (3 + 3s)^2 = 9 + 9D + 18s = -18 + 18s with D = -3
    w = CTX35(3, 3)
    assert w * w == CTX35(17, 18)
    assert w.square() == CTX35(17, 18)


def test_conjugate():
    x = CTX35(3, 3)
    assert x.conjugate() == CTX35(3, 32)
    assert x.conjugate().conjugate() == x
    assert CTX35(9, 0).conjugate() == CTX35(9, 0)


def test_norm_examples():
    assert CTX35(3, 3).norm() == 1
    assert CTX35.one().norm() == 1
    ctx = QuadraticContext(3, 101)
    x, y = ctx(2, 1), ctx(1, 1)
    assert x.norm() == 1
    assert y.norm() == 99
    assert x * y == ctx(5, 3)
    assert (x * y).norm() == 99


def test_norm_is_rational_part_of_x_times_conjugate():
    rng = random.Random(3)
    for _ in range(200):
        ctx = QuadraticContext(rng.choice([-3, -2, -1, 2, 3, 5, 7]), rng.randrange(3, 10**6) | 1)
        x = ctx(rng.randrange(ctx.N), rng.randrange(ctx.N))
        prod = x * x.conjugate()
        assert prod.b == 0 and prod.a == x.norm()


def test_norm_multiplicative_random():
    rng = random.Random(4)
    for _ in range(10**4):
        N = rng.randrange(3, 10**12) | 1
        ctx = QuadraticContext(rng.choice([-7, -3, -2, -1, 2, 3, 5, 6, 13]), N)
        x = ctx(rng.randrange(N), rng.randrange(N))
        y = ctx(rng.randrange(N), rng.randrange(N))
        assert (x * y).norm() == x.norm() * y.norm() % N


def test_inverse_examples():
    assert CTX35.one().inverse() == CTX35.one()
    w = CTX35(3, 3)
    assert w.inverse() == w.conjugate()
    with pytest.raises(NonInvertible) as info:
        CTX35(5, 0).inverse()
    assert info.value.g == 5
    assert try_invert(CTX35(5, 0)).g == 5
    assert try_invert(CTX35.zero()).g == 35
    assert try_invert(w) == w.conjugate()


def test_noninvertible_gcd_is_a_factor():
    rng = random.Random(5)
    for _ in range(500):
        N = rng.choice([15, 21, 35, 77, 221, 1001, 2737])
        ctx = QuadraticContext(rng.choice([-3, -2, -1, 2, 3, 5]), N)
        x = ctx(rng.randrange(N), rng.randrange(N))
        r = try_invert(x)
        if isinstance(r, NonInvertible):
            assert 1 < r.g <= N and N % r.g == 0
        else:
            assert x * r == 1


def test_field_case_everything_invertible():
    for N in range(3, 51, 2):
        if not naive_is_prime(N):
            continue
        for D in (-3, -2, -1, 2, 3, 5, 6, 7):
            ctx = QuadraticContext(D, N)
            if ctx.jacobi_DN != -1:
                continue
            for a in range(N):
                for b in range(N):
                    if a == 0 and b == 0:
                        continue
                    x = ctx(a, b)
                    assert x * x.inverse() == 1


@pytest.mark.parametrize("e, expected", [(9, (29, 0)), (18, (1, 0)), (1, (3, 3)), (0, (1, 0))])
def test_pow_example(e, expected):
    assert tuple(CTX35(3, 3) ** e) == expected


def _naive_pow(x, e):
    r = x.ctx.one()
    for _ in range(e):
        r = r * x
    return r


@given(st.integers(0, 200), st.integers(0, 200), st.integers(0, 10**6), st.integers(0, 10**6))
def test_pow_additive(e1, e2, a, b):
    ctx = QuadraticContext(-2, 1000003)
    x = ctx(a, b)
    assert x ** (e1 + e2) == x**e1 * x**e2


def test_pow_matches_repeated_multiplication():
    ctx = QuadraticContext(5, 9991)
    x = ctx(123, 456)
    for e in range(60):
        assert x**e == _naive_pow(x, e)


def test_negative_exponent_uses_inverse():
    ctx = QuadraticContext(-2, 101)
    x = ctx(3, 7)
    assert x**-3 * x**3 == 1


def test_context_mismatch_is_hard_failure():
    other = QuadraticContext(-2, 35)
    with pytest.raises(ContextMismatch):
        CTX35(1, 1) * other(1, 1)
    with pytest.raises(ContextMismatch):
        CTX35(1, 1) + QuadraticContext(-3, 37)(1, 1)


def test_equal_contexts_mix():
    a = QuadraticContext(-3, 35)
    assert (a(3, 3) * CTX35(1, 0)) == CTX35(3, 3)


def test_omega_conversion_preserves_norm():
    rng = random.Random(6)
    for D in (5, -3, 13, -7, 17):
        for N in (35, 101, 1001, 9991):
            ctx = QuadraticContext(D, N)
            for _ in range(100):
                a, b = rng.randrange(N), rng.randrange(N)
                x = from_omega(ctx, a, b)
                assert x.norm() == omega_norm(ctx, a, b)
                assert (x.norm() == 1) == (omega_norm(ctx, a, b) == 1)


def test_omega_is_half_one_plus_sqrt_d():
    ctx = QuadraticContext(5, 101)
    omega = from_omega(ctx, 0, 1)
    assert omega * 2 == ctx(1, 1)
    with pytest.raises(ValueError):
        omega_norm(QuadraticContext(3, 101), 1, 1)


def test_ring_element_is_hashable_and_iterable():
    x = CTX35(3, 3)
    assert {x: 1}[CTX35(3, 3)] == 1
    a, b = x
    assert (a, b) == (3, 3)
    assert isinstance(-x, RingElement) and (-x) + x == 0
    assert str(x) == "3+3√-3"
