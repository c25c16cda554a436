"""Integer arithmetic for primes split in Z[i].

Primality testing, square roots of -1 mod p, two-square decompositions,
x^2 + 32 y^2 representations, and the shared prime tables that the
heavier modules build on.  Everything here is exact integer arithmetic;
numpy only appears in the bulk sieve helpers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import Refusal

# Witness set proving compositeness of every composite below 2^64.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_LIMIT = 1 << 64


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for 0 <= n < 2^64."""
    if n >= _MR_LIMIT:
        raise Refusal(f"is_prime is deterministic only below 2**64, got {n}")
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for base in _MR_BASES:
        x = pow(base, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=8)
def primes_up_to(limit: int) -> tuple[int, ...]:
    """All primes <= limit, as a cached immutable tuple."""
    if limit < 2:
        return ()
    flags = np.ones(limit + 1, dtype=np.uint8)
    flags[:2] = 0
    for q in range(2, math.isqrt(limit) + 1):
        if flags[q]:
            flags[q * q :: q] = 0
    return tuple(int(v) for v in np.nonzero(flags)[0])


@lru_cache(maxsize=2)
def odd_prime_flags(limit: int) -> np.ndarray:
    """flags[i] == 1 iff 2*i + 1 is prime, covering odd n <= limit.

    Treat the returned array as read-only; it is shared through the cache.
    """
    if limit < 1:
        raise Refusal("sieve limit must be >= 1")
    flags = np.ones(limit // 2 + 1, dtype=np.uint8)
    flags[0] = 0  # 1 is not prime
    for q in range(3, math.isqrt(limit) + 1, 2):
        if flags[q // 2]:
            flags[q * q // 2 :: q] = 0
    return flags


def sqrt_minus_one_mod_p(p: int) -> int:
    """The smaller square root r of -1 mod p (0 < r < p/2), p = 1 mod 4."""
    if p % 4 != 1 or not is_prime(p):
        raise Refusal(f"need a prime = 1 mod 4, got {p}")
    d = 2
    while pow(d, (p - 1) // 2, p) != p - 1:
        d += 1
    r = pow(d, (p - 1) // 4, p)
    r = min(r, p - r)
    assert r * r % p == p - 1
    return r


@dataclass(frozen=True)
class PrimeWitness:
    """A prime p = a^2 + b^2 with a odd, normalized a = 1 mod 4, b > 0.

    c is present exactly when b is a perfect square (then b = c^2 with
    c > 0 even, so p = a^2 + c^4).  For p = 5 mod 8 the even part has
    b = 2 mod 4 and c is always absent.
    """

    p: int
    a: int
    b: int
    c: int | None = None

    def __post_init__(self):
        if self.a % 2 == 0 or self.a % 4 != 1:
            raise ValueError(f"witness a must be odd and 1 mod 4, got {self.a}")
        if self.b <= 0 or self.b % 2:
            raise ValueError(f"witness b must be positive and even, got {self.b}")
        if self.a * self.a + self.b * self.b != self.p:
            raise ValueError(f"a^2 + b^2 != p for (a={self.a}, b={self.b}, p={self.p})")
        if self.c is not None:
            if self.c <= 0 or self.c % 2 or self.c * self.c != self.b:
                raise ValueError(f"witness c must be positive, even, c^2 = b, got {self.c}")


def decompose_two_squares(p: int) -> PrimeWitness:
    """Write prime p = 1 mod 4 as a^2 + b^2 via descent from sqrt(-1).

    Euclidean descent on (p, r) with r^2 = -1 mod p: the first remainder
    below sqrt(p) is one leg of the (essentially unique) decomposition.
    """
    r = sqrt_minus_one_mod_p(p)  # validates p
    u, v = p, r
    root = math.isqrt(p)
    while v > root:
        u, v = v, u % v
    x = v
    y = math.isqrt(p - x * x)
    assert x * x + y * y == p
    if x % 2 == 0:
        x, y = y, x
    a = x if x % 4 == 1 else -x
    b = y
    croot = math.isqrt(b)
    c = croot if croot * croot == b else None
    return PrimeWitness(p=p, a=a, b=b, c=c)


def represent_x2_32y2(p: int) -> tuple[int, int] | None:
    """The representation p = x^2 + 32 y^2 with smallest y >= 0, or None."""
    if not is_prime(p):
        raise Refusal(f"need a prime, got {p}")
    for y in range(math.isqrt(p // 32) + 1):
        t = p - 32 * y * y
        x = math.isqrt(t)
        if x * x == t:
            return (x, y)
    return None


def one_plus_i_is_square(p: int) -> bool:
    """Whether 1 + r is a square mod p, where r^2 = -1 mod p and p = 1 mod 8.

    The answer does not depend on the choice of root: the two candidates
    1 + r and 1 - r multiply to 2, a square mod any p = 1 mod 8.
    """
    if p % 8 != 1 or not is_prime(p):
        raise Refusal(f"need a prime = 1 mod 8, got {p}")
    r = sqrt_minus_one_mod_p(p)
    return pow(1 + r, (p - 1) // 2, p) == 1
