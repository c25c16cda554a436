"""Integer primitive tests against brute-force oracles."""

import math

import pytest

from sixteenrank import (
    PrimeWitness,
    Refusal,
    decompose_two_squares,
    is_prime,
    one_plus_i_is_square,
    primes_up_to,
    represent_x2_32y2,
    sqrt_minus_one_mod_p,
)
from sixteenrank.arith import odd_prime_flags


def trial_division_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in range(2, math.isqrt(n) + 1):
        if n % q == 0:
            return False
    return True


def test_is_prime_matches_trial_division():
    for n in range(20000):
        assert is_prime(n) == trial_division_prime(n), n


def test_is_prime_strong_pseudoprime():
    # smallest composite passing bases 2, 3, 5, 7 simultaneously
    n = 3215031751
    assert n == 151 * 751 * 28351
    assert not is_prime(n)


def test_is_prime_large_mersenne():
    # cross-checked by the Lucas-Lehmer recurrence, an unrelated algorithm
    def lucas_lehmer(e):
        m = 2**e - 1
        s = 4
        for _ in range(e - 2):
            s = (s * s - 2) % m
        return s == 0

    assert lucas_lehmer(61)
    assert is_prime(2**61 - 1)
    # 127 = 2^7 - 1 divides 2^49 - 1 since 7 | 49
    assert (2**49 - 1) % 127 == 0
    assert not is_prime(2**49 - 1)


def test_is_prime_refuses_past_64_bits():
    with pytest.raises(Refusal):
        is_prime(1 << 64)


def test_primes_up_to_matches_trial_division():
    expected = tuple(n for n in range(5001) if trial_division_prime(n))
    assert primes_up_to(5000) == expected
    assert primes_up_to(13)[-1] == 13  # inclusive endpoint
    assert primes_up_to(1) == ()


def test_odd_prime_flags_indexing():
    flags = odd_prime_flags(10**4)
    for n in range(1, 10**4, 2):
        assert bool(flags[n // 2]) == trial_division_prime(n), n


def test_sqrt_minus_one_examples():
    assert sqrt_minus_one_mod_p(5) == 2
    assert sqrt_minus_one_mod_p(13) == 5
    assert sqrt_minus_one_mod_p(41) == 9


def test_sqrt_minus_one_property():
    for p in primes_up_to(3000):
        if p % 4 != 1:
            continue
        r = sqrt_minus_one_mod_p(p)
        assert 0 < r < p / 2
        assert r * r % p == p - 1


def test_sqrt_minus_one_rejects():
    with pytest.raises(Refusal):
        sqrt_minus_one_mod_p(7)
    with pytest.raises(Refusal):
        sqrt_minus_one_mod_p(21)


def brute_two_squares(p):
    # unique decomposition with positive odd leg, up to sign of the odd leg
    for b in range(0, math.isqrt(p) + 1, 2):
        a = math.isqrt(p - b * b)
        if a * a + b * b == p:
            return a, b
    raise AssertionError(f"no decomposition for {p}")


def test_decompose_matches_brute_force():
    for p in primes_up_to(10**4):
        if p % 4 != 1:
            continue
        w = decompose_two_squares(p)
        a, b = brute_two_squares(p)
        assert abs(w.a) == a and w.b == b
        assert w.a % 4 == 1
        assert w.a * w.a + w.b * w.b == p
        if p % 8 == 1:
            assert w.b % 4 == 0
        else:
            assert w.b % 4 == 2
            assert w.c is None
        if w.c is not None:
            assert w.c % 2 == 0 and w.c**2 == w.b


def test_decompose_examples():
    assert decompose_two_squares(41) == PrimeWitness(p=41, a=5, b=4, c=2)
    w = decompose_two_squares(113)
    assert (w.a, w.b, w.c) == (-7, 8, None)
    w = decompose_two_squares(13)
    assert (w.a, w.b, w.c) == (-3, 2, None)
    w = decompose_two_squares(257)
    assert (w.a, w.b, w.c) == (1, 16, 4)


def test_decompose_rejects():
    with pytest.raises(Refusal):
        decompose_two_squares(7)
    with pytest.raises(Refusal):
        decompose_two_squares(15)


def test_witness_validation():
    with pytest.raises(ValueError):
        PrimeWitness(p=41, a=3, b=4)  # 3 = 3 mod 4, wrong normalization
    with pytest.raises(ValueError):
        PrimeWitness(p=41, a=5, b=3)  # odd b
    with pytest.raises(ValueError):
        PrimeWitness(p=43, a=5, b=4)  # 25 + 16 != 43
    with pytest.raises(ValueError):
        PrimeWitness(p=41, a=5, b=4, c=3)  # c^2 != b and c odd


def brute_x2_32y2(p):
    best = None
    for y in range(math.isqrt(p // 32) + 1):
        x2 = p - 32 * y * y
        x = math.isqrt(x2)
        if x * x == x2:
            if best is None:
                best = (x, y)
    return best


def test_represent_x2_32y2_matches_brute_force():
    for p in primes_up_to(5000):
        assert represent_x2_32y2(p) == brute_x2_32y2(p), p


def test_represent_x2_32y2_solution_shape():
    got = represent_x2_32y2(41)
    assert got == (3, 1) and 3 * 3 + 32 == 41
    assert represent_x2_32y2(17) is None


def test_one_plus_i_root_choice_is_irrelevant():
    # (1+r)(1-r) = 2 is a square mod p for p = +-1 mod 8, so both roots
    # of -1 give the same Euler symbol
    for p in primes_up_to(3000):
        if p % 8 != 1:
            continue
        r = sqrt_minus_one_mod_p(p)
        e1 = pow(1 + r, (p - 1) // 2, p) == 1
        e2 = pow(1 + (p - r), (p - 1) // 2, p) == 1
        assert e1 == e2
        assert one_plus_i_is_square(p) == e1


def test_one_plus_i_rejects():
    with pytest.raises(Refusal):
        one_plus_i_is_square(13)  # 13 = 5 mod 8
