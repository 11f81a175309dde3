import random
from fractions import Fraction
from math import gcd

import pytest

from sigma_convolve.arith import (
    divisors,
    exact_div,
    normalize,
    prime_factors,
    sigma,
    sigma_scaled,
)


def naive_sigma(k: int, n: int) -> int:
    return sum(d**k for d in range(1, n + 1) if n % d == 0)


def test_sigma_examples():
    assert sigma(1, 1) == 1
    assert sigma(3, 2) == 9
    assert sigma(1, 0) == 0
    assert sigma(1, -5) == 0
    assert sigma(1, 6) == 12
    assert sigma(3, 4) == 73


def test_sigma_rejects_bad_power():
    with pytest.raises(ValueError):
        sigma(0, 5)


def test_sigma_scaled_examples():
    assert sigma_scaled(3, 28, 28) == 1
    assert sigma_scaled(1, 29, 28) == 0
    assert sigma_scaled(3, 56, 28) == 9
    assert sigma_scaled(1, 10, 1) == sigma(1, 10)
    with pytest.raises(ValueError):
        sigma_scaled(1, 10, 0)


def test_sigma_against_naive_oracle_small():
    for n in range(1, 301):
        assert sigma(1, n) == naive_sigma(1, n)
        assert sigma(3, n) == naive_sigma(3, n)


def test_sigma_against_sieve_oracle_to_ten_thousand():
    # divisor-accumulation sieve, independent of the trial-division path
    limit = 10_000
    s1 = [0] * (limit + 1)
    s3 = [0] * (limit + 1)
    for d in range(1, limit + 1):
        d3 = d**3
        for m in range(d, limit + 1, d):
            s1[m] += d
            s3[m] += d3
    for n in range(1, limit + 1):
        assert sigma(1, n) == s1[n]
        assert sigma(3, n) == s3[n]


def test_sigma_multiplicative_on_coprime_pairs():
    for m in range(1, 1001):
        for n in range(1, 1000 // m + 1):
            if gcd(m, n) == 1:
                assert sigma(1, m * n) == sigma(1, m) * sigma(1, n)


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(28) == [1, 2, 4, 7, 14, 28]
    assert divisors(49) == [1, 7, 49]
    with pytest.raises(ValueError):
        divisors(0)


def test_prime_factors():
    assert prime_factors(1) == {}
    assert prime_factors(28) == {2: 2, 7: 1}
    assert prime_factors(360) == {2: 3, 3: 2, 5: 1}
    assert prime_factors(97) == {97: 1}


def test_normalize():
    assert normalize(5) == 5 and isinstance(normalize(5), int)
    assert normalize(Fraction(10, 2)) == 5 and isinstance(normalize(Fraction(10, 2)), int)
    half = normalize(Fraction(1, 2))
    assert half == Fraction(1, 2) and isinstance(half, Fraction)
    with pytest.raises(TypeError):
        normalize(0.5)


def test_exact_div():
    assert exact_div(6, 3) == 2 and isinstance(exact_div(6, 3), int)
    assert exact_div(1, 2) == Fraction(1, 2)
    assert exact_div(Fraction(3, 4), Fraction(1, 4)) == 3
    assert exact_div(-8, 2) == -4


def test_rational_field_axioms_randomized():
    rng = random.Random(20260819)
    for _ in range(200):
        a, b, c = (
            Fraction(rng.randint(-50, 50), rng.randint(1, 50)) for _ in range(3)
        )
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a and a * b == b * a
        if a != 0:
            assert a * (1 / a) == 1
