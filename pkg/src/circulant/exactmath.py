# Exact integer combinatorics and small number-theory helpers.

import math

FACT_CAP = 64

_fact_table = [1] * (FACT_CAP + 1)
for _i in range(1, FACT_CAP + 1):
    _fact_table[_i] = _fact_table[_i - 1] * _i


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of negative %d" % n)
    if n <= FACT_CAP:
        return _fact_table[n]
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n,k), defined as 0 whenever the arguments fall outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return factorial(n) // (factorial(k) * factorial(n - k))


def multinomial_star(p: int, k) -> int:
    """p! / (1^k1 k1! 2^k2 k2! ... p^kp kp!) for a multiplicity list k of length p."""
    k = list(k)
    if len(k) != p:
        raise ValueError("need exactly p multiplicities")
    if sum((i + 1) * ki for i, ki in enumerate(k)) != p:
        raise ValueError("multiplicities must weight-sum to p")
    denom = 1
    for i, ki in enumerate(k, start=1):
        denom *= i ** ki * factorial(ki)
    q, r = divmod(factorial(p), denom)
    assert r == 0
    return q


def prime_factors(n: int):
    """List of (prime, exponent) pairs, by trial division."""
    if n <= 0:
        raise ValueError("positive integer required")
    out = []
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e:
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def mobius(n: int) -> int:
    if n <= 0:
        raise ValueError("positive integer required")
    fac = prime_factors(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def euler_phi(n: int) -> int:
    if n <= 0:
        raise ValueError("positive integer required")
    out = n
    for p, _ in prime_factors(n):
        out = out // p * (p - 1)
    return out


def divisors(n: int):
    """Sorted list of positive divisors."""
    if n <= 0:
        raise ValueError("positive integer required")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def mod_inverse(n: int, modulus: int) -> int:
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    if math.gcd(n, modulus) != 1:
        raise ValueError("%d is not invertible mod %d" % (n, modulus))
    return pow(n, -1, modulus)


def heaviside(n: int) -> int:
    return 1 if n >= 0 else 0


def delta_mod(d: int, modulus: int) -> int:
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    return 1 if d % modulus == 0 else 0
