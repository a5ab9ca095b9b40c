# Exact evaluation of one expansion coefficient of a circulant determinant.
#
# det of the N x N circulant with first column x_0..x_{N-1} expands as
# sum over sorted index multisets [a_0..a_{N-1}] of C_[a] * x_{a_0}...x_{a_{N-1}}.
# This module computes C_[a] by the closed-form partition sum, entirely in
# integer/rational arithmetic.

import math
from fractions import Fraction
from functools import lru_cache

from .exactmath import binomial, factorial, heaviside
from .partitions import multiset_partitions


def as_index_set(a):
    """Canonical sorted index tuple, validated against its dimension."""
    a = tuple(sorted(a))
    n = len(a)
    if n < 1:
        raise ValueError("empty index set")
    if any(x < 0 or x >= n for x in a):
        raise ValueError("indices must lie in [0, N-1]")
    return a


def multiplicities(a):
    """Multiplicity vector M_0..M_{N-1} of a sorted index set."""
    n = len(a)
    m = [0] * n
    for x in a:
        m[x] += 1
    return tuple(m)


def indices_from_multiplicities(m):
    out = []
    for value, count in enumerate(m):
        out.extend([value] * count)
    return tuple(out)


def satisfies_condition_8(a) -> bool:
    a = as_index_set(a)
    return sum(a) % len(a) == 0


def coeff_all_equal(value: int, n: int) -> int:
    """Coefficient of x_value^N: (-1)^(value*(N-1))."""
    return -1 if (value * (n - 1)) % 2 else 1


def _shape(a):
    """Split a sorted index set into (N, M, M0, M1, A-list of indices >= 2)."""
    a = as_index_set(a)
    m = multiplicities(a)
    return len(a), m, m[0], m[1] if len(a) > 1 else 0, [x for x in a if x >= 2]


def _lambda_sum(n, m1, m0, xs, zs):
    """Sum over nonzero 0/1 masks of the partition-sum inner term."""
    j = len(xs)
    # per-part binomial factors used when the part's mask bit is set
    bino = [binomial(xs[s] + zs[s] - 1, zs[s] - 1) for s in range(j)]
    total = 0
    # parts sorted by ascending residue let us abandon a branch once the
    # running residue sum exceeds m1 (the step function can never recover)
    order = sorted(range(j), key=lambda s: xs[s])

    def rec(pos, mu, x_acc, xz_acc, prod):
        nonlocal total
        if pos == j:
            if mu:
                total += ((-n) ** mu) * prod * binomial(n - m0 - 1 - xz_acc, m1 - x_acc)
            return
        s = order[pos]
        rec(pos + 1, mu, x_acc, xz_acc, prod)
        if x_acc + xs[s] <= m1:
            rec(pos + 1, mu + 1, x_acc + xs[s], xz_acc + xs[s] + zs[s], prod * bino[s])

    rec(0, 0, 0, 0, 1)
    return total


@lru_cache(maxsize=4096)
def _partition_sum_dedup(a_rest, n, m0, m1):
    """Sum over distinct multiset partitions of the non-pinned indices >= 2."""
    total = Fraction(0)
    for sp in multiset_partitions(list(a_rest)):
        if sp.j == 0:
            continue
        weight = Fraction(1, sp.kappa_factorial())
        for part in sp.parts:
            weight *= Fraction(factorial(len(part) - 1),
                               sp.element_multiplicity_factorial(part))
        xs = sp.residues(n)
        total += weight * _lambda_sum(n, m1, m0, xs, sp.sizes)
    return total


def coeff_theorem3(a) -> int:
    """C_[a] via the deduplicated multiset-partition sum."""
    a = as_index_set(a)
    n = len(a)
    if sum(a) % n != 0:
        return 0
    if a[0] == a[-1]:
        return coeff_all_equal(a[0], n)
    _, m, m0, m1, big = _shape(a)
    # condition 8 with two distinct values present forces at least one index >= 2
    assert big, "non-constant index set satisfying the residue gate has an index >= 2"
    lead = Fraction(factorial(n - m0 - 1))
    for q in range(1, n):
        lead /= factorial(m[q])
    pinned = big[-1]
    total = lead + Fraction(1, m[pinned]) * _partition_sum_dedup(tuple(big[:-1]), n, m0, m1)
    value = ((-1) ** (n - m0 - 1)) * n * total
    assert value.denominator == 1
    return int(value)


def coeff_eq10d(a) -> int:
    """C_[a] via the labeled-position partition sum (internal cross-check form)."""
    a = as_index_set(a)
    n = len(a)
    if sum(a) % n != 0:
        return 0
    if a[0] == a[-1]:
        return coeff_all_equal(a[0], n)
    _, m, m0, m1, big = _shape(a)
    rest = big[:-1]
    p = len(rest)
    brace = Fraction(factorial(n - m0 - 1), factorial(m1))
    for sp in multiset_partitions(range(p)):
        if sp.j == 0:
            continue
        weight = 1
        for z in sp.sizes:
            weight *= factorial(z - 1)
        xs = tuple((-sum(rest[i] for i in part)) % n for part in sp.parts)
        brace += weight * _lambda_sum(n, m1, m0, xs, sp.sizes)
    value = Fraction(((-1) ** (n - m0 - 1)) * n) * brace
    for q in range(2, n):
        value /= factorial(m[q])
    assert value.denominator == 1
    return int(value)


def _beta_tuples(p):
    """All beta_1..beta_p >= 0 with sum(s*beta_s) <= p, excluding all-zero."""
    out = []

    def rec(s, budget, acc):
        if s > p:
            if any(acc):
                out.append(tuple(acc))
            return
        for b in range(budget // s + 1):
            rec(s + 1, budget - s * b, acc + [b])

    rec(1, p, [])
    return out


def coeff_special_ab(a) -> int:
    """C_[a] for shapes {0^M0, 1^M1, a^Ma, b^Mb} with Mb <= 1 and a >= 2."""
    a = as_index_set(a)
    n = len(a)
    _, m, m0, m1, big = _shape(a)
    distinct = sorted(set(big))
    if not distinct:
        raise ValueError("shape needs at least one index >= 2")
    if len(distinct) == 1:
        a_val, m_a, m_b = distinct[0], m[distinct[0]], 0
    elif len(distinct) == 2:
        # the singleton one plays the role of b
        c0, c1 = distinct
        if m[c1] == 1:
            a_val, m_a, m_b = c0, m[c0], 1
        elif m[c0] == 1:
            a_val, m_a, m_b = c1, m[c1], 1
        else:
            raise ValueError("one of the two repeated values must be a singleton")
    else:
        raise ValueError("at most two distinct values >= 2 allowed")
    if sum(a) % n != 0:
        return 0
    p = n - m0 - m1 - 1
    xvals = [(-s * a_val) % n for s in range(p + 1)]  # xvals[s] for s >= 1
    brace = Fraction(binomial(n - m0 - 1, m1))
    for beta in _beta_tuples(p):
        mu = sum(beta)
        bx = sum(beta[s - 1] * xvals[s] for s in range(1, p + 1))
        if bx > m1:
            continue
        bxz = sum(beta[s - 1] * (xvals[s] + s) for s in range(1, p + 1))
        term = Fraction(((-n) ** mu) * binomial(n - m0 - 1 - bxz, m1 - bx))
        for s in range(1, p + 1):
            if beta[s - 1]:
                term *= Fraction(binomial(xvals[s] + s - 1, s - 1) ** beta[s - 1],
                                 (s ** beta[s - 1]) * factorial(beta[s - 1]))
        brace += term
    value = Fraction(((-1) ** (n - m0 - 1)) * n, m_a + m_b) * binomial(m_a + m_b, m_a) * brace
    assert value.denominator == 1
    return int(value)


def zero_by_corollary6(a) -> bool:
    """Structural zero test for shapes 0..0 1..1 A1 A2 A3 (both branches)."""
    a = as_index_set(a)
    n = len(a)
    _, m, m0, m1, big = _shape(a)
    if len(big) != 3 or m0 < 1 or m1 < 1:
        return False
    if sum(a) % n != 0:
        return False
    a1, a2, a3 = big
    t1 = (m1 + 2) * (m1 + 1)
    if t1 % n == 0:
        r = t1 // n
        if a2 < n - m1 and a1 + a2 == n + 1 - r and a3 == m0 + 2 + r:
            return True
    t0 = (m0 + 2) * (m0 + 1)
    if t0 % n == 0:
        s = t0 // n
        if a2 >= n - m1 and a2 + a3 == n + 1 + s and a1 == m0 + 2 - s:
            return True
    return False


def divisibility_bound(a) -> int:
    """N/d with d = gcd of the multiplicities; the coefficient is 0 mod this."""
    a = as_index_set(a)
    n = len(a)
    d = 0
    for count in multiplicities(a):
        d = math.gcd(d, count)
    return n // d


def reduce_representative(a):
    """Cheapest-to-evaluate image of [a] under shifts and coprime multipliers.

    Returns (index set, sign) with coeff(a) == sign * coeff(image).
    """
    a = as_index_set(a)
    n = len(a)
    best = None
    for shift in range(n):
        sign = -1 if (shift * (n - 1)) % 2 else 1
        for mult in range(1, n):
            if math.gcd(mult, n) != 1:
                continue
            cand = tuple(sorted((mult * x + shift) % n for x in a))
            m = multiplicities(cand)
            p = n - m[0] - (m[1] if n > 1 else 0) - 1
            key = (p, m[1] if n > 1 else 0, cand)
            if best is None or key < best[0]:
                best = (key, cand, sign)
    return best[1], best[2]


def coefficient(a, use_zero_criterion: bool = False) -> int:
    value, _ = coefficient_with_path(a, use_zero_criterion)
    return value


def coefficient_with_path(a, use_zero_criterion: bool = False):
    """Dispatch to the cheapest applicable formula; returns (value, path name)."""
    a = as_index_set(a)
    n = len(a)
    if sum(a) % n != 0:
        return 0, "residue-gate"
    if a[0] == a[-1]:
        return coeff_all_equal(a[0], n), "all-equal"
    if use_zero_criterion and zero_by_corollary6(a):
        return 0, "structural-zero"
    _, m, m0, m1, big = _shape(a)
    distinct = sorted(set(big))
    singleton_ok = (len(distinct) == 1
                    or (len(distinct) == 2 and (m[distinct[0]] == 1 or m[distinct[1]] == 1)))
    if singleton_ok:
        return coeff_special_ab(a), "two-value-tail"
    return coeff_theorem3(a), "partition-sum"
