# Assemble the full determinant expansion for one dimension.

from collections import Counter
from functools import lru_cache

from . import coeff_engine, symmetry

MAX_N = 12


class ExpansionPolynomial:
    """Sparse polynomial keyed by multiplicity vectors.

    Zero coefficients are kept in `all_terms` (so zero detection stays
    testable) and dropped from `terms`.
    """

    def __init__(self, n, all_terms):
        self.n = n
        self.all_terms = dict(all_terms)
        self.terms = {k: v for k, v in self.all_terms.items() if v}

    def coefficient(self, key):
        return self.all_terms.get(tuple(key), 0)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def zero_keys(self):
        return sorted(k for k, v in self.all_terms.items() if v == 0)

    def __eq__(self, other):
        return (isinstance(other, ExpansionPolynomial)
                and self.n == other.n and self.terms == other.terms)


def expand(n: int, strategy: str = "direct") -> ExpansionPolynomial:
    if n < 2 or n > MAX_N:
        raise ValueError("dimension must be in [2, %d]" % MAX_N)
    if strategy not in ("direct", "reduced"):
        raise ValueError("unknown strategy %r" % strategy)
    return _expand_cached(n, strategy)


@lru_cache(maxsize=32)
def _expand_cached(n, strategy):
    keys = symmetry.valid_vectors(n)
    terms = {}
    if strategy == "direct":
        for m in keys:
            terms[m] = coeff_engine.coefficient(
                coeff_engine.indices_from_multiplicities(m))
    else:
        seen = set()
        for m in keys:
            if m in seen:
                continue
            rec = symmetry.super_multiplet(m)
            for vec, sign in rec.members:
                terms[vec] = sign * rec.value
                seen.add(vec)
    return ExpansionPolynomial(n, terms)


def evaluate(poly: ExpansionPolynomial, x) -> int:
    if len(x) != poly.n:
        raise ValueError("need %d values" % poly.n)
    total = 0
    for key, coeff in poly.terms.items():
        prod = coeff
        for value, count in enumerate(key):
            if count:
                prod *= x[value] ** count
        total += prod
    return total


def _poly_power(base: dict, d: int, width: int) -> dict:
    """d-th power of a polynomial over exponent-vector keys of fixed width."""
    out = {tuple([0] * width): 1}
    for _ in range(d):
        nxt = Counter()
        for k1, c1 in out.items():
            for k2, c2 in base.items():
                key = tuple(a + b for a, b in zip(k1, k2))
                nxt[key] += c1 * c2
        out = {k: v for k, v in nxt.items() if v}
    return out


def power_identity_check(n: int, d: int) -> bool:
    """Spaced-support determinant equals the d-th power of the smaller one.

    Keeping only entries x_m with d | m, the N-dim determinant must equal
    (det of the (N/d)-dim circulant in those entries)^d, as exact polynomials.
    """
    if d <= 1 or n % d != 0:
        raise ValueError("d must divide n and exceed 1")
    small = n // d
    # left side: coefficients of keys supported on multiples of d only
    left = {}
    for m in symmetry.valid_vectors(n):
        if all(count == 0 for value, count in enumerate(m) if value % d):
            c = coeff_engine.coefficient(coeff_engine.indices_from_multiplicities(m))
            if c:
                left[tuple(m[value] for value in range(0, n, d))] = c
    small_poly = expand(small).terms
    right = _poly_power(
        {tuple(k): v for k, v in small_poly.items()}, d, small)
    return left == right
