# Shift/multiplier symmetries of the coefficient set, multiplet
# classification, and the orbit-counting formulas.

import math
from collections import namedtuple
from fractions import Fraction

from . import coeff_engine
from .exactmath import binomial, divisors, euler_phi, mobius, mod_inverse, prime_factors

GroupElement = namedtuple("GroupElement", ["shift", "mult"])

MultipletRecord = namedtuple(
    "MultipletRecord", ["kind", "representative", "n", "members", "value"])


def compose(g: GroupElement, h: GroupElement, n: int) -> GroupElement:
    return GroupElement((g.shift + h.shift) % n, (g.mult * h.mult) % n)


def act(g: GroupElement, m):
    """Apply the index map x -> mult*x + shift to the multiplicity vector m."""
    n = len(m)
    binv = mod_inverse(g.mult, n)
    return tuple(m[((i - g.shift) * binv) % n] for i in range(n))


def valid_vectors(n: int):
    """All multiplicity vectors with sum N and weighted sum = 0 mod N."""
    out = []
    vec = [0] * n

    def rec(pos, remaining, wsum):
        if pos == n - 1:
            vec[pos] = remaining
            if (wsum + pos * remaining) % n == 0:
                out.append(tuple(vec))
            return
        for v in range(remaining + 1):
            vec[pos] = v
            rec(pos + 1, remaining - v, wsum + pos * v)

    rec(0, n, 0)
    return out


def coprime_residues(n: int):
    return [b for b in range(1, n) if math.gcd(b, n) == 1]


def _shift_sign(shift: int, n: int) -> int:
    return -1 if (shift * (n - 1)) % 2 else 1


def _orbit_with_signs(m, elements, n):
    """Map member -> sign with coeff(member) = sign * coeff(m).

    Conflicting reachable signs force the whole orbit's value to zero; such
    members are pinned at +1 and flagged.
    """
    signs = {m: 1}
    conflict = False
    for g in elements:
        img = act(g, m)
        sign = _shift_sign(g.shift, n)
        if img in signs and signs[img] != sign:
            conflict = True
        else:
            signs.setdefault(img, sign)
    return signs, conflict


def additive_multiplet(m, value_fn=None) -> MultipletRecord:
    n = len(m)
    if sum(m) != n:
        raise ValueError("multiplicities must sum to the dimension")
    elements = [GroupElement(k, 1) for k in range(n)]
    signs, conflict = _orbit_with_signs(tuple(m), elements, n)
    return _finish_record("additive", signs, conflict, n, value_fn)


def super_multiplet(m, value_fn=None) -> MultipletRecord:
    n = len(m)
    elements = [GroupElement(k, b) for k in range(n) for b in coprime_residues(n)]
    signs, conflict = _orbit_with_signs(tuple(m), elements, n)
    return _finish_record("super", signs, conflict, n, value_fn)


def _finish_record(kind, signs, conflict, n, value_fn):
    rep = min(signs)
    rep_sign = signs[rep]
    members = sorted((vec, 1 if conflict else sign * rep_sign)
                     for vec, sign in signs.items())
    if value_fn is None:
        value_fn = lambda v: coeff_engine.coefficient(
            coeff_engine.indices_from_multiplicities(v))
    value = value_fn(rep)
    if conflict:
        assert value == 0, "sign-conflicted orbit must carry a zero coefficient"
    return MultipletRecord(kind, rep, len(members), members, value)


def classify(n: int, value_fn=None):
    """Every valid vector grouped into one additive and one super multiplet."""
    if n < 2:
        raise ValueError("dimension must be >= 2")
    records = []
    for kind, build in (("additive", additive_multiplet), ("super", super_multiplet)):
        seen = set()
        for m in valid_vectors(n):
            if m in seen:
                continue
            rec = build(m, value_fn)
            seen.update(vec for vec, _ in rec.members)
            records.append(rec)
    return records


def count_solutions_F(n: int) -> int:
    total = Fraction(0)
    for d in divisors(n):
        total += euler_phi(n // d) * binomial(2 * d, d)
    total /= 2 * n
    assert total.denominator == 1
    return int(total)


def additive_multiplet_count_g(n: int, size: int) -> int:
    """Number of additive multiplets with exactly `size` members."""
    if size < 1:
        raise ValueError("size must be >= 1")
    if n % size != 0 or (n - size) % 2 != 0:
        return 0
    total = Fraction(0)
    for d in divisors(size):
        total += ((-1) ** (size + d)) * mobius(size // d) * binomial(2 * d, d)
    total *= Fraction(1 + (-1) ** (n - size), 4 * size * size)
    assert total.denominator == 1
    return int(total)


def _split_prime_form(n: int):
    """Return (p, doubled?) for n = p or n = 2p with p an odd prime."""
    for cand, doubled in ((n, False), (n // 2, True) if n % 2 == 0 else (None, None)):
        if cand is None:
            continue
        if cand > 2 and prime_factors(cand) == [(cand, 1)]:
            if not doubled or n == 2 * cand:
                return cand, doubled
    raise ValueError("closed-form count only derived for N = p or N = 2p, p odd prime")


def supermultiplet_count(n: int) -> int:
    """Closed-form number of super-multiplets for N = p or 2p (p odd prime)."""
    p, doubled = _split_prime_form(n)
    total = Fraction(count_solutions_F(n))
    if not doubled:
        total += p - 1  # (p-1) copies of the single full-shift-invariant set
        for d in divisors(p - 1):
            if d == 1:
                continue
            m = (p - 1) // d
            total += euler_phi(d) * p * binomial(2 * m, m)
        total /= p * (p - 1)
    else:
        total += (p - 1) * 2  # the two alternating-support sets
        for d in divisors(p - 1):
            if d == 1:
                continue
            m = (p - 1) // d
            if d == 2:
                k = binomial(2 * p, p)
            elif d % 2 == 0:
                k = 2 * p * binomial(4 * m, 2 * m) - (p - 1) * binomial(4 * m + 1, 2 * m + 1)
            else:
                k = Fraction(4 * p - 1, 2) * binomial(4 * m, 2 * m) \
                    - (p - 1) * binomial(4 * m + 1, 2 * m + 1) \
                    + Fraction(binomial(2 * m, m), 2)
            total += euler_phi(d) * p * k
        total /= 2 * p * (p - 1)
    assert total.denominator == 1
    return int(total)


def invariant_count_K(n: int, generator: GroupElement) -> int:
    """Number of valid vectors fixed by the cyclic subgroup of the generator."""
    return sum(1 for m in valid_vectors(n) if act(generator, m) == m)


def _fixed_vector_count(n: int, g: GroupElement) -> int:
    """Valid vectors fixed by g, by dynamic programming over position cycles."""
    binv = mod_inverse(g.mult, n)
    perm = [((i - g.shift) * binv) % n for i in range(n)]
    seen = [False] * n
    cycles = []  # (length, position-sum)
    for s in range(n):
        if not seen[s]:
            length, psum, t = 0, 0, s
            while not seen[t]:
                seen[t] = True
                length += 1
                psum += t
                t = perm[t]
            cycles.append((length, psum))
    # choose one value per cycle; track (total mass, weighted residue)
    states = {(0, 0): 1}
    for length, psum in cycles:
        nxt = {}
        for (mass, res), ways in states.items():
            v = 0
            while mass + length * v <= n:
                key = (mass + length * v, (res + psum * v) % n)
                nxt[key] = nxt.get(key, 0) + ways
                v += 1
        states = nxt
    return states.get((n, 0), 0)


def count_super_orbits(n: int) -> int:
    """Super-multiplet count by averaging fixed-vector counts over the group."""
    group = [GroupElement(a, b) for a in range(n) for b in coprime_residues(n)]
    total = sum(_fixed_vector_count(n, g) for g in group)
    count, rem = divmod(total, len(group))
    assert rem == 0
    return count
